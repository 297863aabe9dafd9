"""Special-element finders, quasi variants, and the two Cauchy gradings."""

import pytest

from ialg import (
    NoAbsorber,
    NoAbsorberInComponent,
    NoIdentity,
    cauchy_audit,
    find_quasi_special,
    find_special,
    product,
    units_group,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)


class TestSingleComponentFinders:
    def test_z12_mul_idempotents(self):
        rep = find_special(zn_semigroup(12, "mul"), "idempotents")
        assert rep.values() == [0, 1, 4, 9]
        flags = {e.element: e.trivial for e in rep.elements}
        assert flags == {0: True, 1: True, 4: False, 9: False}

    def test_z12_mul_units(self):
        rep = find_special(zn_semigroup(12, "mul"), "units")
        assert rep.values() == [1, 5, 7, 11]
        assert all(e.certificate == e.element for e in rep.elements)

    def test_z12_mul_zero_divisors(self):
        rep = find_special(zn_semigroup(12, "mul"), "zero-divisors")
        assert rep.values() == [2, 3, 4, 6, 8, 9, 10]
        partners = {e.element: e.certificate for e in rep.elements}
        assert partners == {2: 6, 3: 4, 4: 3, 6: 2, 8: 3, 9: 4, 10: 6}

    def test_z12_mul_nilpotents(self):
        rep = find_special(zn_semigroup(12, "mul"), "nilpotents")
        recs = [(e.element, e.certificate, e.trivial) for e in rep.elements]
        assert recs == [(0, 1, True), (6, 2, False)]

    def test_z10_add_cauchy_is_everything_but_identity(self):
        rep = find_special(zn_group(10), "cauchy")
        assert rep.values() == list(range(1, 10))
        orders = {e.element: e.certificate for e in rep.elements}
        assert orders[5] == 2
        assert orders[2] == 5
        assert orders[1] == 10

    def test_kind_names_normalize(self):
        rep = find_special(zn_semigroup(12, "mul"), "Idempotent")
        assert rep.kind == "Idempotent"
        with pytest.raises(ValueError):
            find_special(zn_semigroup(12, "mul"), "primitives")

    def test_prereq_errors(self):
        with pytest.raises(NoAbsorber):
            find_special(zn_group(5), "zero-divisors")
        with pytest.raises(NoIdentity):
            find_special(zn_groupoid(6, 2, 4), "units")


class TestProductFinders:
    def test_bisemigroup_idempotents_are_componentwise(self):
        b = product(zn_semigroup(4, "mul"), zn_semigroup(6, "mul"))
        rep = find_special(b, "idempotents")
        # idempotents of (Z_4, x) = {0, 1}; of (Z_6, x) = {0, 1, 3, 4}
        assert rep.values() == [
            (a, c) for a in (0, 1) for c in (0, 1, 3, 4)
        ]

    def test_bisemigroup_zero_divisor_partner(self):
        b = product(zn_semigroup(4, "mul"), zn_semigroup(6, "mul"))
        rep = find_special(b, "zero-divisors")
        partners = {e.element: e.certificate for e in rep.elements}
        assert partners[(2, 3)] == (2, 0)
        assert (0, 0) not in partners
        # of the 23 non-absorbers only the four units lack a partner
        assert len(rep.elements) == 19
        for unit in ((1, 1), (1, 5), (3, 1), (3, 5)):
            assert unit not in partners

    def test_bigroup_units_inverse_pairs(self):
        b = product(zn_group(10), units_group(11))
        rep = find_special(b, "units")
        partners = {e.element: e.certificate for e in rep.elements}
        assert len(partners) == 100
        assert partners[(6, 3)] == (4, 4)
        assert partners[(0, 1)] == (0, 1)

    def test_report_to_dict_uses_labeler(self):
        b = product(zn_semigroup(4, "mul"), zn_semigroup(6, "mul"))
        rep = find_special(b, "idempotents")
        d = rep.to_dict(labeler=b.label_element)
        assert d["kind"] == "Idempotent"
        assert d["elements"][0] == {
            "element": "[0,0] ∪ [0,0]",
            "certificate": None,
            "trivial": True,
        }


class TestQuasiFinders:
    def test_quasi_idempotents_explicit_mask(self):
        b = product(zn_semigroup(29, "mul"), zn_semigroup(35, "mul"))
        rep = find_quasi_special(b, "idempotents", (False, True))
        assert rep.values() == [(0, 0), (0, 1), (0, 15), (0, 21)]
        assert all(e.active_mask == (False, True) for e in rep.elements)
        flags = {e.element: e.trivial for e in rep.elements}
        assert flags[(0, 0)] is True
        assert flags[(0, 15)] is False

    def test_quasi_all_masks_active_first(self):
        b = product(zn_semigroup(4, "mul"), zn_semigroup(6, "mul"))
        rep = find_quasi_special(b, "idempotents")
        masks = [e.active_mask for e in rep.elements]
        assert masks == [(True, False)] * 2 + [(False, True)] * 4

    def test_quasi_mask_validation(self):
        b = product(zn_semigroup(4, "mul"), zn_semigroup(6, "mul"))
        with pytest.raises(ValueError):
            find_quasi_special(b, "idempotents", (True, True))
        with pytest.raises(ValueError):
            find_quasi_special(b, "idempotents", (False, False))
        with pytest.raises(ValueError):
            find_quasi_special(b, "idempotents", (True,))

    def test_quasi_needs_product(self):
        with pytest.raises(ValueError):
            find_quasi_special(zn_semigroup(6, "mul"), "idempotents", None)

    def test_quasi_inactive_component_needs_absorber(self):
        b = product(zn_group(13), zn_semigroup(9, "mul"))
        with pytest.raises(NoAbsorberInComponent) as exc:
            find_quasi_special(b, "idempotents", (False, True))
        assert "component 0" in str(exc.value)

    def test_quasi_unit_certificates(self):
        b = product(zn_semigroup(6, "mul"), zn_semigroup(4, "mul"))
        rep = find_quasi_special(b, "units", (True, False))
        partners = {e.element: e.certificate for e in rep.elements}
        assert partners == {(1, 0): (1, 0), (5, 0): (5, 0)}


class TestCauchyAudit:
    def test_record_shape_and_gradings(self):
        b = product(units_group(11), zn_semigroup(9, "mul"))
        audit = cauchy_audit(b)
        assert set(audit) == {"standard", "book", "book_failures"}
        fails = {tuple(r["element"]): r for r in audit["book_failures"]}
        assert (10, 8) in fails
        rec = fails[(10, 8)]
        assert rec["orders"] == [2, 2]
        assert rec["order"] == 4
        assert b.order_of() % rec["order"] != 0
        std = {tuple(r["element"]): r for r in audit["standard"]}
        assert std[(10, 8)]["order"] == 2
        assert b.order_of() % 2 == 0

    def test_book_grading_empty_on_coprime_odd_orders(self):
        b = product(zn_semigroup(3, "mul"), zn_semigroup(7, "mul"))
        audit = cauchy_audit(b)
        assert audit["book"] == []
        assert len(audit["book_failures"]) == 5

    def test_three_fold_book_empty(self):
        b = product(
            zn_semigroup(3, "mul"),
            zn_semigroup(7, "mul"),
            zn_semigroup(13, "mul"),
        )
        audit = cauchy_audit(b)
        assert audit["book"] == []

    def test_needs_identity(self):
        with pytest.raises(NoIdentity):
            cauchy_audit(product(zn_groupoid(6, 2, 4), zn_groupoid(6, 2, 4)))

    def test_single_component_audit(self):
        audit = cauchy_audit(zn_group(6))
        std = {r["element"]: r["order"] for r in audit["standard"]}
        assert std == {1: 6, 2: 3, 3: 2, 4: 3, 5: 6}
