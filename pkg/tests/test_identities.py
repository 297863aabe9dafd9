"""Identity catalog, exhaustive checks, closed-form predictions, S-grading."""

import pytest

from ialg import (
    UnknownClaim,
    catalog,
    check_identity,
    new_loop,
    predict_zn,
    product,
    s_check_identity,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)

FAMILY = ("left-alternative", "right-alternative", "P-identity", "bol", "moufang")


class TestCatalog:
    def test_ten_identities(self):
        names = [i.name for i in catalog()]
        assert names == [
            "commutative",
            "idempotent-law",
            "associative",
            "left-alternative",
            "right-alternative",
            "P-identity",
            "bol",
            "moufang",
            "bol-left",
            "bol-right",
        ]

    def test_rendering(self):
        by_name = {i.name: str(i) for i in catalog()}
        assert by_name["moufang"] == "((x·y)·(z·x)) = ((x·(y·z))·x)"
        assert by_name["bol"] == "(((x·y)·z)·x) = (x·((y·z)·x))"
        assert by_name["idempotent-law"] == "(x·x) = x"

    def test_aliases(self):
        strong = check_identity(zn_group(5).magma, "is-semigroup")
        assert strong.grade == "strong"
        assert check_identity(zn_group(5).magma, "p-identity").grade == "strong"

    def test_unknown_identity(self):
        with pytest.raises(UnknownClaim):
            check_identity(zn_group(5).magma, "jacobi")


class TestCheckIdentity:
    def test_idempotent_strong_when_sum_is_one(self):
        g = zn_groupoid(12, 5, 8)
        assert check_identity(g.magma, "idempotent-law").grade == "strong"

    def test_idempotent_fails_otherwise(self):
        v = check_identity(zn_groupoid(12, 5, 9).magma, "idempotent-law")
        assert v.grade == "fails"
        assert v.counterexample is not None

    def test_commutative_fails_on_l5_2_with_first_pair(self):
        v = check_identity(new_loop(5, 2).magma, "commutative")
        assert v.grade == "fails"
        assert v.counterexample == {"x": 1, "y": 2}
        m = new_loop(5, 2, flavor="plain").magma
        assert m.label(m.apply(1, 2)) == "3"
        assert m.label(m.apply(2, 1)) == "5"

    def test_commutative_strong_on_half_parameter_loop(self):
        assert check_identity(new_loop(5, 3).magma, "commutative").grade == "strong"

    def test_checked_counts_all_assignments(self):
        v = check_identity(zn_groupoid(6, 2, 5).magma, "associative")
        assert v.checked == 6**3

    def test_componentwise_fallback_on_large_product(self):
        big = product(zn_semigroup(70, "mul"), zn_semigroup(70, "mul"))
        assert big.order_of() == 4900
        assert check_identity(big.magma, "associative").grade == "strong"

    def test_componentwise_fallback_counterexample(self):
        big = product(zn_semigroup(70, "mul"), zn_groupoid(70, 2, 5))
        v = check_identity(big.magma, "associative")
        assert v.grade == "fails"
        x = v.counterexample["x"]
        assert isinstance(x, tuple) and len(x) == 2


class TestPredictZn:
    def test_idempotent_rule(self):
        assert predict_zn("idempotent-law", 15, 9, 7) is True
        assert predict_zn("idempotent-law", 15, 9, 6) is False

    def test_family_rules_at_t_plus_u_one(self):
        # n=4, t=2, u=3: t^2-t=2 not divisible by 4, t^2(t-1)=4 divisible
        assert predict_zn("left-alternative", 4, 2, 3) is False
        assert predict_zn("moufang", 4, 2, 3) is False
        assert predict_zn("P-identity", 4, 2, 3) is True
        assert predict_zn("bol", 4, 2, 3) is True

    def test_zero_family(self):
        assert predict_zn("P-identity", 6, 3, 0) is True
        assert predict_zn("P-identity", 6, 2, 0) is False
        assert predict_zn("left-alternative", 6, 0, 3) is True

    def test_undocumented_returns_none(self):
        assert predict_zn("associative", 7, 2, 3) is None
        assert predict_zn("moufang", 7, 2, 3) is None

    @pytest.mark.parametrize("n", range(2, 13))
    def test_predictions_match_brute_force(self, n):
        for t in range(n):
            u = (1 - t) % n
            g = zn_groupoid(n, t, u)
            for name in ("idempotent-law",) + FAMILY:
                want = predict_zn(name, n, t, u)
                assert want is not None
                got = check_identity(g.magma, name).grade == "strong"
                assert got == want, (n, t, u, name)


class TestSmarandacheGrading:
    def test_z8_2_6_associative_witness(self):
        v = s_check_identity(zn_groupoid(8, 2, 6), "associative")
        assert v.grade == "smarandache"
        assert sorted(v.witness) == [0, 4]

    def test_strong_stays_strong(self):
        v = s_check_identity(zn_semigroup(9, "mul"), "associative")
        assert v.grade == "strong"

    def test_fails_with_no_witness(self):
        v = s_check_identity(zn_groupoid(3, 0, 2), "associative")
        assert v.grade == "fails"
        assert v.witness is None

    def test_product_smarandache_both_components(self):
        b = product(zn_groupoid(8, 2, 6), zn_groupoid(8, 2, 6))
        v = s_check_identity(b, "associative")
        assert v.grade == "smarandache"
        assert v.is_componentwise_witness
        assert [sorted(w) for w in v.witness] == [[0, 4], [0, 4]]

    def test_product_quasi_smarandache_mask(self):
        b = product(zn_groupoid(8, 2, 6), zn_groupoid(3, 0, 2))
        v = s_check_identity(b, "associative")
        assert v.grade == "quasi-smarandache"
        assert v.active_mask == (True, False)
        assert sorted(v.witness[0]) == [0, 4]
        assert v.witness[1] == frozenset()

    def test_product_fails_when_no_component_has_witness(self):
        b = product(zn_groupoid(3, 0, 2), zn_groupoid(3, 2, 2))
        v = s_check_identity(b, "associative")
        assert v.grade == "fails"
        assert set(v.counterexample) == {"x", "y", "z"}
        assert all(len(t) == 2 for t in v.counterexample.values())
