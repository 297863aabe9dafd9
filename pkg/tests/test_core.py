"""Core algebra: carriers, magmas, tables, orders, and classification."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ialg import (
    InfiniteCarrier,
    Magma,
    NoIdentity,
    new_loop,
    product,
    unbounded_groupoid,
    units_group,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)


class TestCarrierBasics:
    def test_zmod_elements_ascending(self):
        s = zn_semigroup(6, "mul")
        assert s.magma.elements() == [0, 1, 2, 3, 4, 5]

    def test_interval_labels(self):
        s = zn_semigroup(4, "mul")
        assert s.magma.labels() == ["[0,0]", "[0,1]", "[0,2]", "[0,3]"]

    def test_plain_labels(self):
        s = zn_semigroup(4, "mul", flavor="plain")
        assert s.magma.labels() == ["0", "1", "2", "3"]

    def test_loop_carrier_e_first(self):
        L = new_loop(5, 2)
        assert L.magma.elements() == [0, 1, 2, 3, 4, 5]
        assert L.magma.labels()[0] == "e"
        assert L.magma.labels()[1] == "[0,1]"

    def test_units_carrier(self):
        u = units_group(10)
        assert u.magma.elements() == [1, 3, 7, 9]

    def test_product_labels_join_with_union_sign(self):
        b = product(zn_semigroup(3, "add"), zn_semigroup(2, "mul"))
        assert b.label_element((1, 0)) == "[0,1] ∪ [0,0]"


class TestTables:
    def test_table_matches_apply(self):
        g = zn_groupoid(7, 2, 3)
        T = g.magma.table()
        elems = g.magma.elements()
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                assert elems[T[i, j]] == g.magma.apply(a, b)

    def test_table_cached_identical(self):
        g = zn_groupoid(5, 2, 4)
        assert g.magma.table() is g.magma.table()

    def test_product_apply_componentwise(self):
        b = product(zn_semigroup(13, "add"), zn_semigroup(16, "mul"))
        assert b.magma.apply((10, 14), (7, 10)) == (4, 12)

    def test_infinite_carrier_applies_but_never_enumerates(self):
        g = unbounded_groupoid(7, 10)
        assert g.magma.apply(20, 1) == 150
        with pytest.raises(InfiniteCarrier):
            g.magma.table()
        with pytest.raises(InfiniteCarrier):
            g.order_of()


class TestOrders:
    def test_structure_order_is_product_of_component_sizes(self):
        b = product(zn_semigroup(13, "add"), zn_semigroup(16, "mul"))
        assert b.order_of() == 208

    def test_element_order_in_group(self):
        g = zn_group(10)
        assert g.magma.element_order(2) == 5
        assert g.magma.element_order(1) == 10
        assert g.magma.element_order(0) == 1

    def test_element_order_units11(self):
        u = units_group(11)
        assert u.magma.element_order(10) == 2

    def test_element_order_in_z9_mul(self):
        s = zn_semigroup(9, "mul")
        assert s.magma.element_order(8) == 2

    def test_order_none_without_identity_cycle(self):
        s = zn_semigroup(9, "mul")
        assert s.magma.element_order(3) is None

    def test_left_power_coherence(self):
        u = units_group(11)
        for x in u.magma.elements():
            k = u.magma.element_order(x)
            acc = x
            for _ in range(k - 1):
                acc = u.magma.apply(acc, x)
            assert acc == 1

    def test_loop_elements_order_two(self):
        L = new_loop(7, 3)
        for x in range(1, 8):
            assert L.magma.element_order(x) == 2


class TestClassification:
    def test_zn_add_is_group(self):
        assert zn_group(13).classify().label == "group"

    def test_zn_mul_is_monoid(self):
        assert zn_semigroup(24, "mul").classify().label == "monoid"

    def test_groupoid_is_groupoid(self):
        cls = zn_groupoid(12, 3, 9).classify()
        assert cls.label == "groupoid"
        assert not cls.associative

    def test_z12_3_9_first_associativity_counterexample(self):
        g = zn_groupoid(12, 3, 9)
        m = g.magma
        cx = None
        for x in m.elements():
            for y in m.elements():
                for z in m.elements():
                    if m.apply(m.apply(x, y), z) != m.apply(x, m.apply(y, z)):
                        cx = (x, y, z)
                        break
                if cx:
                    break
            if cx:
                break
        assert cx == (1, 0, 0)

    def test_loop_is_loop(self):
        cls = new_loop(5, 2).classify()
        assert cls.label == "loop"
        assert cls.latin_square and cls.has_identity and not cls.associative

    def test_loop_commutative_iff_half(self):
        assert new_loop(5, 3).classify().commutative
        assert not new_loop(5, 2).classify().commutative

    def test_classify_label_product(self):
        b = product(zn_group(13), zn_semigroup(16, "mul"))
        assert b.classify_label() == "group × monoid"

    def test_family_label_single(self):
        assert zn_semigroup(20, "mul").family_label() == "interval monoid"

    def test_family_label_bistructure(self):
        b = product(zn_semigroup(3, "add"), zn_semigroup(5, "add"))
        assert b.family_label() == "interval bigroup"

    def test_identity_and_absorber(self):
        m = zn_semigroup(6, "mul").magma
        assert m.identity_value() == 1
        assert m.absorbing_value() == 0
        assert zn_groupoid(6, 2, 4).magma.identity_value() is None

    def test_product_identity_requires_all_components(self):
        b = product(zn_group(5), zn_groupoid(6, 2, 4))
        assert b.magma.identity_value() is None

    def test_no_identity_raises_for_order_query(self):
        g = zn_groupoid(6, 2, 4)
        with pytest.raises(NoIdentity):
            g.magma.element_order(2)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=12),
    t=st.integers(min_value=0, max_value=11),
    u=st.integers(min_value=0, max_value=11),
    a=st.integers(min_value=0, max_value=11),
    b=st.integers(min_value=0, max_value=11),
)
def test_groupoid_closure_property(n, t, u, a, b):
    g = zn_groupoid(n, t % n, u % n)
    out = g.magma.apply(a % n, b % n)
    assert 0 <= out < n
    assert out == ((t % n) * (a % n) + (u % n) * (b % n)) % n


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=9),
    q=st.integers(min_value=2, max_value=9),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_product_agrees_with_componentwise_oracle(n, q, seed):
    rng = np.random.default_rng(seed)
    s1 = zn_semigroup(n, "add")
    s2 = zn_semigroup(q, "mul")
    b = product(s1, s2)
    a = (int(rng.integers(n)), int(rng.integers(q)))
    c = (int(rng.integers(n)), int(rng.integers(q)))
    assert b.magma.apply(a, c) == (
        s1.magma.apply(a[0], c[0]),
        s2.magma.apply(a[1], c[1]),
    )
