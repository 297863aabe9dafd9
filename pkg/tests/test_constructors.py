"""Builders: parameter validation and frozen worked products."""

import pytest

from ialg import (
    BadLoopParams,
    BadN,
    DegreeTooLarge,
    NonResiduePair,
    NonSquareMul,
    UnsupportedBase,
    matrix_structure,
    new_loop,
    product,
    sym_structure,
    unbounded_groupoid,
    units_group,
    zn_group,
    zn_groupoid,
    zn_semigroup,
)


class TestValidation:
    def test_semigroup_bad_modulus(self):
        with pytest.raises(BadN):
            zn_semigroup(0, "add")

    def test_semigroup_bad_op(self):
        with pytest.raises(ValueError):
            zn_semigroup(5, "sub")

    def test_groupoid_bad_modulus(self):
        with pytest.raises(BadN):
            zn_groupoid(1, 0, 0)

    def test_groupoid_coefficients_normalize_mod_n(self):
        assert zn_groupoid(6, 6, 1).magma.apply(1, 1) == 1
        assert zn_groupoid(6, 1, -1).magma.apply(0, 1) == 5

    def test_groupoid_coefficients_must_be_integers(self):
        with pytest.raises(NonResiduePair):
            zn_groupoid(6, 1.5, 1)
        with pytest.raises(NonResiduePair):
            zn_groupoid(6, "2", 1)

    def test_loop_n_even(self):
        with pytest.raises(BadLoopParams):
            new_loop(6, 3)

    def test_loop_n_too_small(self):
        with pytest.raises(BadLoopParams):
            new_loop(3, 2)

    def test_loop_m_out_of_band(self):
        with pytest.raises(BadLoopParams):
            new_loop(5, 1)
        with pytest.raises(BadLoopParams):
            new_loop(5, 5)

    def test_loop_m_not_coprime(self):
        with pytest.raises(BadLoopParams):
            new_loop(15, 5)

    def test_loop_m_minus_one_not_coprime(self):
        with pytest.raises(BadLoopParams):
            new_loop(15, 6)

    def test_units_bad_modulus(self):
        with pytest.raises(BadN):
            units_group(1)

    def test_sym_degree_cap(self):
        with pytest.raises(DegreeTooLarge):
            sym_structure(10, True)
        with pytest.raises(DegreeTooLarge):
            sym_structure(0, False)

    def test_matrix_mul_needs_square(self):
        base = zn_semigroup(4, "mul")
        with pytest.raises(NonSquareMul):
            matrix_structure(2, 3, base, "mul")

    def test_matrix_base_must_be_single_component(self):
        bi = product(zn_semigroup(3, "add"), zn_semigroup(4, "mul"))
        with pytest.raises(UnsupportedBase):
            matrix_structure(2, 2, bi, "entrywise")

    def test_matrix_base_must_be_zmod(self):
        with pytest.raises(UnsupportedBase):
            matrix_structure(2, 2, sym_structure(3, True), "entrywise")

    def test_product_needs_two(self):
        with pytest.raises(ValueError):
            product(zn_semigroup(5, "add"))


class TestWorkedProducts:
    def test_bisemigroup_add13_mul16(self):
        b = product(zn_semigroup(13, "add"), zn_semigroup(16, "mul"))
        assert b.magma.apply((10, 14), (7, 10)) == (4, 12)

    def test_bigroupoid_with_unbounded_component(self):
        b = product(zn_groupoid(7, 2, 3), unbounded_groupoid(7, 10))
        assert b.magma.apply((3, 20), (2, 1)) == (5, 150)

    def test_bigroupoid_20_14(self):
        b = product(zn_groupoid(20, 3, 9), zn_groupoid(14, 2, 11))
        assert b.magma.apply((3, 7), (1, 13)) == (18, 3)

    def test_bigroup_product_and_inverse(self):
        b = product(zn_group(10), units_group(11))
        assert b.magma.apply((9, 2), (4, 7)) == (3, 3)
        # two-sided inverse of (6, 3)
        e = b.magma.identity_value()
        assert e == (0, 1)
        inv = None
        for x in b.magma.elements():
            if b.magma.apply((6, 3), x) == e and b.magma.apply(x, (6, 3)) == e:
                inv = x
        assert inv == (4, 4)

    def test_four_component_groupoid_product(self):
        b = product(
            zn_groupoid(14, 3, 5),
            zn_groupoid(20, 7, 0),
            zn_groupoid(19, 4, 4),
            zn_groupoid(17, 1, 3),
        )
        assert b.magma.apply((3, 8, 1, 5), (2, 1, 8, 10)) == (5, 16, 17, 1)

    def test_five_component_loop_product(self):
        b = product(
            new_loop(9, 8, flavor="plain"),
            new_loop(11, 7),
            new_loop(11, 3, flavor="plain"),
            new_loop(13, 9),
            new_loop(15, 8),
        )
        assert b.order_of() == 10 * 12 * 12 * 14 * 16
        got = b.magma.apply((6, 10, 7, 8, 12), (2, 7, 3, 5, 10))
        assert got == (1, 11, 6, 7, 11)
        assert b.label_element(got) == "1 ∪ [0,11] ∪ 6 ∪ [0,7] ∪ [0,11]"

    def test_row_vector_times_matrix_mod_120(self):
        g = zn_groupoid(120, 8, 5)
        xv = (3, 2, 1, 0, 5, 9)
        yv = (9, 12, 20, 40, 8, 1)
        got = tuple(g.magma.apply(a, c) for a, c in zip(xv, yv))
        assert got == (69, 76, 108, 80, 80, 77)

    def test_entrywise_matrix_mod_12(self):
        base = zn_groupoid(12, 7, 0)
        M = matrix_structure(3, 3, base, "entrywise")
        A = ((3, 1, 7), (1, 8, 0), (2, 0, 5))
        B = ((2, 0, 0), (7, 5, 0), (1, 3, 8))
        assert M.magma.apply(A, B) == ((9, 7, 1), (7, 8, 0), (2, 0, 11))

    def test_matrix_mul_mod_12(self):
        base = zn_semigroup(12, "mul")
        M = matrix_structure(5, 5, base, "mul")
        X = (
            (0, 1, 0, 2, 0),
            (3, 0, 4, 0, 1),
            (0, 2, 0, 3, 0),
            (5, 0, 1, 0, 2),
            (0, 3, 0, 7, 0),
        )
        Y = (
            (1, 0, 2, 0, 3),
            (0, 4, 0, 5, 0),
            (6, 0, 7, 0, 8),
            (0, 9, 0, 10, 0),
            (11, 0, 1, 0, 2),
        )
        assert M.magma.apply(X, Y) == (
            (0, 10, 0, 1, 0),
            (2, 0, 11, 0, 7),
            (0, 11, 0, 4, 0),
            (9, 0, 7, 0, 3),
            (0, 3, 0, 1, 0),
        )

    def test_sym_group_composition(self):
        s = sym_structure(3, True)
        # left-to-right application: (x.y)(i) = y(x(i))
        x = (3, 2, 1)
        y = (2, 1, 3)
        assert s.magma.apply(x, y) == (3, 1, 2)

    def test_sym_monoid_includes_non_bijections(self):
        m = sym_structure(2, bijective=False)
        assert m.order_of() == 4
        assert sym_structure(2, True).order_of() == 2


class TestLoopTables:
    L_5_2_ROWS = [
        ["e", "1", "2", "3", "4", "5"],
        ["1", "e", "3", "5", "2", "4"],
        ["2", "5", "e", "4", "1", "3"],
        ["3", "4", "1", "e", "5", "2"],
        ["4", "3", "5", "2", "e", "1"],
        ["5", "2", "4", "1", "3", "e"],
    ]

    def test_l5_2_full_table(self):
        L = new_loop(5, 2, flavor="plain")
        elems = L.magma.elements()
        T = L.magma.table()
        rows = [
            [L.magma.label(elems[T[i, j]]) for j in range(len(elems))]
            for i in range(len(elems))
        ]
        assert rows == self.L_5_2_ROWS

    L_7_3_ROWS = [
        ["e", "1", "2", "3", "4", "5", "6", "7"],
        ["1", "e", "4", "7", "3", "6", "2", "5"],
        ["2", "6", "e", "5", "1", "4", "7", "3"],
        ["3", "4", "7", "e", "6", "2", "5", "1"],
        ["4", "2", "5", "1", "e", "7", "3", "6"],
        ["5", "7", "3", "6", "2", "e", "1", "4"],
        ["6", "5", "1", "4", "7", "3", "e", "2"],
        ["7", "3", "6", "2", "5", "1", "4", "e"],
    ]

    def test_l7_3_full_table(self):
        L = new_loop(7, 3, flavor="plain")
        elems = L.magma.elements()
        T = L.magma.table()
        rows = [
            [L.magma.label(elems[T[i, j]]) for j in range(len(elems))]
            for i in range(len(elems))
        ]
        assert rows == self.L_7_3_ROWS

    def test_loop_is_latin_with_e_diagonal(self):
        L = new_loop(9, 2)
        T = L.magma.table()
        n = T.shape[0]
        for i in range(n):
            assert sorted(T[i, :]) == list(range(n))
            assert sorted(T[:, i]) == list(range(n))
            if i:
                assert T[i, i] == 0
