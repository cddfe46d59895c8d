import pytest

from eiconal.cdalgebra import (
    AlgebraElement,
    cd_mul,
    conjugate,
    mult_table,
    norm_poly,
    real_part,
    table_json,
    verify_norm_composition,
)
from eiconal.poly import Polynomial
from eiconal.scalar import Scalar


def scalar_element(dim, values, n=1):
    comps = tuple(Polynomial.constant(n, v) for v in values)
    return AlgebraElement(dim, comps)


def test_dim1_multiplication_is_plain_product():
    p = Polynomial.variable(2, 0)
    q = Polynomial.variable(2, 1)
    x = AlgebraElement(1, (p,))
    y = AlgebraElement(1, (q,))
    assert cd_mul(x, y).components[0] == p * q


def test_imaginary_unit_squares_to_minus_one():
    i = scalar_element(2, [0, 1])
    sq = cd_mul(i, i)
    assert sq.components[0] == Polynomial.constant(1, -1)
    assert sq.components[1].is_zero()


def test_quaternion_table_matches_hamilton():
    # e1 e2 = e3, e2 e1 = -e3, e1^2 = e2^2 = e3^2 = -1
    t = mult_table(4)
    assert t[1][2] == (3, 1)
    assert t[2][1] == (3, -1)
    assert t[1][1] == (0, -1)
    assert t[2][2] == (0, -1)
    assert t[3][3] == (0, -1)
    assert t[0][2] == (2, 1)


def test_table_entries_are_unit_structure_constants():
    for dim in (1, 2, 4, 8):
        t = mult_table(dim)
        for i in range(dim):
            for j in range(dim):
                k, sign = t[i][j]
                assert 0 <= k < dim
                assert sign in (-1, 1)


def test_octonion_components_have_eight_bilinear_terms():
    # each output component of a fully symbolic product collects exactly 8
    # monomials: the table pairs (i, j) hitting a fixed k form a bijection
    n = 16
    x = AlgebraElement.from_variables(8, n, 0)
    y = AlgebraElement.from_variables(8, n, 8)
    prod = cd_mul(x, y)
    for comp in prod.components:
        assert len(comp.terms) == 8


def test_conjugation():
    p = Polynomial.variable(3, 0)
    q = Polynomial.variable(3, 1)
    z = AlgebraElement(2, (p, q))
    assert conjugate(z).components == (p, -q)
    one_dim = AlgebraElement(1, (p,))
    assert conjugate(one_dim).components == (p,)


def test_real_part_doubling_dim8():
    x = AlgebraElement.from_variables(8, 8, 0)
    doubled = x + conjugate(x)
    assert doubled.components[0] == 2 * x.components[0]
    for comp in doubled.components[1:]:
        assert comp.is_zero()


def test_conjugation_is_antiautomorphism_dim8():
    n = 16
    x = AlgebraElement.from_variables(8, n, 0)
    y = AlgebraElement.from_variables(8, n, 8)
    lhs = conjugate(cd_mul(x, y))
    rhs = cd_mul(conjugate(y), conjugate(x))
    assert lhs.components == rhs.components


def test_real_part_commutes_dim8():
    n = 16
    x = AlgebraElement.from_variables(8, n, 0)
    y = AlgebraElement.from_variables(8, n, 8)
    assert real_part(cd_mul(x, y)) == real_part(cd_mul(y, x))


def test_norm_poly():
    for dim in (2, 4, 8):
        x = AlgebraElement.from_variables(dim, dim, 0)
        expected = sum(
            (Polynomial.variable(dim, i) ** 2 for i in range(dim)),
            Polynomial.zero(dim),
        )
        assert norm_poly(x) == expected
        # norm equals the real part of x * conj(x)
        assert real_part(cd_mul(x, conjugate(x))) == expected


def test_norm_composition_all_dims():
    for dim in (1, 2, 4, 8):
        assert verify_norm_composition(dim)


def test_octonions_are_alternative_but_not_associative():
    n = 16
    x = AlgebraElement.from_variables(8, n, 0)
    y = AlgebraElement.from_variables(8, n, 8)
    # alternative law x(xy) = (xx)y holds symbolically
    lhs = cd_mul(x, cd_mul(x, y))
    rhs = cd_mul(cd_mul(x, x), y)
    assert lhs.components == rhs.components

    # associativity fails on some basis triple
    t = mult_table(8)

    def basis_triple_product(i, j, k):
        ij, s1 = t[i][j]
        out, s2 = t[ij][k]
        return out, s1 * s2

    def basis_triple_product_right(i, j, k):
        jk, s1 = t[j][k]
        out, s2 = t[i][jk]
        return out, s1 * s2

    witness_found = any(
        basis_triple_product(i, j, k) != basis_triple_product_right(i, j, k)
        for i in range(8)
        for j in range(8)
        for k in range(8)
    )
    assert witness_found


def test_table_json_export():
    triples = table_json(2)
    assert len(triples) == 4
    assert [0, 0, 0, 1] in triples
    assert [1, 1, 0, -1] in triples


def test_dimension_errors():
    with pytest.raises(ValueError):
        mult_table(16)
    with pytest.raises(ValueError):
        AlgebraElement(3, tuple(Polynomial.zero(1) for _ in range(3)))
    x = AlgebraElement.from_variables(2, 4, 0)
    y = AlgebraElement.from_variables(4, 4, 0)
    with pytest.raises(ValueError):
        cd_mul(x, y)
