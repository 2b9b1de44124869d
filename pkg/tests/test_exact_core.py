from fractions import Fraction as Fr

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from algentropy.errors import NotMonicError, ZeroPolynomialError, ZeroQuotientError
from algentropy.exact_core import (
    IntPolynomial,
    RatMatrix,
    RatPolynomial,
    char_poly,
    clear_denominators,
    companion_matrix,
    content_and_primitive,
    hyperkernel_basis,
    poly_gcd,
    quotient_matrix,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)
from oracles import charpoly_by_expansion, leibniz_det, sylvester_resultant

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fr, st.integers(-9, 9), st.integers(1, 9))


def int_polys(min_degree=0, max_degree=6, bound=9):
    return st.lists(st.integers(-bound, bound), min_size=min_degree + 1, max_size=max_degree + 1).map(IntPolynomial).filter(
        lambda p: p.degree >= min_degree
    )


def rat_matrices(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n).map(RatMatrix)


class TestPolynomialBasics:
    def test_trailing_zeros_trimmed(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0, 0)).is_zero
        assert IntPolynomial(()).degree == -1

    def test_arithmetic(self):
        f = IntPolynomial((-1, 1))
        g = IntPolynomial((1, 1))
        assert (f * g).coeffs == (-1, 0, 1)
        assert (f + g).coeffs == (0, 2)
        assert (f - f).is_zero
        assert (f**3).coeffs == (-1, 3, -3, 1)

    def test_rational_divmod(self):
        f = RatPolynomial((Fr(1), Fr(0), Fr(0), Fr(1)))
        g = RatPolynomial((Fr(1), Fr(2)))
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_str(self):
        assert str(IntPolynomial((-2, 1))) == "t - 2"
        assert str(RatPolynomial((Fr(1, 2), Fr(-3, 2), 1))) == "t^2 - 3/2*t + 1/2"


class TestContent:
    @pytest.mark.parametrize(
        "coeffs, content, primitive",
        [((2, 4), 2, (1, 2)), ((1, 1), 1, (1, 1)), ((-3, 0, -6), 3, (1, 0, 2))],
    )
    def test_examples(self, coeffs, content, primitive):
        c, p = content_and_primitive(IntPolynomial(coeffs))
        assert (c, p.coeffs) == (content, primitive)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError, match="zero polynomial"):
            content_and_primitive(IntPolynomial(()))

    @given(int_polys(0, 8, 50))
    def test_content_times_primitive_is_f(self, f):
        assume(not f.is_zero)
        c, p = content_and_primitive(f)
        assert c > 0 and p.is_primitive and p.leading > 0
        assert p * c in (f, -f)


class TestClearDenominators:
    @pytest.mark.parametrize(
        "coeffs, s, primitive",
        [
            ((Fr(1, 2), Fr(-3, 2), 1), 2, (1, -3, 2)),
            ((-2, 1), 1, (-2, 1)),
            ((Fr(1, 4), Fr(1, 6), 0, 1), 12, (3, 2, 0, 12)),
        ],
    )
    def test_examples(self, coeffs, s, primitive):
        out = clear_denominators(RatPolynomial(coeffs))
        assert out.s == s
        assert out.primitive.coeffs == primitive

    def test_non_monic_rejected(self):
        with pytest.raises(NotMonicError, match="requires monic polynomial"):
            clear_denominators(RatPolynomial((1, 2)))

    @given(st.lists(rationals, min_size=0, max_size=7))
    def test_primitive_for_every_monic(self, low):
        g = RatPolynomial(low + [Fr(1)])
        out = clear_denominators(g)
        assert out.primitive.is_primitive
        assert out.primitive.to_rational() == g * out.s


class TestCharPoly:
    def test_one_by_one(self):
        assert char_poly(RatMatrix([[2]])).coeffs == (-2, 1)

    def test_companion_of_golden(self):
        f = RatPolynomial((-1, -1, 1))
        assert char_poly(companion_matrix(f)) == f

    def test_scalar_three_halves(self):
        a = RatMatrix([[Fr(3, 2), 0], [0, Fr(3, 2)]])
        assert char_poly(a).coeffs == (Fr(9, 4), -3, 1)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 4).flatmap(rat_matrices))
    def test_matches_leibniz_expansion(self, a):
        assert char_poly(a) == RatPolynomial(charpoly_by_expansion(a.rows))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(rationals, min_size=1, max_size=8), rationals.filter(bool))
    def test_companion_roundtrip(self, low, lead):
        f = RatPolynomial(low + [lead])
        assume(f.degree >= 1)
        assert char_poly(companion_matrix(f)) == f.monic()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(rat_matrices(n), rat_matrices(n))))
    def test_conjugation_invariant(self, pair):
        a, p = pair
        assume(p.determinant() != 0)
        assert char_poly(p @ a @ p.inverse()) == char_poly(a)


class TestCompanion:
    def test_linear(self):
        assert companion_matrix(RatPolynomial((-2, 1))) == RatMatrix([[2]])

    def test_golden(self):
        assert companion_matrix(RatPolynomial((-1, -1, 1))) == RatMatrix([[0, 1], [1, 1]])

    def test_non_monic(self):
        assert companion_matrix(RatPolynomial((1, -3, 2))) == RatMatrix([[0, Fr(-1, 2)], [1, Fr(3, 2)]])

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            companion_matrix(RatPolynomial((3,)))


class TestResultant:
    def test_linear(self):
        assert resultant(IntPolynomial((-2, 1)), IntPolynomial((-3, 1))) == -1

    def test_shared_roots(self):
        f = IntPolynomial((1, 0, 1))
        assert resultant(f, f) == 0

    def test_golden_against_sylvester_oracle(self):
        f, g = (-1, -1, 1), (-1, 0, 1)
        expected = sylvester_resultant(list(f), list(g))
        assert expected == -1
        assert resultant(IntPolynomial(f), IntPolynomial(g)) == expected

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            resultant(IntPolynomial(()), IntPolynomial((1, 1)))

    @settings(max_examples=60, deadline=None)
    @given(int_polys(1, 3, 4), int_polys(1, 3, 4))
    def test_matches_leibniz(self, f, g):
        assert resultant(f, g) == sylvester_resultant(list(f.coeffs), list(g.coeffs))

    @settings(max_examples=80, deadline=None)
    @given(int_polys(1, 4, 3), int_polys(1, 4, 3))
    def test_zero_iff_common_factor(self, f, g):
        assert (resultant(f, g) == 0) == (poly_gcd(f, g).degree > 0)


class TestSquarefree:
    def test_double_root(self):
        assert squarefree_part(IntPolynomial((1, -2, 1))).coeffs == (-1, 1)

    def test_already_squarefree(self):
        assert squarefree_part(IntPolynomial((-1, -1, 1))).coeffs == (-1, -1, 1)

    def test_mixed(self):
        f = IntPolynomial((1, 0, 1)) ** 2 * IntPolynomial((-1, 1))
        expected = IntPolynomial((1, 0, 1)) * IntPolynomial((-1, 1))
        assert squarefree_part(f) == expected
        assert poly_gcd(squarefree_part(f), squarefree_part(f).derivative()).degree == 0

    def test_decomposition(self):
        f = IntPolynomial((-2, 1)) * IntPolynomial((1, 1)) ** 3 * IntPolynomial((1, 0, 1)) ** 3
        parts = squarefree_decomposition(f * 5)
        assert parts == [(IntPolynomial((-2, 1)), 1), (IntPolynomial((1, 1, 1, 1)), 3)]

    @settings(max_examples=50, deadline=None)
    @given(int_polys(1, 3, 3), int_polys(1, 3, 3))
    def test_decomposition_rebuilds(self, f, g):
        h = f * f * g
        prod = IntPolynomial((1,))
        for part, mult in squarefree_decomposition(h):
            prod = prod * part**mult
        _, ph = content_and_primitive(h)
        assert prod == ph


class TestHyperkernel:
    def test_nilpotent(self):
        assert len(hyperkernel_basis(RatMatrix([[0, 1], [0, 0]]))) == 2

    def test_injective(self):
        assert hyperkernel_basis(RatMatrix.identity(3)) == []

    def test_diag(self):
        assert hyperkernel_basis(RatMatrix([[2, 0], [0, 0]])) == [(0, 1)]

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 4).flatmap(rat_matrices))
    def test_kernel_of_power(self, a):
        power = a**a.n
        for v in hyperkernel_basis(a):
            assert all(x == 0 for x in power.apply(v))


class TestQuotient:
    def test_diag(self):
        a = RatMatrix([[2, 0], [0, 0]])
        assert quotient_matrix(a, [(0, 1)]) == RatMatrix([[2]])

    def test_injective_returns_same(self):
        a = RatMatrix([[0, 1], [1, 1]])
        assert quotient_matrix(a, []) == a

    def test_three_by_three(self):
        a = RatMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 3]])
        assert quotient_matrix(a, hyperkernel_basis(a)) == RatMatrix([[3]])

    def test_full_kernel(self):
        a = RatMatrix([[0, 1], [0, 0]])
        with pytest.raises(ZeroQuotientError, match="zero-dimensional"):
            quotient_matrix(a, hyperkernel_basis(a))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4).flatmap(lambda n: st.tuples(rat_matrices(n), st.integers(1, n - 1))))
    def test_quotient_charpoly_divides(self, data):
        a, rank_cut = data
        # zero leading columns so the matrix is singular
        rows = [list(r) for r in a.rows]
        for r in rows:
            for j in range(rank_cut):
                r[j] = 0
        b = RatMatrix(rows)
        kernel = hyperkernel_basis(b)
        assume(0 < len(kernel) < b.n)
        q = quotient_matrix(b, kernel)
        _, rem = divmod(char_poly(b), char_poly(q))
        assert rem.is_zero


def test_determinant_matches_leibniz():
    a = RatMatrix([[1, 2, Fr(1, 3)], [0, -1, 4], [Fr(5, 2), 1, 1]])
    assert a.determinant() == leibniz_det(a.rows)
    assert (a @ a.inverse()) == RatMatrix.identity(3)
