import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algentropy.entropy import (
    algebraic_number_entropy,
    check_addition,
    check_conjugation,
    check_power_law,
    check_product,
    companion_entropy,
    endo_entropy,
    multiplication_entropy,
    yuzvinski_entropy,
)
from algentropy.errors import BlockStructureError, SingularMatrixError
from algentropy.exact_core import IntPolynomial, RatMatrix
from algentropy.suites import SUITES, SuiteConfig, run_suite
from oracles import bisect_root

rationals = st.builds(Fr, st.integers(-9, 9), st.integers(1, 9))
nonzero_rationals = rationals.filter(bool)

GOLDEN = math.log((1 + 5**0.5) / 2)


def invertible(n):
    return (
        st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)
        .map(RatMatrix)
        .filter(lambda m: m.determinant() != 0)
    )


class TestEntropyValues:
    def test_scalar_three_halves(self):
        h = yuzvinski_entropy(RatMatrix.scalar(Fr(3, 2), 2))
        assert h.value_nats == pytest.approx(2 * math.log(3), abs=1e-13)
        assert h.log_s_term == pytest.approx(math.log(4))

    def test_shear(self):
        assert yuzvinski_entropy(RatMatrix([[1, 5], [0, 1]])).value_nats == pytest.approx(0.0, abs=1e-13)

    def test_fibonacci(self):
        h = yuzvinski_entropy(RatMatrix([[0, 1], [1, 1]]))
        assert h.value_nats == pytest.approx(GOLDEN, abs=1e-13)
        assert h.log_s_term == 0.0
        ((root, term),) = h.expanding_terms
        assert root.real == pytest.approx((1 + 5**0.5) / 2)

    def test_rotation_is_zero(self):
        assert yuzvinski_entropy(RatMatrix([[0, -1], [1, 0]])).value_nats == pytest.approx(0.0, abs=1e-13)

    def test_contraction(self):
        # x -> x/2 on Q: s = 2, no expanding eigenvalues
        h = yuzvinski_entropy(RatMatrix([[Fr(1, 2)]]))
        assert h.value_nats == pytest.approx(math.log(2))
        assert h.expanding_terms == ()

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            yuzvinski_entropy(RatMatrix([[1, 1], [1, 1]]))

    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[2, 0], [0, 0]], math.log(2)),
            ([[0, 1], [0, 0]], 0.0),
            ([[0]], 0.0),
            ([[0, 1, 0], [0, 0, 0], [0, 0, 3]], math.log(3)),
            ([[1, 1], [1, 1]], math.log(2)),
        ],
    )
    def test_endo_singular(self, rows, expected):
        assert endo_entropy(RatMatrix(rows)).value_nats == pytest.approx(expected, abs=1e-13)

    def test_endo_agrees_on_invertible(self):
        a = RatMatrix([[0, 1], [1, 1]])
        assert endo_entropy(a) == yuzvinski_entropy(a)

    def test_smyth_companion(self):
        root = bisect_root([-1, -1, 0, 1], Fr(1), Fr(2))
        h = companion_entropy(IntPolynomial((-1, -1, 0, 1)))
        assert h.value_nats == pytest.approx(math.log(root), abs=1e-14)

    def test_algebraic_number(self):
        # alpha = root of 2t^2 - 1, i.e. 1/sqrt(2): measure of 2t^2 - 1 is log 2
        assert algebraic_number_entropy(IntPolynomial((-1, 0, 2))).value_nats == pytest.approx(math.log(2))
        with pytest.raises(ValueError):
            algebraic_number_entropy(IntPolynomial((0, 1)))

    def test_finite_required(self):
        from algentropy.entropy import EntropyValue

        with pytest.raises(ValueError):
            EntropyValue(math.inf, 0.0, (), 1, 0.0)


class TestMultiplication:
    @pytest.mark.parametrize(
        "r, n, expected",
        [(Fr(3, 2), 2, 2 * math.log(3)), (2, 1, math.log(2)), (Fr(-1, 5), 3, 3 * math.log(5)), (1, 4, 0.0), (0, 2, 0.0)],
    )
    def test_closed_form(self, r, n, expected):
        assert multiplication_entropy(r, n).value_nats == pytest.approx(expected)

    @settings(max_examples=40, deadline=None)
    @given(nonzero_rationals, st.integers(1, 3))
    def test_matches_matrix(self, r, n):
        lhs = multiplication_entropy(r, n).value_nats
        rhs = yuzvinski_entropy(RatMatrix.scalar(r, n)).value_nats
        assert lhs == pytest.approx(rhs, abs=1e-11)


class TestLaws:
    def test_addition_example(self):
        a = RatMatrix.block_upper(RatMatrix([[2]]), [[7, Fr(1, 3)]], RatMatrix([[0, 1], [1, 1]]))
        rep = check_addition(a, 1)
        assert rep.ok
        assert rep.h_total == pytest.approx(math.log(2) + GOLDEN)

    def test_addition_rejects_bad_block(self):
        a = RatMatrix([[1, 2], [3, 4]])
        with pytest.raises(BlockStructureError) as info:
            check_addition(a, 1)
        assert (info.value.row, info.value.col) == (1, 0)

    def test_addition_bad_split(self):
        with pytest.raises(ValueError):
            check_addition(RatMatrix([[1, 0], [0, 1]]), 0)

    @pytest.mark.parametrize("k", [-3, -1, 0, 1, 2, 5])
    def test_power_fibonacci(self, k):
        rep = check_power_law(RatMatrix([[0, 1], [1, 1]]), k)
        assert rep.ok
        assert rep.rhs == pytest.approx(abs(k) * GOLDEN)

    def test_power_inverse_of_contraction(self):
        rep = check_power_law(RatMatrix([[Fr(2, 3)]]), -1)
        assert rep.lhs == pytest.approx(math.log(3))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 3).flatmap(lambda n: st.tuples(invertible(n), invertible(n))))
    def test_conjugation(self, pair):
        assert check_conjugation(*pair).ok

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 3).flatmap(invertible), st.integers(1, 3).flatmap(invertible))
    def test_product(self, a, b):
        assert check_product(a, b).ok

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 3).flatmap(invertible), st.integers(-2, 3))
    def test_power(self, a, k):
        assert check_power_law(a, k).ok


class TestSuites:
    @pytest.mark.parametrize("suite", SUITES)
    def test_small_runs_pass(self, suite):
        summary = run_suite(suite, SuiteConfig(cases=10, seed=7))
        assert summary.ok, summary
        assert summary.cases == 10

    def test_power_counts_all_exponents(self):
        assert run_suite("power", SuiteConfig(cases=3)).checks == 27

    def test_deterministic(self):
        cfg = SuiteConfig(cases=8, seed=3)
        assert run_suite("addition", cfg) == run_suite("addition", cfg)

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nope", SuiteConfig(cases=1))

    def test_workers_do_not_change_result(self):
        cfg = SuiteConfig(cases=6, seed=11)
        parallel = SuiteConfig(cases=6, seed=11, workers=2)
        assert run_suite("product", cfg) == run_suite("product", parallel)
