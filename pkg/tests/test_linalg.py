"""Unit tests for exact matrices, quadratic forms, and parameter solving."""

from fractions import Fraction

import pytest

from s6quartic import (
    ALL_T,
    EMPTY,
    OMEGA,
    Eisenstein,
    Matrix,
    NonRationalRootError,
    TSolutionSet,
    X,
    gram_matrix,
    parse_polynomial,
    rref_linear_forms,
    solve_linear_in_t,
    solve_parametric_proportionality,
)

X0, X1, X2, X3, X4, X5 = X
W = OMEGA


def frac_det4(m: Matrix) -> Eisenstein:
    """Determinant by cofactor expansion, independent of the rank code."""

    n = len(m.rows)
    if n == 1:
        return m.entry(0, 0)
    total = Eisenstein(0)
    for j in range(n):
        minor = Matrix(
            [
                [m.entry(r, c) for c in range(n) if c != j]
                for r in range(1, n)
            ]
        )
        sign = Eisenstein(1) if j % 2 == 0 else Eisenstein(-1)
        total = total + sign * m.entry(0, j) * frac_det4(minor)
    return total


class TestMatrix:
    def test_validation(self):
        with pytest.raises(ValueError):
            Matrix([])
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            Matrix([[1]] * 17)

    def test_identity_and_transpose(self):
        eye = Matrix.identity(3)
        assert eye.entry(0, 0) == Eisenstein(1)
        assert eye.entry(0, 1) == Eisenstein(0)
        m = Matrix([[1, 2, 3], [4, 5, 6]])
        assert m.transpose() == Matrix([[1, 4], [2, 5], [3, 6]])

    def test_product(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        assert a * b == Matrix([[2, 1], [4, 3]])
        with pytest.raises(ValueError):
            a * Matrix([[1, 2, 3]])

    def test_rank(self):
        assert Matrix.identity(4).rank() == 4
        assert Matrix([[0, 0], [0, 0]]).rank() == 0
        assert Matrix([[1, 2], [2, 4]]).rank() == 1
        assert Matrix([[1, W], [W, W * W]]).rank() == 1
        assert Matrix([[1, 0], [W, 1]]).rank() == 2

    def test_rank_of_gradient_configuration(self):
        # At (1, 1, w, w, w^2, w^2) on the t = 6 member the quartic gradient
        # is a scalar multiple of the all-ones row, so the 2 x 6 matrix of
        # both has rank 1.
        ones = [Eisenstein(1)] * 6
        grad = [Eisenstein(24)] * 6
        assert Matrix([ones, grad]).rank() == 1


class TestRref:
    def test_plane_image_basis(self):
        # Images of the two distinguished plane forms under the order-4
        # coordinate permutation, fed in scrambled order.
        forms = [
            parse_polynomial("x4 + x2 + x5"),
            parse_polynomial("x3 + x0 + x1"),
        ]
        basis = rref_linear_forms(forms)
        assert [str(f) for f in basis] == ["x0 + x1 + x3", "x2 + x4 + x5"]

    def test_span_invariance(self):
        forms = [X0 + X1, X1 + X2]
        scaled = [W * (X1 + X2), (X0 + X1) + (X1 + X2)]
        assert rref_linear_forms(forms) == rref_linear_forms(scaled)

    def test_zero_forms_skipped_and_dependent_forms_collapse(self):
        from s6quartic import Polynomial

        basis = rref_linear_forms([Polynomial.zero(), X0, 2 * X0])
        assert basis == [X0]

    def test_rejects_non_linear(self):
        with pytest.raises(ValueError):
            rref_linear_forms([X0**2])
        with pytest.raises(ValueError):
            rref_linear_forms([X0 + 1])

    def test_pivot_leading_coefficients_are_one(self):
        basis = rref_linear_forms([3 * X1 + X4, W * X0])
        for form in basis:
            assert form.leading_coefficient() == Eisenstein(1)


class TestGramMatrix:
    def test_small_example(self):
        q = X0**2 + X0 * X1 + 3 * X1**2
        g = gram_matrix(q, [0, 1])
        assert g == Matrix([[1, Fraction(1, 2)], [Fraction(1, 2), 3]])

    def test_validation(self):
        with pytest.raises(ValueError):
            gram_matrix(X0**3, [0])
        with pytest.raises(ValueError):
            gram_matrix(X0**2 + X1, [0, 1])
        with pytest.raises(ValueError):
            gram_matrix(X0**2, [0, 0])
        with pytest.raises(ValueError):
            gram_matrix(X0 * X1, [0])

    def test_conjugate_quadrics_have_full_rank(self):
        from s6quartic import QUADRIC_PAIR

        w2 = W * W
        expected = [
            Matrix(
                [
                    [1, 0, Fraction(1, 2), 0],
                    [0, W, 0, W / 2],
                    [Fraction(1, 2), 0, 1, 0],
                    [0, W / 2, 0, W],
                ]
            ),
            Matrix(
                [
                    [1, 0, Fraction(1, 2), 0],
                    [0, w2, 0, w2 / 2],
                    [Fraction(1, 2), 0, 1, 0],
                    [0, w2 / 2, 0, w2],
                ]
            ),
        ]
        dets = [
            Eisenstein(Fraction(-9, 16), Fraction(-9, 16)),
            Eisenstein(0, Fraction(9, 16)),
        ]
        for quadric, matrix, det in zip(QUADRIC_PAIR, expected, dets):
            g = gram_matrix(quadric, [0, 1, 2, 3])
            assert g == matrix
            assert frac_det4(g) == det
            assert det != Eisenstein(0)
            assert g.rank() == 4


class TestSolutionSets:
    def test_finite_constructor_sorts_and_dedupes(self):
        s = TSolutionSet.finite([Fraction(2), Fraction(1, 2), Fraction(2)])
        assert s.values == (Fraction(1, 2), Fraction(2))
        assert str(s) == "{1/2, 2}"

    def test_finite_empty_is_empty(self):
        assert TSolutionSet.finite([]) is EMPTY or TSolutionSet.finite([]) == EMPTY

    def test_strings(self):
        assert str(ALL_T) == "all-t"
        assert str(EMPTY) == "empty"
        assert str(TSolutionSet.finite([Fraction(6)])) == "{6}"

    def test_intersection_algebra(self):
        six = TSolutionSet.finite([Fraction(6)])
        both = TSolutionSet.finite([Fraction(6), Fraction(7)])
        assert ALL_T.intersect(six) == six
        assert six.intersect(ALL_T) == six
        assert EMPTY.intersect(six) == EMPTY
        assert six.intersect(both) == six
        assert six.intersect(TSolutionSet.finite([Fraction(7)])) == EMPTY
        assert ALL_T.intersect(ALL_T) == ALL_T


class TestLinearSolver:
    def test_no_conditions_means_all_t(self):
        assert solve_linear_in_t([]) == ALL_T

    def test_trivial_conditions_skipped(self):
        zero = Eisenstein(0)
        assert solve_linear_in_t([(zero, zero)]) == ALL_T

    def test_single_root(self):
        # alpha + t*beta = 0 with alpha = -36, beta = 6 gives t = 6.
        s = solve_linear_in_t([(Eisenstein(-36), Eisenstein(6))])
        assert s == TSolutionSet.finite([Fraction(6)])

    def test_unsatisfiable_constant(self):
        assert solve_linear_in_t([(Eisenstein(1), Eisenstein(0))]) == EMPTY

    def test_conflicting_roots(self):
        s = solve_linear_in_t(
            [
                (Eisenstein(-1), Eisenstein(1)),
                (Eisenstein(-2), Eisenstein(1)),
            ]
        )
        assert s == EMPTY

    def test_irrational_root_raises(self):
        with pytest.raises(NonRationalRootError) as info:
            solve_linear_in_t([(W, Eisenstein(1))])
        assert "outside the rationals" in str(info.value)

    def test_error_is_value_error(self):
        assert issubclass(NonRationalRootError, ValueError)


class TestProportionalitySolver:
    def test_validation(self):
        one = Eisenstein(1)
        with pytest.raises(ValueError):
            solve_parametric_proportionality([one], [one, one], [one, one])
        with pytest.raises(ValueError):
            solve_parametric_proportionality([], [], [])
        with pytest.raises(ValueError):
            solve_parametric_proportionality([one], [one], [Eisenstein(0)])

    def test_balanced_sign_point_forces_t_6(self):
        # v0 + t*v1 must be proportional to the all-ones vector, where v0 and
        # v1 are the two gradient halves at (1, 1, 1, -1, -1, -1).
        signs = [1, 1, 1, -1, -1, -1]
        v0 = [Eisenstein(-24 * s) for s in signs]
        v1 = [Eisenstein(4 * s) for s in signs]
        ones = [Eisenstein(1)] * 6
        s = solve_parametric_proportionality(v0, v1, ones)
        assert s == TSolutionSet.finite([Fraction(6)])

    def test_already_proportional_for_all_t(self):
        ones = [Eisenstein(1)] * 6
        v0 = [Eisenstein(2)] * 6
        v1 = [Eisenstein(-3)] * 6
        assert solve_parametric_proportionality(v0, v1, ones) == ALL_T

    def test_never_proportional(self):
        ones = [Eisenstein(1)] * 6
        v0 = [Eisenstein(i) for i in (1, 2, 3, 4, 5, 6)]
        v1 = [Eisenstein(0)] * 6
        assert solve_parametric_proportionality(v0, v1, ones) == EMPTY
