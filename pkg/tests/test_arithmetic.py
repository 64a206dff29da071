import random
from fractions import Fraction

import pytest

from tropmarkov.errors import DomainError
from tropmarkov.laurent import LaurentPoly
from tropmarkov.sampling import random_params, random_word
from tropmarkov.surface import CellId, Params, cell_has_interior, cells_of, on_skeleton
from tropmarkov.dynamics import Word
from tropmarkov.arithmetic import (
    SurfacePointL,
    compact_radius,
    enumerate_zp_points,
    fatou_condition,
    fatou_witness,
    lift_consistency,
    matrix_divergence,
    rational_vieta,
    surface_from_seed,
    v_partial_products,
    vieta_exact,
)

F = Fraction
ZERO = LaurentPoly.zero()


def seed_point(*vals):
    polys = [LaurentPoly.parse(v) for v in vals]
    return surface_from_seed(polys[0], polys[1], polys[2], ZERO, ZERO, ZERO)


class TestFatou:
    def test_condition_examples(self):
        assert fatou_condition(Params.parse("0,0,0,-1"))
        assert not fatou_condition(Params.parse("0,0,0,0"))
        assert not fatou_condition(Params.parse("1,1,1,3"))

    def test_witness_examples(self):
        assert fatou_witness(Params.parse("inf,inf,inf,-3")) == (F(-1), F(-1), F(-1))
        w = fatou_witness(Params.parse("0,0,0,-1"))
        assert w == (F(-1, 3), F(-1, 3), F(-1, 3))

    def test_witness_postconditions(self):
        rng = random.Random(101)
        produced = 0
        for _ in range(300):
            params = random_params(rng)
            assert fatou_condition(params) == cell_has_interior(params, CellId.D)
            if not fatou_condition(params):
                with pytest.raises(DomainError):
                    fatou_witness(params)
                continue
            x = fatou_witness(params)
            assert sum(x) == params.d.finite
            assert on_skeleton(params, x)
            assert cells_of(params, x) == {CellId.D}
            produced += 1
        assert produced > 40

    def test_asymmetric_witness(self):
        params = Params.parse("-2,inf,inf,-3")
        x = fatou_witness(params)
        assert cells_of(params, x) == {CellId.D}


class TestExactVieta:
    def test_seed_examples(self):
        assert seed_point("t^-1", "t^-1", "t^-1").D == LaurentPoly.parse("3*t^-2 + t^-3")
        assert seed_point("t^-1", "t^-2", "t^-1").D == LaurentPoly.parse("2*t^-2 + 2*t^-4")
        assert seed_point("0", "0", "0").D == ZERO

    def test_involution_and_division_form(self):
        P = seed_point("t^-1", "t^-1", "t^-1")
        Q = vieta_exact(1, P)
        assert Q.X1 == LaurentPoly.parse("-t^-1 - t^-2")
        assert vieta_exact(1, Q).X1 == P.X1
        assert Q.X1 * P.X1 == (
            P.X2.square() + P.X3.square() - P.B * P.X2 - P.C * P.X3 - P.D
        )

    def test_surface_invariant_enforced(self):
        with pytest.raises(DomainError):
            SurfacePointL(
                LaurentPoly.constant(1), LaurentPoly.constant(1), LaurentPoly.constant(1),
                ZERO, ZERO, ZERO, LaurentPoly.constant(7),
            )


class TestLiftConsistency:
    def test_single_step_example(self):
        P = seed_point("t^-1", "t^-1", "t^-1")
        report = lift_consistency(P, Word.parse("s1"))
        assert report.ok and report.precondition_ok
        step = report.steps[0]
        assert step.exact_valuations[0] == -2
        assert step.tropical == (F(-2), F(-1), F(-1))

    def test_length_six_word(self):
        P = seed_point("t^-1", "t^-1", "t^-1")
        report = lift_consistency(P, Word.parse("s2 s1 s3 s1 s2 s1"))
        assert report.ok
        assert all(s.match for s in report.steps)

    def test_boundary_seed_flags_precondition(self):
        # Valuation vector (-1,-1,-2) lands on the boundary of the D cell.
        P = seed_point("t^-1", "t^-1", "t^-2")
        report = lift_consistency(P, Word.parse("s1"))
        assert not report.precondition_ok
        assert not report.ok

    def test_random_seeds(self):
        rng = random.Random(103)
        for _ in range(15):
            exps = _interior_exponents(rng)
            seeds = []
            for e in exps:
                coeffs = {e: F(rng.randint(1, 5))}
                if rng.random() < 0.7:
                    coeffs[e + rng.randint(1, 3)] = F(rng.randint(-4, 4) or 1)
                seeds.append(LaurentPoly(coeffs))
            P = surface_from_seed(*seeds, ZERO, ZERO, ZERO)
            w = random_word(rng, rng.randint(1, 8))
            report = lift_consistency(P, w)
            assert report.precondition_ok
            assert report.ok


def _interior_exponents(rng):
    while True:
        exps = tuple(rng.randint(-5, -1) for _ in range(3))
        if all(sum(exps) < 2 * e for e in exps):
            return exps


class TestMatrixDivergence:
    def test_constant_signs_stay_bounded(self):
        assert matrix_divergence([1, 1, 1]) == [0, 0, 0]
        assert matrix_divergence([-1] * 5) == [0] * 5

    def test_alternating_signs_diverge(self):
        mins = matrix_divergence([1, -1] * 6)
        assert mins == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
        assert all(b > a for a, b in zip(mins[2:], mins[3:]))

    def test_alternating_product_is_convergent_matrix(self):
        # Blocks of length 1 encode [1; 1, 1, ...]: the product carries two
        # consecutive convergents, row-swapped when the block count is even.
        convergents = [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8)]

        def rows(ell):
            (pl, ql), (pm, qm) = convergents[ell], convergents[ell - 1]
            return ((ql, pl), (qm, pm))

        five = v_partial_products([1, -1, 1, -1, 1])[-1]
        assert five == rows(4)  # ell = 4 even: convergent rows directly
        six = v_partial_products([1, -1, 1, -1, 1, -1])[-1]
        assert six == (rows(5)[1], rows(5)[0])  # ell = 5 odd: swapped

    def test_partial_products_nonnegative_nondecreasing(self):
        rng = random.Random(107)
        for _ in range(1000):
            signs = [rng.choice((1, -1)) for _ in range(30)]
            mins = matrix_divergence(signs)
            assert all(m >= 0 for m in mins)
            assert all(b >= a for a, b in zip(mins, mins[1:]))


class TestZpEnumeration:
    def test_empty_cases(self):
        assert enumerate_zp_points(2, F(1, 4)) == []
        assert enumerate_zp_points(2, F(1, 8)) == []

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            enumerate_zp_points(2, F(1, 2))  # D >= 1/3
        with pytest.raises(DomainError):
            enumerate_zp_points(2, F(1, 3))  # not in Z[1/2]

    def test_nonempty_case_contains_symmetric_point(self):
        pts = enumerate_zp_points(2, F(11, 64))
        coords = {z.coords for z in pts}
        assert (F(-1, 4), F(-1, 4), F(-1, 4)) in coords
        for z in pts:
            assert sum(c * c for c in z.coords) < compact_radius(F(11, 64))
            x1, x2, x3 = z.coords
            assert x1 * x1 + x2 * x2 + x3 * x3 + x1 * x2 * x3 == F(11, 64)

    def test_vieta_closure_of_outputs(self):
        D = F(11, 64)
        for z in enumerate_zp_points(2, D):
            for i in (1, 2, 3):
                y = rational_vieta(i, z.coords, D)
                assert y[0] ** 2 + y[1] ** 2 + y[2] ** 2 + y[0] * y[1] * y[2] == D
                for c in y:
                    den = c.denominator
                    while den % 2 == 0:
                        den //= 2
                    assert den == 1

    def test_matches_brute_force_oracle(self):
        from conftest import brute_force_zp_points

        for p, D in ((2, F(1, 4)), (2, F(5, 16)), (2, F(11, 64)), (3, F(1, 9))):
            ours = [(z.coords, z.exponents) for z in enumerate_zp_points(p, D)]
            assert ours == brute_force_zp_points(p, D)


class TestCompactRadius:
    def test_examples(self):
        assert compact_radius(F(1, 4)) == F(3, 4)
        assert compact_radius(F(1, 3)) == 1
        with pytest.raises(DomainError):
            compact_radius(F(5))

    def test_symmetric_slice_roots_respect_bound(self):
        # Roots of 3t^2 + t^3 = D near the origin parametrise the symmetric
        # points of the compact component; isolate them by sign changes.
        D = F(1, 4)
        roots = _isolate_roots(lambda t: 3 * t * t + t**3 - D, F(-1), F(1))
        assert len(roots) == 2
        for lo, hi in roots:
            assert 3 * max(lo * lo, hi * hi) < compact_radius(D) + F(1, 1000)


def _isolate_roots(f, lo, hi, pieces=64, depth=40):
    roots = []
    step = (hi - lo) / pieces
    for k in range(pieces):
        a, b = lo + k * step, lo + (k + 1) * step
        fa, fb = f(a), f(b)
        if fa == 0:
            roots.append((a, a))
            continue
        if fa * fb < 0:
            for _ in range(depth):
                mid = (a + b) / 2
                if f(a) * f(mid) <= 0:
                    b = mid
                else:
                    a = mid
            roots.append((a, b))
    return roots
