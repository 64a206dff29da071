"""Arithmetic applications over non-archimedean scalars.

The Fatou condition (nonempty interior of the D cell) with a rational witness;
exact Vieta orbits over Laurent-polynomial surface points together with the
valuation-lift consistency check; partial-product divergence for the shear
matrices; and the enumerator of Z[1/p]-points on the compact component of the
surface x1^2+x2^2+x3^2+x1x2x3 = D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, UsageError
from .laurent import LaurentPoly
from .scalars import ExtRat, ext_min, is_prime, p_adic_valuation
from .surface import CellId, Params, Point3, cells_of, on_skeleton
from .dynamics import Word, trop_vieta

Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def fatou_condition(params: Params) -> bool:
    """d < min(0, 2a-d) + min(0, 2b-d) + min(0, 2c-d), infinity-aware."""
    a, b, c, d = params.a, params.b, params.c, params.d
    if d.is_infinite:
        return False
    zero = ExtRat(0)
    rhs = (
        ext_min((zero, 2 * a - d))
        + ext_min((zero, 2 * b - d))
        + ext_min((zero, 2 * c - d))
    )
    return d < rhs


def _midpoint(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


def fatou_witness(params: Params) -> Point3:
    """A rational point interior to the D cell: coordinate sum d with every
    competing monomial strictly larger."""
    if not fatou_condition(params):
        raise DomainError(f"parameters {params} do not satisfy the Fatou condition")
    a, b, c, d = params.a, params.b, params.c, params.d
    dv = d.finite
    symmetric = (dv / 3, dv / 3, dv / 3)
    if on_skeleton(params, symmetric) and cells_of(params, symmetric) == {CellId.D}:
        return symmetric
    # Interval elimination in x2 then x1 (x3 = d - x1 - x2).
    lo2 = dv / 2 if b.is_infinite else max(dv / 2, dv - b.finite)
    hi2 = ext_min((ExtRat(0), c - dv / 2, a - dv / 2, a + c - dv)).finite
    x2 = _midpoint(lo2, hi2)
    lo1 = dv / 2 if a.is_infinite else max(dv / 2, dv - a.finite)
    hi1 = ext_min((ExtRat(dv / 2 - x2), c - x2)).finite
    x1 = _midpoint(lo1, hi1)
    x = (x1, x2, dv - x1 - x2)
    if cells_of(params, x) != {CellId.D}:
        raise DomainError(f"no interior witness found for {params}")
    return x


# -- exact Vieta dynamics over Laurent polynomials ---------------------------------


@dataclass(frozen=True)
class SurfacePointL:
    """A Laurent-polynomial point (X1, X2, X3) on the surface with coefficients
    (A, B, C, D); construction enforces the on-surface identity."""

    X1: LaurentPoly
    X2: LaurentPoly
    X3: LaurentPoly
    A: LaurentPoly
    B: LaurentPoly
    C: LaurentPoly
    D: LaurentPoly

    def __post_init__(self):
        lhs = self.X1.square() + self.X2.square() + self.X3.square() + self.X1 * self.X2 * self.X3
        rhs = self.A * self.X1 + self.B * self.X2 + self.C * self.X3 + self.D
        if lhs != rhs:
            raise DomainError("coordinates do not satisfy the surface equation")

    def coordinates(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.X1, self.X2, self.X3)

    def valuation_vector(self) -> tuple[ExtRat, ExtRat, ExtRat]:
        return (self.X1.t_valuation(), self.X2.t_valuation(), self.X3.t_valuation())

    def params(self) -> Params:
        return Params(
            self.A.t_valuation(), self.B.t_valuation(),
            self.C.t_valuation(), self.D.t_valuation(),
        )


def surface_from_seed(X1: LaurentPoly, X2: LaurentPoly, X3: LaurentPoly,
                      A: LaurentPoly, B: LaurentPoly, C: LaurentPoly) -> SurfacePointL:
    """Derive D so that the seed lies on the surface."""
    D = (X1.square() + X2.square() + X3.square() + X1 * X2 * X3
         - A * X1 - B * X2 - C * X3)
    return SurfacePointL(X1, X2, X3, A, B, C, D)


def vieta_exact(i: int, point: SurfacePointL) -> SurfacePointL:
    """Exact Vieta involution: s1 replaces X1 by A - X1 - X2*X3, and cyclically."""
    X1, X2, X3 = point.X1, point.X2, point.X3
    if i == 1:
        X1 = point.A - X1 - X2 * X3
    elif i == 2:
        X2 = point.B - X2 - X1 * X3
    elif i == 3:
        X3 = point.C - X3 - X1 * X2
    else:
        raise UsageError(f"generator index must be 1, 2 or 3, got {i}")
    return SurfacePointL(X1, X2, X3, point.A, point.B, point.C, point.D)


@dataclass(frozen=True)
class LiftStep:
    prefix: Word
    exact_valuations: tuple[ExtRat, ExtRat, ExtRat]
    tropical: Point3
    match: bool


@dataclass(frozen=True)
class LiftReport:
    ok: bool
    precondition_ok: bool
    steps: tuple[LiftStep, ...]


def lift_consistency(point: SurfacePointL, word: Word) -> LiftReport:
    """Compare t-adic valuations of the exact Vieta orbit against the
    tropicalized orbit, prefix by prefix.

    The agreement is guaranteed when the seed's valuation vector is interior
    to the D cell; a violated precondition is reported, not fatal.
    """
    params = point.params()
    vals = point.valuation_vector()
    pre_ok = False
    if all(not v.is_infinite for v in vals):
        x0 = tuple(v.finite for v in vals)
        pre_ok = on_skeleton(params, x0) and cells_of(params, x0) == {CellId.D}
    else:
        x0 = None
    if x0 is None:
        return LiftReport(ok=False, precondition_ok=False, steps=())
    steps: list[LiftStep] = []
    cur_exact = point
    cur_trop: Point3 = x0
    letters: list[int] = []
    ok = True
    for g in word.applied_order():
        cur_exact = vieta_exact(g, cur_exact)
        cur_trop = trop_vieta(params, g, cur_trop)
        letters.insert(0, g)
        exact_vals = cur_exact.valuation_vector()
        match = all(ev == tv for ev, tv in zip(exact_vals, cur_trop))
        ok = ok and match
        steps.append(LiftStep(Word(tuple(letters)), exact_vals, cur_trop, match))
    return LiftReport(ok=ok and pre_ok, precondition_ok=pre_ok, steps=tuple(steps))


# -- shear-matrix divergence --------------------------------------------------------


V_PLUS: Matrix2 = ((1, 1), (0, 1))
V_MINUS: Matrix2 = ((1, 0), (1, 1))


def _mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def v_partial_products(signs: Sequence[int]) -> list[Matrix2]:
    """Products V_{s_k} ... V_{s_1} for every prefix of the sign sequence."""
    out = []
    acc: Matrix2 = ((1, 0), (0, 1))
    for s in signs:
        if s not in (1, -1):
            raise UsageError(f"signs must be +1 or -1, got {s}")
        acc = _mul(V_PLUS if s == 1 else V_MINUS, acc)
        out.append(acc)
    return out


def matrix_divergence(signs: Sequence[int]) -> list[int]:
    """Minimum entry of each partial product of the shear matrices.

    Nonnegative and nondecreasing; divergent when the sign sequence is not
    eventually constant.
    """
    return [min(m[0][0], m[0][1], m[1][0], m[1][1]) for m in v_partial_products(signs)]


# -- Z[1/p]-points on the compact component ------------------------------------------


@dataclass(frozen=True)
class ZpPoint:
    """A representative point with denominators a power of p; exponents are the
    p-adic valuations of the coordinates."""

    coords: tuple[Fraction, Fraction, Fraction]
    exponents: tuple[int, int, int]


def compact_radius(D) -> Fraction:
    """Squared-radius bound 3D of the ball containing the compact component."""
    D = Fraction(D)
    if not 0 < D < 4:
        raise DomainError(f"compact component bound requires 0 < D < 4, got {D}")
    return 3 * D


def _is_p_power_denominator(x: Fraction, p: int) -> bool:
    den = x.denominator
    while den % p == 0:
        den //= p
    return den == 1


def enumerate_zp_points(p: int, D) -> list[ZpPoint]:
    """All surface points with coordinates m_i p^(x_i), p not dividing m_i,
    exponents in [v_p(D), -1], and coordinate square-sum below 3D.

    Internally every coordinate is written n_i / p^K over the common
    denominator p^K with K = -v_p(D); the surface equation scaled by p^(3K)
    becomes the integer identity p^K (n1^2+n2^2+n3^2) + n1 n2 n3 = D p^(3K),
    and the exponent box is equivalent to n_i nonzero and p^K not dividing n_i.
    """
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    D = Fraction(D)
    if not _is_p_power_denominator(D, p):
        raise DomainError(f"{D} is not in Z[1/{p}]")
    if not 0 < D < Fraction(1, 3):
        raise DomainError(f"enumeration requires 0 < D < 1/3, got {D}")
    K = -int(p_adic_valuation(D, p).finite)
    pk = p ** K
    rhs = int(D * pk ** 3)
    ball = 3 * int(D * pk) * pk  # n1^2+n2^2+n3^2 < 3 D p^(2K)
    nmax = math.isqrt(ball)
    if nmax * nmax >= ball:
        nmax -= 1
    allowed = [n for n in range(-nmax, nmax + 1) if n != 0 and n % pk != 0]
    out = []
    for n1 in allowed:
        s1 = n1 * n1
        for n2 in allowed:
            s2 = s1 + n2 * n2
            if s2 >= ball:
                continue
            n12 = n1 * n2
            for n3 in allowed:
                if s2 + n3 * n3 >= ball:
                    continue
                if pk * (s2 + n3 * n3) + n12 * n3 == rhs:
                    coords = (Fraction(n1, pk), Fraction(n2, pk), Fraction(n3, pk))
                    exps = tuple(int(p_adic_valuation(c, p).finite) for c in coords)
                    out.append(ZpPoint(coords, exps))
    return sorted(out, key=lambda z: z.coords)


def rational_vieta(i: int, x: tuple[Fraction, Fraction, Fraction], D) -> tuple:
    """Vieta involution on rational points of the surface with A = B = C = 0."""
    x1, x2, x3 = (Fraction(c) for c in x)
    if i == 1:
        return (-x1 - x2 * x3, x2, x3)
    if i == 2:
        return (x1, -x2 - x1 * x3, x3)
    if i == 3:
        return (x1, x2, -x3 - x1 * x2)
    raise UsageError(f"generator index must be 1, 2 or 3, got {i}")
