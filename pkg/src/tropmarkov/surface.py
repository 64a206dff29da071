"""The tropical Markov cubic surface.

The family of affine cubics X1^2+X2^2+X3^2+X1X2X3 = A X1+B X2+C X3+D
tropicalizes to the min-plus polynomial

    f(x) = min(2x1, 2x2, 2x3, x1+x2+x3, a+x1, b+x2, c+x3, d),

where a, b, c, d are the valuations of the coefficients.  The skeleton is the
locus where the cubic monomial x1+x2+x3 attains the minimum, equivalently the
zero set of the level function f0 = min(seven non-cubic monomials) - (x1+x2+x3).
This module provides membership tests, the cell decomposition of the skeleton,
ray thresholds, the foliation of R^3 by level sets of f0, and the involutions'
fixed-set parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError, UsageError
from .scalars import ExtRat, ext_min, parse_rational

Point3 = tuple[Fraction, Fraction, Fraction]
PlanePoint = tuple[Fraction, Fraction, Fraction]


def as_point(values) -> Point3:
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != 3:
        raise UsageError(f"a point needs exactly 3 coordinates, got {len(vals)}")
    return vals


def parse_point(text: str) -> Point3:
    return as_point(parse_rational(part) for part in text.split(","))


class CellId(Enum):
    """The seven cells of a skeleton, named by the monomial that ties x1+x2+x3."""

    X1SQ = "X1^2"
    X2SQ = "X2^2"
    X3SQ = "X3^2"
    AX1 = "AX1"
    BX2 = "BX2"
    CX3 = "CX3"
    D = "D"


QUADRATIC_CELLS = (CellId.X1SQ, CellId.X2SQ, CellId.X3SQ)
SUBQUADRATIC_CELLS = (CellId.AX1, CellId.BX2, CellId.CX3, CellId.D)
CELL_ORDER = QUADRATIC_CELLS + SUBQUADRATIC_CELLS


def quadratic_cell(i: int) -> CellId:
    return QUADRATIC_CELLS[i - 1]


def linear_cell(i: int) -> CellId:
    """The cell tied by the linear monomial in coordinate i (AX1, BX2 or CX3)."""
    return SUBQUADRATIC_CELLS[i - 1]


def cell_index(cell: CellId) -> int:
    """Coordinate index of a quadratic or linear cell."""
    try:
        return {
            CellId.X1SQ: 1, CellId.X2SQ: 2, CellId.X3SQ: 3,
            CellId.AX1: 1, CellId.BX2: 2, CellId.CX3: 3,
        }[cell]
    except KeyError:
        raise UsageError(f"cell {cell} has no coordinate index") from None


def nxt(i: int) -> int:
    """Cyclic successor of a coordinate index: 1->2->3->1."""
    return i % 3 + 1


def prv(i: int) -> int:
    """Cyclic predecessor of a coordinate index: 1->3->2->1."""
    return (i + 1) % 3 + 1


@dataclass(frozen=True)
class Params:
    """Coefficient valuations (a, b, c, d); each may be +infinity."""

    a: ExtRat
    b: ExtRat
    c: ExtRat
    d: ExtRat

    @classmethod
    def make(cls, a, b, c, d) -> "Params":
        return cls(ExtRat(a), ExtRat(b), ExtRat(c), ExtRat(d))

    @classmethod
    def parse(cls, text: str) -> "Params":
        parts = text.split(",")
        if len(parts) != 4:
            raise UsageError(f"parameters need exactly 4 entries, got {len(parts)}")
        return cls(*(ExtRat(part.strip()) for part in parts))

    def cycled(self) -> "Params":
        """Parameter relabeling (a,b,c) -> (b,c,a) matching (x1,x2,x3) -> (x2,x3,x1)."""
        return Params(self.b, self.c, self.a, self.d)

    def __str__(self):
        return ",".join(str(v) for v in (self.a, self.b, self.c, self.d))


def _monomial_values(params: Params, x: Point3) -> dict[CellId, ExtRat]:
    x1, x2, x3 = x
    return {
        CellId.X1SQ: ExtRat(2 * x1),
        CellId.X2SQ: ExtRat(2 * x2),
        CellId.X3SQ: ExtRat(2 * x3),
        CellId.AX1: params.a + x1,
        CellId.BX2: params.b + x2,
        CellId.CX3: params.c + x3,
        CellId.D: params.d,
    }


def trop_poly_f(params: Params, x: Point3) -> ExtRat:
    """The eight-term tropical polynomial of the Markov cubic at x."""
    values = list(_monomial_values(params, x).values())
    values.append(ExtRat(sum(x)))
    return ext_min(values)


def f0(params: Params, x: Point3) -> ExtRat:
    """Skeleton level function: min of the seven non-cubic monomials minus x1+x2+x3."""
    return ext_min(_monomial_values(params, x).values()) - sum(x)


def on_skeleton(params: Params, x: Point3) -> bool:
    return f0(params, x) == 0


def in_tropicalization(params: Params, x: Point3) -> bool:
    """Kapranov membership: the tropical minimum is attained by at least two monomials."""
    values = list(_monomial_values(params, x).values())
    values.append(ExtRat(sum(x)))
    m = ext_min(values)
    return sum(1 for v in values if v == m) >= 2


def cells_of(params: Params, x: Point3) -> set[CellId]:
    """Cells of the skeleton containing x (nonempty; singleton iff x is interior)."""
    if not on_skeleton(params, x):
        raise DomainError(f"point {x} is not on the skeleton of {params}")
    s = sum(x)
    values = _monomial_values(params, x)
    return {cell for cell, v in values.items() if v == s}


def _min0(e: ExtRat) -> ExtRat:
    return ext_min((ExtRat(0), e))


def cell_has_interior(params: Params, cell: CellId) -> bool:
    """Whether the cell has nonempty planar interior.

    Quadratic cells always do.  The D cell requires
    d < min(0,2a-d)+min(0,2b-d)+min(0,2c-d); the linear cell AX1 requires
    a < min(0,b-a)+min(0,c-a) and 2a < d, and symmetrically for BX2, CX3.
    """
    a, b, c, d = params.a, params.b, params.c, params.d
    if cell in QUADRATIC_CELLS:
        return True
    if cell is CellId.D:
        if d.is_infinite:
            return False
        rhs = _min0(2 * a - d) + _min0(2 * b - d) + _min0(2 * c - d)
        return d < rhs
    coeffs = {CellId.AX1: (a, b, c), CellId.BX2: (b, a, c), CellId.CX3: (c, a, b)}
    own, other1, other2 = coeffs[cell]
    if own.is_infinite:
        return False
    return own < _min0(other1 - own) + _min0(other2 - own) and 2 * own < d


def thresholds(params: Params) -> tuple[ExtRat, ExtRat, ExtRat]:
    """Truncation bounds of the three boundary rays."""
    a, b, c, d = params.a, params.b, params.c, params.d
    zero = ExtRat(0)
    return (
        ext_min((zero, a / 2, b, c, d / 2)),
        ext_min((zero, a, b / 2, c, d / 2)),
        ext_min((zero, a, b, c / 2, d / 2)),
    )


def on_boundary_ray(params: Params, i: int, x: Point3) -> bool:
    """Membership in the ray R_i: (0,t,t), (t,0,t) or (t,t,0) with t below the threshold."""
    x1, x2, x3 = x
    theta = thresholds(params)[i - 1]
    if i == 1:
        return x1 == 0 and x2 == x3 and theta >= x2
    if i == 2:
        return x2 == 0 and x1 == x3 and theta >= x1
    if i == 3:
        return x3 == 0 and x1 == x2 and theta >= x1
    raise UsageError(f"ray index must be 1, 2 or 3, got {i}")


def ray_point(i: int, t: Fraction) -> Point3:
    t = Fraction(t)
    zero = Fraction(0)
    if i == 1:
        return (zero, t, t)
    if i == 2:
        return (t, zero, t)
    if i == 3:
        return (t, t, zero)
    raise UsageError(f"ray index must be 1, 2 or 3, got {i}")


# -- foliation by level sets ---------------------------------------------------


def project_to_plane(x: Point3) -> PlanePoint:
    """Orthogonal projection onto the plane x1+x2+x3 = 0."""
    x1, x2, x3 = x
    return (
        Fraction(2 * x1 - x2 - x3, 3),
        Fraction(-x1 + 2 * x2 - x3, 3),
        Fraction(-x1 - x2 + 2 * x3, 3),
    )


def plane_point(v1, v2, v3=None) -> PlanePoint:
    v1, v2 = Fraction(v1), Fraction(v2)
    v3 = -v1 - v2 if v3 is None else Fraction(v3)
    if v1 + v2 + v3 != 0:
        raise UsageError("plane points must have zero coordinate sum")
    return (v1, v2, v3)


def lift_from_plane(params: Params, w, v: PlanePoint) -> Point3:
    """The unique point of the level set {f0 = w} projecting onto v."""
    w = Fraction(w)
    v1, v2, v3 = plane_point(*v)
    a, b, c, d = params.a, params.b, params.c, params.d
    alpha = ext_min(
        (
            ExtRat(2 * v1 - w),
            ExtRat(2 * v2 - w),
            ExtRat(2 * v3 - w),
            (a + (v1 - w)) / 2,
            (b + (v2 - w)) / 2,
            (c + (v3 - w)) / 2,
            (d - w) / 3,
        )
    ).finite
    return (alpha + v1, alpha + v2, alpha + v3)


# -- fixed sets of the involutions ---------------------------------------------


def _fixed_point_base(params: Params, w: Fraction, u: Fraction) -> Point3:
    """Fixed point of the first involution on {f0 = w} with x2 - x3 = u."""
    a, b, c, d = params.a, params.b, params.c, params.d
    vt = ext_min(
        (
            ExtRat(u - 2 * w),
            ExtRat(-u - 2 * w),
            (2 * b + (u - 4 * w)) / 3,
            (2 * c + (-u - 4 * w)) / 3,
            d / 2 - w,
            a - w,
        )
    ).finite
    x2 = (vt + u) / 2
    x3 = (vt - u) / 2
    x1 = ext_min((ExtRat(x2), ExtRat(x3), (b + x2) / 2, (c + x3) / 2, d / 2)).finite
    return (x1, x2, x3)


def fixed_set_point(params: Params, i: int, w, u) -> Point3:
    """Point of Fix(trop(s_i)) on the level set {f0 = w} with x_{i+1} - x_{i-1} = u.

    Stated for i = 1 directly; i = 2, 3 go through the cyclic relabeling of
    coordinates and parameters that conjugates the involutions.
    """
    w, u = Fraction(w), Fraction(u)
    if i == 1:
        return _fixed_point_base(params, w, u)
    if i == 2:
        y = _fixed_point_base(params.cycled(), w, u)
        return (y[2], y[0], y[1])
    if i == 3:
        y = _fixed_point_base(params.cycled().cycled(), w, u)
        return (y[1], y[2], y[0])
    raise UsageError(f"generator index must be 1, 2 or 3, got {i}")


def is_meromorphic(params: Params) -> bool:
    """min(a,b,c,d) < 0; decides whether the central table is fat or degenerate."""
    return ext_min((params.a, params.b, params.c, params.d)) < 0


def level_set_shift(params: Params, w) -> Params:
    """Parameters of the skeleton that the level set {f0 = w} translates to."""
    w = Fraction(w)
    return Params(params.a + w, params.b + w, params.c + w, params.d + 2 * w)
