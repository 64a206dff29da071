"""Tropicalized Vieta involutions and the greedy reduction.

Generators s1, s2, s3 act on R^3 by

    trop(s1)(x) = (min(2x2, 2x3, b+x2, c+x3, d) - x1, x2, x3)

and cyclic variants.  Words apply right-to-left: "s1 s2 s3" applies s3 first.
On a quadratic cell C(X_i^2) the difference coordinates
u^i = (x_{i+1} - x_i, x_{i-1} - x_i) turn the dynamics into the subtractive
Euclidean step euc on the first quadrant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, UsageError
from .scalars import ExtRat, ext_min, thomae_gcd
from .surface import (
    CELL_ORDER,
    CellId,
    Params,
    Point3,
    QUADRATIC_CELLS,
    SUBQUADRATIC_CELLS,
    cells_of,
    nxt,
    on_skeleton,
    prv,
    quadratic_cell,
)

UVec = tuple[Fraction, Fraction]
Matrix2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class Word:
    """A reduced word over s1, s2, s3, applied right-to-left.

    ``letters`` holds generator indices in display order, so the leftmost
    letter acts last; "s3 s2 s1" means s3 is applied last.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for g in self.letters:
            if g not in (1, 2, 3):
                raise UsageError(f"generator index must be 1, 2 or 3, got {g}")
        for left, right in zip(self.letters, self.letters[1:]):
            if left == right:
                raise UsageError(f"word {self.letters} is not reduced")

    @classmethod
    def reduce(cls, letters: Iterable[int]) -> "Word":
        """Build a word, cancelling adjacent equal letters (each s_i is an involution)."""
        stack: list[int] = []
        for g in letters:
            if stack and stack[-1] == g:
                stack.pop()
            else:
                stack.append(int(g))
        return cls(tuple(stack))

    @classmethod
    def parse(cls, text: str) -> "Word":
        letters = []
        for token in text.split():
            tok = token.lower().lstrip("sr")
            if tok not in ("1", "2", "3"):
                raise UsageError(f"cannot parse generator {token!r}")
            letters.append(int(tok))
        return cls.reduce(letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def applied_order(self) -> Iterator[int]:
        """Generator indices in the order they act (rightmost first)."""
        return reversed(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"s{g}" for g in self.letters)


def trop_vieta(params: Params, i: int, x: Point3) -> Point3:
    """Apply the i-th tropicalized involution.  Total on R^3; involutive."""
    x1, x2, x3 = x
    a, b, c, d = params.a, params.b, params.c, params.d
    if i == 1:
        m = ext_min((ExtRat(2 * x2), ExtRat(2 * x3), b + x2, c + x3, d)).finite
        return (m - x1, x2, x3)
    if i == 2:
        m = ext_min((ExtRat(2 * x1), ExtRat(2 * x3), a + x1, c + x3, d)).finite
        return (x1, m - x2, x3)
    if i == 3:
        m = ext_min((ExtRat(2 * x1), ExtRat(2 * x2), a + x1, b + x2, d)).finite
        return (x1, x2, m - x3)
    raise UsageError(f"generator index must be 1, 2 or 3, got {i}")


def apply_word(params: Params, word: Word, x: Point3) -> Point3:
    for g in word.applied_order():
        x = trop_vieta(params, g, x)
    return x


# -- difference coordinates on quadratic cells ----------------------------------


def u_coords(i: int, x: Point3) -> UVec:
    """u^i = (x_{i+1} - x_i, x_{i-1} - x_i); defined on the cell C(X_i^2)."""
    x1, x2, x3 = x
    coords = {1: (x2 - x1, x3 - x1), 2: (x3 - x2, x1 - x2), 3: (x1 - x3, x2 - x3)}
    if i not in coords:
        raise UsageError(f"generator index must be 1, 2 or 3, got {i}")
    u1, u2 = coords[i]
    if u1 < 0 or u2 < 0:
        raise DomainError(f"point {x} is outside the quadratic cell {i}: u = ({u1},{u2})")
    return (u1, u2)


def u_inverse(i: int, u: UVec) -> Point3:
    """Inverse of u_coords on C(X_i^2); e.g. for i=3 this is (-u2, -u1, -u1-u2)."""
    u1, u2 = Fraction(u[0]), Fraction(u[1])
    if u1 < 0 or u2 < 0:
        raise DomainError(f"u-coordinates must be nonnegative, got ({u1},{u2})")
    out = [Fraction(0)] * 3
    out[i - 1] = -u1 - u2
    out[nxt(i) - 1] = -u2
    out[prv(i) - 1] = -u1
    return (out[0], out[1], out[2])


def euc(u: UVec) -> UVec:
    """One subtractive Euclidean step on the first quadrant."""
    u1, u2 = Fraction(u[0]), Fraction(u[1])
    if u1 < 0 or u2 < 0:
        raise DomainError(f"euc requires a first-quadrant input, got ({u1},{u2})")
    if u1 > u2:
        return (u2, u1 - u2)
    return (u2 - u1, u1)


def euc_limit(u: UVec) -> Fraction:
    """Limit of the euc iteration, reached exactly for rational inputs.

    Iterates until the orbit oscillates between (g,0) and (0,g); the value g
    equals the Thomae gcd of the inputs.
    """
    u1, u2 = Fraction(u[0]), Fraction(u[1])
    if u1 == 0 and u2 == 0:
        return Fraction(0)
    scale = u1.denominator * u2.denominator
    budget = int(u1 * scale + u2 * scale) + 4
    cur = (u1, u2)
    for _ in range(budget):
        if 0 in cur:
            return max(cur)
        cur = euc(cur)
    raise DomainError(f"euc iteration did not settle within {budget} steps for ({u1},{u2})")


def sk_norm(x: Point3) -> Fraction:
    """One-norm |x1|+|x2|+|x3|; on the skeleton this equals -(x1+x2+x3)."""
    return abs(x[0]) + abs(x[1]) + abs(x[2])


def transit_matrix(delta: int) -> Matrix2:
    """u-coordinate transition of a step to the next (+1) or previous (-1) cell."""
    if delta == 1:
        return ((1, 1), (1, 0))
    if delta == -1:
        return ((0, 1), (1, 1))
    raise UsageError(f"delta must be +1 or -1, got {delta}")


# -- greedy reduction ------------------------------------------------------------


@dataclass(frozen=True)
class GreedyTrace:
    """Outcome of the greedy reflection itinerary started at ``start``.

    kind is "subquadratic" (stopped inside a subquadratic cell), "ray"
    (stopped on a quadratic-quadratic intersection) or "exhausted" (step
    budget ran out; does not happen for rational points with the default
    budget).  ``word`` applied to ``start`` reproduces ``terminal``.
    """

    start: Point3
    word: Word
    terminal: Point3
    kind: str
    cell: CellId | None = None
    ray_index: int | None = None
    steps: int = 0


def _ray_index_of(quads: set[CellId]) -> int:
    for i in (1, 2, 3):
        pair = {quadratic_cell(nxt(i)), quadratic_cell(prv(i))}
        if pair <= quads:
            return i
    raise DomainError(f"no ray matches the quadratic cells {quads}")


def _default_step_budget(params: Params, x: Point3) -> int:
    cells = cells_of(params, x)
    quads = [c for c in cells if c in QUADRATIC_CELLS]
    if len(quads) != 1 or any(c in SUBQUADRATIC_CELLS for c in cells):
        return 16
    i = QUADRATIC_CELLS.index(quads[0]) + 1
    u1, u2 = u_coords(i, x)
    if u1 == 0 or u2 == 0:
        return 16
    m = u2 / u1
    # Subtractive Euclid takes up to numerator+denominator steps on the slope.
    return 4 * (m.numerator + m.denominator) + 16


def greedy_path(params: Params, x: Point3, max_steps: int | None = None) -> GreedyTrace:
    """Follow the greedy itinerary: reflect by the unique containing quadratic
    cell until a subquadratic cell or a quadratic-quadratic intersection stops it."""
    if not on_skeleton(params, x):
        raise DomainError(f"greedy path requires a skeleton point, got {x}")
    if max_steps is None:
        max_steps = _default_step_budget(params, x)
    applied: list[int] = []
    cur = x
    for step in range(max_steps + 1):
        cells = cells_of(params, cur)
        quads = {c for c in cells if c in QUADRATIC_CELLS}
        # Ray has priority: junction points of subquadratic cells and rays
        # count as ray terminals.
        if len(quads) >= 2:
            return GreedyTrace(x, Word(tuple(reversed(applied))), cur, "ray",
                               ray_index=_ray_index_of(quads), steps=step)
        sub = [c for c in CELL_ORDER if c in cells and c in SUBQUADRATIC_CELLS]
        if sub:
            return GreedyTrace(x, Word(tuple(reversed(applied))), cur, "subquadratic",
                               cell=sub[0], steps=step)
        i = QUADRATIC_CELLS.index(next(iter(quads))) + 1
        applied.append(i)
        cur = trop_vieta(params, i, cur)
    return GreedyTrace(x, Word(tuple(reversed(applied))), cur, "exhausted", steps=max_steps)


def u_slope(i: int, x: Point3) -> ExtRat:
    """Slope u^i_2 / u^i_1 of a point of C(X_i^2), with vertical slope infinity."""
    u1, u2 = u_coords(i, x)
    if u1 == 0:
        return ExtRat.infinity()
    return ExtRat(u2 / u1)


def gamma_of(x: Point3) -> Fraction:
    """Thomae gcd of the difference coordinates; the same in every u^i chart."""
    return thomae_gcd(x[0] - x[2], x[1] - x[2])
