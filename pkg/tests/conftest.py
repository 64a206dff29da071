"""Shared exact test oracles.

These deliberately re-derive results along routes independent of the library
functions they are used to check.
"""

from fractions import Fraction

from tropmarkov.surface import QUADRATIC_CELLS, cells_of, on_boundary_ray
from tropmarkov.dynamics import trop_vieta


def orbit_reaches_ray(params, x, budget=4000) -> bool:
    """Whether the reflection itinerary of x reaches a boundary ray.

    Follows the unique quadratic cell's generator, stepping through junction
    points where a subquadratic cell meets a single quadratic cell (the plain
    greedy rules stop there, one step short of the ray endpoint's image).
    Terminates on: a ray point (True); a point with no quadratic cell, a
    fixed point, or a revisit (False, the itinerary stays in the table orbit).
    """
    cur = x
    seen = set()
    for _ in range(budget):
        if any(on_boundary_ray(params, i, cur) for i in (1, 2, 3)):
            return True
        if cur in seen:
            return False
        seen.add(cur)
        quads = [c for c in cells_of(params, cur) if c in QUADRATIC_CELLS]
        if len(quads) != 1:
            return False
        i = QUADRATIC_CELLS.index(quads[0]) + 1
        nxt = trop_vieta(params, i, cur)
        if nxt == cur:
            return False
        cur = nxt
    raise RuntimeError("ray-search budget exhausted")


def brute_force_zp_points(p: int, D: Fraction) -> list:
    """Grid search over X_i = n / p^K with |X_i| <= 1, keeping exact surface
    points inside the ball of squared radius 3D whose coordinate valuations
    lie in [v_p(D), -1]."""
    from tropmarkov.scalars import p_adic_valuation

    nu_d = int(p_adic_valuation(D, p).finite)
    K = max(2, -nu_d)
    den = p**K
    radius_sq = 3 * D
    grid = [Fraction(n, den) for n in range(-den, den + 1)]
    out = []
    for x1 in grid:
        for x2 in grid:
            if x1 * x1 + x2 * x2 >= radius_sq:
                continue
            for x3 in grid:
                if x1 * x1 + x2 * x2 + x3 * x3 >= radius_sq:
                    continue
                if x1 * x1 + x2 * x2 + x3 * x3 + x1 * x2 * x3 != D:
                    continue
                vals = [p_adic_valuation(c, p) for c in (x1, x2, x3)]
                if any(v.is_infinite for v in vals):
                    continue
                if all(nu_d <= int(v.finite) <= -1 for v in vals):
                    out.append(((x1, x2, x3), tuple(int(v.finite) for v in vals)))
    return sorted(out)
