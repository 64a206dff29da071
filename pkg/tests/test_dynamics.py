import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tropmarkov.errors import DomainError, UsageError
from tropmarkov.sampling import random_params, random_skeleton_point, random_word
from tropmarkov.scalars import thomae_gcd
from tropmarkov.surface import (
    CellId,
    Params,
    QUADRATIC_CELLS,
    SUBQUADRATIC_CELLS,
    cells_of,
    f0,
    linear_cell,
    on_skeleton,
    quadratic_cell,
)
from tropmarkov.dynamics import (
    Word,
    apply_word,
    euc,
    euc_limit,
    gamma_of,
    greedy_path,
    sk_norm,
    transit_matrix,
    trop_vieta,
    u_coords,
    u_inverse,
    u_slope,
)

F = Fraction
PT = Params.parse("inf,inf,inf,-2")


def pt(*coords):
    return tuple(F(c) for c in coords)


class TestWord:
    def test_parse_and_str(self):
        w = Word.parse("s1 s2 s3")
        assert w.letters == (1, 2, 3)
        assert str(w) == "s1 s2 s3"
        assert list(w.applied_order()) == [3, 2, 1]

    def test_reduction(self):
        assert Word.parse("s1 s1 s2").letters == (2,)
        assert Word.reduce([1, 2, 2, 1]).is_identity

    def test_unreduced_constructor_rejected(self):
        with pytest.raises(UsageError):
            Word((1, 1, 2))
        with pytest.raises(UsageError):
            Word.parse("s4")


class TestInvolutions:
    def test_examples(self):
        assert trop_vieta(PT, 3, pt(-2, -3, -5)) == pt(-2, -3, -1)
        assert trop_vieta(PT, 1, pt(0, -1, -1)) == pt(-2, -1, -1)

    def test_apply_word_examples(self):
        assert apply_word(PT, Word(), pt(-2, -3, -5)) == pt(-2, -3, -5)
        assert apply_word(PT, Word.parse("s2 s3"), pt(-2, -3, -5)) == pt(-2, -1, -1)
        assert apply_word(PT, Word.parse("s1 s2 s3"), pt(-2, -3, -5)) == pt(0, -1, -1)

    @given(
        st.integers(min_value=0, max_value=2**16),
        st.sampled_from((1, 2, 3)),
        st.fractions(min_value=-9, max_value=9, max_denominator=8),
        st.fractions(min_value=-9, max_value=9, max_denominator=8),
        st.fractions(min_value=-9, max_value=9, max_denominator=8),
    )
    @settings(max_examples=150)
    def test_involution_on_r3(self, seed, i, x1, x2, x3):
        params = random_params(random.Random(seed))
        x = (x1, x2, x3)
        assert trop_vieta(params, i, trop_vieta(params, i, x)) == x

    def test_skeleton_invariance(self):
        rng = random.Random(41)
        for _ in range(150):
            params = random_params(rng)
            x = random_skeleton_point(rng, params)
            for i in (1, 2, 3):
                assert f0(params, trop_vieta(params, i, x)) == 0

    def test_level_invariance_off_zero(self):
        rng = random.Random(43)
        from tropmarkov.surface import lift_from_plane, plane_point

        for _ in range(60):
            params = random_params(rng)
            w = F(rng.randint(-6, 6), rng.randint(1, 4))
            x = lift_from_plane(
                params, w, plane_point(F(rng.randint(-12, 12), 3), F(rng.randint(-12, 12), 3)))
            for i in (1, 2, 3):
                assert f0(params, trop_vieta(params, i, x)) == w


class TestUCoordinates:
    def test_examples(self):
        assert u_coords(3, pt(-2, -3, -5)) == (F(3), F(2))
        assert u_inverse(3, (F(3), F(2))) == pt(-2, -3, -5)
        assert u_coords(1, pt(-1, -1, 0)) == (F(0), F(1))

    def test_domain_error_outside_cell(self):
        with pytest.raises(DomainError):
            u_coords(1, pt(-2, -3, -5))  # x is in the X3^2 cell

    def test_mutual_inverse(self):
        rng = random.Random(47)
        for _ in range(100):
            u = (F(rng.randint(0, 30), rng.randint(1, 6)), F(rng.randint(0, 30), rng.randint(1, 6)))
            i = rng.choice((1, 2, 3))
            x = u_inverse(i, u)
            assert u_coords(i, x) == u
            assert 2 * x[i - 1] == sum(x)

    def test_norm_is_twice_u_norm(self):
        x = pt(-2, -3, -5)
        assert sk_norm(x) == 10
        u1, u2 = u_coords(3, x)
        assert 2 * (u1 + u2) == sk_norm(x)
        assert sk_norm(pt(0, -1, -1)) == 2


class TestEuc:
    def test_examples(self):
        assert euc((F(1), F(0))) == (F(0), F(1))
        assert euc((F(3), F(2))) == (F(2), F(1))
        assert euc((F(1), F(1))) == (F(0), F(1))

    def test_limit_examples(self):
        assert euc_limit((F(6), F(4))) == 2
        assert euc_limit((F(3), F(2))) == 1
        assert euc_limit((F(0), F(0))) == 0

    @given(
        st.fractions(min_value=0, max_value=20, max_denominator=10),
        st.fractions(min_value=0, max_value=20, max_denominator=10),
    )
    @settings(max_examples=100)
    def test_limit_is_thomae_gcd_and_norm_shrinks(self, u1, u2):
        assert euc_limit((u1, u2)) == thomae_gcd(u1, u2)
        if (u1, u2) != (0, 0):
            v1, v2 = euc((u1, u2))
            assert v1 >= 0 and v2 >= 0
            assert v1 + v2 == max(u1, u2) <= u1 + u2


class TestTransitMatrices:
    def test_values(self):
        assert transit_matrix(1) == ((1, 1), (1, 0))
        assert transit_matrix(-1) == ((0, 1), (1, 1))
        for d in (1, -1):
            ((a, b), (c, e)) = transit_matrix(d)
            assert a * e - b * c == -1

    def test_action_example(self):
        ((a, b), (c, d)) = transit_matrix(1)
        assert (a * 3 + b * 2, c * 3 + d * 2) == (5, 3)


class TestGreedyPath:
    def test_reduction_example(self):
        trace = greedy_path(PT, pt(-2, -3, -5))
        assert trace.word == Word.parse("s1 s2 s3")
        assert trace.terminal == pt(0, -1, -1)
        assert trace.kind == "ray" and trace.ray_index == 1
        assert apply_word(PT, trace.word, trace.start) == trace.terminal

    def test_immediate_subquadratic(self):
        trace = greedy_path(Params.parse("inf,inf,inf,-3"), pt(-1, -1, -1))
        assert trace.word.is_identity
        assert trace.kind == "subquadratic" and trace.cell is CellId.D

    def test_immediate_ray(self):
        trace = greedy_path(PT, pt(0, -1, -1))
        assert trace.word.is_identity
        assert trace.kind == "ray" and trace.ray_index == 1

    def test_off_skeleton_rejected(self):
        with pytest.raises(DomainError):
            greedy_path(PT, pt(1, 1, 1))

    def test_exhausted_with_tiny_budget(self):
        trace = greedy_path(PT, pt(-20, -30, -50), max_steps=1)
        assert trace.kind == "exhausted"

    def test_euc_simulation_along_paths(self):
        rng = random.Random(53)
        checked = 0
        for _ in range(80):
            params = random_params(rng, meromorphic=True)
            x = random_skeleton_point(rng, params)
            cells = cells_of(params, x)
            quads = [c for c in cells if c in QUADRATIC_CELLS]
            if len(cells) != 1 or len(quads) != 1:
                continue
            i = QUADRATIC_CELLS.index(quads[0]) + 1
            u = u_coords(i, x)
            cur = x
            for _step in range(40):
                cells = cells_of(params, cur)
                quads = {c for c in cells if c in QUADRATIC_CELLS}
                subs = {c for c in cells if c in SUBQUADRATIC_CELLS}
                if len(quads) != 1 or subs:
                    break
                j = QUADRATIC_CELLS.index(next(iter(quads))) + 1
                assert u_coords(j, cur) == u
                cur = trop_vieta(params, j, cur)
                u = euc(u)
                checked += 1
        assert checked > 40

    def test_terminal_ray_points_satisfy_threshold(self):
        rng = random.Random(59)
        for _ in range(60):
            params = random_params(rng, meromorphic=True)
            x = random_skeleton_point(rng, params)
            trace = greedy_path(params, x)
            assert trace.kind in ("ray", "subquadratic")
            if trace.kind == "ray":
                from tropmarkov.surface import on_boundary_ray

                assert on_boundary_ray(params, trace.ray_index, trace.terminal)


class TestCellAtlas:
    def test_linear_cell_invariance_and_quadratic_exchange(self):
        # Parameters with an AX1 cell of nonempty interior: points of it have
        # x2 + x3 = a, and s1 keeps the cell invariant.
        params = Params.parse("-4,inf,inf,-2")
        a = F(-4)
        for x1, x2 in ((F(-1), F(-2)), (F(-3, 2), F(-5, 2)), (F(-2), F(-3, 2))):
            x = (x1, x2, a - x2)
            assert CellId.AX1 in cells_of(params, x)
            assert CellId.AX1 in cells_of(params, trop_vieta(params, 1, x))

        x = pt(-6, -4, -2)  # interior of X1^2 for these parameters
        assert cells_of(params, x) == {CellId.X1SQ}
        image_cells = cells_of(params, trop_vieta(params, 1, x))
        assert CellId.X1SQ not in image_cells

    def test_domain_targeting(self):
        # s_j sends interior points of other quadratic cells into the half
        # allotted to j: the X_j^2 or linear-j cells.
        rng = random.Random(61)
        checked = 0
        for _ in range(200):
            params = random_params(rng)
            x = random_skeleton_point(rng, params)
            cells = cells_of(params, x)
            if len(cells) != 1 or next(iter(cells)) not in QUADRATIC_CELLS:
                continue
            i = QUADRATIC_CELLS.index(next(iter(cells))) + 1
            for j in (1, 2, 3):
                if j == i:
                    continue
                img_cells = cells_of(params, trop_vieta(params, j, x))
                assert img_cells & {quadratic_cell(j), linear_cell(j)}
                checked += 1
        assert checked > 100

    def test_norm_monotonicity(self):
        rng = random.Random(67)
        shrink = grow = 0
        for _ in range(300):
            params = random_params(rng)
            x = random_skeleton_point(rng, params)
            cells = cells_of(params, x)
            quads = [c for c in cells if c in QUADRATIC_CELLS]
            if len(cells) != 1 or not quads:
                continue
            i = QUADRATIC_CELLS.index(quads[0]) + 1
            # Same-cell reflection shrinks when the image stays quadratic.
            img = trop_vieta(params, i, x)
            if any(c in QUADRATIC_CELLS for c in cells_of(params, img)):
                assert sk_norm(img) <= sk_norm(x)
                shrink += 1
            # Other-cell reflections never shrink.
            for j in (1, 2, 3):
                if j != i:
                    assert sk_norm(trop_vieta(params, j, x)) >= sk_norm(x)
                    grow += 1
        assert shrink > 30 and grow > 100

    def test_free_product_faithfulness(self):
        table_point = pt(F(-2, 3), F(-2, 3), F(-2, 3))  # interior of the table
        assert cells_of(PT, table_point) == {CellId.D}
        rng = random.Random(71)
        for _ in range(100):
            w = random_word(rng, rng.randint(1, 8))
            assert apply_word(PT, w, table_point) != table_point


class TestSlopeHelpers:
    def test_u_slope(self):
        assert u_slope(3, pt(-2, -3, -5)) == F(2, 3)
        assert u_slope(2, pt(0, -1, -1)).is_infinite

    def test_gamma(self):
        assert gamma_of(pt(-2, -3, -5)) == 1
        assert gamma_of(pt(F(-1, 2), F(-3, 4), F(-5, 4))) == F(1, 4)
