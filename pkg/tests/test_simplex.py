"""Minimal bounding right triangles."""

import numpy as np
import pytest

from ifsmodel import (Box2, ChaosParams, bounding_box, chaos_game,
                      minimal_canonical_simplex, simplex_for_ifs)

from pins import (FLOWER_DEEP_BOX, FLOWER_DEEP_SIMPLEX_LEG,
                  MAPLE_GOLDEN_SIMPLEX, SIERPINSKI_DEEP_BOX,
                  SIERPINSKI_DEEP_SIMPLEX_LEG)

UNIT_SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])


def contains_sw(pts, corner_x, corner_y, leg, slack=1e-12):
    """Containment predicate for the canonical orientation."""
    ok_x = (pts[:, 0] >= corner_x - slack).all()
    ok_y = (pts[:, 1] >= corner_y - slack).all()
    ok_h = (pts[:, 0] + pts[:, 1] <= corner_x + corner_y + leg * (1 + slack)
            + slack).all()
    return ok_x and ok_y and ok_h


def brute_min_leg(pts, corner_x, corner_y, hi, iters=80):
    """Bisect the smallest leg whose triangle at (corner_x, corner_y)
    contains all points. Independent of the closed-form construction."""
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if contains_sw(pts, corner_x, corner_y, mid, slack=0.0):
            hi = mid
        else:
            lo = mid
    return hi


class TestBox2:
    def test_bounds_validation(self):
        with pytest.raises(ValueError):
            Box2(1, 0, 0, 1)

    def test_union_and_pad(self):
        box = Box2(0, 0, 2, 4).union(Box2(-1, 1, 1, 5))
        assert (box.xmin, box.ymin, box.xmax, box.ymax) == (-1, 0, 2, 5)
        padded = Box2(0, 0, 10, 10).padded(0.1)
        assert (padded.xmin, padded.ymax) == (-1, 11)


class TestBoundingBox:
    def test_single_point(self):
        box = bounding_box([[0.0, 0.0]])
        assert (box.xmin, box.ymin, box.xmax, box.ymax) == (0, 0, 0, 0)

    def test_two_points(self):
        box = bounding_box([[0.0, 0.0], [1.0, 2.0]])
        assert (box.xmin, box.ymin, box.xmax, box.ymax) == (0, 0, 1, 2)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            bounding_box(np.empty((0, 2)))

    def test_flower_box_near_deep_oracle(self, flower_system):
        box = bounding_box(chaos_game(flower_system, ChaosParams(100_000, seed=42)))
        xmin, ymin, xmax, ymax = FLOWER_DEEP_BOX
        w, h = xmax - xmin, ymax - ymin
        assert box.xmin == pytest.approx(xmin, abs=0.01 * w)
        assert box.xmax == pytest.approx(xmax, abs=0.01 * w)
        assert box.ymin == pytest.approx(ymin, abs=0.01 * h)
        assert box.ymax == pytest.approx(ymax, abs=0.01 * h)


class TestMinimalSimplex:
    def test_unit_square(self):
        basis = minimal_canonical_simplex(UNIT_SQUARE)
        assert basis.vertices == ((0, 0), (2, 0), (0, 2))

    def test_unit_square_leg_is_minimal_by_bisection_oracle(self):
        leg = brute_min_leg(UNIT_SQUARE, 0.0, 0.0, hi=10.0)
        assert leg == pytest.approx(2.0, abs=1e-12)

    def test_single_point_padded(self):
        basis = minimal_canonical_simplex([[5.0, 5.0]])
        (x0, y0), (x1, _), (_, y2) = basis.vertices
        assert (x0, y0) == (5.0, 5.0)
        assert x1 - x0 == y2 - y0  # isosceles
        assert 0 < x1 - x0 <= 1e-5
        assert not basis.is_degenerate()

    def test_horizontal_pair(self):
        basis = minimal_canonical_simplex([[0.0, 0.0], [1.0, 0.0]])
        assert basis.vertices == ((0, 0), (1, 0), (0, 1))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            minimal_canonical_simplex(np.empty((0, 2)))

    def test_bad_orientation_rejected(self):
        with pytest.raises(ValueError):
            minimal_canonical_simplex(UNIT_SQUARE, "north")

    @pytest.mark.parametrize("orientation", ["sw", "se", "nw", "ne"])
    def test_orientations_contain_and_are_isosceles(self, orientation):
        rng = np.random.default_rng(31)
        for _ in range(30):
            pts = rng.uniform(-8, 8, size=(rng.integers(2, 60), 2))
            basis = minimal_canonical_simplex(pts, orientation)
            (x0, y0), (x1, y1), (x2, y2) = basis.vertices
            assert y1 == y0 and x2 == x0  # axis-parallel legs from the corner
            assert abs(x1 - x0) == pytest.approx(abs(y2 - y0), rel=1e-12)
            # containment in the half-planes of the two legs + hypotenuse
            sx = np.sign(x1 - x0)
            sy = np.sign(y2 - y0)
            leg = abs(x1 - x0)
            assert (sx * (pts[:, 0] - x0) >= -1e-12).all()
            assert (sy * (pts[:, 1] - y0) >= -1e-12).all()
            assert (sx * (pts[:, 0] - x0) + sy * (pts[:, 1] - y0)
                    <= leg + 1e-12).all()

    def test_matches_bisection_oracle_on_random_clouds(self):
        rng = np.random.default_rng(32)
        for _ in range(50):
            pts = rng.normal(scale=3.0, size=(rng.integers(2, 100), 2))
            basis = minimal_canonical_simplex(pts)
            (x0, y0), (x1, _), _ = basis.vertices
            leg = x1 - x0
            want = brute_min_leg(pts, x0, y0, hi=leg * 4 + 1)
            assert leg == pytest.approx(want, rel=1e-10, abs=1e-10)

    def test_tightness_witnesses(self):
        rng = np.random.default_rng(33)
        for _ in range(100):
            pts = rng.uniform(-5, 5, size=(rng.integers(3, 80), 2))
            basis = minimal_canonical_simplex(pts)
            (x0, y0), (x1, _), _ = basis.vertices
            leg = x1 - x0
            # each binding constraint is witnessed by an input point
            assert np.isclose(pts[:, 0].min(), x0)
            assert np.isclose(pts[:, 1].min(), y0)
            assert np.isclose((pts[:, 0] + pts[:, 1]).max(), x0 + y0 + leg)
            # shrinking the leg breaks containment
            assert not contains_sw(pts, x0, y0, leg * (1 - 1e-9) - 1e-12, slack=0.0)

    def test_monotone_under_subset(self):
        rng = np.random.default_rng(34)
        for _ in range(40):
            big = rng.normal(size=(50, 2))
            small = big[:rng.integers(1, 49)]
            bb = minimal_canonical_simplex(big)
            sb = minimal_canonical_simplex(small)
            assert sb.b[0] - sb.a[0] <= bb.b[0] - bb.a[0] + 1e-12
            assert sb.a[0] >= bb.a[0] and sb.a[1] >= bb.a[1]

    def test_deterministic(self):
        rng = np.random.default_rng(35)
        pts = rng.normal(size=(500, 2))
        a = minimal_canonical_simplex(pts)
        b = minimal_canonical_simplex(pts.copy())
        assert a.vertices == b.vertices


class TestSimplexForIfs:
    def test_sierpinski_matches_deep_oracle(self, sierpinski_system):
        basis = simplex_for_ifs(sierpinski_system, ChaosParams(200_000, seed=42))
        (x0, y0), (x1, _), (_, y2) = basis.vertices
        ox, oy = SIERPINSKI_DEEP_BOX[0], SIERPINSKI_DEEP_BOX[1]
        assert x0 == pytest.approx(ox, abs=0.01)
        assert y0 == pytest.approx(oy, abs=0.01)
        assert x1 == pytest.approx(ox + SIERPINSKI_DEEP_SIMPLEX_LEG, abs=0.01)
        assert y2 == pytest.approx(oy + SIERPINSKI_DEEP_SIMPLEX_LEG, abs=0.01)

    def test_single_map_collapses_to_fixed_point(self):
        from ifsmodel import AffineMap2, IfsSystem
        system = IfsSystem((AffineMap2(0.5, 0, 0, 0.5, 0.5, 0.25),))
        # fixed point of x -> x/2 + (0.5, 0.25)
        basis = simplex_for_ifs(system, ChaosParams(200, seed=1,
                                                    start=(1.0, 0.5)))
        assert basis.a == (1.0, 0.5)
        assert basis.b[0] - basis.a[0] == pytest.approx(1e-6, rel=1e-6)

    def test_maple_golden_basis(self, maple_system):
        basis = simplex_for_ifs(maple_system, ChaosParams(1_000_000, seed=42))
        for got, want in zip(basis.vertices, MAPLE_GOLDEN_SIMPLEX):
            assert got == pytest.approx(want, abs=1e-12)

    def test_maple_stable_across_sample_sizes(self, maple_system):
        b5 = simplex_for_ifs(maple_system, ChaosParams(100_000, seed=42))
        leg5 = b5.b[0] - b5.a[0]
        leg6 = MAPLE_GOLDEN_SIMPLEX[1][0] - MAPLE_GOLDEN_SIMPLEX[0][0]
        assert abs(leg6 - leg5) < 0.01 * leg6

    def test_preattractor_simplexes_converge(self, flower_system):
        # vertex-wise distance to the deep-oracle simplex shrinks (within 10%
        # slack) as the sample grows; the direct n-vs-4n comparison is too
        # noisy at a single seed because box extremes are extreme-value stats
        xmin, ymin = FLOWER_DEEP_BOX[0], FLOWER_DEEP_BOX[1]
        leg = FLOWER_DEEP_SIMPLEX_LEG
        limit = ((xmin, ymin), (xmin + leg, ymin), (xmin, ymin + leg))

        def dist_to_limit(n):
            basis = simplex_for_ifs(flower_system, ChaosParams(n, seed=42))
            return max(np.hypot(p[0] - q[0], p[1] - q[1])
                       for p, q in zip(basis.vertices, limit))

        deltas = [dist_to_limit(n) for n in (1_000, 10_000, 100_000)]
        assert deltas[1] <= deltas[0] * 1.1
        assert deltas[2] <= deltas[1] * 1.1
