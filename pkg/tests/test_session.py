"""Editing sessions: retargeting, rejection, snapshots."""

import threading

import numpy as np
import pytest

from ifsmodel import (AffineBasis, ChaosParams, DegenerateBasis,
                      ModelingSession, VertexId, chaos_game, init_session,
                      simplex_for_ifs, to_barycentric_set)

TRIANGLE = AffineBasis((0, 0), (4, 0), (0, 4))


def make_session(system, n=2000, basis=TRIANGLE, seed=7):
    return ModelingSession(system, ChaosParams(n, seed=seed), basis)


class TestInit:
    def test_user_triangle_keeps_raw_points(self, flower_system):
        params = ChaosParams(2000, seed=7)
        session = ModelingSession(flower_system, params, TRIANGLE)
        raw = chaos_game(flower_system, params)
        assert (session.current_points == raw).all()
        assert session.current_basis == TRIANGLE
        assert session.bary_cache.shape == (2000, 3)

    def test_minimal_simplex_mode(self, maple_system):
        params = ChaosParams(50_000, seed=3)
        session = ModelingSession(maple_system, params)
        want = simplex_for_ifs(maple_system, params)
        assert session.base_basis.vertices == want.vertices

    def test_degenerate_triangle_rejected(self, flower_system):
        bad = AffineBasis((0, 0), (1, 1), (2, 2))
        with pytest.raises(DegenerateBasis):
            ModelingSession(flower_system, ChaosParams(100), bad)

    def test_init_session_helper(self, flower_system):
        session = init_session(flower_system, ChaosParams(100, seed=1), TRIANGLE)
        assert isinstance(session, ModelingSession)

    def test_telemetry_populated(self, flower_system):
        t = make_session(flower_system).get_frame().telemetry
        assert t.n_points == 2000
        assert t.abs_det == 16.0
        assert t.contractive and 0 < t.contractivity < 1

    def test_points_are_read_only(self, flower_system):
        session = make_session(flower_system)
        with pytest.raises(ValueError):
            session.current_points[0, 0] = 99.0


class TestMoveVertex:
    def test_move_and_return_restores_points(self, flower_system):
        session = make_session(flower_system)
        init_pts = session.current_points
        home = session.current_basis.vertex(int(VertexId.B))
        session.move_vertex(VertexId.B, (5.0, 1.0))
        session.move_vertex(VertexId.B, home)
        scale = 1.0 + np.abs(init_pts)
        assert (np.abs(session.current_points - init_pts) <= 1e-9 * scale).all()

    def test_translation_via_three_moves(self, flower_system):
        session = make_session(flower_system)
        init_pts = session.current_points.copy()
        dx, dy = 2.5, -1.25
        for vid in VertexId:
            vx, vy = session.current_basis.vertex(int(vid))
            session.move_vertex(vid, (vx + dx, vy + dy))
        want = init_pts + np.array([dx, dy])
        scale = 1.0 + np.abs(want)
        assert (np.abs(session.current_points - want) <= 1e-9 * scale).all()

    def test_scaling_about_origin(self, flower_system):
        session = make_session(flower_system)
        init_pts = session.current_points.copy()
        for vid in VertexId:
            vx, vy = session.current_basis.vertex(int(vid))
            session.move_vertex(vid, (2 * vx, 2 * vy))
        want = 2.0 * init_pts
        scale = 1.0 + np.abs(want)
        assert (np.abs(session.current_points - want) <= 1e-9 * scale).all()

    def test_degenerate_move_rejected_transactionally(self, flower_system):
        session = make_session(flower_system)
        before_pts = session.current_points
        before_basis = session.current_basis
        with pytest.raises(DegenerateBasis) as err:
            session.move_vertex(VertexId.C, (8.0, 0.0))  # collinear with A, B
        assert err.value.det == pytest.approx(0.0, abs=1e-12)
        assert session.current_points is before_pts
        assert session.current_basis is before_basis

    def test_composition_equals_single_retarget(self, flower_system):
        session = make_session(flower_system)
        rng = np.random.default_rng(20)
        for _ in range(25):
            vid = VertexId(int(rng.integers(0, 3)))
            while True:
                pos = tuple(rng.uniform(-6, 6, size=2))
                try:
                    session.move_vertex(vid, pos)
                    break
                except DegenerateBasis:
                    continue
        final = session.current_basis
        fresh = make_session(flower_system)
        for vid in VertexId:
            fresh.move_vertex(vid, final.vertex(int(vid)))
        scale = 1.0 + np.abs(session.current_points)
        assert (np.abs(session.current_points - fresh.current_points)
                <= 1e-9 * scale).all()

    def test_hundred_edit_fuzz_matches_reconversion(self, flower_system):
        session = make_session(flower_system)
        rng = np.random.default_rng(21)
        for _ in range(100):
            vid = VertexId(int(rng.integers(0, 3)))
            vx, vy = session.current_basis.vertex(int(vid))
            try:
                frame = session.move_vertex(
                    vid, (vx + rng.uniform(-1, 1), vy + rng.uniform(-1, 1)))
            except DegenerateBasis:
                continue
            oracle = session.recompute_points_via_cache()
            scale = 1.0 + np.abs(oracle)
            assert (np.abs(frame.points - oracle) <= 1e-9 * scale).all()


class TestHitTest:
    def test_exact_vertex(self, flower_system):
        session = make_session(flower_system)
        assert session.hit_test((4.0, 0.0), radius=5.0) is VertexId.B

    def test_tie_prefers_earlier_vertex(self, flower_system):
        session = make_session(flower_system)
        # (2, 0) is equidistant from A=(0,0) and B=(4,0)
        assert session.hit_test((2.0, 0.0), radius=5.0) is VertexId.A

    def test_far_cursor_misses(self, flower_system):
        session = make_session(flower_system)
        assert session.hit_test((100.0, 100.0), radius=5.0) is None

    def test_radius_validated(self, flower_system):
        session = make_session(flower_system)
        with pytest.raises(ValueError):
            session.hit_test((0.0, 0.0), radius=0.0)


class TestGetFrame:
    def test_snapshots_stable_without_edits(self, flower_system):
        session = make_session(flower_system)
        f1 = session.get_frame()
        f2 = session.get_frame()
        assert f1 is f2

    def test_frame_reflects_move_and_defining_identity(self, flower_system):
        session = make_session(flower_system)
        frame = session.move_vertex(VertexId.A, (-1.0, -2.0))
        assert frame.basis.vertex(0) == (-1.0, -2.0)
        # the edit leaves the relative coordinates untouched
        relative = to_barycentric_set(frame.basis, frame.points)
        scale = 1.0 + np.abs(session.bary_cache)
        assert (np.abs(relative - session.bary_cache) <= 1e-9 * scale).all()
        recon = session.recompute_points_via_cache()
        scale = 1.0 + np.abs(recon)
        assert (np.abs(frame.points - recon) <= 1e-9 * scale).all()

    def test_old_snapshot_untouched_by_later_edits(self, flower_system):
        session = make_session(flower_system)
        f1 = session.get_frame()
        pts1 = f1.points.copy()
        session.move_vertex(VertexId.B, (5.0, 2.0))
        assert (f1.points == pts1).all()

    def test_no_torn_frames_under_concurrent_reads(self, flower_system):
        session = make_session(flower_system, n=5000)
        stop = threading.Event()
        bad = []

        def reader():
            while not stop.is_set():
                frame = session.get_frame()
                # a torn frame would pair points with a mismatched basis
                recon = to_barycentric_set(frame.basis, frame.points)
                cache = session.bary_cache
                scale = 1.0 + np.abs(cache)
                if not (np.abs(recon - cache) <= 1e-6 * scale).all():
                    bad.append(frame)
                    return

        threads = [threading.Thread(target=reader) for _ in range(2)]
        for t in threads:
            t.start()
        rng = np.random.default_rng(30)
        for _ in range(200):
            vid = VertexId(int(rng.integers(0, 3)))
            try:
                session.move_vertex(vid, tuple(rng.uniform(-6, 6, size=2)))
            except DegenerateBasis:
                pass
        stop.set()
        for t in threads:
            t.join()
        assert not bad
