"""Interactive modeling state: a rendered cloud tied to a draggable triangle.

The cloud's coordinates relative to the initial basis are computed once; a
vertex drag only has to build one affine map (initial basis -> edited basis)
and push the original points through it. Repeated edits therefore never
accumulate error: the current cloud is always a single map away from the
initial one.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .barycentric import (AffineBasis, BarySet, basis_determinant,
                          from_barycentric_set, retarget_map,
                          to_barycentric_set)
from .ifs import ChaosParams, IfsSystem, PointSet, chaos_game, system_contractivity
from .simplex import minimal_canonical_simplex


class VertexId(enum.IntEnum):
    """Control-triangle vertex; enum order is the hit-test tie-break order."""

    A = 0
    B = 1
    C = 2


@dataclass(frozen=True)
class Telemetry:
    abs_det: float            # |det T| of the current basis
    n_points: int
    last_update_ms: float
    contractivity: float      # max Lipschitz constant over the system's maps
    contractive: bool         # False flags a system with factor >= 1


@dataclass(frozen=True)
class Frame:
    """Immutable snapshot handed to renderers; points array is read-only."""

    points: PointSet
    basis: AffineBasis
    telemetry: Telemetry


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


class ModelingSession:
    """Single-writer editing session over one rendered attractor.

    One thread applies edits; `get_frame` may be called concurrently from a
    render thread and always sees a complete frame (the current frame is
    swapped atomically, never mutated).
    """

    def __init__(self, ifs: IfsSystem, params: ChaosParams,
                 basis: Optional[AffineBasis] = None,
                 simplex_orientation: str = "sw"):
        """Render the cloud and attach it to a control triangle.

        With `basis=None` the minimal simplex of the rendering is used;
        a user triangle must be non-degenerate.
        """
        if basis is not None:
            basis.require_valid()
            points = chaos_game(ifs, params)
        else:
            points = chaos_game(ifs, params)
            basis = minimal_canonical_simplex(points, simplex_orientation)

        self._ifs = ifs
        self._params = params
        self._contractivity = system_contractivity(ifs)
        self._base_basis = basis
        self._base_points = _frozen(points)
        self._bary_cache = _frozen(to_barycentric_set(basis, points))
        self._frame = Frame(self._base_points, basis,
                            self._telemetry(basis, 0.0))

    def _telemetry(self, basis: AffineBasis, update_ms: float) -> Telemetry:
        return Telemetry(abs_det=abs(basis_determinant(basis)),
                         n_points=len(self._base_points),
                         last_update_ms=update_ms,
                         contractivity=self._contractivity,
                         contractive=self._contractivity < 1.0)

    @property
    def ifs(self) -> IfsSystem:
        return self._ifs

    @property
    def params(self) -> ChaosParams:
        return self._params

    @property
    def base_basis(self) -> AffineBasis:
        return self._base_basis

    @property
    def bary_cache(self) -> BarySet:
        return self._bary_cache

    @property
    def current_basis(self) -> AffineBasis:
        return self._frame.basis

    @property
    def current_points(self) -> PointSet:
        return self._frame.points

    def move_vertex(self, v: VertexId, new_pos: tuple[float, float]) -> Frame:
        """Move one triangle vertex; the whole cloud follows.

        A move that would make the triangle degenerate is rejected: the
        session state is untouched and the error carries the offending
        determinant.
        """
        t0 = time.perf_counter()
        candidate = self._frame.basis.with_vertex(int(v), new_pos)
        candidate.require_valid()

        m = retarget_map(self._base_basis, candidate)
        points = _frozen(m.apply_array(self._base_points))

        ms = (time.perf_counter() - t0) * 1e3
        self._frame = Frame(points, candidate, self._telemetry(candidate, ms))
        return self._frame

    def hit_test(self, cursor: tuple[float, float],
                 radius: float) -> Optional[VertexId]:
        """Nearest vertex within `radius` of the cursor, in world units;
        equidistant candidates resolve to the earlier vertex (A < B < C)."""
        if radius <= 0:
            raise ValueError("radius must be positive")
        cx, cy = cursor
        r2 = radius * radius
        best: Optional[VertexId] = None
        best_d2 = None
        for vid in VertexId:
            vx, vy = self._frame.basis.vertex(int(vid))
            d2 = (vx - cx) ** 2 + (vy - cy) ** 2
            if d2 <= r2 and (best_d2 is None or d2 < best_d2):
                best, best_d2 = vid, d2
        return best

    def get_frame(self) -> Frame:
        """Consistent snapshot of the current state; never a torn frame."""
        return self._frame

    def recompute_points_via_cache(self) -> PointSet:
        """Per-point reconversion of the cached relative coordinates against
        the current basis. Slow path, kept as a cross-check for the
        retarget-based update; the two must agree within rounding."""
        return from_barycentric_set(self._frame.basis, self._bary_cache)


def init_session(ifs: IfsSystem, params: ChaosParams,
                 basis: Optional[AffineBasis] = None,
                 simplex_orientation: str = "sw") -> ModelingSession:
    """Convenience constructor mirroring ModelingSession.__init__."""
    return ModelingSession(ifs, params, basis, simplex_orientation)
