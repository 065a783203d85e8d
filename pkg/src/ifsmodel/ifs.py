"""Affine map systems and chaos-game rendering.

Point clouds are plain float64 arrays of shape (n, 2). The chaos game is a
pure function of its inputs: same system, same parameters, same points,
bit for bit (see `ifsmodel.rng` for the generator contract).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .errors import OrbitDiverged
from .rng import double_block

PointSet = np.ndarray  # (n, 2) float64


def as_points(data: Iterable) -> PointSet:
    """Coerce a sequence of (x, y) pairs to an (n, 2) float64 array."""
    pts = np.asarray(data, dtype=np.float64)
    if pts.size == 0:
        return pts.reshape(0, 2)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected (n, 2) point array, got shape {pts.shape}")
    return pts


@dataclass(frozen=True)
class AffineMap2:
    """One planar affine map x -> A x + b, stored row-major."""

    a11: float
    a12: float
    a21: float
    a22: float
    b1: float
    b2: float

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22", "b1", "b2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"map entry {name} must be finite, got {v!r}")

    def apply(self, p: tuple[float, float]) -> tuple[float, float]:
        x, y = p
        return (self.a11 * x + self.a12 * y + self.b1,
                self.a21 * x + self.a22 * y + self.b2)

    def apply_array(self, pts: PointSet) -> PointSet:
        # elementwise (not BLAS) so results bit-match the scalar apply()
        x = pts[:, 0]
        y = pts[:, 1]
        out = np.empty_like(pts)
        out[:, 0] = self.a11 * x + self.a12 * y + self.b1
        out[:, 1] = self.a21 * x + self.a22 * y + self.b2
        return out

    def linear_det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21


@dataclass(frozen=True)
class IfsSystem:
    """Ordered list of affine maps with optional selection weights."""

    maps: tuple[AffineMap2, ...]
    weights: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) == 0:
            raise ValueError("an IFS needs at least one map")
        if self.weights is not None:
            w = tuple(float(x) for x in self.weights)
            object.__setattr__(self, "weights", w)
            if len(w) != len(self.maps):
                raise ValueError("weights length must match number of maps")
            if any(x <= 0 for x in w):
                raise ValueError("weights must all be positive")
            if abs(sum(w) - 1.0) > 1e-9:
                raise ValueError(f"weights must sum to 1, got {sum(w)!r}")

    @classmethod
    def with_det_weights(cls, maps: Sequence[AffineMap2]) -> "IfsSystem":
        """Weights proportional to max(|det A|, 0.01): denser fractal images."""
        raw = [max(abs(m.linear_det()), 0.01) for m in maps]
        total = sum(raw)
        return cls(tuple(maps), tuple(x / total for x in raw))

    def selection_cdf(self) -> np.ndarray:
        """Cumulative map-selection distribution; last entry forced to 1."""
        n = len(self.maps)
        if self.weights is None:
            cdf = np.arange(1, n + 1, dtype=np.float64) / n
        else:
            cdf = np.cumsum(np.asarray(self.weights, dtype=np.float64))
        cdf[-1] = 1.0
        return cdf


@dataclass(frozen=True)
class ChaosParams:
    """Chaos-game run parameters.

    `burn_in` points are generated and discarded before the `n_points`
    output points; the default of 14 skips the visible transient of a
    fresh orbit.
    """

    n_points: int
    burn_in: int = 14
    seed: int = 0
    start: Optional[tuple[float, float]] = None

    def __post_init__(self):
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.start is not None:
            sx, sy = self.start
            if not (math.isfinite(sx) and math.isfinite(sy)):
                raise ValueError("start point must be finite")


def apply_map(m: AffineMap2, p: tuple[float, float]) -> tuple[float, float]:
    """Apply one affine map to one point."""
    return m.apply(p)


def map_contractivity(m: AffineMap2) -> float:
    """Tightest Lipschitz constant of the map: the spectral norm of A.

    Computed in closed form from the eigenvalues of A^T A (2x2 quadratic),
    no iterative SVD involved.
    """
    p = m.a11 * m.a11 + m.a21 * m.a21
    q = m.a11 * m.a12 + m.a21 * m.a22
    r = m.a12 * m.a12 + m.a22 * m.a22
    lam_max = 0.5 * ((p + r) + math.hypot(p - r, 2.0 * q))
    return math.sqrt(max(lam_max, 0.0))


def system_contractivity(ifs: IfsSystem) -> float:
    """Max contractivity over the system's maps. Values >= 1 are reported,
    not rejected: attractors can exist for non-contractive systems too."""
    return max(map_contractivity(m) for m in ifs.maps)


def map_indices(ifs: IfsSystem, seed: int, n: int) -> np.ndarray:
    """First n map selections for `seed`: index_i = smallest j with u_i < cdf_j."""
    cdf = ifs.selection_cdf()
    u = double_block(seed, n)
    return np.minimum(np.searchsorted(cdf, u, side="right"), len(cdf) - 1)


def chaos_game(ifs: IfsSystem, params: ChaosParams) -> PointSet:
    """Render an attractor sample by random iteration.

    Starting from `params.start` (default origin), applies a randomly
    selected map per step, drops the first `burn_in` points, and returns the
    next `n_points` points in generation order.
    """
    if params.n_points < 1:
        raise ValueError("n_points must be >= 1")
    total = params.burn_in + params.n_points
    sel = map_indices(ifs, params.seed, total).tolist()
    coeffs = [(m.a11, m.a12, m.a21, m.a22, m.b1, m.b2) for m in ifs.maps]

    x, y = params.start if params.start is not None else (0.0, 0.0)
    xs: list[float] = []
    ys: list[float] = []
    push_x = xs.append
    push_y = ys.append
    for j in sel:
        a11, a12, a21, a22, b1, b2 = coeffs[j]
        x, y = a11 * x + a12 * y + b1, a21 * x + a22 * y + b2
        push_x(x)
        push_y(y)

    out = np.empty((params.n_points, 2), dtype=np.float64)
    out[:, 0] = xs[params.burn_in:]
    out[:, 1] = ys[params.burn_in:]
    if not np.isfinite(out).all():
        raise OrbitDiverged("chaos-game orbit overflowed to non-finite values")
    return out


def hutchinson_step(ifs: IfsSystem, s: PointSet) -> PointSet:
    """Union-of-images step: concatenation of every map applied to `s`,
    in map order then point order; output size is n_maps * len(s)."""
    s = as_points(s)
    if len(s) == 0:
        return s
    return np.concatenate([m.apply_array(s) for m in ifs.maps], axis=0)


def hausdorff_distance(a: PointSet, b: PointSet) -> float:
    """Hausdorff distance between two nonempty finite point sets.

    Max over both directed distances; nearest neighbors come from a k-d
    tree, which returns the same values as the brute-force pairwise scan.
    """
    a = as_points(a)
    b = as_points(b)
    if len(a) == 0 or len(b) == 0:
        raise ValueError("hausdorff_distance requires nonempty point sets")
    d_ab = cKDTree(b).query(a, k=1)[0].max()
    d_ba = cKDTree(a).query(b, k=1)[0].max()
    return float(max(d_ab, d_ba))
