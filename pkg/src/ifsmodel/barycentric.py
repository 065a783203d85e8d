"""Affine bases (control triangles) and barycentric coordinate conversion.

A point M has coordinates (a, b, c) relative to the basis triangle {A, B, C}
when M = aA + bB + cC with a + b + c = 1. These coordinates are invariant
under affine transformation of the basis, which is what makes dragging the
triangle drag the whole point cloud with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBasis
from .ifs import AffineMap2, PointSet, as_points

Point = tuple[float, float]

# a + b + c must equal 1 within this, scaled by coordinate magnitude so the
# check stays meaningful for points far outside the triangle.
_UNITY_TOL = 1e-12


@dataclass(frozen=True)
class AffineBasis:
    """Ordered triple of points. Construction allows a degenerate (collinear)
    triple; operations that need an invertible basis raise DegenerateBasis."""

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        for name in ("a", "b", "c"):
            x, y = getattr(self, name)
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"vertex {name} must be finite")
            object.__setattr__(self, name, (float(x), float(y)))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def vertex(self, index: int) -> Point:
        return self.vertices[index]

    def with_vertex(self, index: int, pos: Point) -> "AffineBasis":
        vs = list(self.vertices)
        vs[index] = (float(pos[0]), float(pos[1]))
        return AffineBasis(*vs)

    def degeneracy_eps(self) -> float:
        """Scale-relative determinant threshold: 1e-9 * L^2 with L the largest
        pairwise vertex distance. det/L^2 measures shape (thinness) alone, so
        the test treats huge and tiny triangles alike."""
        (a1, a2), (b1, b2), (c1, c2) = self.vertices
        l2 = max((a1 - b1) ** 2 + (a2 - b2) ** 2,
                 (b1 - c1) ** 2 + (b2 - c2) ** 2,
                 (c1 - a1) ** 2 + (c2 - a2) ** 2)
        return 1e-9 * l2

    def is_degenerate(self) -> bool:
        return abs(basis_determinant(self)) <= self.degeneracy_eps()

    def require_valid(self) -> None:
        det = basis_determinant(self)
        if abs(det) <= self.degeneracy_eps():
            raise DegenerateBasis(det)


@dataclass(frozen=True)
class BaryCoord:
    """One (a, b, c) triple; all three components are kept even though
    c = 1 - a - b, so the affine-combination constraint is checkable."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        s = self.a + self.b + self.c
        if not math.isfinite(s):
            raise ValueError("barycentric components must be finite")
        scale = max(1.0, abs(self.a) + abs(self.b) + abs(self.c))
        if abs(s - 1.0) > _UNITY_TOL * scale:
            raise ValueError(f"components must sum to 1, got {s!r}")


BarySet = np.ndarray  # (n, 3) float64, rows are (a, b, c)


def basis_matrix(basis: AffineBasis) -> np.ndarray:
    """3x3 matrix with homogenized basis vertices as columns."""
    (a1, a2), (b1, b2), (c1, c2) = basis.vertices
    return np.array([[a1, b1, c1], [a2, b2, c2], [1.0, 1.0, 1.0]])


def basis_determinant(basis: AffineBasis) -> float:
    """Explicit 6-term determinant; equals twice the signed triangle area."""
    (a1, a2), (b1, b2), (c1, c2) = basis.vertices
    return (a1 * b2 - b1 * a2) + (b1 * c2 - c1 * b2) + (c1 * a2 - a1 * c2)


def _adjugate_rows(basis: AffineBasis):
    """Rows of the adjugate of the basis matrix: (a, b, c) = rows . (x, y, 1) / det."""
    (a1, a2), (b1, b2), (c1, c2) = basis.vertices
    return ((b2 - c2, c1 - b1, b1 * c2 - b2 * c1),
            (c2 - a2, a1 - c1, a2 * c1 - a1 * c2),
            (a2 - b2, b1 - a1, a1 * b2 - a2 * b1))


def to_barycentric(basis: AffineBasis, p: Point) -> BaryCoord:
    """Rectangular -> barycentric, via the explicit adjugate (branch-free)."""
    det = basis_determinant(basis)
    if abs(det) <= basis.degeneracy_eps():
        raise DegenerateBasis(det)
    x, y = p
    (ra, rb, rc) = _adjugate_rows(basis)
    a = (ra[0] * x + ra[1] * y + ra[2]) / det
    b = (rb[0] * x + rb[1] * y + rb[2]) / det
    c = (rc[0] * x + rc[1] * y + rc[2]) / det
    return BaryCoord(a, b, c)


def from_barycentric(basis: AffineBasis, q: BaryCoord) -> Point:
    """Barycentric -> rectangular: the affine combination aA + bB + cC."""
    (a1, a2), (b1, b2), (c1, c2) = basis.vertices
    return (q.a * a1 + q.b * b1 + q.c * c1,
            q.a * a2 + q.b * b2 + q.c * c2)


def to_barycentric_set(basis: AffineBasis, s: PointSet) -> BarySet:
    """Element-wise to_barycentric over a point array, order-preserving."""
    det = basis_determinant(basis)
    if abs(det) <= basis.degeneracy_eps():
        raise DegenerateBasis(det)
    s = as_points(s)
    (ra, rb, rc) = _adjugate_rows(basis)
    x = s[:, 0]
    y = s[:, 1]
    out = np.empty((len(s), 3), dtype=np.float64)
    out[:, 0] = (ra[0] * x + ra[1] * y + ra[2]) / det
    out[:, 1] = (rb[0] * x + rb[1] * y + rb[2]) / det
    out[:, 2] = (rc[0] * x + rc[1] * y + rc[2]) / det
    return out


def from_barycentric_set(basis: AffineBasis, bs: BarySet) -> PointSet:
    """Element-wise from_barycentric over an (n, 3) coordinate array.

    Evaluated with the scalar op's operation order (no BLAS), so results are
    bit-identical to per-point conversion on any platform.
    """
    bs = np.asarray(bs, dtype=np.float64)
    if bs.size == 0:
        return np.empty((0, 2), dtype=np.float64)
    (a1, a2), (b1, b2), (c1, c2) = basis.vertices
    qa = bs[:, 0]
    qb = bs[:, 1]
    qc = bs[:, 2]
    out = np.empty((len(bs), 2), dtype=np.float64)
    out[:, 0] = qa * a1 + qb * b1 + qc * c1
    out[:, 1] = qa * a2 + qb * b2 + qc * c2
    return out


def retarget_map(old: AffineBasis, new: AffineBasis) -> AffineMap2:
    """The unique affine map sending old.a -> new.a, old.b -> new.b,
    old.c -> new.c: the top two rows of T_new . T_old^-1.

    `new` may be degenerate (the map is then rank-deficient but well
    defined); `old` must not be.
    """
    det = basis_determinant(old)
    if abs(det) <= old.degeneracy_eps():
        raise DegenerateBasis(det)
    adj = _adjugate_rows(old)
    (na, nb, nc) = new.vertices
    rows = []
    for k in (0, 1):  # x row, y row of the 2x3 result
        t = (na[k], nb[k], nc[k])
        rows.append(tuple(
            (t[0] * adj[0][j] + t[1] * adj[1][j] + t[2] * adj[2][j]) / det
            for j in (0, 1, 2)))
    (m11, m12, t1), (m21, m22, t2) = rows
    return AffineMap2(m11, m12, m21, m22, t1, t2)
