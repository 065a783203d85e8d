"""Minimal axis-aligned right-triangle bounds for point clouds.

The minimal simplex of a cloud is the smallest isosceles right triangle with
axis-parallel legs that contains every point. Used as an automatic control
triangle: it hugs the attractor, so dragging its vertices gives good leverage.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import AffineBasis
from .ifs import ChaosParams, IfsSystem, PointSet, as_points, chaos_game

# Right-angle corner placement; legs extend away from the chosen corner.
ORIENTATIONS = ("sw", "se", "nw", "ne")


@dataclass(frozen=True)
class Box2:
    """Axis-aligned bounds."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin <= self.xmax and self.ymin <= self.ymax):
            raise ValueError("box must have xmin <= xmax and ymin <= ymax")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    def padded(self, frac: float) -> "Box2":
        px = self.width * frac
        py = self.height * frac
        return Box2(self.xmin - px, self.ymin - py, self.xmax + px, self.ymax + py)

    def union(self, other: "Box2") -> "Box2":
        return Box2(min(self.xmin, other.xmin), min(self.ymin, other.ymin),
                    max(self.xmax, other.xmax), max(self.ymax, other.ymax))


def bounding_box(s: PointSet) -> Box2:
    """Tight axis-aligned bounds of a nonempty point set."""
    s = as_points(s)
    if len(s) == 0:
        raise ValueError("bounding_box requires a nonempty point set")
    return Box2(float(s[:, 0].min()), float(s[:, 1].min()),
                float(s[:, 0].max()), float(s[:, 1].max()))


def _min_leg(s: PointSet, corner_x: float, corner_y: float,
             sign_x: float, sign_y: float) -> float:
    # The binding constraint is the hypotenuse: every point must satisfy
    # sign_x*(x - corner_x) + sign_y*(y - corner_y) <= L, so the minimal leg
    # is the max of the left-hand side over the cloud.
    return float((sign_x * (s[:, 0] - corner_x)
                  + sign_y * (s[:, 1] - corner_y)).max())


def minimal_canonical_simplex(s: PointSet, orientation: str = "sw") -> AffineBasis:
    """Smallest axis-parallel isosceles right triangle containing `s`.

    The canonical orientation "sw" puts the right angle at (xmin, ymin) with
    legs toward +x and +y; "se", "nw", "ne" are the reflected variants. The
    returned basis is ordered (corner, x-leg end, y-leg end). Degenerate
    clouds get an epsilon-sized triangle so the basis is always usable.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    s = as_points(s)
    if len(s) == 0:
        raise ValueError("minimal_canonical_simplex requires a nonempty point set")
    box = bounding_box(s)

    sign_x = 1.0 if orientation in ("sw", "nw") else -1.0
    sign_y = 1.0 if orientation in ("sw", "se") else -1.0
    cx = box.xmin if sign_x > 0 else box.xmax
    cy = box.ymin if sign_y > 0 else box.ymax

    leg = _min_leg(s, cx, cy, sign_x, sign_y)
    leg = max(leg, 1e-6 * max(1.0, abs(cx), abs(cy)))
    return AffineBasis((cx, cy), (cx + sign_x * leg, cy), (cx, cy + sign_y * leg))


def simplex_for_ifs(ifs: IfsSystem, params: ChaosParams,
                    orientation: str = "sw") -> AffineBasis:
    """Minimal simplex of the chaos-game rendering with these parameters.

    The result is deterministic given `params`. Use n_points >= 1e5 so the
    sample fills the attractor; the simplex of a sparse sample underestimates
    the true one.
    """
    return minimal_canonical_simplex(chaos_game(ifs, params), orientation)
