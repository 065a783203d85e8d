"""World-to-window mapping and point-cloud rasterization.

Window coordinates follow the usual screen convention: origin at the
top-left corner, x to the right, y downward. The world box is fitted inside
the pixel rectangle with one uniform scale (letterboxed, centered), so a
sheared-looking image always means the cloud itself was sheared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .barycentric import AffineBasis
from .ifs import PointSet, as_points
from .simplex import Box2, bounding_box

WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
TRIANGLE_RED = (220, 30, 30)
HANDLE_HALF = 2  # vertex handles are (2*HANDLE_HALF+1)-px squares


def _padded_nonempty(box: Box2) -> Box2:
    """Give zero-extent boxes a tiny extent so the fit scale is defined."""
    eps = 1e-6 * max(1.0, abs(box.xmin), abs(box.ymin), abs(box.xmax), abs(box.ymax))
    xmin, xmax = box.xmin, box.xmax
    ymin, ymax = box.ymin, box.ymax
    if xmax - xmin <= 0:
        xmin, xmax = xmin - eps, xmax + eps
    if ymax - ymin <= 0:
        ymin, ymax = ymin - eps, ymax + eps
    return Box2(xmin, ymin, xmax, ymax)


@dataclass(frozen=True)
class Viewport:
    """Fixed camera: world box, pixel dimensions, fractional margin."""

    world: Box2
    width: int
    height: int
    margin_frac: float = 0.0

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("pixel dimensions must be >= 1")
        if not 0.0 <= self.margin_frac <= 0.45:
            raise ValueError("margin_frac must be in [0, 0.45]")
        object.__setattr__(self, "world", _padded_nonempty(self.world))

    def _transform(self) -> tuple[float, float, float]:
        """(scale, x-offset, y-offset) of the uniform centered fit."""
        avail_w = self.width * (1.0 - 2.0 * self.margin_frac)
        avail_h = self.height * (1.0 - 2.0 * self.margin_frac)
        scale = min(avail_w / self.world.width, avail_h / self.world.height)
        cx = 0.5 * (self.world.xmin + self.world.xmax)
        cy = 0.5 * (self.world.ymin + self.world.ymax)
        return scale, 0.5 * self.width - scale * cx, 0.5 * self.height + scale * cy

    def pixel_world_size(self) -> float:
        """World-units extent of one pixel."""
        return 1.0 / self._transform()[0]


def world_to_window(vp: Viewport, p: tuple[float, float]) -> tuple[float, float]:
    """Real-valued window coordinates of a world point (y flipped down)."""
    scale, ox, oy = vp._transform()
    return (scale * p[0] + ox, oy - scale * p[1])


def window_to_world(vp: Viewport, w: tuple[float, float]) -> tuple[float, float]:
    """Inverse mapping, for hit-testing cursor positions."""
    scale, ox, oy = vp._transform()
    return ((w[0] - ox) / scale, (oy - w[1]) / scale)


def world_to_window_array(vp: Viewport, pts: PointSet) -> np.ndarray:
    pts = as_points(pts)
    scale, ox, oy = vp._transform()
    out = np.empty_like(pts)
    out[:, 0] = scale * pts[:, 0] + ox
    out[:, 1] = oy - scale * pts[:, 1]
    return out


def default_world_box(points: PointSet, basis: Optional[AffineBasis] = None,
                      pad_frac: float = 0.05) -> Box2:
    """Session camera: padded bounds of the initial cloud union the triangle,
    fixed thereafter so drag-induced motion stays visible."""
    box = bounding_box(points)
    if basis is not None:
        vs = np.array(basis.vertices)
        box = box.union(bounding_box(vs))
    return _padded_nonempty(box).padded(pad_frac)


def _plot_line(img: np.ndarray, x0: int, y0: int, x1: int, y1: int,
               color: tuple[int, int, int]) -> None:
    """1-px Bresenham segment, clipped to the image."""
    h, w = img.shape[:2]
    dx = abs(x1 - x0)
    dy = -abs(y1 - y0)
    sx = 1 if x0 < x1 else -1
    sy = 1 if y0 < y1 else -1
    err = dx + dy
    while True:
        if 0 <= x0 < w and 0 <= y0 < h:
            img[y0, x0] = color
        if x0 == x1 and y0 == y1:
            break
        e2 = 2 * err
        if e2 >= dy:
            err += dy
            x0 += sx
        if e2 <= dx:
            err += dx
            y0 += sy


def _fill_square(img: np.ndarray, x: int, y: int, half: int,
                 color: tuple[int, int, int]) -> None:
    h, w = img.shape[:2]
    x0, x1 = max(0, x - half), min(w, x + half + 1)
    y0, y1 = max(0, y - half), min(h, y + half + 1)
    if x0 < x1 and y0 < y1:
        img[y0:y1, x0:x1] = color


def rasterize(points: PointSet, vp: Viewport,
              basis: Optional[AffineBasis] = None,
              fg: tuple[int, int, int] = BLACK,
              bg: tuple[int, int, int] = WHITE,
              triangle_color: tuple[int, int, int] = TRIANGLE_RED) -> np.ndarray:
    """Plot each point as one pixel; optionally overlay the control triangle.

    A point lands on the pixel whose center is nearest its window
    coordinates (ties round toward +x/+y); out-of-view points are skipped.
    Pixel writes are idempotent, so point order never changes the image.
    """
    img = np.empty((vp.height, vp.width, 3), dtype=np.uint8)
    img[:, :] = bg

    points = as_points(points)
    if len(points):
        win = world_to_window_array(vp, points)
        px = np.floor(win[:, 0]).astype(np.int64)
        py = np.floor(win[:, 1]).astype(np.int64)
        ok = (px >= 0) & (px < vp.width) & (py >= 0) & (py < vp.height)
        img[py[ok], px[ok]] = fg

    if basis is not None:
        corners = [world_to_window(vp, v) for v in basis.vertices]
        pix = [(int(np.floor(x)), int(np.floor(y))) for x, y in corners]
        for i in range(3):
            x0, y0 = pix[i]
            x1, y1 = pix[(i + 1) % 3]
            _plot_line(img, x0, y0, x1, y1, triangle_color)
        for x, y in pix:
            _fill_square(img, x, y, HANDLE_HALF, triangle_color)
    return img


def ppm_bytes(img: np.ndarray) -> bytes:
    """Binary PPM (P6): header then RGB triples row-major from top-left."""
    h, w = img.shape[:2]
    return f"P6\n{w} {h}\n255\n".encode("ascii") + img.astype(np.uint8).tobytes()


def svg_text(points: PointSet, vp: Viewport,
             basis: Optional[AffineBasis] = None) -> str:
    """Vector rendering: one r=0.5 circle per point plus the triangle overlay."""
    def f(x: float) -> str:
        return repr(float(x))

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{vp.width}" height="{vp.height}" '
             f'viewBox="0 0 {vp.width} {vp.height}">',
             f'<rect width="{vp.width}" height="{vp.height}" fill="white"/>']
    points = as_points(points)
    if len(points):
        win = world_to_window_array(vp, points)
        for x, y in win:
            parts.append(f'<circle cx="{f(x)}" cy="{f(y)}" r="0.5"/>')
    if basis is not None:
        corners = [world_to_window(vp, v) for v in basis.vertices]
        pts = " ".join(f"{f(x)},{f(y)}" for x, y in corners)
        parts.append(f'<polygon points="{pts}" fill="none" '
                     f'stroke="rgb{TRIANGLE_RED}" stroke-width="1"/>')
        for x, y in corners:
            parts.append(f'<rect x="{f(x - HANDLE_HALF)}" y="{f(y - HANDLE_HALF)}" '
                         f'width="{2 * HANDLE_HALF + 1}" height="{2 * HANDLE_HALF + 1}" '
                         f'fill="rgb{TRIANGLE_RED}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
