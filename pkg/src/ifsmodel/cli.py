"""Batch command line: render attractors, replay scripted vertex moves.

Exit codes: 0 success, 1 input error (file format, bad flags, rejected
moves), 2 render/output error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

import numpy as np

from .barycentric import AffineBasis
from .codec import EXAMPLE_NAMES, example_text, parse_ifs
from .errors import DegenerateBasis, IfsFormatError
from .ifs import ChaosParams
from .session import ModelingSession, VertexId
from .viewport import Viewport, default_world_box, ppm_bytes, rasterize, svg_text

_MOVE_RE = re.compile(r"^([ABCabc]):([+-]?[0-9.eE+-]+),([+-]?[0-9.eE+-]+)$")


def _parse_move(spec: str) -> tuple[VertexId, float, float]:
    m = _MOVE_RE.match(spec)
    if not m:
        raise ValueError(f"bad --move {spec!r}; expected V:dx,dy like C:+0.5,-1.0")
    try:
        dx, dy = float(m.group(2)), float(m.group(3))
    except ValueError:
        raise ValueError(f"bad --move offsets in {spec!r}") from None
    return VertexId[m.group(1).upper()], dx, dy


def _parse_basis(spec: str) -> Optional[AffineBasis]:
    """None means the minimal-simplex mode ('auto')."""
    if spec == "auto":
        return None
    parts = spec.split(",")
    if len(parts) != 6:
        raise ValueError("--basis needs 'auto' or 6 comma-separated numbers")
    try:
        v = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad --basis coordinates in {spec!r}") from None
    return AffineBasis((v[0], v[1]), (v[2], v[3]), (v[4], v[5]))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsmodel",
        description="Render IFS attractors and replay control-triangle edits.")
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render an IFS file to an image")
    r.add_argument("--ifs", required=True, help="path to the IFS file")
    r.add_argument("--points", type=int, default=None,
                   help="number of plotted points (default 100000)")
    r.add_argument("--burn-in", type=int, default=None,
                   help="points discarded before plotting (default 14)")
    r.add_argument("--seed", type=int, default=None,
                   help="64-bit generator seed (default 0)")
    r.add_argument("--basis", default=None,
                   help="'auto' for the minimal simplex, or x1,y1,x2,y2,x3,y3")
    r.add_argument("--move", action="append", default=[], metavar="V:dx,dy",
                   help="vertex offset applied in order; repeatable")
    r.add_argument("--out", required=True, help="output image path")
    r.add_argument("--format", choices=("ppm", "svg"), default=None,
                   help="image format (default: from --out extension)")
    r.add_argument("--width", type=int, default=800)
    r.add_argument("--height", type=int, default=800)
    r.add_argument("--no-overlay", action="store_true",
                   help="omit the control-triangle overlay")
    r.add_argument("--dump-points", metavar="PATH", default=None,
                   help="also write the final cloud as little-endian "
                        "float32 x,y pairs (scripting/cross-check aid)")

    e = sub.add_parser("examples", help="list or print bundled IFS files")
    e.add_argument("name", nargs="?", help=f"one of {', '.join(EXAMPLE_NAMES)}")

    s = sub.add_parser("serve", help="serve the JSON session protocol over HTTP")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8075)
    s.add_argument("--static", default=None,
                   help="directory of static frontend files to serve at /")
    return parser


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        with open(args.ifs, "r", encoding="utf-8") as fh:
            doc = parse_ifs(fh.read())
    except OSError as exc:
        print(f"ifsmodel: cannot read {args.ifs}: {exc}", file=sys.stderr)
        return 1
    except IfsFormatError as exc:
        print(f"ifsmodel: {args.ifs}: {exc}", file=sys.stderr)
        return 1

    render = doc.render
    n_points = args.points if args.points is not None else \
        (render.n_points if render else 100000)
    burn_in = args.burn_in if args.burn_in is not None else \
        (render.burn_in if render else 14)
    seed = args.seed if args.seed is not None else (render.seed if render else 0)

    try:
        params = ChaosParams(n_points=n_points, burn_in=burn_in, seed=seed)
        if args.basis is not None:
            basis = _parse_basis(args.basis)
        else:
            basis = doc.basis  # None -> minimal simplex
        moves = [_parse_move(m) for m in args.move]
        session = ModelingSession(doc.to_system(), params, basis)
    except (ValueError, DegenerateBasis) as exc:
        print(f"ifsmodel: {exc}", file=sys.stderr)
        return 1

    if not session.get_frame().telemetry.contractive:
        factor = session.get_frame().telemetry.contractivity
        print(f"ifsmodel: warning: system is not contractive "
              f"(factor {factor:.6g})", file=sys.stderr)

    frame = session.get_frame()
    world = default_world_box(frame.points, frame.basis)

    try:
        for vid, dx, dy in moves:
            vx, vy = session.current_basis.vertex(int(vid))
            frame = session.move_vertex(vid, (vx + dx, vy + dy))
    except DegenerateBasis as exc:
        print(f"ifsmodel: move rejected: {exc}", file=sys.stderr)
        return 1

    fmt = args.format or ("svg" if args.out.lower().endswith(".svg") else "ppm")
    vp = Viewport(world, args.width, args.height)
    overlay = None if args.no_overlay else frame.basis
    try:
        if fmt == "svg":
            data = svg_text(frame.points, vp, overlay).encode("utf-8")
        else:
            data = ppm_bytes(rasterize(frame.points, vp, overlay))
        with open(args.out, "wb") as fh:
            fh.write(data)
        if args.dump_points:
            with open(args.dump_points, "wb") as fh:
                fh.write(np.asarray(frame.points, dtype="<f4").tobytes())
    except OSError as exc:
        print(f"ifsmodel: cannot write output: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_examples(args: argparse.Namespace) -> int:
    if args.name is None:
        print("\n".join(EXAMPLE_NAMES))
        return 0
    try:
        sys.stdout.write(example_text(args.name))
    except KeyError as exc:
        print(f"ifsmodel: {exc.args[0]}", file=sys.stderr)
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "render":
        return _cmd_render(args)
    if args.command == "examples":
        return _cmd_examples(args)
    if args.command == "serve":
        from .server import serve
        return serve(args.host, args.port, args.static)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
