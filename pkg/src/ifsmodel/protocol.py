"""JSON session protocol: the engine boundary used by frontends and replays.

Requests and replies are plain dicts (JSON objects). Message types mirror
the session operations:

    {"type": "init", "ifs": "<ifs file text>",
     "params": {"n_points": 100000, "burn_in": 14, "seed": 0},
     "basis": {"mode": "auto"} |
              {"mode": "triangle", "vertices": [[x,y],[x,y],[x,y]]},
     "frame_encoding": "list" | "base64"}
    {"type": "move", "vertex": "A"|"B"|"C", "pos": [x, y]}
    {"type": "hit", "pos": [x, y], "radius": r}
    {"type": "frame"}

Successful init/move/frame replies carry a frame snapshot. Point payloads
are 32-bit floats, either a flat [x0, y0, x1, y1, ...] JSON array ("list")
or base64 of the little-endian float32 buffer ("base64"). Failures reply
{"ok": false, "error": {"kind": ..., "message": ...}} and leave the session
exactly as it was.
"""

from __future__ import annotations

import base64
from typing import Any, Optional

import numpy as np

from .codec import parse_ifs
from .errors import DegenerateBasis, IfsFormatError
from .ifs import ChaosParams
from .session import Frame, ModelingSession, VertexId

DEFAULT_PARAMS = {"n_points": 100000, "burn_in": 14, "seed": 0}


def _error(kind: str, message: str, **extra: Any) -> dict:
    err = {"kind": kind, "message": message}
    err.update(extra)
    return {"ok": False, "error": err}


def frame_payload(frame: Frame, encoding: str = "list") -> dict:
    """Serializable snapshot of a frame; points quantized to float32."""
    pts32 = np.asarray(frame.points, dtype="<f4")
    t = frame.telemetry
    reply = {
        "ok": True,
        "type": "frame",
        "basis": [list(v) for v in frame.basis.vertices],
        "n_points": int(t.n_points),
        "telemetry": {
            "abs_det": t.abs_det,
            "n_points": t.n_points,
            "last_update_ms": t.last_update_ms,
            "contractivity": t.contractivity,
            "contractive": t.contractive,
        },
    }
    if encoding == "base64":
        reply["points_b64"] = base64.b64encode(pts32.tobytes()).decode("ascii")
    else:
        reply["points"] = [float(v) for v in pts32.ravel()]
    return reply


def decode_points(reply: dict) -> np.ndarray:
    """Reassemble a frame reply's payload into an (n, 2) float32 array."""
    if "points_b64" in reply:
        buf = base64.b64decode(reply["points_b64"])
        flat = np.frombuffer(buf, dtype="<f4")
    else:
        flat = np.asarray(reply["points"], dtype="<f4")
    return flat.reshape(-1, 2)


class SessionProtocol:
    """One active session driven by protocol messages.

    Message handling is sequential (single writer); callers serving multiple
    transports must serialize calls to `handle`.
    """

    def __init__(self):
        self._session: Optional[ModelingSession] = None
        self._encoding = "list"

    @property
    def session(self) -> Optional[ModelingSession]:
        return self._session

    def handle(self, msg: dict) -> dict:
        if not isinstance(msg, dict) or "type" not in msg:
            return _error("bad_message", "message must be an object with a 'type'")
        kind = msg["type"]
        if kind == "init":
            return self._handle_init(msg)
        if kind in ("move", "hit", "frame"):
            if self._session is None:
                return _error("no_session", "send an 'init' message first")
            if kind == "move":
                return self._handle_move(msg)
            if kind == "hit":
                return self._handle_hit(msg)
            return frame_payload(self._session.get_frame(), self._encoding)
        return _error("bad_message", f"unknown message type {kind!r}")

    def _handle_init(self, msg: dict) -> dict:
        text = msg.get("ifs")
        if not isinstance(text, str):
            return _error("bad_message", "'init' needs an 'ifs' text field")
        try:
            doc = parse_ifs(text)
        except IfsFormatError as exc:
            return _error("bad_ifs", str(exc))

        raw = dict(DEFAULT_PARAMS)
        if doc.render is not None:
            raw.update(n_points=doc.render.n_points, burn_in=doc.render.burn_in,
                       seed=doc.render.seed)
        raw.update(msg.get("params") or {})

        basis_spec = msg.get("basis") or {"mode": "auto"}
        encoding = msg.get("frame_encoding", "list")
        if encoding not in ("list", "base64"):
            return _error("bad_message", f"unknown frame_encoding {encoding!r}")
        try:
            params = ChaosParams(**raw)
            if basis_spec.get("mode") == "triangle":
                vs = basis_spec.get("vertices")
                if not (isinstance(vs, list) and len(vs) == 3):
                    return _error("bad_message", "'triangle' basis needs 3 vertices")
                from .barycentric import AffineBasis
                basis = AffineBasis(*(tuple(map(float, v)) for v in vs))
            elif basis_spec.get("mode") == "auto":
                basis = None
            else:
                return _error("bad_message",
                              f"unknown basis mode {basis_spec.get('mode')!r}")
            session = ModelingSession(doc.to_system(), params, basis)
        except DegenerateBasis as exc:
            return _error("degenerate_basis", str(exc), det=exc.det)
        except (TypeError, ValueError) as exc:
            return _error("bad_message", str(exc))

        self._session = session
        self._encoding = encoding
        return frame_payload(session.get_frame(), encoding)

    def _handle_move(self, msg: dict) -> dict:
        try:
            vid = VertexId[msg["vertex"]]
            x, y = (float(v) for v in msg["pos"])
        except (KeyError, TypeError, ValueError):
            return _error("bad_message", "'move' needs vertex A|B|C and pos [x, y]")
        try:
            frame = self._session.move_vertex(vid, (x, y))
        except DegenerateBasis as exc:
            return _error("degenerate_basis", str(exc), det=exc.det)
        return frame_payload(frame, self._encoding)

    def _handle_hit(self, msg: dict) -> dict:
        try:
            x, y = (float(v) for v in msg["pos"])
            radius = float(msg["radius"])
        except (KeyError, TypeError, ValueError):
            return _error("bad_message", "'hit' needs pos [x, y] and radius")
        try:
            vid = self._session.hit_test((x, y), radius)
        except ValueError as exc:
            return _error("bad_message", str(exc))
        return {"ok": True, "type": "hit",
                "vertex": vid.name if vid is not None else None}
