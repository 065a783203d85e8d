"""IFS text format: parse, serialize, bundled example systems.

One map per line, six or seven whitespace-separated decimal floats:

    a11 a12 a21 a22 b1 b2 [weight]

Either every map line carries a weight or none does. Optional header
directives, each at most once:

    @name <free text>
    @basis x1 y1 x2 y2 x3 y3
    @render n_points burn_in seed

`#` starts a comment anywhere on a line; blank lines are ignored. The
canonical serialized form writes floats with shortest-round-trip formatting,
so parse(serialize(doc)) reproduces doc exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .barycentric import AffineBasis
from .errors import (BadWeightSum, EmptySystem, MalformedLine, NonFiniteNumber)
from .ifs import AffineMap2, IfsSystem

_NUMBER_RE = re.compile(
    r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$|^[+-]?(?:inf|infinity|nan)$",
    re.IGNORECASE)
_INT_RE = re.compile(r"^[+-]?\d+$")

EXAMPLE_NAMES = ("flower", "maple", "sierpinski")


@dataclass(frozen=True)
class RenderDefaults:
    n_points: int
    burn_in: int
    seed: int


@dataclass(frozen=True)
class IfsDocument:
    """Parsed IFS file: the system plus optional presentation defaults."""

    maps: tuple[AffineMap2, ...]
    weights: Optional[tuple[float, ...]] = None
    name: str = ""
    basis: Optional[AffineBasis] = None
    render: Optional[RenderDefaults] = None

    def to_system(self) -> IfsSystem:
        return IfsSystem(self.maps, self.weights)


def _tokens_with_columns(body: str) -> list[tuple[str, int]]:
    """(token, 1-based column) pairs for one line."""
    out = []
    for m in re.finditer(r"\S+", body):
        out.append((m.group(0), m.start() + 1))
    return out


def _parse_float(tok: str, col: int, lineno: int) -> float:
    if not _NUMBER_RE.match(tok):
        raise MalformedLine(lineno, col, f"expected a decimal number, got {tok!r}")
    v = float(tok)
    if not math.isfinite(v):
        raise NonFiniteNumber(lineno, col, tok)
    return v


def _parse_int(tok: str, col: int, lineno: int, minimum: int, what: str) -> int:
    if not _INT_RE.match(tok):
        raise MalformedLine(lineno, col, f"expected an integer for {what}, got {tok!r}")
    v = int(tok)
    if v < minimum:
        raise MalformedLine(lineno, col, f"{what} must be >= {minimum}, got {v}")
    return v


def parse_ifs(text: str) -> IfsDocument:
    """Parse IFS text into a document; raises the format errors documented
    in `ifsmodel.errors` with line/column positions."""
    name = ""
    basis: Optional[AffineBasis] = None
    render: Optional[RenderDefaults] = None
    seen: set[str] = set()
    maps: list[AffineMap2] = []
    weights: list[float] = []
    arity: Optional[int] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _tokens_with_columns(body)
        head, head_col = toks[0]

        if head.startswith("@"):
            if head in seen:
                raise MalformedLine(lineno, head_col, f"duplicate {head} directive")
            seen.add(head)
            if head == "@name":
                name = body.split(None, 1)[1].strip() if len(toks) > 1 else ""
            elif head == "@basis":
                if len(toks) != 7:
                    raise MalformedLine(lineno, head_col,
                                        "@basis needs 6 numbers, got "
                                        f"{len(toks) - 1}")
                v = [_parse_float(t, c, lineno) for t, c in toks[1:]]
                basis = AffineBasis((v[0], v[1]), (v[2], v[3]), (v[4], v[5]))
            elif head == "@render":
                if len(toks) != 4:
                    raise MalformedLine(lineno, head_col,
                                        "@render needs n_points burn_in seed")
                n = _parse_int(*toks[1], lineno, 1, "n_points")
                b = _parse_int(*toks[2], lineno, 0, "burn_in")
                s = _parse_int(*toks[3], lineno, 0, "seed")
                if s >= 2 ** 64:
                    raise MalformedLine(lineno, toks[3][1],
                                        "seed must fit in 64 bits")
                render = RenderDefaults(n, b, s)
            else:
                raise MalformedLine(lineno, head_col, f"unknown directive {head!r}")
            continue

        if len(toks) not in (6, 7):
            raise MalformedLine(lineno, 1,
                                f"map line needs 6 or 7 numbers, got {len(toks)}")
        if arity is None:
            arity = len(toks)
        elif len(toks) != arity:
            raise MalformedLine(lineno, 1,
                                "weight column must appear on every map line "
                                "or on none")
        vals = [_parse_float(t, c, lineno) for t, c in toks[:6]]
        maps.append(AffineMap2(*vals))
        if arity == 7:
            w = _parse_float(*toks[6], lineno)
            if w <= 0:
                raise MalformedLine(lineno, toks[6][1],
                                    f"weight must be positive, got {w!r}")
            weights.append(w)

    if not maps:
        raise EmptySystem("no map lines found")
    wtuple: Optional[tuple[float, ...]] = None
    if weights:
        total = sum(weights)
        if abs(total - 1.0) > 1e-6:
            raise BadWeightSum(total)
        wtuple = tuple(weights)
    return IfsDocument(tuple(maps), wtuple, name, basis, render)


def _fmt(x: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    return repr(float(x))


def serialize_ifs(doc: IfsDocument) -> str:
    """Canonical text form; parse(serialize(doc)) == doc."""
    lines: list[str] = []
    if doc.name:
        lines.append(f"@name {doc.name}")
    if doc.basis is not None:
        coords = [c for v in doc.basis.vertices for c in v]
        lines.append("@basis " + " ".join(_fmt(c) for c in coords))
    if doc.render is not None:
        r = doc.render
        lines.append(f"@render {r.n_points} {r.burn_in} {r.seed}")
    for i, m in enumerate(doc.maps):
        fields = [m.a11, m.a12, m.a21, m.a22, m.b1, m.b2]
        if doc.weights is not None:
            fields.append(doc.weights[i])
        lines.append(" ".join(_fmt(f) for f in fields))
    return "\n".join(lines) + "\n"


def example_text(name: str) -> str:
    """Raw text of a bundled IFS file (see EXAMPLE_NAMES)."""
    if name not in EXAMPLE_NAMES:
        raise KeyError(f"unknown example {name!r}; have {EXAMPLE_NAMES}")
    return (resources.files("ifsmodel") / "data" / f"{name}.ifs").read_text()


def load_example(name: str) -> IfsDocument:
    """Parsed bundled IFS document."""
    return parse_ifs(example_text(name))
