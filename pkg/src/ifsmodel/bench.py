"""Benchmark harness for the interactive hot path.

Measures move_vertex + get_frame latency on a rendered cloud, the budget
that keeps dragging smooth. Run as:

    python -m ifsmodel.bench [n_points] [edits]
"""

from __future__ import annotations

import platform
import sys
import time

import numpy as np

from .codec import load_example
from .ifs import ChaosParams
from .session import ModelingSession, VertexId


def run_benchmark(n_points: int = 100_000, edits: int = 300,
                  seed: int = 42) -> dict:
    """Time `edits` scripted single-vertex drags over an n_points cloud.

    Returns per-edit latency stats in milliseconds. Edits cycle through the
    vertices with small deterministic offsets that keep the triangle far
    from degenerate.
    """
    doc = load_example("flower")
    session = ModelingSession(doc.to_system(), ChaosParams(n_points, seed=seed))

    base = session.base_basis
    times = np.empty(edits, dtype=np.float64)
    for k in range(edits):
        vid = VertexId(k % 3)
        vx, vy = base.vertex(int(vid))
        # bounded wobble around the home position
        dx = 0.15 * np.sin(0.7 * k + int(vid))
        dy = 0.15 * np.cos(1.1 * k - int(vid))
        t0 = time.perf_counter()
        session.move_vertex(vid, (vx + dx, vy + dy))
        session.get_frame()
        times[k] = (time.perf_counter() - t0) * 1e3

    return {
        "n_points": n_points,
        "edits": edits,
        "median_ms": float(np.median(times)),
        "p99_ms": float(np.percentile(times, 99)),
        "max_ms": float(times.max()),
    }


def _cpu_model() -> str:
    try:
        with open("/proc/cpuinfo") as fh:
            for line in fh:
                if line.lower().startswith("model name"):
                    return line.split(":", 1)[1].strip()
    except OSError:
        pass
    return platform.processor() or "unknown"


def main(argv: list[str]) -> int:
    n_points = int(argv[1]) if len(argv) > 1 else 100_000
    edits = int(argv[2]) if len(argv) > 2 else 300
    stats = run_benchmark(n_points, edits)
    print(f"machine: {_cpu_model()}")
    print(f"python {platform.python_version()}, numpy {np.__version__}")
    print(f"edit latency over {stats['edits']} edits, "
          f"{stats['n_points']} points:")
    print(f"  median {stats['median_ms']:.3f} ms")
    print(f"  p99    {stats['p99_ms']:.3f} ms")
    print(f"  max    {stats['max_ms']:.3f} ms")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
