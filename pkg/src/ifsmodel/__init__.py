"""Real-time modeling of 2D IFS fractal attractors.

Render an attractor once with the chaos game, attach it to a control
triangle via barycentric coordinates, then re-emit the transformed cloud
instantly whenever a triangle vertex moves.
"""

from .barycentric import (AffineBasis, BaryCoord, basis_determinant,
                          basis_matrix, from_barycentric, from_barycentric_set,
                          retarget_map, to_barycentric, to_barycentric_set)
from .codec import (EXAMPLE_NAMES, IfsDocument, RenderDefaults, example_text,
                    load_example, parse_ifs, serialize_ifs)
from .errors import (BadWeightSum, DegenerateBasis, EmptySystem, IfsFormatError,
                     IfsModelError, MalformedLine, NonFiniteNumber, OrbitDiverged)
from .ifs import (AffineMap2, ChaosParams, IfsSystem, apply_map, as_points,
                  chaos_game, hausdorff_distance, hutchinson_step,
                  map_contractivity, system_contractivity)
from .session import Frame, ModelingSession, Telemetry, VertexId, init_session
from .simplex import (Box2, bounding_box, minimal_canonical_simplex,
                      simplex_for_ifs)
from .viewport import (Viewport, default_world_box, ppm_bytes, rasterize,
                       svg_text, window_to_world, world_to_window,
                       world_to_window_array)

__version__ = "0.1.0"

__all__ = [
    "AffineBasis", "AffineMap2", "BadWeightSum", "BaryCoord", "Box2",
    "ChaosParams", "DegenerateBasis", "EXAMPLE_NAMES", "EmptySystem", "Frame",
    "IfsDocument", "IfsFormatError", "IfsModelError", "IfsSystem",
    "MalformedLine", "ModelingSession", "NonFiniteNumber", "OrbitDiverged",
    "RenderDefaults", "Telemetry", "VertexId", "Viewport", "apply_map",
    "as_points", "basis_determinant", "basis_matrix", "bounding_box",
    "chaos_game", "default_world_box", "example_text", "from_barycentric",
    "from_barycentric_set", "hausdorff_distance", "hutchinson_step",
    "init_session", "load_example", "map_contractivity",
    "minimal_canonical_simplex", "parse_ifs", "ppm_bytes", "rasterize",
    "retarget_map", "serialize_ifs", "simplex_for_ifs", "svg_text",
    "system_contractivity", "to_barycentric", "to_barycentric_set",
    "window_to_world", "world_to_window", "world_to_window_array",
]
