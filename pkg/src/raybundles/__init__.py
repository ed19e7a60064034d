"""Finite-scale verification of ray-bundle divergence on ladder subgraphs.

The package models the "bad ladder" (two bi-infinite sides joined by
length-2 rungs with midpoint vertices) both abstractly and as the convex
ladder through the identity in the Cayley graph of
``<p, q, s | s^-2 p s^2 q>``, and measures how the sets of vertices on
geodesic rays toward a ladder end differ between a side vertex and a rung
midpoint: linear growth on the plain ladder, bounded on the cubulated one.
"""

__version__ = "0.1.0"

from .bundles import (
    ConvexityReport,
    EmbeddedLadder,
    GrowthReport,
    RayBundleReport,
    check_convexity,
    locate_ladder,
    symdiff_growth,
    truncated_ray_bundle,
)
from .cayley import (
    DEFAULT_RADIUS,
    DEFAULT_VERTEX_CAP,
    CayleyBall,
    DistanceCert,
    GeodesicPaths,
    build_ball,
    write_edge_list,
)
from .errors import (
    ConfinementError,
    MarginError,
    MathCheckError,
    NotCertifiedError,
    RayBundlesError,
    StabilizationError,
    StructuralLadderError,
    TruncationError,
    UsageError,
    VertexCapExceeded,
)
from .ladder import (
    BOT,
    MID,
    NEG_END,
    POS_END,
    TOP,
    LadderCoord,
    LadderGraph,
    coord,
    ladder_distance,
    ray_bundle_exact,
    sym_diff_exact,
    sym_diff_window_counts,
)
from .slim import BallSpace, LadderSpace, TriangleSample, slim_constant, triple_delta
from .words import (
    FREE_PS,
    GAMMA,
    PresentationSpec,
    apply_gen,
    free_reduce,
    invert,
    multiply,
    parse_presentation,
    q_image,
)

__all__ = [name for name in dir() if not name.startswith("_")]
