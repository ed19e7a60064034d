"""Exception hierarchy shared by all modules.

The split matters for the CLI exit-code contract: usage problems exit 2,
resource caps exit 3, and any :class:`MathCheckError` (a failed internal
mathematical assertion, never to be silently adjusted) exits 1.
"""


class RayBundlesError(Exception):
    """Base class for every error raised by this package."""


class UsageError(RayBundlesError):
    """Bad configuration or arguments (CLI exit code 2)."""


class VertexCapExceeded(RayBundlesError):
    """Ball construction would exceed the configured vertex cap (exit 3)."""


class NotCertifiedError(RayBundlesError):
    """An in-ball distance was used where a certified distance is required."""


class TruncationError(RayBundlesError):
    """A ladder coordinate lies outside the materialized truncation."""


class MarginError(RayBundlesError):
    """A window or target family is too close to the boundary to be trusted."""


class MathCheckError(RayBundlesError):
    """A mathematical self-check failed; results must not be used (exit 1)."""


class StabilizationError(MathCheckError):
    """Ray-bundle membership differed between two consecutive target margins."""


class ConfinementError(MathCheckError):
    """A ray-bundle member fell outside the embedded ladder."""


class StructuralLadderError(MathCheckError):
    """An expected ladder adjacency or relator loop is missing from the ball."""
