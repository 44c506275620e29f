"""Exceptions shared by the search kernels and the census layer."""


class GraphTooLargeError(ValueError):
    """Graph exceeds an exact engine's scale limit."""


class SearchTimeout(RuntimeError):
    """Cooperative per-graph time budget expired inside a search loop."""


class CensusOverflowError(RuntimeError):
    """Distinct vertex-set census exceeded its safety cap."""


class TruncatedCensusError(ValueError):
    """Operation refused on a truncated census without an explicit opt-in."""
