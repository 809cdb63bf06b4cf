"""Exception hierarchy for alcove-atlas.

Every error carries a short machine-readable ``code`` so the CLI can map
failures onto stable exit codes and JSON error payloads without string
matching on messages.
"""

from __future__ import annotations


class AtlasError(Exception):
    """Base class for all library errors."""

    code = "error"


class ParameterError(AtlasError):
    """A parameter is out of the domain a function supports."""

    code = "invalid-parameter"


class NotSortedError(AtlasError):
    """A point collection admits no sorted row order."""

    code = "not-sorted"


class NotRepresentableError(AtlasError):
    """A point has no nonnegative integer expansion in the given basis."""

    code = "not-representable"


class LabelDomainError(AtlasError):
    """A labeling was applied outside the domain where it is defined."""

    code = "label-domain"


class SizeLimitError(AtlasError):
    """A predicted output size exceeds the configured guard."""

    code = "size-limit"
