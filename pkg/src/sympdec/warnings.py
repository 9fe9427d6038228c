from __future__ import annotations


class ReferenceMismatchWarning(UserWarning):
    """A computed result differs from a published reference value."""
