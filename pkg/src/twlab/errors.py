"""Shared exception types."""


class ResourceLimitError(Exception):
    """An operation exceeded its configured size or search cap.

    Raised instead of silently truncating; the message names the cap.
    """
