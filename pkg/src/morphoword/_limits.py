import os

from .errors import EnumerationLimitError

DEFAULT_MAX_CELLS = 10_000_000


def max_cells():
    """Total enumeration size cap, overridable through ``MORPHOWORD_MAX_CELLS``."""
    raw = os.environ.get("MORPHOWORD_MAX_CELLS")
    if not raw:
        return DEFAULT_MAX_CELLS
    value = int(raw)
    if value <= 0:
        raise ValueError("MORPHOWORD_MAX_CELLS must be positive")
    return value


def check_cells(cells, limit=None):
    limit = max_cells() if limit is None else limit
    if cells > limit:
        raise EnumerationLimitError(cells, limit)
