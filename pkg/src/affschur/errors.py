"""Shared exception types."""


class DomainError(ValueError):
    """Input is structurally valid but outside the mathematical domain
    (segment longer than the window, non-dominant tuple, degree mismatch)."""


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds the documented enumeration bounds."""


# Documented bounds: exhaustive symmetric-group work is kept to r <= 6,
# and window-module (Schur image) work to r <= 4, n <= 4.
MAX_HECKE_RANK = 6
MAX_SCHUR_RANK = 4
MAX_SCHUR_WINDOW = 4


def check_hecke_rank(r: int) -> None:
    if not 0 <= r <= MAX_HECKE_RANK:
        raise ResourceLimitError(
            "rank %d outside supported range 0..%d" % (r, MAX_HECKE_RANK)
        )


def check_schur_bounds(n: int, r: int) -> None:
    if not 0 <= r <= MAX_SCHUR_RANK:
        raise ResourceLimitError(
            "rank %d outside supported range 0..%d for window modules"
            % (r, MAX_SCHUR_RANK)
        )
    if not 1 <= n <= MAX_SCHUR_WINDOW:
        raise ResourceLimitError(
            "window size %d outside supported range 1..%d"
            % (n, MAX_SCHUR_WINDOW)
        )
