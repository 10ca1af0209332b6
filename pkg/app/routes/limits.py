"""Request-size guard shared by the routes that fold a whole domain"""
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.domain.elements import Family


def require_servable(family: Family, n: int, r: int) -> None:
    """
    Reject folds larger than MAHON_API_MAX_ELEMENTS before any work starts.

    Raises:
        UsageError: the group has too many elements for a request
    """
    if n < 0:
        return  # the service reports the bad n itself
    size = family.group_order(n, r)
    limit = get_settings().api_max_elements
    if size > limit:
        raise UsageError(
            f"{family.value} with n={n}, r={r} has {size} elements; "
            f"requests are limited to {limit} (use the CLI for larger sweeps)"
        )
