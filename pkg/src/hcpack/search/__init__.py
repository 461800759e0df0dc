"""Maximum-contact search: exact branch-and-bound and heuristics."""

from .exact import exact_max_contacts, naive_oracle, window_profile
from .heuristics import anneal, greedy_grow, local_maximality_check
from .model import (
    HEURISTIC,
    OPTIMAL_IN_WINDOW,
    SearchIncomplete,
    SearchParams,
    SearchResult,
)


def run(params: SearchParams) -> SearchResult:
    """Dispatch on ``params.algorithm``."""
    if params.algorithm == "exact":
        return exact_max_contacts(params)
    if params.algorithm == "greedy":
        return greedy_grow(params)
    return anneal(params)


__all__ = [
    "HEURISTIC",
    "OPTIMAL_IN_WINDOW",
    "SearchIncomplete",
    "SearchParams",
    "SearchResult",
    "anneal",
    "exact_max_contacts",
    "greedy_grow",
    "local_maximality_check",
    "naive_oracle",
    "run",
    "window_profile",
]
