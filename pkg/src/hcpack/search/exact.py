"""Exact maximum-contact search inside a window.

The search is include/exclude branch-and-bound over window sites. Each node
holds a placed set ``S`` and an undecided candidate set ``P``; the branching
site is the candidate touching ``S`` most often, so the include branch grows
the cluster through contacts first. Completeness does not depend on
connectivity: the exclude branch keeps every subset reachable.

Pruning uses ``min(simple, tight)`` where, with ``r`` balls still to place,

* simple: ``e(S) + sum_{t<r} min(12, |S| + t)``
* tight:  ``e(S) + (r largest contact counts to S over P) + g(r)`` with
  ``g(r)`` the proved in-window optimum for ``r`` balls.

Symmetry: the lowest-indexed placed site must be minimal in its orbit under
the window's stabilizer. Any optimal set has an image satisfying that, so the
optimum and the canonical witness set are unchanged.
"""

from __future__ import annotations

import heapq
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
from typing import Callable, Optional

from ..hexlattice import COORDINATION, CONTACT_FORM, HexCoord, Window, enum_window, pair_form
from ..packing import Configuration, canonicalize
from ._graph import SiteGraph, site_graph
from .model import OPTIMAL_IN_WINDOW, SearchIncomplete, SearchParams, SearchResult

BOUNDS = ("combined", "simple", "tight")

PruneHook = Callable[[list[HexCoord], list[HexCoord], int, int], None]

_CHECK_EVERY = 4096


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _BranchAndBound:
    def __init__(
        self,
        graph: SiteGraph,
        n: int,
        profile: list[int],
        *,
        bound: str = "combined",
        all_witnesses: bool = True,
        deadline: Optional[float] = None,
        on_prune: Optional[PruneHook] = None,
    ):
        self.graph = graph
        self.n = n
        self.profile = profile
        self.bound = bound
        self.all_witnesses = all_witnesses
        self.deadline = deadline
        self.on_prune = on_prune
        self.best = -1
        self.witnesses: dict[Configuration, tuple[int, ...]] = {}
        self.nodes = 0

    def seed_incumbent(self, count: int) -> None:
        # a known achievable count; leaves scoring at least this are still recorded
        self.best = max(self.best, count)

    def run_root(self, v: int) -> None:
        full = (1 << len(self.graph)) - 1
        above = full & ~((1 << (v + 1)) - 1)
        self._extend(1 << v, 1, 0, above)

    def _upper_bound(self, size: int, edges: int, r: int, gains: list[int]) -> int:
        simple = edges + sum(min(COORDINATION, size + t) for t in range(r))
        if self.bound == "simple":
            return simple
        tight = edges + sum(heapq.nlargest(r, gains)) + self.profile[r]
        if self.bound == "tight":
            return tight
        return min(simple, tight)

    def _record(self, mask: int, edges: int) -> None:
        if edges > self.best:
            self.best = edges
            self.witnesses = {}
        if edges < self.best:
            return
        chosen = tuple(_bits(mask))
        canon = canonicalize(Configuration(tuple(self.graph.sites[v] for v in chosen)))
        prev = self.witnesses.get(canon)
        if prev is None or chosen < prev:
            self.witnesses[canon] = chosen

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SearchIncomplete(self.best, self.nodes)

    def _prunes(self, ub: int) -> bool:
        if ub < self.best:
            return True
        return not self.all_witnesses and bool(self.witnesses) and ub <= self.best

    def _extend(self, placed: int, size: int, edges: int, cand: int) -> None:
        self._tick()
        r = self.n - size
        if r == 0:
            self._record(placed, edges)
            return
        adj = self.graph.adj
        while cand.bit_count() >= r:
            verts = list(_bits(cand))
            gains = [(adj[v] & placed).bit_count() for v in verts]
            ub = self._upper_bound(size, edges, r, gains)
            if self._prunes(ub):
                if self.on_prune is not None:
                    self.on_prune(
                        [self.graph.sites[v] for v in _bits(placed)],
                        [self.graph.sites[v] for v in verts],
                        ub,
                        self.best,
                    )
                return
            top = max(range(len(verts)), key=lambda t: (gains[t], -verts[t]))
            v = verts[top]
            self._extend(placed | (1 << v), size + 1, edges + gains[top], cand & ~(1 << v))
            cand &= ~(1 << v)
            self._tick()


def _root_sites(graph: SiteGraph, use_symmetry: bool) -> list[int]:
    if not use_symmetry:
        return list(range(len(graph)))
    perms = graph.stabilizer()
    return [v for v in range(len(graph)) if all(p[v] >= v for p in perms)]


_PROFILES: dict[Window, list[int]] = {}


def window_profile(window: Window, upto: int, deadline: Optional[float] = None) -> list[int]:
    """``g[r]`` = proved in-window maximum contact count for ``r`` balls, r <= upto."""
    prof = _PROFILES.setdefault(window, [0, 0])
    graph = site_graph(window)
    while len(prof) <= min(upto, len(graph)):
        r = len(prof)
        bb = _BranchAndBound(graph, r, prof, all_witnesses=False, deadline=deadline)
        bb.seed_incumbent(prof[-1] + 1)
        for v in _root_sites(graph, True):
            bb.run_root(v)
        prof.append(bb.best)
    return prof


def _solve_subtree(args) -> tuple[int, dict, int]:
    window, n, profile, seed_count, v, bound, all_witnesses, deadline = args
    bb = _BranchAndBound(
        site_graph(window), n, profile, bound=bound, all_witnesses=all_witnesses,
        deadline=deadline,
    )
    bb.seed_incumbent(seed_count)
    bb.run_root(v)
    return bb.best, bb.witnesses, bb.nodes


def exact_max_contacts(
    params: SearchParams,
    *,
    use_symmetry: bool = True,
    bound: str = "combined",
    all_witnesses: bool = True,
    on_prune: Optional[PruneHook] = None,
) -> SearchResult:
    """Proved maximum contact count over all ``n``-subsets of the window.

    With ``all_witnesses`` every optimal subset is visited and the witness list
    holds all of their canonical forms, which makes it independent of the
    thread schedule. Raises :class:`SearchIncomplete` if ``params.budget``
    runs out first.
    """
    if bound not in BOUNDS:
        raise ValueError(f"unknown bound {bound!r}; choose from {BOUNDS}")
    start = time.monotonic()
    deadline = None if params.budget is None else start + params.budget
    window, n = params.window, params.n
    graph = site_graph(window)
    profile = window_profile(window, n - 1, deadline)
    # n - 1 balls plus one touching ball is always achievable in a connected window
    seed_count = profile[n - 1] + 1 if n >= 2 else 0
    roots = _root_sites(graph, use_symmetry)

    if params.threads > 1 and on_prune is None and len(roots) > 1:
        jobs = [(window, n, profile, seed_count, v, bound, all_witnesses, deadline) for v in roots]
        with ProcessPoolExecutor(max_workers=params.threads) as pool:
            parts = list(pool.map(_solve_subtree, jobs))
        best = max(p[0] for p in parts)
        nodes = sum(p[2] for p in parts)
        witnesses: dict[Configuration, tuple[int, ...]] = {}
        for part_best, part_wit, _ in parts:
            if part_best != best:
                continue
            for canon, chosen in part_wit.items():
                if canon not in witnesses or chosen < witnesses[canon]:
                    witnesses[canon] = chosen
    else:
        bb = _BranchAndBound(
            graph, n, profile, bound=bound, all_witnesses=all_witnesses,
            deadline=deadline, on_prune=on_prune,
        )
        bb.seed_incumbent(seed_count)
        for v in roots:
            bb.run_root(v)
        best, witnesses, nodes = bb.best, bb.witnesses, bb.nodes

    ordered = sorted(witnesses, key=lambda c: [p.sort_key() for p in c])
    placement = Configuration(tuple(graph.sites[v] for v in witnesses[ordered[0]]))
    return SearchResult(
        best_count=best,
        witnesses=tuple(ordered),
        status=OPTIMAL_IN_WINDOW,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
        algorithm="exact",
        configuration=placement,
        provenance={
            "window": str(window),
            "bound": bound,
            "symmetry": use_symmetry,
            "all_witnesses": all_witnesses,
        },
    )


NAIVE_CAP = 10**7


def naive_oracle(n: int, window: Window, cap: int = NAIVE_CAP) -> int:
    """Maximum contact count by scoring every ``n``-subset of the window.

    No pruning, no symmetry, no connectivity assumption; adjacency comes
    straight from :func:`pair_form`.
    """
    sites = enum_window(window)
    if not 1 <= n <= len(sites):
        raise ValueError(f"need 1 <= n <= {len(sites)}, got {n}")
    total = comb(len(sites), n)
    if total > cap:
        raise ValueError(f"{total} subsets exceed the enumeration cap {cap}")
    m = len(sites)
    touch = [
        [pair_form(sites[a], sites[b]) == CONTACT_FORM for b in range(m)] for a in range(m)
    ]
    best = 0
    for subset in combinations(range(m), n):
        count = sum(touch[a][b] for a, b in combinations(subset, 2))
        if count > best:
            best = count
    return best
