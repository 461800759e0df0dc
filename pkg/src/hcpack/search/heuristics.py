"""Greedy growth, simulated annealing and a single-move local optimality audit."""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from ..hexlattice import HexCoord, Window
from ..packing import Configuration, canonicalize, validate
from ._graph import SiteGraph, site_graph
from .model import HEURISTIC, SearchParams, SearchResult

DEFAULT_T_START = 1.5
DEFAULT_T_END = 0.08
DEFAULT_STEPS_PER_BALL = 4000
# probability of proposing a uniformly random empty site instead of one next to the cluster
RANDOM_SITE_RATE = 0.02
_CHECK_EVERY = 512


def _rng(seed: int, restart: int) -> random.Random:
    return random.Random(f"hcpack:{seed}:{restart}")


def _greedy_fill(
    graph: SiteGraph, n: int, chosen: list[int], rng: Optional[random.Random]
) -> list[int]:
    """Add sites until ``n`` are chosen, always taking a site with the most contacts.

    Ties go to the site nearest the cluster's centroid, then to the lowest site
    index, or to a random pick among the remaining ties when ``rng`` is given.
    """
    chosen = list(chosen)
    inset = [False] * len(graph)
    touch = [0] * len(graph)
    sx = sy = sz = 0.0
    for v in chosen:
        inset[v] = True
        c = graph.cart[v]
        sx, sy, sz = sx + c.x, sy + c.y, sz + c.z
        for u in graph.nbrs[v]:
            touch[u] += 1
    while len(chosen) < n:
        frontier = [v for v in range(len(graph)) if not inset[v] and touch[v] > 0]
        if not frontier:
            frontier = [v for v in range(len(graph)) if not inset[v]]
        most = max(touch[v] for v in frontier)
        ties = [v for v in frontier if touch[v] == most]
        if chosen:
            m = len(chosen)
            cx, cy, cz = sx / m, sy / m, sz / m

            def spread(v: int) -> float:
                c = graph.cart[v]
                return round((c.x - cx) ** 2 + (c.y - cy) ** 2 + (c.z - cz) ** 2, 9)

            closest = min(spread(v) for v in ties)
            ties = [v for v in ties if spread(v) == closest]
        v = rng.choice(ties) if rng is not None else ties[0]
        chosen.append(v)
        inset[v] = True
        c = graph.cart[v]
        sx, sy, sz = sx + c.x, sy + c.y, sz + c.z
        for u in graph.nbrs[v]:
            touch[u] += 1
    return chosen


def _indices(graph: SiteGraph, cfg: Configuration) -> list[int]:
    if validate(cfg):
        raise ValueError("configuration has duplicate centers")
    try:
        return [graph.index[p] for p in cfg]
    except KeyError as exc:
        raise ValueError(f"site {list(exc.args[0])} lies outside window {graph.window}") from None


def _greedy_restart(graph: SiteGraph, params: SearchParams, restart: int) -> list[int]:
    if params.initial is not None:
        seed_set = _indices(graph, params.initial)
        if len(seed_set) > params.n:
            raise ValueError(f"initial configuration has more than n={params.n} balls")
    elif restart == 0:
        seed_set = [graph.center_site()]
    else:
        seed_set = [_rng(params.seed, restart).randrange(len(graph))]
    rng = None if restart == 0 else _rng(params.seed, restart)
    return _greedy_fill(graph, params.n, seed_set, rng)


def _result(
    graph: SiteGraph,
    runs: list[list[int]],
    algorithm: str,
    nodes: int,
    start: float,
    provenance: dict,
    truncated: bool = False,
) -> SearchResult:
    counts = [graph.edges_within(r) for r in runs]
    best = max(counts)
    witnesses: dict[Configuration, None] = {}
    placement = None
    for run, count in zip(runs, counts):
        if count != best:
            continue
        cfg = Configuration(tuple(graph.sites[v] for v in run))
        if placement is None:
            placement = cfg
        witnesses.setdefault(canonicalize(cfg))
    ordered = sorted(witnesses, key=lambda c: [p.sort_key() for p in c])
    return SearchResult(
        best_count=best,
        witnesses=tuple(ordered),
        status=HEURISTIC,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
        algorithm=algorithm,
        configuration=placement,
        provenance=provenance,
        truncated=truncated,
    )


def greedy_grow(params: SearchParams) -> SearchResult:
    """Best of ``params.restarts`` greedy growths.

    Restart 0 starts from ``params.initial`` (grown to ``n`` balls) or from the
    site nearest the window centre and breaks ties by site order; later
    restarts start from a seeded random site and break ties randomly.
    """
    start = time.monotonic()
    graph = site_graph(params.window)
    restarts = 1 if params.initial is not None else params.restarts
    runs = [_greedy_restart(graph, params, r) for r in range(restarts)]
    return _result(
        graph, runs, "greedy", sum(len(r) for r in runs), start,
        {"window": str(params.window), "seed": params.seed, "restarts": restarts},
    )


def _anneal_run(
    graph: SiteGraph,
    init: list[int],
    steps: int,
    rng: random.Random,
    t_start: float,
    t_end: float,
    deadline: Optional[float],
) -> tuple[list[int], int, bool]:
    """Anneal one configuration; returns (best placement, steps done, truncated)."""
    m = len(graph)
    nbrs = graph.nbrs
    balls = list(init)
    slot = [-1] * m  # position of a site in ``balls`` or -1 if empty
    for t, v in enumerate(balls):
        slot[v] = t
    touch = [0] * m
    for v in balls:
        for u in nbrs[v]:
            touch[u] += 1
    count = sum(touch[v] for v in balls) // 2
    best, best_balls = count, list(balls)
    if steps <= 0 or len(balls) == m:
        return best_balls, 0, False

    cool = (t_end / t_start) ** (1.0 / max(1, steps - 1))
    temp = t_start
    k = len(balls)
    done = 0
    truncated = False
    rand = rng.random
    randrange = rng.randrange
    for done in range(1, steps + 1):
        if deadline is not None and done % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            truncated = True
            done -= 1
            break
        temp *= cool
        # move a loosely bound ball: the worse of two random picks
        a = randrange(k)
        b = randrange(k)
        src = balls[a] if touch[balls[a]] <= touch[balls[b]] else balls[b]
        if rand() < RANDOM_SITE_RATE:
            dst = randrange(m)
        else:
            anchor = nbrs[balls[randrange(k)]]
            if not anchor:
                continue
            dst = anchor[randrange(len(anchor))]
        if slot[dst] >= 0:
            continue
        delta = touch[dst] - touch[src] - (1 if dst in nbrs[src] else 0)
        if delta < 0 and rand() >= math.exp(delta / temp):
            continue
        t = slot[src]
        balls[t] = dst
        slot[dst], slot[src] = t, -1
        for u in nbrs[src]:
            touch[u] -= 1
        for u in nbrs[dst]:
            touch[u] += 1
        count += delta
        if count > best:
            best, best_balls = count, list(balls)
    return best_balls, done, truncated


def _anneal_restart(args) -> tuple[list[int], int, bool]:
    params, restart, steps, t_start, t_end, deadline = args
    graph = site_graph(params.window)
    if params.initial is not None:
        init = _indices(graph, params.initial)
        if len(init) != params.n:
            raise ValueError(f"initial configuration must have exactly n={params.n} balls")
    else:
        init = _greedy_restart(graph, params, restart)
    return _anneal_run(graph, init, steps, _rng(params.seed, restart), t_start, t_end, deadline)


def default_steps(n: int) -> int:
    return DEFAULT_STEPS_PER_BALL * n


def anneal(
    params: SearchParams,
    *,
    t_start: float = DEFAULT_T_START,
    t_end: float = DEFAULT_T_END,
) -> SearchResult:
    """Simulated annealing over single-ball relocations.

    Each restart begins at ``params.initial`` or at a greedy growth and runs
    ``params.steps`` moves (default ``4000 * n``) under geometric cooling from
    ``t_start`` to ``t_end``, accepting a loss ``d`` with probability
    ``exp(d / T)``. The best state seen is kept, so the result never scores
    below its starting point. A zero budget returns the starting points
    untouched; any other budget is only a wall-clock safety cap, and results
    stay reproducible unless it trips (``truncated`` is then set).
    """
    start = time.monotonic()
    graph = site_graph(params.window)
    steps = default_steps(params.n) if params.steps is None else params.steps
    if params.budget == 0:
        steps = 0
    deadline = None if not params.budget else start + params.budget
    jobs = [
        (params, r, steps, t_start, t_end, deadline) for r in range(params.restarts)
    ]
    if params.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=params.threads) as pool:
            outcomes = list(pool.map(_anneal_restart, jobs))
    else:
        outcomes = [_anneal_restart(job) for job in jobs]
    return _result(
        graph,
        [o[0] for o in outcomes],
        "anneal",
        sum(o[1] for o in outcomes),
        start,
        {
            "window": str(params.window),
            "seed": params.seed,
            "restarts": params.restarts,
            "steps": steps,
            "t_start": t_start,
            "t_end": t_end,
            "cooling": "geometric",
        },
        truncated=any(o[2] for o in outcomes),
    )


def local_maximality_check(
    cfg: Configuration, window: Optional[Window] = None
) -> tuple[bool, Optional[tuple[int, HexCoord, HexCoord, int]]]:
    """Is there a single-ball relocation inside ``window`` that adds contacts?

    ``window`` defaults to the configuration's bounding box grown by one site.
    Returns ``(True, None)`` for a local optimum, otherwise ``(False, move)``
    with ``move = (ball, from, to, gain)``, ``ball`` 1-based, for the largest gain.
    """
    if window is None:
        window = Window.around(cfg, 1)
    graph = site_graph(window)
    placed = _indices(graph, cfg)
    occupied = set(placed)
    touch = [0] * len(graph)
    for v in placed:
        for u in graph.nbrs[v]:
            touch[u] += 1
    best_move = None
    for t, src in enumerate(placed):
        src_nbrs = set(graph.nbrs[src])
        for dst in range(len(graph)):
            if dst in occupied:
                continue
            gain = touch[dst] - (dst in src_nbrs) - touch[src]
            if gain > 0 and (best_move is None or gain > best_move[3]):
                best_move = (t + 1, graph.sites[src], graph.sites[dst], gain)
    return best_move is None, best_move
