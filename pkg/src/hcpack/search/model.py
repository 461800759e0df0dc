from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..hexlattice import Window
from ..packing import Configuration

ALGORITHMS = ("exact", "greedy", "anneal")

OPTIMAL_IN_WINDOW = "optimal-in-window"
HEURISTIC = "heuristic-lower-bound"


class SearchIncomplete(RuntimeError):
    """The exact search ran out of budget before finishing its proof."""

    def __init__(self, best_count: int, nodes: int):
        self.best_count = best_count
        self.nodes = nodes
        super().__init__(
            f"budget exhausted after {nodes} nodes; best so far {best_count} is not proved optimal"
        )


@dataclass(frozen=True)
class SearchParams:
    n: int
    window: Window
    algorithm: str = "exact"
    seed: int = 0
    budget: Optional[float] = None  # wall-clock seconds; None means unlimited
    restarts: int = 8
    initial: Optional[Configuration] = None
    steps: Optional[int] = None  # annealing moves per restart
    threads: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.window.size < self.n:
            raise ValueError(
                f"window {self.window} has {self.window.size} sites, fewer than n={self.n}"
            )
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.budget is not None and self.budget < 0:
            raise ValueError("budget must be non-negative")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.initial is not None:
            outside = [p for p in self.initial if p not in self.window]
            if outside:
                raise ValueError(f"initial configuration leaves window {self.window}: {list(outside[0])}")


@dataclass(frozen=True)
class SearchResult:
    best_count: int
    witnesses: tuple[Configuration, ...]
    status: str
    nodes_explored: int
    elapsed: float
    algorithm: str
    configuration: Configuration
    provenance: dict[str, Any] = field(default_factory=dict)
    truncated: bool = False

    def summary_lines(self) -> list[str]:
        """Deterministic summary (no timing) for reports and file headers."""
        lines = [
            f"algorithm: {self.algorithm}",
            f"best_count: {self.best_count}",
            f"status: {self.status}",
            f"nodes_explored: {self.nodes_explored}",
            f"witnesses: {len(self.witnesses)}",
        ]
        lines.extend(f"{key}: {value}" for key, value in sorted(self.provenance.items()))
        if self.truncated:
            lines.append("truncated: wall-clock budget hit before all steps ran")
        return lines
