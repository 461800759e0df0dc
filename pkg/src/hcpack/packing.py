"""Finite configurations of lattice balls and their contact graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .hexlattice import POINT_GROUP, HexCoord, SymmetryOp, pair_form, CONTACT_FORM


@dataclass(frozen=True)
class Configuration:
    """Ordered ball centres; position ``t`` holds ball ``F(t+1)``."""

    centers: tuple[HexCoord, ...] = ()

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "Configuration":
        return cls(tuple(HexCoord(*map(int, p)) for p in points))

    def __len__(self) -> int:
        return len(self.centers)

    def __iter__(self) -> Iterator[HexCoord]:
        return iter(self.centers)

    def __getitem__(self, t: int) -> HexCoord:
        return self.centers[t]

    def apply(self, op: SymmetryOp) -> "Configuration":
        return Configuration(tuple(op(p) for p in self.centers))


@dataclass(frozen=True)
class DuplicateCenter:
    """Two balls share a centre; indices are 1-based."""

    indices: tuple[int, int]
    center: HexCoord

    def __str__(self) -> str:
        a, b = self.indices
        return f"balls F{a} and F{b} share center {list(self.center)}"


class InvalidConfiguration(ValueError):
    def __init__(self, errors: Sequence[DuplicateCenter]):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


@dataclass(frozen=True)
class ContactGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a - 1] += 1
            deg[b - 1] += 1
        return deg


def validate(cfg: Configuration) -> list[DuplicateCenter]:
    """Return every duplicate-centre problem; an empty list means valid."""
    first_seen: dict[HexCoord, int] = {}
    errors = []
    for t, p in enumerate(cfg.centers, start=1):
        if p in first_seen:
            errors.append(DuplicateCenter((first_seen[p], t), p))
        else:
            first_seen[p] = t
    return errors


def build_contact_graph(cfg: Configuration) -> ContactGraph:
    errors = validate(cfg)
    if errors:
        raise InvalidConfiguration(errors)
    pts = cfg.centers
    edges = tuple(
        (a + 1, b + 1)
        for a, b in combinations(range(len(pts)), 2)
        if pair_form(pts[a], pts[b]) == CONTACT_FORM
    )
    return ContactGraph(len(pts), edges)


def contact_count(cfg: Configuration) -> int:
    return build_contact_graph(cfg).count


def _pinned(points: Iterable[HexCoord]) -> tuple[tuple[int, int, int], ...]:
    # sorted (k, j, i) triples, translated so the first one is (k % 2, 0, 0)
    keys = sorted((p[2], p[1], p[0]) for p in points)
    if not keys:
        return ()
    k0, j0, i0 = keys[0]
    dk = k0 - k0 % 2
    return tuple((k - dk, j - j0, i - i0) for k, j, i in keys)


def canonicalize(cfg: Configuration) -> Configuration:
    """Orbit-minimal representative under lattice symmetries and translations.

    Translations are arbitrary inside a layer and by even numbers of layers
    vertically, so the parity pattern of ``k`` is preserved. The result lists
    centres sorted by ``(k, j, i)`` and starts at ``[0, 0, 0]`` or
    ``[0, 0, 1]``.
    """
    best = min(_pinned(op(p) for p in cfg.centers) for op in POINT_GROUP)
    return Configuration(tuple(HexCoord(i, j, k) for k, j, i in best))
