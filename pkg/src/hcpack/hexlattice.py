"""Hexagonal close packed lattice in integer layer coordinates.

A site ``[i, j, k]`` sits in layer ``k``. Inside a layer the centres form the
planar triangular grid spanned by ``(2, 0)`` and ``(1, sqrt 3)``; odd layers are
shifted by ``(1, sqrt(1/3))`` and consecutive layers are ``sqrt(8/3)`` apart, so
balls of radius 1 in neighbouring layers touch (A-B-A-B stacking).

All tangency decisions go through :func:`pair_form`, an integer quadratic form
equal to three times the squared Cartesian distance, so no tolerance is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, NamedTuple, Sequence

SQRT3 = math.sqrt(3.0)
LAYER_HEIGHT = math.sqrt(8.0 / 3.0)

#: Value of :func:`pair_form` for two touching unit balls (distance 2).
CONTACT_FORM = 12
#: Lattice kissing number.
COORDINATION = 12


class HexCoord(NamedTuple):
    i: int
    j: int
    k: int

    def sort_key(self) -> tuple[int, int, int]:
        return (self.k, self.j, self.i)


class CartPoint(NamedTuple):
    x: float
    y: float
    z: float


def to_cartesian(p: Sequence[int]) -> CartPoint:
    i, j, k = p
    odd = k % 2
    return CartPoint(2 * i + j + odd, SQRT3 * j + odd / SQRT3, k * LAYER_HEIGHT)


def pair_form(a: Sequence[int], b: Sequence[int]) -> int:
    """Return ``3 * |a - b|**2`` computed exactly in integers."""
    dp = a[2] % 2 - b[2] % 2
    dj = a[1] - b[1]
    dx = 2 * (a[0] - b[0]) + dj + dp
    dy = 3 * dj + dp
    dk = a[2] - b[2]
    return 3 * dx * dx + dy * dy + 8 * dk * dk


def is_contact(a: Sequence[int], b: Sequence[int]) -> bool:
    return pair_form(a, b) == CONTACT_FORM


def _scan_offsets(parity: int) -> tuple[tuple[int, int, int], ...]:
    origin = (0, 0, parity)
    found = []
    for di, dj, dk in product(range(-2, 3), repeat=3):
        if pair_form(origin, (di, dj, parity + dk)) == CONTACT_FORM:
            found.append((di, dj, dk))
    return tuple(sorted(found, key=lambda t: (t[2], t[1], t[0])))


# Offsets to the 12 touching sites, indexed by the parity of k.
NEIGHBOR_OFFSETS: tuple[tuple[tuple[int, int, int], ...], ...] = (
    _scan_offsets(0),
    _scan_offsets(1),
)


def neighbors(p: Sequence[int]) -> list[HexCoord]:
    i, j, k = p
    return [HexCoord(i + di, j + dj, k + dk) for di, dj, dk in NEIGHBOR_OFFSETS[k % 2]]


@dataclass(frozen=True)
class Window:
    """Box of sites ``origin + [0, I) x [0, J) x [0, K)``."""

    I: int
    J: int
    K: int
    origin: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self) -> None:
        if min(self.I, self.J, self.K) <= 0:
            raise ValueError(f"window extents must be positive, got {self.I}x{self.J}x{self.K}")
        object.__setattr__(self, "origin", tuple(int(c) for c in self.origin))

    @classmethod
    def parse(cls, text: str) -> "Window":
        """Parse ``"IxJxK"``."""
        parts = text.lower().split("x")
        if len(parts) != 3:
            raise ValueError(f"window must look like IxJxK, got {text!r}")
        try:
            extents = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"window must look like IxJxK, got {text!r}") from None
        return cls(*extents)

    @classmethod
    def around(cls, points: Iterable[Sequence[int]], margin: int = 1) -> "Window":
        """Bounding box of ``points`` grown by ``margin`` sites on every side."""
        pts = list(points)
        if not pts:
            raise ValueError("cannot bound an empty point set")
        lo = [min(p[a] for p in pts) - margin for a in range(3)]
        hi = [max(p[a] for p in pts) + margin for a in range(3)]
        return cls(hi[0] - lo[0] + 1, hi[1] - lo[1] + 1, hi[2] - lo[2] + 1, tuple(lo))

    @property
    def size(self) -> int:
        return self.I * self.J * self.K

    def __contains__(self, p: object) -> bool:
        i, j, k = p  # type: ignore[misc]
        oi, oj, ok = self.origin
        return 0 <= i - oi < self.I and 0 <= j - oj < self.J and 0 <= k - ok < self.K

    def __str__(self) -> str:
        return f"{self.I}x{self.J}x{self.K}"


def enum_window(w: Window) -> list[HexCoord]:
    """All sites of ``w`` in lexicographic ``(k, j, i)`` order."""
    oi, oj, ok = w.origin
    return [
        HexCoord(oi + i, oj + j, ok + k)
        for k in range(w.K)
        for j in range(w.J)
        for i in range(w.I)
    ]


# --- symmetries -------------------------------------------------------------
#
# The point operations below all fix the site [0, 0, 0] and map the set of odd
# layer sites onto itself; together with in-layer translations and vertical
# translations by two layers they generate the subgroup used for canonical
# forms. Screw-axis symmetries (which swap the two stacking positions) are left
# out on purpose.


def _rotate120(p: HexCoord) -> HexCoord:
    i, j, k = p
    return HexCoord(-i - j - (k % 2), i, k)


def _mirror(p: HexCoord) -> HexCoord:
    return HexCoord(p[1], p[0], p[2])


def _negate_layer(p: HexCoord) -> HexCoord:
    return HexCoord(p[0], p[1], -p[2])


def _identity(p: HexCoord) -> HexCoord:
    return HexCoord(*p)


@dataclass(frozen=True)
class SymmetryOp:
    label: str
    action: Callable[[HexCoord], HexCoord] = field(repr=False, compare=False)

    def __call__(self, p: Sequence[int]) -> HexCoord:
        return self.action(HexCoord(*p))

    def then(self, other: "SymmetryOp") -> "SymmetryOp":
        """Composition: apply ``self`` first, then ``other``."""
        return SymmetryOp(f"{other.label}*{self.label}", lambda p: other.action(self.action(p)))


def translation(di: int, dj: int, dk: int = 0) -> SymmetryOp:
    if dk % 2:
        raise ValueError("vertical translations must be by an even number of layers")
    return SymmetryOp(
        f"shift({di},{dj},{dk})", lambda p: HexCoord(p[0] + di, p[1] + dj, p[2] + dk)
    )


IDENTITY = SymmetryOp("identity", _identity)
ROTATE_120 = SymmetryOp("rotate120", _rotate120)
MIRROR = SymmetryOp("mirror", _mirror)
NEGATE_LAYER = SymmetryOp("negate_k", _negate_layer)

GENERATORS: tuple[SymmetryOp, ...] = (
    translation(1, 0),
    translation(0, 1),
    translation(0, 0, 2),
    NEGATE_LAYER,
    ROTATE_120,
    MIRROR,
)


def _point_group() -> tuple[SymmetryOp, ...]:
    ops = []
    for r, m, z in product(range(3), range(2), range(2)):
        op = IDENTITY
        for _ in range(r):
            op = op.then(ROTATE_120)
        if m:
            op = op.then(MIRROR)
        if z:
            op = op.then(NEGATE_LAYER)
        ops.append(SymmetryOp(f"r{r}m{m}z{z}", op.action))
    return tuple(ops)


#: The 12 site-fixing operations generated by rotation, mirror and layer negation.
POINT_GROUP: tuple[SymmetryOp, ...] = _point_group()


def validate_symmetry(op: SymmetryOp, sample: Iterable[tuple[Sequence[int], Sequence[int]]]) -> bool:
    pairs = list(sample)
    if not pairs:
        raise ValueError("sample must be non-empty")
    return all(pair_form(op(a), op(b)) == pair_form(a, b) for a, b in pairs)
