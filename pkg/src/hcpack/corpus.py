"""The eight reference configurations for 20 to 27 balls, plus file formats.

The coordinate rows and contact lists below are transcribed verbatim from the
published tables; ``claimed_total`` comes from the summary table. Nothing here
is trusted: :func:`verify_entry` recomputes the contact graph and diffs it
against the transcription.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .hexlattice import HexCoord
from .packing import Configuration, build_contact_graph, validate

Edge = tuple[int, int]

#: Summary-table values of the maximal contact number.
SUMMARY_TABLE: dict[int, int] = {20: 64, 21: 67, 22: 72, 23: 76, 24: 80, 25: 84, 26: 87, 27: 90}


class _Table(NamedTuple):
    i: str
    j: str
    k: str
    contacts: str
    total_line: str


_TABLES: dict[int, _Table] = {
    20: _Table(
        i="2 1 2 0 1 2 1 2 0 1 2 0 1 2 2 1 2 0 1 2",
        j="0 1 1 2 2 2 0 0 1 1 1 2 2 2 0 1 1 2 2 2",
        k="0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 2 2 2 2",
        contacts="""
            1-2 1-3 1-7 1-8 2-3 2-4 2-5 2-7 2-9 2-10 3-5 3-6 3-8 3-10 3-11 4-5 4-9 4-12
            5-6 5-10 5-12 5-13 6-11 6-13 6-14 7-8 7-9 7-10 7-15 7-16 8-10 8-11 8-15 8-17
            9-10 9-12 9-16 9-18 10-11 10-12 10-13 10-16 10-17 10-19 11-13 11-14 11-17
            11-20 12-13 12-18 12-19 13-14 13-19 13-20 14-20 15-16 15-17 16-17 16-18
            16-19 17-19 17-20 18-19 19-20
        """,
        total_line="Total: c(20) = 64",
    ),
    21: _Table(
        i="1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 1 2 1 2",
        j="0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 2 1 1 2 2",
        k="0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 2 2 2 2",
        contacts="""
            1-2 1-3 1-4 1-9 1-10 2-4 2-5 2-10 2-11 3-4 3-6 3-9 3-12 4-5 4-6 4-7 4-10
            4-12 4-13 5-7 5-8 5-11 5-13 5-14 6-7 6-12 6-15 7-8 7-13 7-15 7-16 8-14 8-16
            8-17 9-10 9-12 10-11 10-12 10-13 10-18 11-13 11-14 11-19 12-13 12-15 12-18
            13-14 13-15 13-16 13-18 13-19 13-20 14-16 14-17 14-19 14-21 15-16 15-20
            16-17 16-20 16-21 17-21 18-19 18-20 19-20 19-21 20-21
        """,
        total_line="Total: c(21) = 67",
    ),
    22: _Table(
        i="1 2 0 1 2 0 1 0 1 2 0 1 2 0 1 1 2 0 1 2 0 1",
        j="0 0 1 1 1 2 2 0 0 0 1 1 1 2 2 0 0 1 1 1 2 2",
        k="0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-3 1-4 1-8 1-9 2-4 2-5 2-9 2-10 3-4 3-6 3-8 3-11 4-5 4-6 4-7 4-9 4-11
            4-12 5-7 5-10 5-12 5-13 6-7 6-11 6-14 7-12 7-14 7-15 8-9 8-11 8-16 8-18 9-10
            9-11 9-12 9-16 9-17 9-19 10-12 10-13 10-17 10-20 11-12 11-14 11-18 11-19
            11-21 12-13 12-14 12-15 12-19 12-20 12-22 13-15 13-20 14-15 14-21 14-22
            15-22 16-17 16-18 16-19 17-19 17-20 18-19 18-21 19-20 19-21 19-22 20-22
            21-22
        """,
        total_line="Total: c(22) = 72",
    ),
    23: _Table(
        i="1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 1 2 0 1 2 0 1",
        j="0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 0 0 1 1 1 2 2",
        k="0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-3 1-4 1-9 1-10 2-4 2-5 2-10 2-11 3-4 3-6 3-9 3-12 4-5 4-6 4-7 4-10
            4-12 4-13 5-7 5-8 5-11 5-13 5-14 6-7 6-12 6-15 7-8 7-13 7-15 7-16 8-14 8-16
            9-10 9-12 9-17 9-19 10-11 10-12 10-13 10-17 10-18 10-20 11-13 11-14 11-18
            11-21 12-13 12-15 12-19 12-20 12-22 13-14 13-15 13-16 13-20 13-21 13-23
            14-16 14-21 15-16 15-22 15-23 16-23 17-18 17-19 17-20 18-20 18-21 19-20
            19-22 20-21 20-22 20-23 21-23 22-23
        """,
        total_line="Total: c(23) = 76",
    ),
    24: _Table(
        i="1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 1 2 0 1 2 0 1 2",
        j="0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 0 0 1 1 1 2 2 2",
        k="0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-3 1-4 1-9 1-10 2-4 2-5 2-10 2-11 3-4 3-6 3-9 3-12 4-5 4-6 4-7 4-10
            4-12 4-13 5-7 5-8 5-11 5-13 5-14 6-7 6-12 6-15 7-8 7-13 7-15 7-16 8-14 8-16
            9-10 9-12 9-17 9-19 10-11 10-12 10-13 10-17 10-18 10-20 11-13 11-14 11-18
            11-21 12-13 12-15 12-19 12-20 12-22 13-14 13-15 13-16 13-20 13-21 13-23
            14-16 14-21 14-24 15-16 15-22 15-23 16-23 16-24 17-18 17-19 17-20 18-20
            18-21 19-20 19-22 20-21 20-22 20-23 21-23 21-24 22-23 23-24
        """,
        total_line="Total: c(24) = y",
    ),
    25: _Table(
        i="1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 1 2 0 1 2 0 1 2",
        j="0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 2 0 0 1 1 1 2 2 2",
        k="0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-3 1-4 1-9 1-10 2-4 2-5 2-10 2-11 3-4 3-6 3-9 3-12 4-5 4-6 4-7 4-10
            4-12 4-13 5-7 5-8 5-11 5-13 5-14 6-7 6-12 6-15 7-8 7-13 7-15 7-16 8-14 8-16
            8-17 9-10 9-12 9-18 9-20 10-11 10-12 10-13 10-18 10-19 10-21 11-13 11-14
            11-19 11-22 12-13 12-15 12-20 12-21 12-23 13-14 13-15 13-16 13-21 13-22
            13-24 14-16 14-17 14-22 14-25 15-16 15-23 15-24 16-17 16-24 16-25 17-25
            18-19 18-20 18-21 19-21 19-22 20-21 20-23 21-22 21-23 21-24 22-24 22-25
            23-24 24-25
        """,
        total_line="Total: c(25) = 84",
    ),
    26: _Table(
        i="0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 1 2 0 1 2 0 1 2",
        j="0 0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 2 0 0 1 1 1 2 2 2",
        k="0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-4 1-10 2-3 2-4 2-5 2-10 2-11 3-5 3-6 3-11 3-12 4-5 4-7 4-10 4-13 5-6
            5-7 5-8 5-11 5-13 5-14 6-8 6-9 6-12 6-14 6-15 7-8 7-13 7-16 8-9 8-14 8-16
            8-17 9-15 9-17 9-18 10-11 10-13 10-19 10-21 11-12 11-13 11-14 11-19 11-20
            11-22 12-14 12-15 12-20 12-23 13-14 13-16 13-21 13-22 13-24 14-15 14-16
            14-17 14-22 14-23 14-25 15-17 15-18 15-23 15-26 16-17 16-24 16-25 17-18
            17-25 17-26 18-26 19-20 19-21 19-22 20-22 20-23 21-22 21-24 22-23 22-24
            22-25 23-25 23-26 24-25 25-26
        """,
        total_line="Total: c(26) = 87",
    ),
    27: _Table(
        i="0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2",
        j="0 0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 2 0 0 0 1 1 1 2 2 2",
        k="0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2 2 2",
        contacts="""
            1-2 1-4 1-10 2-3 2-4 2-5 2-10 2-11 3-5 3-6 3-11 3-12 4-5 4-7 4-10 4-13 5-6
            5-7 5-8 5-11 5-13 5-14 6-8 6-9 6-12 6-14 6-15 7-8 7-13 7-16 8-9 8-14 8-16
            8-17 9-15 9-17 9-18 10-11 10-13 10-19 10-20 10-22 11-12 11-13 11-14 11-20
            11-21 11-23 12-14 12-15 12-21 12-24 13-14 13-16 13-22 13-23 13-25 14-15
            14-16 14-17 14-23 14-24 14-26 15-17 15-18 15-24 15-27 16-17 16-25 16-26
            17-18 17-26 17-27 18-27 19-20 19-22 20-21 20-22 20-23 21-23 21-24 22-23
            22-25 23-24 23-25 23-26 24-26 24-27 25-26 26-27
        """,
        total_line="Total: c(27) = 90",
    ),
}


@dataclass(frozen=True)
class PaperEntry:
    n: int
    configuration: Configuration
    listed_edges: frozenset[Edge]
    claimed_total: int
    total_line: str

    @property
    def total_line_is_garbled(self) -> bool:
        return not self.total_line.endswith(f"= {self.claimed_total}")


def _build_entry(n: int, table: _Table) -> PaperEntry:
    rows = [list(map(int, r.split())) for r in (table.i, table.j, table.k)]
    cfg = Configuration(tuple(HexCoord(*c) for c in zip(*rows)))
    edges = frozenset(
        (int(a), int(b)) for a, b in re.findall(r"(\d+)-(\d+)", table.contacts)
    )
    return PaperEntry(n, cfg, edges, SUMMARY_TABLE[n], table.total_line)


_ENTRIES = {n: _build_entry(n, t) for n, t in _TABLES.items()}

PAPER_SIZES: tuple[int, ...] = tuple(sorted(_ENTRIES))


def embedded(n: int) -> PaperEntry:
    try:
        return _ENTRIES[n]
    except KeyError:
        raise ValueError(f"no reference configuration for n={n}; available: 20..27") from None


# --- file formats -------------------------------------------------------------


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_configuration(text: str) -> Configuration:
    """Parse ``.hexcfg`` text: one ``i j k`` triple per line, ``#`` comments."""
    centers: list[HexCoord] = []
    seen: dict[HexCoord, int] = {}
    for lineno, tokens in _content_lines(text):
        if len(tokens) != 3:
            raise FormatError(f"expected 3 integers, got {len(tokens)} tokens", lineno)
        p = HexCoord(*_ints(tokens, lineno))
        if p in seen:
            raise FormatError(
                f"duplicate center {list(p)} (also ball F{seen[p]})", lineno
            )
        seen[p] = len(centers) + 1
        centers.append(p)
    return Configuration(tuple(centers))


def serialize_configuration(cfg: Configuration) -> str:
    if validate(cfg):
        raise ValueError("cannot serialize a configuration with duplicate centers")
    return "".join(f"{p.i} {p.j} {p.k}\n" for p in cfg)


def parse_edges(text: str) -> frozenset[Edge]:
    """Parse ``.edges`` text: one ``a b`` pair (1-based, ``a < b``) per line."""
    edges: set[Edge] = set()
    for lineno, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise FormatError(f"expected 2 integers, got {len(tokens)} tokens", lineno)
        a, b = _ints(tokens, lineno)
        if not 1 <= a < b:
            raise FormatError(f"edge must satisfy 1 <= a < b, got {a} {b}", lineno)
        if (a, b) in edges:
            raise FormatError(f"duplicate edge {a} {b}", lineno)
        edges.add((a, b))
    return frozenset(edges)


def serialize_edges(edges: Iterable[Edge]) -> str:
    return "".join(f"{a} {b}\n" for a, b in sorted(edges))


# --- verification -----------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    n: int
    computed_count: int
    claimed_total: int
    listed_count: int
    missing_edges: tuple[Edge, ...]
    extra_edges: tuple[Edge, ...]
    note: str = ""

    @property
    def verdict(self) -> str:
        ok = not self.missing_edges and not self.extra_edges
        ok = ok and self.computed_count == self.claimed_total
        return "exact-match" if ok else "mismatch"

    def format(self) -> str:
        lines = [
            f"n\t{self.n}",
            f"computed_count\t{self.computed_count}",
            f"claimed_total\t{self.claimed_total}",
            f"listed_count\t{self.listed_count}",
            f"missing_edges\t{_edge_list(self.missing_edges)}",
            f"extra_edges\t{_edge_list(self.extra_edges)}",
            f"verdict\t{self.verdict}",
        ]
        if self.note:
            lines.append(f"note\t{self.note}")
        return "\n".join(lines) + "\n"


def _edge_list(edges: tuple[Edge, ...]) -> str:
    return " ".join(f"({a},{b})" for a, b in edges) or "-"


def verify(
    cfg: Configuration,
    listed_edges: Iterable[Edge],
    claimed_total: int | None = None,
    note: str = "",
) -> VerificationReport:
    """Diff the computed contact graph of ``cfg`` against ``listed_edges``.

    ``claimed_total`` defaults to the number of listed edges.
    """
    listed = frozenset(listed_edges)
    computed = frozenset(build_contact_graph(cfg).edges)
    return VerificationReport(
        n=len(cfg),
        computed_count=len(computed),
        claimed_total=len(listed) if claimed_total is None else claimed_total,
        listed_count=len(listed),
        missing_edges=tuple(sorted(listed - computed)),
        extra_edges=tuple(sorted(computed - listed)),
        note=note,
    )


def verify_entry(e: PaperEntry) -> VerificationReport:
    note = ""
    if e.total_line_is_garbled:
        note = (
            f'source table prints "{e.total_line}"; '
            f"using the summary-table value {e.claimed_total}"
        )
    return verify(e.configuration, e.listed_edges, e.claimed_total, note)
