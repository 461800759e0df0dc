import dataclasses

import pytest
from hypothesis import given, strategies as st

from hcpack.corpus import (
    PAPER_SIZES,
    SUMMARY_TABLE,
    FormatError,
    embedded,
    parse_configuration,
    parse_edges,
    serialize_configuration,
    serialize_edges,
    verify_entry,
)
from hcpack.hexlattice import HexCoord
from hcpack.packing import Configuration


def test_embedded_examples():
    assert embedded(20).configuration[7] == HexCoord(2, 0, 1)
    assert embedded(20).configuration[0] == HexCoord(2, 0, 0)
    assert embedded(21).claimed_total == 67
    assert embedded(24).claimed_total == 80
    assert embedded(24).total_line == "Total: c(24) = y"
    assert embedded(24).total_line_is_garbled
    assert not embedded(25).total_line_is_garbled


@pytest.mark.parametrize("n", [19, 28, 0])
def test_embedded_rejects_other_sizes(n):
    with pytest.raises(ValueError):
        embedded(n)


@pytest.mark.parametrize("n", PAPER_SIZES)
def test_entry_invariants(n):
    e = embedded(n)
    assert len(e.configuration) == n
    assert e.claimed_total == SUMMARY_TABLE[n]
    assert len(e.listed_edges) == e.claimed_total
    assert all(1 <= a < b <= n for a, b in e.listed_edges)


def test_listed_pair_total():
    assert len(embedded(24).listed_edges) == 80
    assert sum(len(embedded(n).listed_edges) for n in PAPER_SIZES) == 620


@pytest.mark.parametrize("n", PAPER_SIZES)
def test_verify_entry_exact(n):
    report = verify_entry(embedded(n))
    assert report.verdict == "exact-match"
    assert report.computed_count == SUMMARY_TABLE[n]
    assert report.missing_edges == () and report.extra_edges == ()


def test_verify_notes_the_garbled_total():
    assert "c(24) = y" in verify_entry(embedded(24)).note
    assert verify_entry(embedded(20)).note == ""


def test_tampered_entry_mismatches():
    e = embedded(20)
    centers = list(e.configuration.centers)
    centers[0] = HexCoord(5, 5, 0)
    report = verify_entry(dataclasses.replace(e, configuration=Configuration(tuple(centers))))
    assert report.verdict == "mismatch"
    assert report.missing_edges
    assert report.computed_count < 64


def test_verify_detects_wrong_claimed_total():
    e = dataclasses.replace(embedded(22), claimed_total=73)
    assert verify_entry(e).verdict == "mismatch"


def test_parse_examples():
    assert len(parse_configuration("0 0 0\n1 0 0\n")) == 2
    assert parse_configuration("# comment\n0 0 0\n") == Configuration.of([(0, 0, 0)])
    assert parse_configuration("\n  \n-1 2 -3\n")[0] == HexCoord(-1, 2, -3)


@pytest.mark.parametrize(
    "text, line",
    [("0 0\n", 1), ("0 0 0\n# c\n1 x 0\n", 3), ("0 0 0\n0 0 0 0\n", 2), ("0 0 0\n0 0 0\n", 2)],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_configuration(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@pytest.mark.parametrize("n", PAPER_SIZES)
def test_round_trip_paper_configurations(n):
    cfg = embedded(n).configuration
    text = serialize_configuration(cfg)
    assert parse_configuration(text) == cfg
    assert serialize_configuration(parse_configuration(text)) == text


def test_serialize_empty():
    assert serialize_configuration(Configuration()) == ""


triples = st.lists(
    st.tuples(st.integers(-99, 99), st.integers(-99, 99), st.integers(-99, 99)),
    max_size=15,
    unique=True,
)


@given(triples, st.sampled_from(["", "# header\n"]), st.sampled_from([" ", "  ", "\t"]))
def test_serialize_normalizes(points, prefix, sep):
    text = prefix + "".join(sep.join(map(str, p)) + "\n\n" for p in points)
    normal = serialize_configuration(parse_configuration(text))
    assert normal == "".join(f"{i} {j} {k}\n" for i, j, k in points)
    assert serialize_configuration(parse_configuration(normal)) == normal


def test_edges_format():
    text = serialize_edges({(2, 3), (1, 2)})
    assert text == "1 2\n2 3\n"
    assert parse_edges("# e\n" + text) == {(1, 2), (2, 3)}
    for bad in ("2 1\n", "1 2 3\n", "1 2\n1 2\n", "0 1\n", "a b\n"):
        with pytest.raises(FormatError):
            parse_edges(bad)


@pytest.mark.parametrize("n", PAPER_SIZES)
def test_edges_round_trip(n):
    edges = embedded(n).listed_edges
    assert parse_edges(serialize_edges(edges)) == edges
