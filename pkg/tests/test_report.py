from decimal import Decimal, getcontext

import pytest

from hcpack.corpus import PAPER_SIZES, SUMMARY_TABLE
from hcpack.report import TSV_HEADER, bound_check, metrics_row, summary_table


def decimal_ratio(n, c):
    getcontext().prec = 40
    return Decimal(6 * n - c) / (Decimal(n * n).ln() / 3).exp()


def test_metrics_examples():
    row = metrics_row(20, 64)
    assert row.excess == 4
    assert row.ratio == pytest.approx(7.6004, abs=1e-4)
    assert row.ratio_display == "7.6"

    row = metrics_row(27, 90)
    assert row.excess == 9
    assert row.ratio == 8.0
    assert row.ratio_display == "8.0"

    row = metrics_row(25, 84)
    assert row.excess == 9
    assert row.ratio == pytest.approx(7.7194, abs=1e-4)
    assert row.ratio_display == "7.7"


@pytest.mark.parametrize("n, c", [(1, 7), (2, 13), (3, -1)])
def test_impossible_counts_rejected(n, c):
    with pytest.raises(ValueError):
        metrics_row(n, c)
    with pytest.raises(ValueError):
        bound_check(n, c)


def test_rejects_non_positive_n():
    with pytest.raises(ValueError):
        metrics_row(0, 0)


@pytest.mark.parametrize("n", range(1, 101))
def test_ratio_matches_decimal_evaluation(n):
    for c in (0, 3 * n, 6 * n):
        assert abs(metrics_row(n, c).ratio - float(decimal_ratio(n, c))) < 1e-9


def test_display_rounds_half_up():
    # (6n - c) / n^(2/3) for n=8 is (48 - c) / 4; c=47 gives 0.25 -> "0.3"
    assert metrics_row(8, 47).ratio_display == "0.3"
    assert metrics_row(8, 46).ratio_display == "0.5"


def test_bound_check_examples():
    assert bound_check(20, 64).relation == "inside"
    b = bound_check(27, 90)
    assert b.relation == "above"
    assert "n -> infinity" in b.note
    assert bound_check(1, 0).ratio == 6.0
    assert bound_check(1, 0).relation == "inside"
    assert bound_check(8, 48).relation == "below"


@pytest.mark.parametrize("n", [5, 20, 27, 64])
def test_bound_relation_monotone_in_c(n):
    order = {"below": 0, "inside": 1, "above": 2}
    ranks = [order[bound_check(n, c).relation] for c in range(6 * n + 1)]
    # more contacts means a smaller ratio, so the relation can only move downward
    assert ranks == sorted(ranks, reverse=True)


def test_summary_table_for_corpus():
    text = summary_table((n, SUMMARY_TABLE[n]) for n in PAPER_SIZES)
    lines = text.splitlines()
    assert lines[0] == TSV_HEADER == "n\tc\tc_minus_3n\tratio\tratio_full"
    cols = [line.split("\t") for line in lines[1:]]
    assert [int(c[2]) for c in cols] == [4, 4, 6, 7, 8, 9, 9, 9]
    paper = [7.6, 7.7, 7.6, 7.6, 7.7, 7.7, 7.8, 8.0]
    assert all(abs(float(c[3]) - p) <= 0.1 + 1e-12 for c, p in zip(cols, paper))
    assert all(float(c[4]) == metrics_row(int(c[0]), int(c[1])).ratio for c in cols)
    assert text.endswith("\n")


def test_summary_table_empty():
    assert summary_table([]) == TSV_HEADER + "\n"


def test_excess_recomputable():
    for n in PAPER_SIZES:
        row = metrics_row(n, SUMMARY_TABLE[n])
        assert row.excess == row.c - 3 * row.n
