"""Geometric intersection tables: calibration, triangle law, twist invariance."""

from __future__ import annotations

import random

import pytest

from veer.braid import BraidWord, delta2k, parse
from veer.burau import burau_unreduced
from veer.errors import InternalInconsistency, TriangleViolation
from veer.intersect import (
    GENERATOR_ROWS,
    intersection_table,
    qrs,
    row_from_column,
    table_from_matrix,
)
from veer.laurent import ONE, lp


def _rand_braid(rng: random.Random, n: int) -> BraidWord:
    return BraidWord(tuple(rng.choice((1, -1, 2, -2)) for _ in range(n)))


def test_identity_calibration():
    table = intersection_table(parse(""))
    assert table.counts == ((1, 0, 1), (1, 1, 0), (0, 1, 1))
    assert table.counts == GENERATOR_ROWS
    assert table.row(1).counts == (1, 0, 1)


def test_sigma1_calibration():
    table = intersection_table(parse("1"))
    assert table.counts == ((1, 1, 0), (1, 2, 1), (0, 1, 1))


def test_qrs_on_the_identity_columns():
    eye = burau_unreduced(parse(""))
    q, r, s = qrs(eye.column(1))
    assert (q, r, s) == (ONE, lp({}), ONE)
    q, r, s = qrs(eye.column(2))
    assert (q, r, s) == (lp({1: -1}), ONE, lp({}))


def test_triangle_and_twist_invariance():
    rng = random.Random(71)
    for _ in range(200):
        w = _rand_braid(rng, rng.randint(0, 16))
        table = intersection_table(w)
        for a, b, c in table.counts:
            assert a >= 0 and b >= 0 and c >= 0
            assert a + b == c or b + c == a or a + c == b
        for k in (-2, -1, 1, 2):
            assert intersection_table(delta2k(k) * w).counts == table.counts
            assert intersection_table(w * delta2k(k)).counts == table.counts


def test_table_routes_through_the_matrix():
    rng = random.Random(72)
    for _ in range(60):
        w = _rand_braid(rng, rng.randint(0, 12))
        m = burau_unreduced(w)
        assert table_from_matrix(m).counts == intersection_table(w).counts
        for i in (1, 2, 3):
            assert row_from_column(m.column(i)).counts == intersection_table(w).counts[i - 1]


def test_bogus_column_trips_the_cancellation_gate():
    # S = Q + t R forces the triangle whenever no coefficients cancel, so the
    # reachable defense for a non-braid column is the cancellation check
    with pytest.raises(InternalInconsistency):
        row_from_column((ONE, ONE, ONE))
    assert issubclass(TriangleViolation, InternalInconsistency)


def test_reduced_matrix_is_rejected():
    from veer.burau import burau_reduced

    with pytest.raises(ValueError):
        table_from_matrix(burau_reduced(parse("1")))
