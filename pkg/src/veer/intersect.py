"""Geometric intersection data of generator images, from Burau columns.

From a column (p1, p2, p3) of the unreduced matrix, form the pairings with
the three arcs joining consecutive punctures (and the outer pair):

    Q = p1 - t p2,   R = p2 - t p3,   S = p1 - t^2 p3.

Their values at t = -1 count unsigned geometric intersections — the level
argument forces every coefficient of Q, R, S to carry one sign pattern, so
nothing cancels and |Q(-1)|, |R(-1)|, |S(-1)| are honest counts a, b, c.
A loop enters and leaves the triangle spanned by the arcs the same number
of times, so in every row one of a, b, c equals the sum of the other two;
and the data is a conjugation invariant of the full twist, so tables of w
and Delta^{2k} w agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .burau import BurauMatrix, Column, burau_unreduced
from .errors import InternalInconsistency, TriangleViolation
from .laurent import LaurentPoly


def qrs(column: Column) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three pairing polynomials of one column."""
    p1, p2, p3 = column
    t = LaurentPoly.t_power(1)
    tt = LaurentPoly.t_power(2)
    return (p1 - t * p2, p2 - t * p3, p1 - tt * p3)


@dataclass(frozen=True, slots=True)
class IntersectionRow:
    """Counts (a, b, c) for one generator image, with the pairings kept."""

    a: int
    b: int
    c: int
    q: LaurentPoly
    r: LaurentPoly
    s: LaurentPoly

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class IntersectionTable:
    rows: tuple[IntersectionRow, IntersectionRow, IntersectionRow]

    @property
    def counts(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(row.counts for row in self.rows)

    def row(self, i: int) -> IntersectionRow:
        """Row i, 1-indexed by generator."""
        return self.rows[i - 1]


#: (a, b, c) rows of the identity braid, one per generator; these are the
#: calibration rows and also the degenerate "the image is a generator" shapes.
GENERATOR_ROWS: tuple[tuple[int, int, int], ...] = ((1, 0, 1), (1, 1, 0), (0, 1, 1))


def row_from_column(column: Column) -> IntersectionRow:
    """Counts and pairings of one column, with the no-cancellation and
    triangle conditions asserted."""
    q, r, s = qrs(column)
    counts = []
    for name, p in (("Q", q), ("R", r), ("S", s)):
        value = abs(p.eval_neg_one())
        if value != p.coeff_abs_sum():
            raise InternalInconsistency(
                f"cancellation in {name} = {p}: |{name}(-1)| = {value} "
                f"but the coefficients total {p.coeff_abs_sum()}"
            )
        counts.append(value)
    a, b, c = counts
    if a + b != c and b + c != a and a + c != b:
        raise TriangleViolation(f"no entry of (a, b, c) = ({a}, {b}, {c}) is the sum of the others")
    return IntersectionRow(a=a, b=b, c=c, q=q, r=r, s=s)


def table_from_matrix(matrix: BurauMatrix) -> IntersectionTable:
    if matrix.kind != "unreduced":
        raise ValueError("intersection data needs the unreduced (3x3) matrix")
    return IntersectionTable(tuple(row_from_column(matrix.column(i)) for i in (1, 2, 3)))


def intersection_table(w: BraidWord) -> IntersectionTable:
    """The 3-row table of intersection counts for the braid word w."""
    return table_from_matrix(burau_unreduced(w))
