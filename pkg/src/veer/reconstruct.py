"""Minimal-twist generator images, twist powers, and the general verdict.

For each free generator y_i, the braid's Artin image beta(y_i) determines a
unique pair (y_i', k_i): conjugating by the boundary loop k_i times brings
the image to a representative y_i' that sits weakly to the right of y_i
while one further negative twist falls strictly to its left.  The k_i are
read off by sliding the conjugation power and testing sidedness; the
unreduced matrix column must then factor as M(Delta^2)^{k_i} times the Fox
column of y_i'.

The Right / Left / Both / Neither verdict is decided by the boundary
rotation number, not by the generator sides alone: a braid moves every
based loop weakly right exactly when its fractional Dehn twist coefficient
is positive, or is zero with nonnegative interior twisting (reducible
case) or the braid trivial.  All three generator images can land strictly
right of their generators while a conjugate loop still swings left, so the
generator test is necessary but not sufficient and is not stable under
conjugation.  The reconstructions are kept as data and as a one-sided
check: a Right verdict alongside a strictly left-moving generator image,
or the mirror situation, raises an internal error.

Images of long pseudo-Anosov words have exponentially many letters, so the
slide runs on a capped window holding a certified prefix of the image.
Sidedness against a generator only ever reads the first few letters, each
substitution step invalidates at most a bounded suffix of the window
(measured bound 1 letter, margin 8 kept), and the window is sized so the
certified region survives the whole slide.  Windowed runs return exact k_i
and sidedness but report the loop as a prefix and skip the matrix-side
cross-checks; those run whenever the image fits the materialization budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braid import BraidWord, delta2k
from .burau import BurauMatrix, Column, burau_unreduced
from .classify import Side, ThurstonType, analyze_reducible, thurston_type
from .errors import InternalInconsistency, ReconstructionMismatch
from .freegroup import (
    GENERATORS,
    FreeWord,
    artin_apply,
    delta2_conjugate,
    fox_column,
)
from .intersect import (
    GENERATOR_ROWS,
    IntersectionRow,
    IntersectionTable,
    row_from_column,
    table_from_matrix,
)
from .laurent import ONE, LaurentPoly, lp
from .sidedness import Sidedness, compare, compare_prefix
from .winding import fdtc
from ._wordops import apply_gen, from_array, to_array

### CONVENTION: budgets.  Images whose estimated letter count (the
### coefficient mass of the matrix column) stays inside _FULL_LIMIT are
### materialized exactly and cross-checked; larger ones go through the
### window.  VEER_FULL_LIMIT overrides for experiments.
_FULL_LIMIT = int(os.environ.get("VEER_FULL_LIMIT", "200000"))
_MARGIN = 8
_CAP_MAX = 1 << 22

_DELTA2_UP = delta2k(1)
_DELTA2_DOWN = delta2k(-1)

# (t^2, t, 1) spans the Delta^2-fixed column direction; projecting it out
# of a column C by D(C) = (t^2+t+1) C - (t^2, t, 1) leaves a vector on
# which M(Delta^2) acts as multiplication by t^3, so twist powers are
# visible as degree gaps of 3.
_FIXED: Column = (lp({2: 1}), lp({1: 1}), ONE)
_SPREAD = lp({0: 1, 1: 1, 2: 1})

_POWER_BASE = {
    1: burau_unreduced(_DELTA2_UP),
    -1: burau_unreduced(_DELTA2_DOWN),
}


def _project(column: Column) -> Column:
    return tuple(_SPREAD * c - f for c, f in zip(column, _FIXED))


def extract_k(target: Column, base: Column) -> int:
    """The unique k with target = M(Delta^2)^k * base.

    The candidate comes from the degree gap of the projected columns; the
    literal multiply-and-compare is the source of truth and failure raises
    ReconstructionMismatch.
    """
    k = None
    for pt, pb in zip(_project(target), _project(base)):
        if pb.is_zero or pt.is_zero:
            if pb.is_zero != pt.is_zero:
                raise ReconstructionMismatch(
                    "columns are not in the same twist orbit (zero pattern differs)"
                )
            continue
        gap = pt.max_degree() - pb.max_degree()
        if gap % 3 != 0:
            raise ReconstructionMismatch(
                f"projected degree gap {gap} is not a multiple of 3"
            )
        k = gap // 3
        break
    if k is None:
        raise ReconstructionMismatch("projected columns vanish; not loop columns")
    power = _POWER_BASE[1 if k >= 0 else -1] ** abs(k)
    if power.matvec(base) != target:
        raise ReconstructionMismatch(f"verification failed for candidate k={k}")
    return k


class _WindowUnderflow(Exception):
    """Certified prefix became too short to keep deciding; retry larger."""


class _Window:
    """A freely reduced word known exactly, or by a certified prefix.

    strict windows never drop letters and raise _WindowUnderflow when the
    word outgrows the cap (the caller falls back to a capped run); capped
    windows truncate, after which every substitution costs _MARGIN letters
    of certainty off the tail.
    """

    __slots__ = ("arr", "exact", "cap", "strict")

    def __init__(self, arr: np.ndarray, exact: bool, cap: int, strict: bool):
        self.arr = arr
        self.exact = exact
        self.cap = cap
        self.strict = strict

    @classmethod
    def start(cls, u: FreeWord, cap: int, strict: bool) -> _Window:
        return cls(to_array(u.letters), True, cap, strict)

    def copy(self) -> _Window:
        return _Window(self.arr.copy(), self.exact, self.cap, self.strict)

    def apply_letter(self, gen: int) -> None:
        new = apply_gen(self.arr, gen)
        if self.exact:
            if new.shape[0] <= self.cap:
                self.arr = new
                return
            if self.strict:
                raise _WindowUnderflow
            self.exact = False
            self.arr = new[: self.cap]
            return
        keep = min(new.shape[0] - _MARGIN, self.cap)
        if keep < _MARGIN:
            raise _WindowUnderflow
        self.arr = new[:keep]

    def apply_braid(self, w: BraidWord) -> None:
        for gen in reversed(w.letters):
            self.apply_letter(gen)

    def compare_to(self, v: FreeWord) -> Sidedness:
        need = len(v.letters) + 2
        if self.exact and self.arr.shape[0] <= need:
            return compare(self.to_freeword(), v)
        if self.arr.shape[0] < need:
            raise _WindowUnderflow
        return compare_prefix(from_array(self.arr[:need]), False, v)

    def to_freeword(self) -> FreeWord:
        return FreeWord(from_array(self.arr))


@dataclass(frozen=True, slots=True)
class TrainTrackConfig:
    """Triangle train-track data carried by one intersection row.

    The row (a, b, c) satisfies one sum case; the two non-sum counts ride
    the two live branches (the third branch weight degenerates to 0), the
    corner weights split the counts pairwise, and the side residuals vanish
    identically.  Degenerate rows (some count 0) collapse two corners at
    once and belong to generator-parallel loops.
    """

    a: int
    b: int
    c: int
    sum_case: str
    inside: str
    outside: str
    m1: int
    m2: int
    m3: int
    corner_u: int
    corner_v: int
    corner_w: int
    residuals: tuple[int, int, int]


def train_track_config(row: IntersectionRow | tuple[int, int, int]) -> TrainTrackConfig:
    """Case analysis and branch weights for one row, with all invariants checked."""
    a, b, c = row.counts if isinstance(row, IntersectionRow) else row
    cases = [("a=b+c", a == b + c), ("b=a+c", b == a + c), ("c=a+b", c == a + b)]
    holding = [name for name, ok in cases if ok]
    if not holding:
        raise InternalInconsistency(f"no triangle sum case holds for {(a, b, c)}")
    sum_case = holding[0]
    corner_u = (b + c - a) // 2
    corner_v = (a + c - b) // 2
    corner_w = (a + b - c) // 2
    corners = (corner_u, corner_v, corner_w)
    if (b + c - a) % 2 or min(corners) < 0 or 0 not in corners:
        raise InternalInconsistency(f"corner weights {corners} invalid for {(a, b, c)}")
    # the two non-sum counts are the live branch weights: the template
    # m1 = P, m1 + m2 = S, m2 + m3 = Q holds with S the sum-side count
    if sum_case == "a=b+c":
        first, total, last = b, a, c
    elif sum_case == "b=a+c":
        first, total, last = a, b, c
    else:
        first, total, last = a, c, b
    m1, m2 = first, total - first
    m3 = last - m2
    if min(m1, m2, m3) < 0 or m1 + m2 != total or m2 + m3 != last:
        raise InternalInconsistency(f"branch weights {(m1, m2, m3)} fail {(a, b, c)}")
    degenerate = len(holding) > 1 or min(a, b, c) == 0
    inside = "degenerate" if degenerate else "generic"
    zeros = "".join(n for n, x in zip("uvw", corners) if x == 0)
    return TrainTrackConfig(
        a=a, b=b, c=c,
        sum_case=sum_case,
        inside=inside,
        outside=f"corner-{zeros}",
        m1=m1, m2=m2, m3=m3,
        corner_u=corner_u, corner_v=corner_v, corner_w=corner_w,
        residuals=(a - corner_v - corner_w, b - corner_u - corner_w, c - corner_u - corner_v),
    )


@dataclass(frozen=True, slots=True)
class GeneratorReconstruction:
    """One generator's minimal-twist data.

    loop is the rebuilt representative; exact says whether it is the whole
    word or a certified prefix (k and side are exact either way).
    """

    index: int
    loop: FreeWord
    k: int
    side: Sidedness
    exact: bool
    track: TrainTrackConfig


@dataclass(frozen=True, slots=True)
class GeneralVerdict:
    generators: tuple[GeneratorReconstruction, ...]
    verdict: Side
    boundary_twist: Fraction

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(g.k for g in self.generators)


def _column_mass(column: Column) -> int:
    return sum(entry.coeff_abs_sum() for entry in column)


def _slide(w: BraidWord, i: int, cap: int, strict: bool) -> tuple[_Window, int, Sidedness]:
    """Run the normalization slide; the window ends at the representative."""
    gen = GENERATORS[i - 1]
    win = _Window.start(gen, cap, strict)
    win.apply_braid(w)
    side = win.compare_to(gen)
    j = 0
    limit = len(w) + 16
    if side in (Sidedness.RIGHT_OF, Sidedness.EQUAL):
        while True:
            probe = win.copy()
            probe.apply_braid(_DELTA2_DOWN)
            if probe.compare_to(gen) is Sidedness.LEFT_OF:
                break
            win = probe
            j += 1
            if j > limit:
                raise InternalInconsistency(f"twist slide for y{i} ran past {limit}")
    else:
        while True:
            win.apply_braid(_DELTA2_UP)
            j -= 1
            if win.compare_to(gen) is not Sidedness.LEFT_OF:
                break
            if -j > limit:
                raise InternalInconsistency(f"twist slide for y{i} ran past {limit}")
    return win, j, side


def _reconstruct(
    w: BraidWord,
    i: int,
    matrix: BurauMatrix,
    table: IntersectionTable,
) -> GeneratorReconstruction:
    gen = GENERATORS[i - 1]
    row = table.row(i)
    track = train_track_config(row)
    column = matrix.column(i)
    if _column_mass(column) <= _FULL_LIMIT:
        try:
            win, k, side = _slide(w, i, 4 * _FULL_LIMIT, strict=True)
        except _WindowUnderflow:
            win = None
        if win is not None:
            loop = win.to_freeword()
            if delta2_conjugate(loop, k) != artin_apply(w, gen):
                raise InternalInconsistency(
                    f"normalized loop for y{i} does not conjugate back to the image"
                )
            base = fox_column(loop)
            if extract_k(column, base) != k:
                raise ReconstructionMismatch(
                    f"matrix twist power disagrees with the slide for y{i}"
                )
            loop_row = row_from_column(base)
            if loop_row.counts != row.counts:
                raise InternalInconsistency(
                    f"intersection counts of y{i}' differ from the braid's row"
                )
            if row.counts in GENERATOR_ROWS:
                # rows are twist-invariant, so a generator-type row must
                # rebuild that generator up to some boundary twist
                target = GENERATORS[GENERATOR_ROWS.index(row.counts)]
                span = len(w) + 16
                if all(
                    delta2_conjugate(target, j) != loop
                    for j in range(-span, span + 1)
                ):
                    raise InternalInconsistency(
                        f"generator-type row {row.counts} rebuilt a non-generator loop"
                    )
            if (k >= 0) != (side in (Sidedness.RIGHT_OF, Sidedness.EQUAL)):
                raise InternalInconsistency(f"sign of k_{i} contradicts sidedness")
            return GeneratorReconstruction(i, loop, k, side, True, track)
    cap = max(4096, 256 * len(w))
    while True:
        try:
            win, k, side = _slide(w, i, cap, strict=False)
            break
        except _WindowUnderflow:
            cap *= 8
            if cap > _CAP_MAX:
                raise InternalInconsistency(
                    f"certified window exhausted at cap {cap // 8} for y{i}"
                ) from None
    if (k >= 0) != (side in (Sidedness.RIGHT_OF, Sidedness.EQUAL)):
        raise InternalInconsistency(f"sign of k_{i} contradicts sidedness")
    return GeneratorReconstruction(i, win.to_freeword(), k, side, win.exact, track)


def reconstruct_generator(w: BraidWord, i: int) -> tuple[FreeWord, int]:
    """Minimal-twist representative and twist power for generator i.

    Returns (y_i', k_i) with y_i' weakly right of y_i and Delta^-2(y_i')
    strictly left of it.  Beyond the materialization budget the loop comes
    back as a certified prefix; k_i is exact in every case.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"generator index must be 1, 2 or 3, not {i}")
    matrix = burau_unreduced(w)
    rec = _reconstruct(w, i, matrix, table_from_matrix(matrix))
    return rec.loop, rec.k


def general_veering(w: BraidWord) -> GeneralVerdict:
    """Boundary-twist verdict plus all three generator reconstructions."""
    matrix = burau_unreduced(w)
    table = table_from_matrix(matrix)
    recs = tuple(_reconstruct(w, i, matrix, table) for i in (1, 2, 3))
    twist = fdtc(w)
    if twist > 0:
        verdict = Side.RIGHT
    elif twist < 0:
        verdict = Side.LEFT
    else:
        kind = thurston_type(w)
        if kind is ThurstonType.PSEUDO_ANOSOV:
            verdict = Side.NEITHER
        elif kind is ThurstonType.REDUCIBLE:
            m = analyze_reducible(w).m
            if m > 0:
                verdict = Side.RIGHT
            elif m < 0:
                verdict = Side.LEFT
            else:
                verdict = Side.BOTH
        else:
            ### CONVENTION: zero exponent sum periodic braid is trivial.
            verdict = Side.BOTH
    sides = {r.side for r in recs}
    if verdict is Side.RIGHT and Sidedness.LEFT_OF in sides:
        raise InternalInconsistency("Right verdict with a left-moving generator")
    if verdict is Side.LEFT and Sidedness.RIGHT_OF in sides:
        raise InternalInconsistency("Left verdict with a right-moving generator")
    if verdict is Side.BOTH and sides != {Sidedness.EQUAL}:
        raise InternalInconsistency("identity verdict with a moving generator")
    return GeneralVerdict(recs, verdict, twist)
