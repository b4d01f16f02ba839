"""Exact Burau matrices for 3-braids, unreduced (3x3) and reduced (2x2).

The unreduced generator images are the homology matrices

    sigma1 |-> (0   t   0)      sigma2 |-> (1   0    0 )
           (1  1-t  0)             (0   0    t )
           (0   0   1)             (0   1   1-t)

with a braid word mapping to the product of its letters' matrices in word
order (leftmost letter leftmost), matching the rightmost-acts-first loop
action: column i of the word's matrix is fox_column of the image of y_i.

The reduced representation is the rank-2 summand in the basis where

    sigma1 |-> (-t  1)    sigma2 |-> (1   0)
           ( 0  1)            (t  -t)

pinned by tr M_r(sigma1^m) = 1 + (-1)^m t^m and M_r(Delta^{2k}) = t^{3k} I.
Specializing the reduced matrices at t = -1 lands in SL(2, Z).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .errors import InternalInconsistency
from .laurent import LaurentPoly, lp

Column = tuple[LaurentPoly, ...]


@dataclass(frozen=True, slots=True)
class BurauMatrix:
    """A square matrix over Z[t, t^-1] tagged with which representation it is in."""

    entries: tuple[tuple[LaurentPoly, ...], ...]
    kind: str  # "unreduced" (3x3) or "reduced" (2x2)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __mul__(self, other: BurauMatrix) -> BurauMatrix:
        if self.kind != other.kind:
            raise ValueError("cannot multiply matrices from different representations")
        n = self.size
        rows = tuple(
            tuple(
                sum(
                    (self.entries[i][k] * other.entries[k][j] for k in range(n)),
                    LaurentPoly.zero(),
                )
                for j in range(n)
            )
            for i in range(n)
        )
        return BurauMatrix(rows, self.kind)

    def __pow__(self, n: int) -> BurauMatrix:
        if n < 0:
            raise ValueError("use the matrix of the inverse word instead")
        result = identity(self.size, self.kind)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def matvec(self, column: Column) -> Column:
        n = self.size
        return tuple(
            sum((self.entries[i][k] * column[k] for k in range(n)), LaurentPoly.zero())
            for i in range(n)
        )

    def column(self, i: int) -> Column:
        """Column i, 1-indexed."""
        return tuple(self.entries[r][i - 1] for r in range(self.size))

    def trace(self) -> LaurentPoly:
        return sum((self.entries[i][i] for i in range(self.size)), LaurentPoly.zero())

    def det(self) -> LaurentPoly:
        n = self.size
        a = self.entries
        if n == 2:
            return a[0][0] * a[1][1] - a[0][1] * a[1][0]
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )

    def eval_neg_one(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.eval_neg_one() for e in row) for row in self.entries)

    def is_identity(self) -> bool:
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return all(
            self.entries[i][j] == (one if i == j else zero)
            for i in range(self.size)
            for j in range(self.size)
        )

    def render_rows(self) -> list[str]:
        widths = [max(len(str(self.entries[i][j])) for i in range(self.size)) for j in range(self.size)]
        return [
            "[ " + "   ".join(str(e).rjust(w) for e, w in zip(row, widths)) + " ]"
            for row in self.entries
        ]


def identity(n: int, kind: str) -> BurauMatrix:
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return BurauMatrix(
        tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), kind
    )


def _mat(kind: str, rows) -> BurauMatrix:
    return BurauMatrix(
        tuple(
            tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in row)
            for row in rows
        ),
        kind,
    )


_T = lp({1: 1})
_ONE_MINUS_T = lp({0: 1, 1: -1})
_TINV = lp({-1: 1})
_ONE_MINUS_TINV = lp({0: 1, -1: -1})

_UNREDUCED = {
    1: _mat("unreduced", ((0, _T, 0), (1, _ONE_MINUS_T, 0), (0, 0, 1))),
    2: _mat("unreduced", ((1, 0, 0), (0, 0, _T), (0, 1, _ONE_MINUS_T))),
    -1: _mat("unreduced", ((_ONE_MINUS_TINV, 1, 0), (_TINV, 0, 0), (0, 0, 1))),
    -2: _mat("unreduced", ((1, 0, 0), (0, _ONE_MINUS_TINV, 1), (0, _TINV, 0))),
}

_REDUCED = {
    1: _mat("reduced", ((lp({1: -1}), 1), (0, 1))),
    2: _mat("reduced", ((1, 0), (_T, lp({1: -1})))),
    -1: _mat("reduced", ((lp({-1: -1}), _TINV), (0, 1))),
    -2: _mat("reduced", ((1, 0), (1, lp({-1: -1})))),
}


def burau_unreduced(w: BraidWord) -> BurauMatrix:
    """The exact 3x3 matrix of the braid word w."""
    out = identity(3, "unreduced")
    for letter in w.letters:
        out = out * _UNREDUCED[letter]
    return out


def burau_reduced(w: BraidWord) -> BurauMatrix:
    """The exact 2x2 reduced matrix of the braid word w."""
    out = identity(2, "reduced")
    for letter in w.letters:
        out = out * _REDUCED[letter]
    return out


@dataclass(frozen=True, slots=True)
class IntMatrix2:
    """A 2x2 integer matrix; the image of a braid at t = -1."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))


_PSI = {
    letter: IntMatrix2(
        m.entries[0][0].eval_neg_one(),
        m.entries[0][1].eval_neg_one(),
        m.entries[1][0].eval_neg_one(),
        m.entries[1][1].eval_neg_one(),
    )
    for letter, m in _REDUCED.items()
}


def psi(w: BraidWord) -> IntMatrix2:
    """The reduced matrix specialized at t = -1: an SL(2, Z) element."""
    out = IntMatrix2(1, 0, 0, 1)
    for letter in w.letters:
        out = out * _PSI[letter]
    if out.det != 1:
        raise InternalInconsistency(f"specialization left SL(2, Z): det = {out.det}")
    return out
