"""The free group F_3 = <y1, y2, y3>, the braid action on it, and Fox columns.

### CONVENTIONS (calibrated against the printed generator matrices):
###  - letters +j / -j stand for y_j / y_j^-1; words are freely reduced;
###  - sigma_i sends y_i -> y_{i+1}, y_{i+1} -> y_{i+1} y_i y_{i+1}^-1 and
###    fixes the third generator; sigma_i^-1 sends y_{i+1} -> y_i,
###    y_i -> y_i^-1 y_{i+1} y_i;
###  - a braid word acts with its rightmost letter first, so
###    artin_apply(w1 * w2, u) = artin_apply(w1, artin_apply(w2, u));
###  - fox_column(u)[j] is the j-th free derivative of u pushed through
###    y_i -> t, and equals column i of the unreduced matrix when
###    u = artin_apply(w, y_i);
###  - the boundary loop is z = y3 y2 y1; the full twist acts on loops as
###    conjugation by z.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _wordops
from .braid import BraidWord
from .laurent import LaurentPoly

FreeLetters = tuple[int, ...]


def _reduce(letters) -> FreeLetters:
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class FreeWord:
    """A freely reduced word in y1, y2, y3 and their inverses."""

    letters: FreeLetters = ()

    def __post_init__(self):
        for letter in self.letters:
            if not isinstance(letter, int) or letter == 0 or abs(letter) > 3:
                raise ValueError(f"bad free-group letter {letter}")
        reduced = _reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-letter for letter in reversed(self.letters)))

    def __pow__(self, n: int) -> FreeWord:
        if n < 0:
            return self.inverse() ** (-n)
        out = FreeWord()
        for _ in range(n):
            out = out * self
        return out

    @property
    def exponent_sum(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def render(self) -> str:
        if not self.letters:
            return "(empty)"
        return " ".join(f"y{letter}" if letter > 0 else f"y{-letter}^-1" for letter in self.letters)

    def __str__(self) -> str:
        return self.render()


Y1 = FreeWord((1,))
Y2 = FreeWord((2,))
Y3 = FreeWord((3,))
GENERATORS = (Y1, Y2, Y3)

#: The boundary-parallel loop: conjugation by it is the full twist on loops.
Z = FreeWord((3, 2, 1))


def artin_apply(w: BraidWord, u: FreeWord) -> FreeWord:
    """Image of the loop u under the braid w (rightmost braid letter acts first)."""
    arr = _wordops.to_array(u.letters)
    for gen in reversed(w.letters):
        arr = _wordops.apply_gen(arr, gen)
    return FreeWord(_wordops.from_array(arr))


def fox_column(u: FreeWord) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three abelianized free derivatives of u (all y_i sent to t).

    Walking the word, a letter +j read at prefix exponent sum e contributes
    +t^e to row j and a letter -j contributes -t^(e-1); this is the product
    rule d(uv) = du + t^eps(u) dv applied letter by letter.
    """
    if not u.letters:
        return (LaurentPoly.zero(),) * 3
    letters = np.asarray(u.letters, dtype=np.int64)
    signs = np.sign(letters)
    levels = np.concatenate(([0], np.cumsum(signs)[:-1]))
    exps = np.where(signs > 0, levels, levels - 1)
    rows = np.abs(letters)
    cols = []
    for j in (1, 2, 3):
        acc: dict[int, int] = {}
        for which, value in ((signs > 0, 1), (signs < 0, -1)):
            mask = (rows == j) & which
            if mask.any():
                es, counts = np.unique(exps[mask], return_counts=True)
                for e, c in zip(es, counts):
                    s = acc.get(int(e), 0) + value * int(c)
                    if s:
                        acc[int(e)] = s
                    else:
                        del acc[int(e)]
        cols.append(LaurentPoly.from_dict(acc))
    return (cols[0], cols[1], cols[2])


def delta2_conjugate(u: FreeWord, k: int) -> FreeWord:
    """z^k u z^-k: the k-fold full twist applied to the loop u."""
    zk = Z ** k
    return zk * u * zk.inverse()


def boundary_power_exponent(u: FreeWord) -> int | None:
    """k if u = z^k (including k = 0 for the empty word), else None."""
    e = u.exponent_sum
    if e % 3 != 0:
        return None
    k = e // 3
    return k if u == Z ** k else None
