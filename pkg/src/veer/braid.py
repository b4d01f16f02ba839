"""Words in the 3-strand braid group B_3.

### CONVENTIONS:
###  - a word is a tuple of signed letters: +1, -1, +2, -2 meaning
###    sigma1, sigma1^-1, sigma2, sigma2^-1;
###  - words are freely reduced on construction (adjacent g g^-1 removed),
###    nothing more -- no braid relations are applied;
###  - Delta = sigma1 sigma2 sigma1, so Delta^2 = (1,2,1,1,2,1) generates
###    the center;
###  - exponent_sum is the sum of letter signs and is a group homomorphism.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

Letters = tuple[int, ...]

_DELTA: Letters = (1, 2, 1)


def _reduce(letters: tuple[int, ...] | list[int]) -> Letters:
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A freely reduced word in sigma1, sigma2 and their inverses."""

    letters: Letters = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter not in (1, -1, 2, -2):
                raise ValueError(f"bad braid letter {letter}; use +/-1 or +/-2")
        reduced = _reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    # -- group structure --------------------------------------------------

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-letter for letter in reversed(self.letters)))

    def __pow__(self, n: int) -> BraidWord:
        if n < 0:
            return self.inverse() ** (-n)
        out = BraidWord()
        for _ in range(n):
            out = out * self
        return out

    @property
    def exponent_sum(self) -> int:
        """Image under the abelianization B_3 -> Z; +1 per positive letter."""
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    # -- text -------------------------------------------------------------

    def render(self) -> str:
        """Space-separated signed indices; parses back to an equal word."""
        return " ".join(str(letter) for letter in self.letters)

    def __str__(self) -> str:
        return self.render() if self.letters else "(empty)"


def delta2k(k: int) -> BraidWord:
    """The central element Delta^{2k}, spelled out letter by letter."""
    if k >= 0:
        return BraidWord((_DELTA + _DELTA) * k)
    neg = tuple(-letter for letter in reversed(_DELTA + _DELTA))
    return BraidWord(neg * (-k))


_TOKEN = re.compile(
    r"""
    (?P<sig>s(?P<sidx>\d+)(\^(?P<sexp>[+-]?\d+))?)
  | (?P<delta>Delta(\^(?P<dexp>[+-]?\d+))?)
  | (?P<int>[+-]?\d+)
    """,
    re.VERBOSE,
)

_SEP = re.compile(r"[ \t\n\r.,]+")


def parse(text: str) -> BraidWord:
    """Parse braid-word text into a BraidWord.

    Grammar: tokens separated by whitespace, '.' or ','.  A token is a signed
    index ("1", "-2"), a named generator with optional exponent ("s1", "s2^-3"),
    or "Delta" with optional exponent ("Delta^2" expands to 1 2 1 1 2 1).
    Generator indices outside {1, 2} are rejected.  Raises ParseError with the
    byte offset of the offending token.
    """
    letters: list[int] = []
    pos = 0
    n = len(text)
    while pos < n:
        sep = _SEP.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unrecognized token {text[pos:pos + 10]!r}", pos)
        if m.lastgroup == "int" or m.group("int"):
            value = int(m.group("int"))
            if value == 0 or abs(value) > 2:
                raise ParseError(f"generator index {value} outside {{1, 2}}", pos)
            letters.append(value)
        elif m.group("sig"):
            idx = int(m.group("sidx"))
            if idx not in (1, 2):
                raise ParseError(f"generator index {idx} outside {{1, 2}}", pos)
            exp = int(m.group("sexp")) if m.group("sexp") else 1
            letters.extend([idx if exp > 0 else -idx] * abs(exp))
        else:
            exp = int(m.group("dexp")) if m.group("dexp") else 1
            if exp >= 0:
                letters.extend(_DELTA * exp)
            else:
                letters.extend(tuple(-letter for letter in reversed(_DELTA)) * (-exp))
        pos = m.end()
        if pos < n and not _SEP.match(text, pos):
            raise ParseError(f"expected separator after token, got {text[pos:pos + 10]!r}", pos)
    return BraidWord(tuple(letters))
