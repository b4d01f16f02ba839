"""Exact arithmetic in the ring Z[t, t^-1] of integer Laurent polynomials.

Polynomials are immutable and canonical: a sorted tuple of (exponent,
coefficient) pairs with no zero coefficients, so == and hash() mean ring
equality.  Coefficients are Python ints on purpose — matrix entries outgrow
64 bits quickly and every verdict downstream rides on exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """A Laurent polynomial sum(c * t^e) stored sparsely.

    `terms` is sorted by exponent, ascending, with nonzero coefficients only.
    Use the constructors below rather than building the tuple by hand.
    """

    terms: tuple[tuple[int, int], ...] = ()

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_dict(coeffs: Mapping[int, int]) -> LaurentPoly:
        return LaurentPoly(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly(((0, 1),))

    @staticmethod
    def const(c: int) -> LaurentPoly:
        return LaurentPoly(((0, c),)) if c else LaurentPoly()

    @staticmethod
    def t_power(e: int, c: int = 1) -> LaurentPoly:
        """c * t^e (defaults to the monomial t^e)."""
        return LaurentPoly(((e, c),)) if c else LaurentPoly()

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.terms[0][0]

    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.terms[-1][0]

    def coeff(self, e: int) -> int:
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def as_monomial(self) -> tuple[int, int] | None:
        """(exponent, coefficient) if this is a single term, else None."""
        if len(self.terms) == 1:
            return self.terms[0]
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        acc = dict(self.terms)
        for e, c in other.terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
        return LaurentPoly(tuple(sorted(acc.items())))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.terms or not other.terms:
            return LaurentPoly()
        acc: dict[int, int] = {}
        # iterate the shorter factor outside: generator matrices have <= 2 terms
        a, b = (self.terms, other.terms)
        if len(a) > len(b):
            a, b = b, a
        for e1, c1 in a:
            for e2, c2 in b:
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return LaurentPoly(tuple(sorted(acc.items())))

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; shift instead")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by t^e."""
        return LaurentPoly(tuple((ee + e, c) for ee, c in self.terms))

    # -- specializations -------------------------------------------------

    def eval_neg_one(self) -> int:
        """The integer value at t = -1."""
        return sum(c if e % 2 == 0 else -c for e, c in self.terms)

    def coeff_abs_sum(self) -> int:
        return sum(abs(c) for _, c in self.terms)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[tuple[str, str]] = []
        for e, c in reversed(self.terms):  # exponents descending
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.t_power(1)


def lp(coeffs: Mapping[int, int] | Iterable[tuple[int, int]]) -> LaurentPoly:
    """Shorthand constructor used heavily in tests: lp({0: 1, 1: -1}) = 1 - t."""
    if isinstance(coeffs, Mapping):
        return LaurentPoly.from_dict(coeffs)
    return LaurentPoly.from_dict(dict(coeffs))
