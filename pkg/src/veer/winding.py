"""Exact boundary rotation number for 3-braids via the Farey circle action.

B_3 is the preimage of SL(2, Z) in the universal cover of SL(2, R), so a
braid lifts canonically to a homeomorphism of the line covering its Mobius
action on the projective circle of slopes: each generator takes the lift
that fixes the lifts of its parabolic axis.  The translation number of the
lifted braid is its fractional Dehn twist coefficient about the boundary;
the full twist shifts every point by exactly one turn, and the number is a
conjugacy invariant, homogeneous under powers.

Points are exact rational slopes (or the seam at slope infinity) tagged
with a winding count, so the translation numbers of reducible and
pseudo-Anosov braids, which are integers because their Mobius images have
real fixed points, come out exactly: Poincare's displacement inequality
pins n*tau within 2 of the n-step winding, so rounding at n = 6 and n = 7
must agree and any disagreement is raised as an internal error.  Periodic
braids are roots of the full twist (beta^q = Delta^(2p) with exponent sums
q*eps = 6p), giving tau = eps/6 with no iteration.
"""

from __future__ import annotations

from fractions import Fraction

from .braid import BraidWord
from .classify import ThurstonType, thurston_type
from .errors import InternalInconsistency

### CONVENTION: the circle is RP^1 with slope increasing around it; copy W
### of the line covers slopes -inf..+inf and the seam above it is
### ("inf", W).  sigma_1 translates slopes, fixing the seam; sigma_2 fixes
### slope 0 and pushes slopes past 1 up through the seam.  With these
### lifts the full twist Delta^2 winds by exactly +1.

_State = tuple[int, Fraction | None]


def _apply(letter: int, state: _State) -> _State:
    w, u = state
    if letter == 1:
        return state if u is None else (w, u + 1)
    if letter == -1:
        return state if u is None else (w, u - 1)
    if letter == 2:
        if u is None:
            return (w + 1, Fraction(-1))
        if u == 1:
            return (w, None)
        return (w if u < 1 else w + 1, u / (1 - u))
    if letter == -2:
        if u is None:
            return (w, Fraction(1))
        if u == -1:
            return (w - 1, None)
        return (w if u > -1 else w - 1, u / (1 + u))
    raise ValueError(f"not a braid letter: {letter}")


def lift_image(w: BraidWord, state: _State) -> _State:
    """Image of a covering-line point under the braid's canonical lift."""
    for letter in reversed(w.letters):
        state = _apply(letter, state)
    return state


def fdtc(w: BraidWord) -> Fraction:
    """Fractional Dehn twist coefficient of the braid about the boundary."""
    if thurston_type(w) is ThurstonType.PERIODIC:
        return Fraction(w.exponent_sum, 6)
    state: _State = (0, Fraction(0))
    winds: dict[int, int] = {}
    for n in range(1, 8):
        state = lift_image(w, state)
        winds[n] = state[0]
    taus = []
    for n in (6, 7):
        tau = round(Fraction(winds[n], n))
        if abs(winds[n] - n * tau) > 2:
            raise InternalInconsistency(
                f"winding {winds[n]} after {n} steps is no integer translation"
            )
        taus.append(tau)
    if taus[0] != taus[1]:
        raise InternalInconsistency(
            f"translation number rounds disagree: {taus[0]} vs {taus[1]}"
        )
    return Fraction(taus[0])
