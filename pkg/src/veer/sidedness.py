"""Which side of one loop another loop leaves the basepoint on.

Reduced words in F_3 are geodesic edge-paths in the universal cover of the
thrice-punctured disk, a tree of basepoint lifts.  Two distinct loops
diverge exactly once; whether one is to the right of the other is decided
at that vertex by the cyclic order of direction-germs around a basepoint
lift.  With the basepoint on the boundary there are eight germs: the two
boundary directions and an out/in pair for each generator loop.

### CALIBRATION: the cyclic order (counterclockwise, index 0..7) is
###
###     boundary-R, y3-out, y3-in, y2-out, y2-in, y1-out, y1-in, boundary-L
###
### and "u RightOf v" means u's germ comes strictly earlier in the sweep
### that starts just past the reference germ (the reversed last shared
### letter; the boundary at the start vertex).  Exactly one choice of
### chirality satisfies the sigma1 anchors — compare(y2, y1) = RightOf and
### compare(y1^-1 y2 y1, y1) = LeftOf — together with twist monotonicity;
### the calibration tests freeze it.  A path that ends where the other
### continues compares through its terminal boundary germ; the two boundary
### germs are cyclically adjacent, so which one is immaterial.
"""

from __future__ import annotations

import enum

from .errors import BoundaryClass, InternalInconsistency
from .freegroup import FreeWord, boundary_power_exponent, delta2_conjugate


class Sidedness(enum.Enum):
    LEFT_OF = "LeftOf"
    EQUAL = "Equal"
    RIGHT_OF = "RightOf"


#: germ position of the move "leave the current vertex by letter L":
#: +i uses y_i's outgoing germ, -i its incoming germ.
_GERM_POS = {3: 1, -3: 2, 2: 3, -2: 4, 1: 5, -1: 6}
_BOUNDARY_R = 0
_BOUNDARY_L = 7


def _germ(letter: int) -> int:
    return _GERM_POS[letter]


def compare(u: FreeWord, v: FreeWord) -> Sidedness:
    """Trichotomous: RIGHT_OF if u leaves the basepoint to the right of v.

    Total and antisymmetric on reduced loops; transitive because the order
    is lexicographic over the shared tree path.
    """
    a, b = u.letters, v.letters
    if a == b:
        return Sidedness.EQUAL
    j = 0
    limit = min(len(a), len(b))
    while j < limit and a[j] == b[j]:
        j += 1
    ref = _BOUNDARY_R if j == 0 else _germ(-a[j - 1])
    germ_u = _germ(a[j]) if j < len(a) else _BOUNDARY_L
    germ_v = _germ(b[j]) if j < len(b) else _BOUNDARY_L
    du = (germ_u - ref) % 8
    dv = (germ_v - ref) % 8
    return Sidedness.RIGHT_OF if du < dv else Sidedness.LEFT_OF


def compare_prefix(prefix: tuple[int, ...], complete: bool, v: FreeWord) -> Sidedness:
    """compare() against v knowing only a certified prefix of the first word.

    `prefix` is the exact start of some reduced word u; `complete` says the
    prefix is all of u.  With complete=True this is compare(FreeWord(prefix), v).
    Raises InternalInconsistency when the prefix is too short to decide —
    callers size their windows so that never happens.
    """
    b = v.letters
    j = 0
    limit = min(len(prefix), len(b))
    while j < limit and prefix[j] == b[j]:
        j += 1
    if j == len(prefix) and not complete:
        # u might still agree with v beyond the window
        raise InternalInconsistency("certified prefix exhausted before divergence")
    if complete and len(prefix) == j == len(b):
        return Sidedness.EQUAL
    ref = _BOUNDARY_R if j == 0 else _germ(-prefix[j - 1])
    germ_u = _germ(prefix[j]) if j < len(prefix) else _BOUNDARY_L
    germ_v = _germ(b[j]) if j < len(b) else _BOUNDARY_L
    du = (germ_u - ref) % 8
    dv = (germ_v - ref) % 8
    return Sidedness.RIGHT_OF if du < dv else Sidedness.LEFT_OF


def twist_monotone(u: FreeWord) -> None:
    """Assert the full twist moves u strictly right and its inverse strictly left.

    Raises BoundaryClass for powers of the boundary loop (the twist fixes
    those, so the comparison would be Equal) and InternalInconsistency if
    monotonicity ever fails — that would mean the germ order is miscalibrated.
    """
    if boundary_power_exponent(u) is not None:
        raise BoundaryClass(f"{u} is boundary-parallel; twisting fixes it")
    if compare(delta2_conjugate(u, 1), u) is not Sidedness.RIGHT_OF:
        raise InternalInconsistency(f"positive twist failed to move {u} right")
    if compare(delta2_conjugate(u, -1), u) is not Sidedness.LEFT_OF:
        raise InternalInconsistency(f"negative twist failed to move {u} left")
