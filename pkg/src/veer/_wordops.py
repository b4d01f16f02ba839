"""Array kernels for the free-group word engine.

Words in F_3 = <y1, y2, y3> are int8 numpy arrays of nonzero letters in
[-3, 3], always freely reduced.  The one hot operation is applying a single
braid generator's substitution to a whole word; everything upstream
(classification of 30-letter braids in bulk) is bounded by it.

Two implementations are provided: a numba @njit stack kernel and a pure
numpy fallback (vectorized block substitution + cancellation passes).  Set
VEER_PURE_PYTHON=1 to force the fallback; see benchmarks/wordops_bench.py
for the speed comparison.
"""

from __future__ import annotations

import os

import numpy as np

# Substitution blocks for the Artin action.  Letter v of F_3 maps under
# braid letter g to BLOCKS[g][v]:
#   sigma_i:      y_i -> y_{i+1},  y_{i+1} -> y_{i+1} y_i y_{i+1}^-1
#   sigma_i^-1:   y_{i+1} -> y_i,  y_i -> y_i^-1 y_{i+1} y_i
# and inverse letters map to the reversed-negated blocks.
_RULES: dict[int, dict[int, tuple[int, ...]]] = {}
for _i in (1, 2):
    _fwd = {_i: (_i + 1,), _i + 1: (_i + 1, _i, -(_i + 1))}
    _bwd = {_i + 1: (_i,), _i: (-_i, _i + 1, _i)}
    for _g, _rule in ((_i, _fwd), (-_i, _bwd)):
        table = {}
        for _v in (1, 2, 3):
            block = _rule.get(_v, (_v,))
            table[_v] = block
            table[-_v] = tuple(-x for x in reversed(block))
        _RULES[_g] = table

# Flat tables indexed by [gen_slot][letter + 3] -> (length, l0, l1, l2).
_GEN_SLOT = {1: 0, -1: 1, 2: 2, -2: 3}
_TABLES = np.zeros((4, 7, 4), dtype=np.int8)
for _g, _slot in _GEN_SLOT.items():
    for _v, _block in _RULES[_g].items():
        row = _TABLES[_slot, _v + 3]
        row[0] = len(_block)
        for _j, _x in enumerate(_block):
            row[1 + _j] = _x

_BLK = _TABLES[:, :, 1:]  # (4, 7, 3)
_LEN = _TABLES[:, :, 0]   # (4, 7)


def _want_numba() -> bool:
    return os.environ.get("VEER_PURE_PYTHON", "") not in ("1", "true", "yes")


USING_NUMBA = False
_apply_jit = None

if _want_numba():
    try:
        from numba import njit

        @njit(cache=True)
        def _apply_kernel(arr, table):  # pragma: no cover - exercised via wrapper
            out = np.empty(3 * arr.shape[0] + 1, dtype=np.int8)
            top = 0
            for k in range(arr.shape[0]):
                row = table[arr[k] + 3]
                for j in range(row[0]):
                    x = row[1 + j]
                    if top > 0 and out[top - 1] == -x:
                        top -= 1
                    else:
                        out[top] = x
                        top += 1
            return out[:top].copy()

        _apply_jit = _apply_kernel
        USING_NUMBA = True
    except Exception:  # numba missing or broken: silently use the fallback
        _apply_jit = None
        USING_NUMBA = False


def reduce_word(arr: np.ndarray) -> np.ndarray:
    """Freely reduce an int8 letter array (stack pass)."""
    out = np.empty(arr.shape[0], dtype=np.int8)
    top = 0
    for x in arr:
        if top > 0 and out[top - 1] == -x:
            top -= 1
        else:
            out[top] = x
            top += 1
    return out[:top].copy()


def concat_reduce(parts: list[np.ndarray]) -> np.ndarray:
    """Reduce a concatenation of already-reduced words.

    Cancellation only happens at the seams, so splice with a shrinking
    boundary instead of re-scanning everything.
    """
    if not parts:
        return np.empty(0, dtype=np.int8)
    acc = parts[0]
    for part in parts[1:]:
        i = acc.shape[0]
        j = 0
        n = part.shape[0]
        while i > 0 and j < n and acc[i - 1] == -part[j]:
            i -= 1
            j += 1
        acc = np.concatenate([acc[:i], part[j:]])
    return acc


def _apply_numpy(arr: np.ndarray, slot: int) -> np.ndarray:
    """Fallback: vectorized substitution, then cancellation passes."""
    if arr.shape[0] == 0:
        return arr.copy()
    idx = arr.astype(np.intp) + 3
    lens = _LEN[slot][idx].astype(np.intp)
    offs = np.empty(arr.shape[0] + 1, dtype=np.intp)
    offs[0] = 0
    np.cumsum(lens, out=offs[1:])
    out = np.empty(offs[-1], dtype=np.int8)
    starts = offs[:-1]
    for j in range(3):
        mask = lens > j
        out[starts[mask] + j] = _BLK[slot][idx[mask], j]
    # input was reduced, so cancellations sit at block seams and are shallow;
    # a few masked passes settle them
    while out.shape[0] >= 2:
        sites = np.flatnonzero(out[:-1] == -out[1:])
        if sites.size == 0:
            break
        keep = np.ones(out.shape[0], dtype=bool)
        last = -2
        for i in sites:
            if i > last + 1 and keep[i]:
                keep[i] = False
                keep[i + 1] = False
                last = i
        out = out[keep]
    return out


def apply_gen(arr: np.ndarray, gen: int) -> np.ndarray:
    """Image of a reduced word under one braid letter's substitution, reduced."""
    slot = _GEN_SLOT[gen]
    if _apply_jit is not None:
        return _apply_jit(arr, _TABLES[slot])
    return _apply_numpy(arr, slot)


def to_array(letters: tuple[int, ...]) -> np.ndarray:
    return np.array(letters, dtype=np.int8)


def from_array(arr: np.ndarray) -> tuple[int, ...]:
    return tuple(int(x) for x in arr)
