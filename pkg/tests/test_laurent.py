"""Sparse integer Laurent polynomial arithmetic against a dict model."""

from __future__ import annotations

import random

import pytest

from veer.laurent import ONE, T, ZERO, LaurentPoly, lp


def _rand_poly(rng: random.Random, span: int = 6, terms: int = 5) -> LaurentPoly:
    coeffs = {}
    for _ in range(rng.randint(0, terms)):
        coeffs[rng.randint(-span, span)] = rng.randint(-9, 9)
    return lp(coeffs)


def _model(p: LaurentPoly) -> dict[int, int]:
    return {e: p.coeff(e) for e in range(-40, 41) if p.coeff(e) != 0}


def _mul_model(x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def test_constructors_and_anchors():
    assert ZERO.is_zero
    assert not ONE.is_zero
    assert ONE.coeff(0) == 1
    assert T.coeff(1) == 1
    assert lp({}) == ZERO
    assert lp({3: 0}) == ZERO
    assert LaurentPoly.const(7).coeff(0) == 7
    assert LaurentPoly.t_power(-2, 3).coeff(-2) == 3
    assert lp({0: 1, 1: 1}) == ONE + T


def test_ring_laws_against_dict_model():
    rng = random.Random(101)
    for _ in range(400):
        p, q, r = (_rand_poly(rng) for _ in range(3))
        mp, mq = _model(p), _model(q)
        assert _model(p + q) == {
            e: mp.get(e, 0) + mq.get(e, 0)
            for e in set(mp) | set(mq)
            if mp.get(e, 0) + mq.get(e, 0)
        }
        assert _model(p * q) == _mul_model(mp, mq)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == ZERO
        assert p + ZERO == p
        assert p * ONE == p
        assert -(-p) == p


def test_pow_and_shift():
    rng = random.Random(102)
    for _ in range(60):
        p = _rand_poly(rng, span=3, terms=3)
        acc = ONE
        for n in range(5):
            assert p ** n == acc
            acc = acc * p
        e = rng.randint(-5, 5)
        assert p.shift(e) == p * LaurentPoly.t_power(e)


def test_degrees_and_monomial():
    p = lp({-2: 3, 5: -1})
    assert p.min_degree() == -2
    assert p.max_degree() == 5
    assert p.as_monomial() is None
    assert lp({4: -3}).as_monomial() == (4, -3)
    assert ONE.as_monomial() == (0, 1)
    assert ZERO.as_monomial() is None


def test_eval_neg_one_and_abs_sum():
    rng = random.Random(103)
    for _ in range(200):
        p = _rand_poly(rng)
        m = _model(p)
        assert p.eval_neg_one() == sum(c * (-1) ** (e % 2) for e, c in m.items())
        assert p.coeff_abs_sum() == sum(abs(c) for c in m.values())
    assert lp({0: 1, 1: -1}).eval_neg_one() == 2


def test_degree_of_zero_raises():
    with pytest.raises(ValueError):
        ZERO.min_degree()
    with pytest.raises(ValueError):
        ZERO.max_degree()


def test_render_is_stable():
    assert str(ONE) == "1"
    assert str(ZERO) == "0"
    assert str(lp({1: -1, 0: 1})) == "-t + 1"
