"""Free group words, the braid action, Fox columns, boundary conjugation."""

from __future__ import annotations

import random

from veer.braid import BraidWord, delta2k, parse
from veer.burau import burau_unreduced, identity
from veer.freegroup import (
    GENERATORS,
    Y1,
    Y2,
    Y3,
    Z,
    FreeWord,
    artin_apply,
    boundary_power_exponent,
    delta2_conjugate,
    fox_column,
)


def _rand_braid(rng: random.Random, n: int) -> BraidWord:
    return BraidWord(tuple(rng.choice((1, -1, 2, -2)) for _ in range(n)))


def _rand_loop(rng: random.Random, n: int) -> FreeWord:
    return FreeWord(tuple(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(n)))


def test_free_word_basics():
    assert FreeWord((1, -1)).letters == ()
    assert (Y1 * Y2).letters == (1, 2)
    assert (Y1 * Y1.inverse()).letters == ()
    assert (Y2 ** -2).letters == (-2, -2)
    assert Y3.exponent_sum == 1
    assert Z.letters == (3, 2, 1)


def test_generator_images_are_pinned():
    assert artin_apply(parse("1"), Y1) == Y2
    assert artin_apply(parse("1"), Y2) == Y2 * Y1 * Y2.inverse()
    assert artin_apply(parse("1"), Y3) == Y3
    assert artin_apply(parse("-1"), Y2) == Y1
    assert artin_apply(parse("-1"), Y1) == Y1.inverse() * Y2 * Y1
    assert artin_apply(parse("2"), Y2) == Y3
    assert artin_apply(parse("2"), Y3) == Y3 * Y2 * Y3.inverse()
    assert artin_apply(parse("-2"), Y3) == Y2


def test_action_is_a_homomorphism_in_both_arguments():
    rng = random.Random(41)
    for _ in range(150):
        w1 = _rand_braid(rng, rng.randint(0, 8))
        w2 = _rand_braid(rng, rng.randint(0, 8))
        u = _rand_loop(rng, rng.randint(0, 8))
        v = _rand_loop(rng, rng.randint(0, 8))
        # rightmost braid letter acts first
        assert artin_apply(w1 * w2, u) == artin_apply(w1, artin_apply(w2, u))
        assert artin_apply(w1, u * v) == artin_apply(w1, u) * artin_apply(w1, v)
        assert artin_apply(BraidWord(()), u) == u
        assert artin_apply(w1, artin_apply(w1.inverse(), u)) == u


def test_braid_relation_acts_identically():
    rng = random.Random(42)
    lhs = parse("1 2 1")
    rhs = parse("2 1 2")
    for _ in range(100):
        u = _rand_loop(rng, rng.randint(0, 12))
        assert artin_apply(lhs, u) == artin_apply(rhs, u)


def test_boundary_loop_is_fixed():
    rng = random.Random(43)
    for _ in range(100):
        w = _rand_braid(rng, rng.randint(0, 15))
        assert artin_apply(w, Z) == Z
    # and exponent sum of every generator image stays 1
    for _ in range(50):
        w = _rand_braid(rng, rng.randint(0, 15))
        for gen in GENERATORS:
            assert artin_apply(w, gen).exponent_sum == 1


def test_fox_columns_the_identity_and_chain_rule():
    eye = identity(3, "unreduced")
    for i, gen in enumerate(GENERATORS):
        assert fox_column(gen) == eye.column(i + 1)
    rng = random.Random(44)
    for _ in range(150):
        w = _rand_braid(rng, rng.randint(0, 10))
        m = burau_unreduced(w)
        for i, gen in enumerate(GENERATORS):
            assert fox_column(artin_apply(w, gen)) == m.column(i + 1)


def test_delta2_conjugate_matches_the_central_word():
    rng = random.Random(45)
    for _ in range(100):
        u = _rand_loop(rng, rng.randint(0, 10))
        for k in (-2, -1, 0, 1, 2):
            zk = Z ** k
            assert delta2_conjugate(u, k) == zk * u * zk.inverse()
            assert delta2_conjugate(u, k) == artin_apply(delta2k(k), u)


def test_boundary_power_exponent():
    assert boundary_power_exponent(FreeWord(())) == 0
    for k in (-3, -1, 1, 2, 3):
        assert boundary_power_exponent(Z ** k) == k
    assert boundary_power_exponent(Y1) is None
    assert boundary_power_exponent(Y1 * Y2) is None
    assert boundary_power_exponent(Z * Y1) is None
