import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from pingpong.circle import LiftedMap, PLCircleMap
from pingpong.config import Configuration
from pingpong.freegroup import Word, ball
from pingpong.orders import (
    CentralElement,
    circular_order,
    cocycle_check,
    cofinality_bound,
    lift_value,
    linear_compare,
    nondegeneracy_check,
    order_agreement,
    quotient_circular,
)
from pingpong.realize import standard_realization


def W(s, n=2):
    return Word.parse(s, n)


def E(s, n=2):
    return CentralElement.parse(s, n)


def test_schottky_basic_triple(schottky_r):
    # a.0 = 5/44 and b.0 = 15/44 sit counterclockwise after 0
    assert circular_order(schottky_r, W(""), W("a"), W("b")) == 1
    assert circular_order(schottky_r, W(""), W("b"), W("a")) == -1


def test_degenerate_triples(exotic_r):
    assert circular_order(exotic_r, W("ab"), W("ab"), W("B")) == 0
    assert circular_order(exotic_r, W(""), W("a"), W("")) == 0


def test_rank_mismatch(schottky_r):
    with pytest.raises(ValueError):
        circular_order(schottky_r, W("", 3), W("a"), W("b"))


words3 = st.lists(st.sampled_from("aAbB"), max_size=5).map(lambda xs: W("".join(xs)))


@settings(max_examples=150, deadline=None)
@given(words3, words3, words3)
def test_cyclic_and_antisymmetric(exotic_r, x, y, z):
    c = circular_order(exotic_r, x, y, z)
    assert c == circular_order(exotic_r, y, z, x)
    assert c == -circular_order(exotic_r, y, x, z)
    assert (c == 0) == (len({x, y, z}) < 3)


@settings(max_examples=100, deadline=None)
@given(words3, words3, words3, words3)
def test_left_invariance(schottky_r, h, x, y, z):
    assert circular_order(schottky_r, h * x, h * y, h * z) == circular_order(schottky_r, x, y, z)


def test_cocycle_check_passes(schottky_r, exotic_r):
    assert cocycle_check(schottky_r, 2, multipliers=5) is None
    assert nondegeneracy_check(exotic_r, 3) is None


def test_central_element_parse():
    assert E("ab:-2") == CentralElement(W("ab"), -2)
    assert E("1") == CentralElement(W(""), 0)
    assert E(":3") == CentralElement(W(""), 3)
    assert str(E("aB:1")) == "aB:1"
    assert E("a:1") * E("A:2") == CentralElement(W(""), 3)


def test_lift_value_matches_composed_lifts(exotic_r):
    # oracle: compose LiftedMap objects instead of iterating letter by letter
    for w in ball(2, 3):
        total = LiftedMap(PLCircleMap.identity())
        for letter in w.letters:
            total = total @ exotic_r.lift(letter)
        assert lift_value(exotic_r, CentralElement(w, 2)) == total(0) + 2


def test_linear_compare_examples(schottky_r):
    assert linear_compare(schottky_r, E("1:1"), E("1:0")) == 1
    assert linear_compare(schottky_r, E("a"), E("b")) == -1
    assert linear_compare(schottky_r, E("a"), E("a")) == 0
    assert linear_compare(schottky_r, E("a:-1"), E("1")) == -1
    assert lift_value(schottky_r, E("a")) == F(5, 44)


def test_linear_order_strict_and_invariant(exotic_r):
    elems = [CentralElement(g, m) for g in ball(2, 2) for m in (-1, 0, 1)]
    vals = {u: lift_value(exotic_r, u) for u in elems}
    assert len(set(vals.values())) == len(elems)
    rng = random.Random(3)
    for _ in range(200):
        h, u, v = CentralElement(rng.choice(ball(2, 2)), rng.randint(-2, 2)), rng.choice(elems), rng.choice(elems)
        assert linear_compare(exotic_r, h * u, h * v) == linear_compare(exotic_r, u, v)


def test_cofinality(exotic_r):
    for g in ball(2, 3):
        N = cofinality_bound(exotic_r, g)
        assert linear_compare(exotic_r, CentralElement(W(""), -N), CentralElement(g)) == -1
        assert linear_compare(exotic_r, CentralElement(g), CentralElement(W(""), N)) == -1


def test_quotient_recovers_circular_order(exotic_r):
    words = ball(2, 2)
    for x, y, z in itertools.product(words, repeat=3):
        assert quotient_circular(exotic_r, x, y, z) == circular_order(exotic_r, x, y, z)


def test_order_agreement_between_layouts(exotic):
    ra, rb = standard_realization(exotic), standard_realization(exotic, "perturbed")
    assert order_agreement(ra, rb, 2) is None


def test_order_agreement_detects_difference(schottky_r):
    other = standard_realization(Configuration.from_text(2, "aAbB"))
    bad = order_agreement(schottky_r, other, 2)
    assert bad is not None and bad.kind == "disagreement"
    assert bad.values[0] != bad.values[1]
