"""Ring elements, rewriting normal forms and confluence sampling."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from skeinverse.core.errors import PresentationMismatchError, RingError
from skeinverse.core.ring import (
    B1A,
    PRESENTATIONS,
    RingElement,
    equal,
    get_hom,
    normalize,
    random_element,
    relations,
    sample_confluence,
    specialize,
)
from skeinverse.core.util.random import make_rng


def g(p, name, k=1):
    return RingElement.gen(p, name, k)


def v(p, n):
    return RingElement.v(p, n)


# --------------------------------------------------------------------- #
# Arithmetic
# --------------------------------------------------------------------- #
def test_integer_lifting():
    x = 2 * g("B2", "a")
    assert x - g("B2", "a") == g("B2", "a")
    assert (1 - g("B2", "a")) + g("B2", "a") == RingElement.one("B2")
    assert (x - x).is_zero()


def test_b_expands_in_type_one_rings():
    assert g("B1", "b") == g("B1", "e") * g("B1", "a")
    assert g("B1A", "b'") == g("B1A", "e'") * g("B1A", "a'")


def test_v_times_v_is_rejected():
    with pytest.raises(RingError):
        v("B1", 1) * v("B1", 2)


def test_presentations_do_not_mix():
    with pytest.raises(PresentationMismatchError):
        g("B1", "a") + g("B2", "a")


def test_generator_checks():
    with pytest.raises(RingError):
        g("B1", "A")
    with pytest.raises(RingError):
        g("B2", "a", -1)
    with pytest.raises(RingError):
        v("B2", 0)
    assert g("B1A", "A", -2) * g("B1A", "A", 2) == RingElement.one("B1A")


def test_v_linearity_and_degree():
    x = g("B1", "a") * v("B1", 3) + v("B1", 1)
    assert x.v_linear()
    assert x.max_n() == 3
    assert not (x + 1).v_linear()


# --------------------------------------------------------------------- #
# Normal forms
# --------------------------------------------------------------------- #
def test_small_normal_forms():
    assert normalize(g("B1", "e", 2)) == RingElement.one("B1")
    assert normalize((g("B1", "e'") - g("B1", "e")) * g("B1", "a")).is_zero()
    assert normalize(v("B1", 2)) == v("B1", 2)
    assert normalize(v("B2", 2)) == g("B2", "a") * v("B2", 1) + g("B2", "b") * v("B2", 1)


def test_equal_in_b2():
    a, b, bp = g("B2", "a"), g("B2", "b"), g("B2", "b'")
    assert equal(a * bp, a * b)
    assert equal((1 - a) * a, (1 - b) * b)
    assert not equal(v("B2", 1), v("B2", 1) * a)


def test_v_symbols_stay_apart_in_b1():
    assert not equal(v("B1", 1), v("B1", 2))


@pytest.mark.parametrize("name", sorted(PRESENTATIONS))
def test_listed_relations_hold(name):
    rels = relations(name, n_max=4)
    assert rels
    for rel in rels:
        assert normalize(rel.residual()).is_zero(), rel.describe()


def test_b1a_lists_its_quotient_relations():
    groups = {rel.name: rel.group for rel in relations("B1A", n_max=3)}
    assert groups["e'v_n=ev_n"] == "quotient"
    assert groups["a'v_n=av_n"] == "quotient"
    assert {rule.name for rule in B1A.rules if rule.quotient} == {"6'", "7'"}
    assert not any(rule.quotient for rule in PRESENTATIONS["B1"].rules)
    # equal() answers in the quotient: e'v_1 and ev_1 are identified
    assert equal(g("B1A", "e'") * v("B1A", 1), g("B1A", "e") * v("B1A", 1))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000), name=st.sampled_from(sorted(PRESENTATIONS)))
def test_normalize_is_idempotent(seed, name):
    x = random_element(name, make_rng(seed))
    once = normalize(x)
    assert normalize(once) == once
    assert equal(x, once)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000), name=st.sampled_from(sorted(PRESENTATIONS)))
def test_rule_order_does_not_matter(seed, name):
    report = sample_confluence(name, samples=5, orders=4, rnd=make_rng(seed))
    assert report.passed, report.divergent
    assert report.as_dict()["presentation"] == name


# --------------------------------------------------------------------- #
# Rendering and JSON
# --------------------------------------------------------------------- #
def test_render():
    assert RingElement.zero("B1").render() == "0"
    x = -g("B1", "e'") * v("B1", 2) - g("B1", "a") * v("B1", 1) - g("B1", "e") * g("B1", "a") * v("B1", 1)
    assert x.render() == "- e'*v_2 - a*v_1 - e*a*v_1"
    assert (2 * g("B1A", "A", -1)).render() == "2*A^-1"


def test_json_round_trip():
    x = g("B1A", "A", -3) * g("B1A", "a") * v("B1A", 2) - 3
    data = json.loads(json.dumps(x.to_json()))
    assert RingElement.from_json(data) == x
    assert data["presentation"] == "B1A"


def test_sum_helper():
    items = [v("B2", 1), g("B2", "a") * v("B2", 1), v("B2", 1)]
    assert RingElement.sum("B2", items) == v("B2", 1) * 2 + g("B2", "a") * v("B2", 1)


# --------------------------------------------------------------------- #
# Specialization
# --------------------------------------------------------------------- #
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000))
def test_specialize_respects_sums_and_scalar_products(seed):
    rnd = make_rng(seed)
    h = get_hom("jones")
    x = random_element("B2", rnd, max_n=0)
    y = random_element("B2", rnd)
    assert specialize(x + y, h) == specialize(x, h) + specialize(y, h)
    assert specialize(x * y, h) == specialize(x, h) * specialize(y, h)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000))
def test_specialize_is_constant_on_normal_forms(seed):
    h = get_hom("q")
    x = random_element("B1", make_rng(seed))
    assert specialize(x, h) == specialize(normalize(x), h)


# --------------------------------------------------------------------- #
# Full-size runs
# --------------------------------------------------------------------- #
@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(PRESENTATIONS))
def test_confluence_on_1000_elements(name):
    report = sample_confluence(name, samples=1000, orders=10, rnd=make_rng(0))
    assert report.passed, report.divergent[:3]


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(PRESENTATIONS))
def test_normalize_is_idempotent_on_1000_elements(name):
    rnd = make_rng(1)
    for _ in range(1000):
        once = normalize(random_element(name, rnd))
        assert normalize(once) == once
