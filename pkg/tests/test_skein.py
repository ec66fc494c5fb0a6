"""Skein invariants: known values, resolution order and Reidemeister moves."""

from __future__ import annotations

import time
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeinverse.core.diagram import (
    MoveKind,
    Smoothing,
    canonical_code,
    classify,
    mirror,
    random_diagram,
    smooth,
    unlink,
)
from skeinverse.core.errors import HomomorphismError, InvalidCrossingError
from skeinverse.core.ring import LaurentPoly, RingElement, equal, from_spec, get_hom
from skeinverse.core.skein import (
    DEFAULT_CHECKED,
    SkeinMemo,
    SkeinSettings,
    check_order_independence,
    check_reidemeister,
    compute_invariant,
    invariant_b1,
    invariant_b1_writhe,
    invariant_b2,
    invariant_b2_writhe,
    jones,
    q_polynomial,
)
from skeinverse.core.skein.checks import _writhe_pair_failures

q = LaurentPoly.variable("q")
x = LaurentPoly.variable("x")


# --------------------------------------------------------------------- #
# Ring-valued invariants
# --------------------------------------------------------------------- #
def test_kinks_are_unknots(kink_negative, kink_positive):
    for D in (kink_negative, kink_positive):
        assert invariant_b1(D).value == RingElement.v("B1", 1)
        assert invariant_b2(D).value == RingElement.v("B2", 1)


def test_unlinks():
    for n in (1, 2, 3):
        assert invariant_b1(unlink(n)).value == RingElement.v("B1", n)
    assert invariant_b2(unlink(1)).value == RingElement.v("B2", 1)


def test_b1_hopf(hopf):
    value = invariant_b1(hopf)
    assert value.bad == 1
    assert value.writhe == -2
    assert value.render() == "- e'*v_2 - a*v_1 - e*a*v_1"
    assert value.value != RingElement.v("B1", 2)
    g = lambda name: RingElement.gen("B1", name)  # noqa: E731
    raw = -g("e'") * RingElement.v("B1", 2) - g("a'") * RingElement.v("B1", 1) - g("e'") * g("a'") * RingElement.v("B1", 1)
    assert equal(value.value, raw)


def test_b2_does_not_separate_hopf_from_the_unlink(hopf):
    a, b = RingElement.gen("B2", "a"), RingElement.gen("B2", "b")
    v1 = RingElement.v("B2", 1)
    assert invariant_b2(hopf).value == a * v1 + b * v1
    assert invariant_b2(hopf).value == invariant_b2(unlink(2)).value


def test_writhe_form_on_kinks(kink_positive, kink_negative):
    A = lambda k: RingElement.gen("B1A", "A", k)  # noqa: E731
    v1 = RingElement.v("B1A", 1)
    f, F = invariant_b1_writhe(kink_positive)
    assert f.value == A(1) * v1
    assert F.value == v1
    f, F = invariant_b1_writhe(kink_negative)
    assert f.value == A(-1) * v1
    assert F.value == v1


def test_writhe_form_of_the_unknot():
    f, F = invariant_b1_writhe(unlink(1))
    assert f.value == F.value == RingElement.v("B1A", 1)


# --------------------------------------------------------------------- #
# Polynomial invariants
# --------------------------------------------------------------------- #
def test_jones_of_trefoils(census):
    right = jones(census["trefoil_right"]).value
    assert right == -(q**-16) + q**-12 + q**-4
    assert right.t_quarters() == {Fraction(4): -1, Fraction(3): 1, Fraction(1): 1}
    left = jones(census["trefoil_left"]).value
    assert left == -(q**16) + q**12 + q**4


def test_jones_of_hopf_and_unlink(hopf):
    assert jones(hopf).value == -(q**2) - q**10
    assert jones(unlink(2)).value == -(q**2) - q**-2
    assert jones(unlink(1)).value == 1


def test_jones_of_figure_eight(census):
    assert jones(census["figure_eight"]).value == q**-8 - q**-4 + 1 - q**4 + q**8


def test_jones_render_uses_t(census):
    text = jones(census["trefoil_right"]).render()
    assert "t" in text and "q" not in text


def test_q_polynomial(census, hopf):
    assert q_polynomial(census["trefoil_right"]).value == 2 * x**2 + 2 * x - 3
    assert q_polynomial(census["trefoil_left"]).value == 2 * x**2 + 2 * x - 3
    assert q_polynomial(hopf).value == 2 * x + 1 - 2 * x**-1
    assert q_polynomial(unlink(1)).value == 1


def test_q_ignores_mirroring(census):
    for name in ("figure_eight", "torus_link_2_4", "knot_5_2"):
        D = census[name]
        assert q_polynomial(mirror(D)).value == q_polynomial(D).value


def test_writhe_form_with_the_bracket_homomorphism(census):
    A = LaurentPoly.variable("A")
    value = invariant_b2_writhe(census["trefoil_right"], get_hom("bracket")).value
    assert value == -(A**-16) + A**-12 + A**-4


def test_writhe_form_refuses_plain_homomorphisms(trefoil):
    with pytest.raises(HomomorphismError):
        invariant_b2_writhe(trefoil, get_hom("q"))
    wrong = from_spec({
        "name": "wrong", "variables": ["A"], "b2_prime": True,
        "images": {"a": "A", "a'": "A", "b": "A**2", "b'": "A**2", "A": "A"},
        "v_first": 1, "v_ratio": "-A**2 - A**-2",
    })
    with pytest.raises(HomomorphismError):
        invariant_b2_writhe(trefoil, wrong)


def test_compute_invariant_dispatch(trefoil):
    assert compute_invariant("jones", trefoil).value == jones(trefoil).value
    assert compute_invariant("b1w", trefoil).invariant == "b1w"
    with pytest.raises(ValueError):
        compute_invariant("homfly", trefoil)


def test_as_dict_carries_text(hopf):
    data = invariant_b1(hopf).as_dict()
    assert data["text"] == "- e'*v_2 - a*v_1 - e*a*v_1"
    assert data["value"]["presentation"] == "B1"
    assert data["writhe"] == -2
    assert jones(hopf).as_dict()["value"]["variables"] == ["q"]


# --------------------------------------------------------------------- #
# Cache
# --------------------------------------------------------------------- #
def test_memo_reuses_values(census):
    memo = SkeinMemo(SkeinSettings(min_crossings=0))
    D = census["figure_eight"]
    first = invariant_b2(D, memo=memo).value
    misses = memo.misses
    assert len(memo) > 0
    assert invariant_b2(D, memo=memo).value == first
    assert memo.misses == misses
    assert memo.hits >= 1
    memo.clear()
    assert memo.stats() == {"entries": 0, "hits": 0, "misses": 0}


def test_disabled_memo_stays_empty(census):
    memo = SkeinMemo(SkeinSettings(memoize=False))
    invariant_b1(census["knot_6_2"], memo=memo)
    assert len(memo) == 0


def test_small_inputs_skip_the_memo(trefoil):
    memo = SkeinMemo()
    invariant_b1(trefoil, memo=memo)
    assert len(memo) == 0


def test_large_inputs_cache_their_small_subdiagrams(census):
    D = census["knot_6_2"]
    memo = SkeinMemo()
    value = invariant_b1(D, memo=memo).value
    assert value == invariant_b1(D, memo=None).value
    assert ("B1", canonical_code(D)) in memo
    site = classify(D).first_bad
    assert site is not None
    for kind in Smoothing:
        sub = smooth(D, site, kind)
        assert sub.crossing_count < memo.settings.min_crossings
        assert ("B1", canonical_code(sub)) in memo


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_cached_values_match_fresh_recursion(seed):
    D = random_diagram(seed, 6)
    memo = SkeinMemo(SkeinSettings(min_crossings=0))
    for name in ("b1", "b1w", "b2", "jones"):
        cached = compute_invariant(name, D, memo=memo).value
        assert cached == compute_invariant(name, D, memo=None).value, name
        assert compute_invariant(name, D, memo=memo).value == cached, name


# --------------------------------------------------------------------- #
# Self-checks
# --------------------------------------------------------------------- #
@pytest.mark.parametrize("name", ["hopf", "trefoil_right", "figure_eight", "torus_link_2_4"])
def test_resolution_order_does_not_matter(census, name):
    for report in check_order_independence(census[name], samples=5, seed=3):
        assert report.passed, report.as_dict()


@pytest.mark.parametrize("name", ["hopf", "trefoil_right", "knot_5_2"])
def test_order_check_forces_every_first_site(census, name):
    D = census[name]
    _, b2 = check_order_independence(D, samples=2, seed=0)
    assert b2.sites == list(range(D.crossing_count))
    assert b2.samples == D.crossing_count + 2
    assert b2.as_dict()["sites"] == b2.sites


def test_forced_first_site(trefoil):
    reference = invariant_b2(trefoil).value
    for site in range(trefoil.crossing_count):
        assert invariant_b2(trefoil, memo=None, first=site).value == reference
    with pytest.raises(InvalidCrossingError):
        invariant_b2(trefoil, first=3)


@pytest.mark.parametrize("seed", range(4))
def test_random_moves_keep_invariants(seed):
    D = random_diagram(seed, 4)
    report = check_reidemeister(D, trials=3, seed=seed, max_crossings=6)
    assert report.passed, report.as_dict()


def test_random_moves_keep_the_writhe_form(trefoil):
    report = check_reidemeister(trefoil, trials=3, seed=1, max_crossings=5, invariants=("b1w",))
    assert report.passed, report.as_dict()


def test_default_move_check_includes_the_writhe_form(trefoil):
    assert "b1w" in DEFAULT_CHECKED
    report = check_reidemeister(trefoil, trials=4, seed=2, max_crossings=6)
    assert "b1w" in report.invariants
    assert report.passed, report.as_dict()


def test_writhe_form_failures_name_f_and_F(kink_positive, hopf):
    assert _writhe_pair_failures(unlink(1), kink_positive, MoveKind.R1_PLUS) == []
    # a kink is not an R3 image: F survives, f is off by A
    assert _writhe_pair_failures(unlink(1), kink_positive, MoveKind.R3) == ["b1w:f"]
    assert _writhe_pair_failures(unlink(1), hopf, MoveKind.R2_PLUS) == ["b1w:F", "b1w:f"]


# --------------------------------------------------------------------- #
# Full-size runs
# --------------------------------------------------------------------- #
@pytest.mark.slow
def test_order_check_on_the_census(census_entries):
    for entry in census_entries:
        if entry.diagram.crossing_count > 6:
            continue
        for report in check_order_independence(entry.diagram, samples=20, seed=0):
            assert report.passed, (entry.name, report.as_dict())


@pytest.mark.slow
def test_reidemeister_suite_on_200_diagrams():
    start = time.perf_counter()
    failures = []
    for seed in range(200):
        report = check_reidemeister(random_diagram(seed, 8), trials=1, seed=seed, max_crossings=8)
        if not report.passed:
            failures.append(report.as_dict())
    elapsed = time.perf_counter() - start
    assert not failures, failures[:3]
    assert elapsed < 120, f"{elapsed:.1f}s"
