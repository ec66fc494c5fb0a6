"""Specializations of the presented rings into Laurent polynomials."""

from __future__ import annotations

import json

import pytest

from skeinverse.core.errors import MissingImageError, RingError
from skeinverse.core.ring import (
    BUILTIN_HOMS,
    LaurentPoly,
    RingElement,
    check_hom,
    from_spec,
    get_hom,
    load_hom,
    specialize,
)

WRONG = {
    "name": "wrong",
    "variables": ["A"],
    "images": {"a": "A", "a'": "A", "b": "A**2", "b'": "A**2"},
    "v_first": 1,
    "v_ratio": "-A**2 - A**-2",
}


def test_builtins_are_registered():
    assert set(BUILTIN_HOMS) == {"jones", "bracket", "q", "kauffman-remark"}
    with pytest.raises(RingError):
        get_hom("homfly")


def test_jones_satisfies_the_writhe_relations():
    report = check_hom(get_hom("jones"), n_max=10)
    assert report.presentation == "B2'"
    assert report.passed, [r.as_dict() for r in report.failures]


def test_jones_is_not_a_plain_b2_homomorphism():
    report = check_hom(get_hom("jones"), n_max=4, b2_prime=False)
    assert not report.passed
    assert "(1-a)a=(1-b)b" in {r.relation for r in report.failures}


def test_q_on_b1():
    report = check_hom(get_hom("q"), n_max=8)
    assert report.presentation == "B1"
    assert report.passed


def test_kauffman_remark_on_b1a():
    report = check_hom(get_hom("kauffman-remark"), n_max=8)
    assert report.passed, [r.as_dict() for r in report.failures]


def test_wrong_homomorphism_is_caught():
    report = check_hom(from_spec(WRONG), n_max=4)
    assert not report.passed
    assert "(1-a)a=(1-b)b" in {r.relation for r in report.failures}
    assert report.as_dict()["passed"] is False


def test_check_needs_two_unlinks():
    with pytest.raises(RingError):
        check_hom(get_hom("jones"), n_max=1)


def test_bracket_unlink_images():
    h = get_hom("bracket")
    A = LaurentPoly.variable("A")
    assert h.v_image(1) == 1
    assert h.v_image(2) == -(A**2) - A**-2
    assert h.v_image(3) == (A**2 + A**-2) ** 2


def test_closed_unlink_images():
    h = get_hom("kauffman-remark")
    x = LaurentPoly.variable("x")
    assert h.v_image(1) == 1
    assert h.v_image(3) == x**-4


def test_specialize_q():
    h = get_hom("q")
    x = LaurentPoly.variable("x")
    a = RingElement.gen("B1", "a")
    assert specialize(a * RingElement.v("B1", 1), h) == -x
    assert specialize(RingElement.v("B1", 2), h) == 2 * x**-1 - 1


def test_missing_image():
    h = from_spec(WRONG)
    with pytest.raises(MissingImageError):
        h.image("A")
    with pytest.raises(RingError):
        h.v_image(0)


@pytest.mark.parametrize(
    "data",
    [
        {"name": "x", "images": {"a": "q"}},
        {"name": "x", "variables": ["q"]},
        {"name": "x", "variables": ["q"], "images": {"a": "q +* 2"}},
        {"name": "x", "variables": ["q"], "images": {"a": "q"}, "presentation": "B9"},
        {"name": "x", "variables": ["q"], "images": {"a": "q"}, "v_closed": "n +* 2"},
    ],
)
def test_bad_definitions(data):
    with pytest.raises(RingError):
        from_spec(data)


def test_load_hom_from_file(tmp_path):
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps(WRONG), encoding="utf-8")
    h = load_hom(str(path))
    assert h.name == "wrong"
    assert h.presentation == "B2"
    assert load_hom("jones") is get_hom("jones")


def test_load_hom_errors(tmp_path):
    with pytest.raises(RingError):
        load_hom(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(RingError):
        load_hom(str(bad))
