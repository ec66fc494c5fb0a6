"""Diagram codes, surgery, traversal and census I/O."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from skeinverse.core.diagram import (
    Crossing,
    LinkDiagram,
    Locality,
    Smoothing,
    Status,
    TraversalContext,
    braid_closure,
    canonical_code,
    classify,
    disjoint_union,
    faces,
    load_census,
    mirror,
    parse_diagram,
    random_diagram,
    smooth,
    state_loop_count,
    trace_components,
    switch,
    unlink,
)
from skeinverse.core.errors import (
    ArcMultiplicityError,
    DiagramError,
    EmptyDiagramError,
    InvalidCrossingError,
    MalformedTokenError,
)


# --------------------------------------------------------------------- #
# Parsing
# --------------------------------------------------------------------- #
def test_unknot_token():
    D = parse_diagram("O 1")
    assert D.crossing_count == 0
    assert D.component_count == 1
    assert D == unlink(1)


def test_kink_signs(kink_negative, kink_positive):
    assert [x.sign for x in kink_negative.crossings] == [-1]
    assert [x.sign for x in kink_positive.crossings] == [1]


def test_trefoil_is_all_positive(trefoil):
    assert trefoil.crossing_count == 3
    assert trefoil.component_count == 1
    assert all(x.sign == 1 for x in trefoil.crossings)


def test_hopf_components_and_writhe(hopf):
    assert hopf.component_count == 2
    assert len(hopf.components) == 2
    assert classify(hopf).writhe == -2


@pytest.mark.parametrize(
    "text, error",
    [
        ("", EmptyDiagramError),
        ("O 0", EmptyDiagramError),
        ("Z(1,2)", MalformedTokenError),
        ("C(1,2,3)", MalformedTokenError),
        ("B(1,0)", MalformedTokenError),
        ("B(1) C(1,1,2,2)", MalformedTokenError),
        ("C(1,2,2,3)", ArcMultiplicityError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_diagram(text)


def test_errors_share_a_root():
    with pytest.raises(DiagramError):
        parse_diagram("C(x,1,1,2)")


def test_render_round_trip(trefoil):
    assert parse_diagram(trefoil.render()) == trefoil


def test_free_loops_combine_with_crossings():
    D = parse_diagram("C(1,1,2,2) O 2")
    assert D.crossing_count == 1
    assert D.free_loops == 2
    assert D.component_count == 3


# --------------------------------------------------------------------- #
# Braid closures and census
# --------------------------------------------------------------------- #
def test_braid_closure_writhe_and_components():
    assert classify(braid_closure([1, 1, 1])).writhe == 3
    assert braid_closure([1, 1, 1]).component_count == 1
    assert braid_closure([1, 1, 1, 1]).component_count == 2
    assert classify(braid_closure([1, -2, 1, -2])).writhe == 0


def test_braid_untouched_strands_become_loops():
    D = braid_closure([1], extra_loops=1)
    assert D.free_loops == 1
    assert D.crossing_count == 1


def test_census_shape(census):
    assert len(census) == 24
    assert census["unlink_3"].component_count == 3
    assert census["borromean"].component_count == 3
    assert census["torus_link_2_4"].component_count == 2
    assert census["figure_eight"].component_count == 1
    assert max(D.crossing_count for D in census.values()) == 7


def test_census_has_the_seven_crossing_set(census):
    knots = [f"knot_7_{k}" for k in range(1, 8)]
    for name in knots:
        assert census[name].crossing_count == 7, name
        assert census[name].component_count == 1, name
    link = census["torus_link_2_4_sum_trefoil"]
    assert link.crossing_count == 7
    assert link.component_count == 2


@pytest.mark.parametrize("name", ["knot_7_2", "knot_7_3", "knot_7_4", "knot_7_5"])
def test_seven_crossing_codes_are_planar_and_one_signed(census, name):
    D = census[name]
    assert abs(classify(D).writhe) == 7
    assert len(faces(D)) == 9


def test_census_header_is_checked(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("label,pd\nunknot,O 1\n", encoding="utf-8")
    with pytest.raises(DiagramError):
        load_census(bad)


def test_census_reads_custom_file(tmp_path):
    path = tmp_path / "mine.csv"
    path.write_text('name,code\nk,"C(1,1,2,2)"\n', encoding="utf-8")
    (entry,) = load_census(path)
    assert entry.name == "k"
    assert entry.diagram.crossing_count == 1


# --------------------------------------------------------------------- #
# Surgery
# --------------------------------------------------------------------- #
def test_switch_is_an_involution(trefoil):
    for x in range(trefoil.crossing_count):
        once = switch(trefoil, x)
        assert once.crossings[x].sign == -trefoil.crossings[x].sign
        assert switch(once, x) == trefoil


def test_switch_rejects_bad_index(trefoil):
    with pytest.raises(InvalidCrossingError):
        switch(trefoil, 3)


def test_mirror_negates_writhe(census):
    for D in census.values():
        assert classify(mirror(D)).writhe == -classify(D).writhe
        assert mirror(mirror(D)) == D


def test_smoothing_a_kink(kink_positive, kink_negative):
    assert smooth(kink_positive, 0, Smoothing.I) == unlink(2)
    assert smooth(kink_positive, 0, Smoothing.II) == unlink(1)
    assert smooth(kink_negative, 0, Smoothing.I) == unlink(1)
    assert smooth(kink_negative, 0, Smoothing.II) == unlink(2)


def test_smoothing_hopf_leaves_a_kink(hopf):
    for kind in Smoothing:
        out = smooth(hopf, 0, kind)
        assert out.crossing_count == 1
        assert out.component_count == 1


def test_state_loop_count(kink_positive):
    assert state_loop_count(kink_positive, [Smoothing.I]) == 2
    assert state_loop_count(kink_positive, [Smoothing.II]) == 1
    with pytest.raises(DiagramError):
        state_loop_count(kink_positive, [])


def test_disjoint_union(trefoil, hopf):
    D = disjoint_union(trefoil, hopf)
    assert D.crossing_count == 5
    assert D.component_count == 3
    assert classify(D).writhe == 1


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_smoothing_changes_component_count_by_locality(seed):
    D = random_diagram(seed, 6)
    mu = D.component_count
    for x in range(D.crossing_count):
        for kind in Smoothing:
            out = smooth(D, x, kind)
            assert out.crossing_count == D.crossing_count - 1
            if D.is_self_crossing(x):
                assert out.component_count in (mu, mu + 1)
            else:
                assert out.component_count == mu - 1


# --------------------------------------------------------------------- #
# Faces and canonical codes
# --------------------------------------------------------------------- #
def test_euler_relation_on_connected_diagrams(census):
    for D in census.values():
        if not D.crossings or D.free_loops:
            continue
        fs = faces(D)
        assert len(fs) == D.crossing_count + 2
        assert sum(len(f) for f in fs) == 4 * D.crossing_count


def test_canonical_code_ignores_braid_rotation():
    assert canonical_code(braid_closure([1, -2, 1, -2])) == canonical_code(braid_closure([-2, 1, -2, 1]))
    assert canonical_code(braid_closure([1, 1, 2, -1, -3, 2, -3])) == canonical_code(
        braid_closure([-3, 1, 1, 2, -1, -3, 2])
    )


def test_canonical_code_separates_mirrors(census):
    assert canonical_code(census["trefoil_right"]) != canonical_code(census["trefoil_left"])
    assert canonical_code(unlink(2)) != canonical_code(unlink(3))


# --------------------------------------------------------------------- #
# Traversal
# --------------------------------------------------------------------- #
def test_kink_is_good_from_the_canonical_base(kink_negative):
    report = classify(kink_negative)
    assert report.bad_count == 0
    assert report.first_bad is None


def test_hopf_canonical_report(hopf):
    report = classify(hopf)
    assert report.bad_count == 1
    assert report.first_bad == 1
    assert report.self_writhe == 0
    assert all(r.locality is Locality.INTER for r in report.records)
    assert report.records[0].status is Status.GOOD


def test_reversing_a_component_flips_inter_signs(hopf):
    ctx = TraversalContext((0, 1), (hopf.components[0][0], hopf.components[1][0]), (True, False))
    assert classify(hopf, ctx).writhe == 2


def test_self_crossing_signs_ignore_direction(trefoil):
    ctx = TraversalContext((0,), (trefoil.components[0][0],), (False,))
    assert classify(trefoil, ctx).writhe == 3


def test_context_is_validated(hopf):
    with pytest.raises(DiagramError):
        classify(hopf, TraversalContext((0, 0), (1, 3), (True, True)))
    with pytest.raises(DiagramError):
        classify(hopf, TraversalContext((0, 1), (3, 1), (True, True)))


def test_crossing_frame_rotation():
    x = Crossing.from_frame((5, 6, 7, 8), 2, 1)
    assert x.ends == (7, 8, 5, 6)
    assert x.over_in == 3
    assert x.sign == 1


def test_link_diagram_rejects_bad_numbering():
    with pytest.raises(DiagramError):
        LinkDiagram((Crossing((1, 1, 2, 3), 3),), 0)


def test_trace_components():
    table = trace_components(parse_diagram("C(1,3,2,4) C(3,1,4,2) O 1"))
    assert table.mu == 3
    assert table.free_loops == 1
    assert len(table.sequences) == 2
    assert table.arc_component[1] == table.arc_component[2]
    assert table.arc_component[1] != table.arc_component[3]


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_switching_every_bad_crossing_leaves_a_monotone_diagram(seed):
    D = random_diagram(seed, 6)
    report = classify(D)
    for x, record in enumerate(report.records):
        if record.status is Status.BAD:
            D = switch(D, x)
    assert classify(D).bad_count == 0
    assert classify(D).visit_order == report.visit_order
