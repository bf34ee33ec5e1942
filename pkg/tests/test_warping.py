from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from warpdeg.codec import emit_gauss, parse_gauss, parse_pd, relabel_random
from warpdeg.errors import NotKnotShadow
from warpdeg.region_opt import independent_sets_for_base, region_choice_matrix
from warpdeg.shadow import region_incidence
from warpdeg.warping import (
    BACKWARD,
    FORWARD,
    Diagram,
    OrientedBasedDiagram,
    alternating_assignments,
    over_pass_bases,
    warping_degree_based,
    warping_degree_diagram,
    warping_degree_shadow,
    warping_set,
)

from conftest import curl_curl_shadow, from_gauss
from oracles import alternating_words, warp_from_sequence


def test_trefoil_two_mirror_diagrams(trefoil):
    d0, d1 = alternating_assignments(trefoil)
    assert d0.is_alternating() and d1.is_alternating()
    assert d0.mirror() == d1


def test_curl_curl_alternates(curl_curl):
    d0, d1 = alternating_assignments(curl_curl)
    assert d0.is_alternating() and d1.is_alternating()


def test_census_assignments_alternate(knot_census_6):
    for s in knot_census_6:
        for d in alternating_assignments(s):
            assert d.is_alternating()
            n = len(d.passes)
            assert all(d.is_over[i] != d.is_over[(i + 1) % n] for i in range(n))


def test_trefoil_single_warping_crossing(trefoil):
    d = alternating_assignments(trefoil)[0]
    for r in (FORWARD, BACKWARD):
        for k, _ in over_pass_bases(d, r):
            assert len(warping_set(OrientedBasedDiagram(d, r, k))) == 1


def test_curl_curl_monotone(curl_curl):
    for r in (FORWARD, BACKWARD):
        values = []
        for d in alternating_assignments(curl_curl):
            value, base = warping_degree_diagram(d, r)
            values.append(value)
            if value == 0:
                assert warping_set(OrientedBasedDiagram(d, r, base)) == frozenset()
        # one assignment is monotone from a suitable base; its mirror never is
        assert sorted(values) == [0, 1]


def test_trefoil_diagram_degree(trefoil):
    for d in alternating_assignments(trefoil):
        for r in (FORWARD, BACKWARD):
            assert warping_degree_diagram(d, r)[0] == 1


@pytest.mark.parametrize("code,expected", [
    ("1 2 3 1 2 3", 1),
    ("1 2 3 4 5 1 2 3 4 5", 2),
    ("1 2 3 4 5 6 7 1 2 3 4 5 6 7", 3),
    ("1 1 2 2", 0),
])
def test_shadow_degree_examples(code, expected):
    s = curl_curl_shadow() if code == "1 1 2 2" else from_gauss(code)
    assert warping_degree_shadow(s).d_p == expected


def test_obd_validation(trefoil):
    d = alternating_assignments(trefoil)[0]
    with pytest.raises(ValueError):
        OrientedBasedDiagram(d, 2, 0)
    with pytest.raises(ValueError):
        OrientedBasedDiagram(d, FORWARD, 6)


def test_link_rejected():
    with pytest.raises(NotKnotShadow):
        warping_degree_shadow(parse_pd("P[(1,3,2,4),(3,1,4,2)]"))


def test_witness_is_least_triple(knot_census_6):
    for s in knot_census_6:
        rep = warping_degree_shadow(s)
        triples = [(rep.per_base[a][r][k], a, r, k)
                   for a in (0, 1) for r in (0, 1) for k in range(2 * s.crossing_count)]
        best = min(triples)
        assert (rep.d_p, *rep.witness) == best


def test_mirror_complement_and_range(knot_census_6):
    for s in knot_census_6:
        c = s.crossing_count
        d0, d1 = alternating_assignments(s)
        for r in (FORWARD, BACKWARD):
            for k in range(2 * c):
                a = warping_degree_based(d0, r, k)
                b = warping_degree_based(d1, r, k)
                assert 0 <= a <= c and a + b == c


def test_over_pass_bases_attain_minimum(knot_census_6):
    for s in knot_census_6:
        for d in alternating_assignments(s):
            for r in (FORWARD, BACKWARD):
                best, _ = warping_degree_diagram(d, r)
                bases = over_pass_bases(d, r)
                assert len(bases) == s.crossing_count
                for k, x in bases:
                    assert warping_degree_based(d, r, k) == best
                    obd = OrientedBasedDiagram(d, r, k)
                    # the crossing right after the base is met over first
                    first = obd.pass_order()[0]
                    assert d.passes[first] == x and d.is_over[first]


def test_degree_matches_string_oracle(reduced_knots_7, knot_census_6):
    for s in list(knot_census_6) + list(reduced_knots_7):
        seq = list(parse_gauss(emit_gauss(s)))
        expected = min(warp_from_sequence(w) for w in alternating_words(seq))
        assert warping_degree_shadow(s).d_p == expected


def test_regions_see_both_kinds(reduced_knots_7):
    for s in reduced_knots_7:
        if s.crossing_count > 6:
            continue
        inc = region_incidence(s)
        for d in alternating_assignments(s):
            for r in (FORWARD, BACKWARD):
                for k, x in over_pass_bases(d, r):
                    warp = warping_set(OrientedBasedDiagram(d, r, k))
                    for region in inc:
                        if x in region:
                            continue
                        assert region & warp and region - warp


def test_every_witness_set_bounds_degree(reduced_knots_7):
    for s in reduced_knots_7:
        if s.crossing_count > 6:
            continue
        c = s.crossing_count
        m = region_choice_matrix(s)
        for d in alternating_assignments(s):
            for r in (FORWARD, BACKWARD):
                dd, _ = warping_degree_diagram(d, r)
                for k, x in over_pass_bases(d, r):
                    for v in independent_sets_for_base(m, x):
                        n = len(v.regions)
                        assert n <= warping_degree_based(d, r, k) == dd <= c - n - 1


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_warping_invariant_under_relabeling(reduced_knots_7, data):
    s = data.draw(st.sampled_from(reduced_knots_7))
    c = s.crossing_count
    perm = data.draw(st.permutations(range(c)))
    rots = data.draw(st.lists(st.integers(0, 3), min_size=c, max_size=c))
    flip = data.draw(st.booleans())
    t = relabel_random(s, perm, rots, flip)
    assert warping_degree_shadow(t).d_p == warping_degree_shadow(s).d_p


def test_diagram_rejects_wrong_length(trefoil):
    with pytest.raises(ValueError):
        Diagram(trefoil, (0, 1))
    with pytest.raises(ValueError):
        Diagram(trefoil, (0, 0, 0))
