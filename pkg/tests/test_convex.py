import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from polyent.convex import (
    HPolytope,
    RationalInequality,
    VPolytope,
    _adjacent,
    _adjacent_rank,
    bravyi_inequalities,
    contains,
    dedupe_inequalities,
    enumerate_vertices,
    facet_hull,
    local_constraints,
    remove_redundant,
)
from polyent import catalog
from polyent.errors import Empty, Unbounded, UnsupportedDim
from polyent.ratlinalg import rank, solve


def unit_square():
    return HPolytope([
        RationalInequality([1, 0], -1), RationalInequality([-1, 0], 0),
        RationalInequality([0, 1], -1), RationalInequality([0, -1], 0),
    ])


def brute_force_vertices(p: HPolytope):
    """Independent oracle: intersect all d-subsets of boundary hyperplanes,
    keep feasible intersection points."""
    d = p.ambient_dim
    verts = set()
    for rows in itertools.combinations(p.ineqs, d):
        mat = [list(q.coeffs) for q in rows]
        rhs = [-q.offset for q in rows]
        if rank(mat) < d:
            continue
        x = solve(mat, rhs)
        if x is None:
            continue
        if all(q.satisfied(x) for q in p.ineqs):
            verts.add(tuple(x))
    return verts


def test_unit_square_vertices():
    v = enumerate_vertices(unit_square())
    assert set(v.verts) == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_vertices_sorted_and_exact():
    v = enumerate_vertices(unit_square())
    assert list(v.verts) == sorted(v.verts)
    assert all(isinstance(x, F) for vert in v.verts for x in vert)


def test_empty_system():
    with pytest.raises(Empty):
        enumerate_vertices(HPolytope([
            RationalInequality([1], -1), RationalInequality([-1], 2),
        ]))


def test_unbounded_system():
    with pytest.raises(Unbounded):
        enumerate_vertices(HPolytope([
            RationalInequality([-1, 0], 0), RationalInequality([0, -1], 0),
        ]))


def test_bravyi3_matches_prop_vertices():
    v = enumerate_vertices(bravyi_inequalities(3))
    assert set(v.verts) == {
        (F(1, 2), F(1, 2), F(1, 3), F(1, 3)),
        (F(2, 3), F(2, 3), F(1, 3), F(1, 3)),
        (F(1, 2), F(3, 4), F(1, 2), F(1, 4)),
        (F(3, 4), F(1, 2), F(1, 2), F(1, 4)),
        (F(1, 2), F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 1), F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 2), F(1, 1), F(1, 2), F(1, 2)),
        (F(1, 2), F(1, 2), F(1, 1), F(0, 1)),
        (F(1, 1), F(1, 1), F(1, 1), F(0, 1)),
    }


def test_bravyi3_equals_catalog_fixture():
    fix = catalog.load("223-generic")
    v1 = enumerate_vertices(bravyi_inequalities(3))
    v2 = enumerate_vertices(HPolytope(fix.generic_inequalities, dims=fix.dims))
    assert v1.verts == v2.verts


def test_bravyi4_cone_statement():
    v4 = set(enumerate_vertices(bravyi_inequalities(4)).verts)
    v3 = enumerate_vertices(bravyi_inequalities(3)).verts
    embedded = {tuple(list(x) + [1 - x[2] - x[3]]) for x in v3}
    assert v4 == embedded | {(F(1, 2), F(1, 2), F(1, 4), F(1, 4), F(1, 4))}


def test_bravyi3_tight_at_v9():
    # (1,1,1,0) is tight on lambda_A <= lambda_1 + lambda_2
    q = RationalInequality.geq([-1, 0, 1, 1], 0)  # x31+x32-x11 >= 0
    assert q.value((1, 1, 1, 0)) == 0


def test_bravyi_unsupported():
    with pytest.raises(UnsupportedDim):
        bravyi_inequalities(5)


def test_facet_hull_simplex():
    v = VPolytope([(0, 0), (1, 0), (0, 1)])
    h = facet_hull(v)
    assert enumerate_vertices(h).verts == v.verts
    assert len(h.ineqs) == 3


def test_facet_hull_roundtrip_on_ghz_vertices():
    verts = enumerate_vertices(bravyi_inequalities(3)).verts
    h = facet_hull(VPolytope(verts))
    assert enumerate_vertices(h).verts == verts


def test_facet_hull_lower_dimensional():
    # a segment in the plane: one free direction plus an equation pair
    v = VPolytope([(0, 0), (1, 1)])
    h = facet_hull(v)
    assert enumerate_vertices(h).verts == v.verts


def test_facet_hull_single_point():
    v = VPolytope([(F(1, 2), F(1, 3))])
    h = facet_hull(v)
    assert enumerate_vertices(h).verts == v.verts


def test_remove_redundant_keeps_square():
    r = remove_redundant(unit_square())
    assert set(r.ineqs) == set(unit_square().ineqs)


def test_remove_redundant_drops_duplicate():
    p = HPolytope(list(unit_square().ineqs) + [RationalInequality([2, 0], -2)])
    r = remove_redundant(p)
    assert len(r.ineqs) == 4


def test_remove_redundant_223_reduces_to_claimed_system():
    fix = catalog.load("223-generic")
    p = HPolytope(fix.generic_inequalities, dims=fix.dims)
    r = remove_redundant(p)
    dims = (2, 2, 3)
    claimed = dedupe_inequalities([
        RationalInequality.geq([2, 0, 0, 0], 1),     # 1/2 <= x11
        RationalInequality.geq([0, 2, 0, 0], 1),     # 1/2 <= x21
        RationalInequality.geq([-1, 0, 1, 1], 0),    # x11 <= x31+x32
        RationalInequality.geq([0, -1, 1, 1], 0),    # x21 <= x31+x32
        RationalInequality.geq([0, 0, -1, -1], -1),  # x31+x32 <= 1
        RationalInequality.geq([-1, -1, 1, 0], -1),  # x11+x21 <= 1+x31
        RationalInequality.geq([-1, 1, 0, 1], 0),    # x11-x21 <= x32
        RationalInequality.geq([1, -1, 0, 1], 0),
        RationalInequality.geq([-1, 1, 2, 1], 1),    # x11-x21 <= 2x31-1+x32
        RationalInequality.geq([1, -1, 2, 1], 1),
        RationalInequality.geq([0, 0, 1, 2], 1),     # (1-x31)/2 <= x32
        RationalInequality.geq([0, 0, 1, -1], 0),    # x32 <= x31
    ])
    assert set(r.ineqs) == set(claimed)
    assert enumerate_vertices(r).verts == enumerate_vertices(p).verts


def test_contains_origin_in_ghz():
    p = bravyi_inequalities(3)
    # 2x2x3 origin
    ok, viol = contains(p, (F(1, 2), F(1, 2), F(1, 3), F(1, 3)))
    assert ok and not viol


def test_contains_w_inequality_violated_by_origin():
    p = HPolytope([RationalInequality([-1, -1, -1], 2)])
    ok, viol = contains(p, (F(1, 2), F(1, 2), F(1, 2)))
    assert not ok and viol[0].value((F(1, 2),) * 3) == F(1, 2)


def test_contains_vertex_with_zero_slack():
    p = bravyi_inequalities(3)
    for v in enumerate_vertices(p).verts:
        ok, _ = contains(p, v)
        assert ok


def test_every_vertex_supports_enough_independent_rows():
    p = bravyi_inequalities(3)
    d = p.ambient_dim
    for v in enumerate_vertices(p).verts:
        active = [list(q.coeffs) for q in p.ineqs if q.value(v) == 0]
        assert rank(active) == d


@st.composite
def random_hpolytope(draw):
    d = draw(st.integers(min_value=2, max_value=3))
    n_extra = draw(st.integers(min_value=1, max_value=6))
    rows = []
    # a box keeps everything bounded
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append(RationalInequality(list(e), -1))
        rows.append(RationalInequality([-x for x in e], -1))
    for _ in range(n_extra):
        coeffs = draw(st.lists(st.integers(min_value=-3, max_value=3),
                               min_size=d, max_size=d))
        if all(c == 0 for c in coeffs):
            continue
        rows.append(RationalInequality(coeffs, draw(st.integers(min_value=-4, max_value=0))))
    return HPolytope(dedupe_inequalities(rows))


@settings(max_examples=60, deadline=None)
@given(random_hpolytope())
def test_dd_agrees_with_brute_force(p):
    try:
        verts = set(enumerate_vertices(p).verts)
    except Empty:
        assert not brute_force_vertices(p)
        return
    assert verts == brute_force_vertices(p)


@settings(max_examples=40, deadline=None)
@given(random_hpolytope())
def test_duality_roundtrip(p):
    try:
        v = enumerate_vertices(p)
    except Empty:
        return
    h = facet_hull(v)
    assert enumerate_vertices(h).verts == v.verts


def test_combinatorial_adjacency_matches_rank_test():
    # run the DD by hand on the Bravyi-3 homogenization and compare both
    # adjacency criteria at the final cone
    from polyent.convex import _homogenized_rows, _dd_extreme_rays, _idot

    rows = _homogenized_rows(bravyi_inequalities(3))
    rays = _dd_extreme_rays(rows)
    d = len(rows[0])
    processed = list(range(len(rows)))
    masks = []
    for r in rays:
        m = 0
        for pos, ri in enumerate(processed):
            if _idot(rows[ri], r) == 0:
                m |= 1 << pos
        masks.append(m)
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            assert _adjacent(masks, i, j, d) == _adjacent_rank(rows, processed, masks, i, j, d)


def test_local_constraints_223():
    rows = local_constraints((2, 2, 3))
    # 1/3 <= x31 and (1-x31)/2 <= x32 <= x31 are present
    assert RationalInequality([0, 0, -3, 0], 1) in rows
    assert RationalInequality([0, 0, -1, -2], 1) in rows
    assert RationalInequality([0, 0, -1, 1], 0) in rows
