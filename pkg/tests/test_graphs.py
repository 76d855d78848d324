import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_connected_graph
from lcverify import graphs as G
from lcverify.graphs import Graph, IntersectionArray
from lcverify.seq import IntPolynomial, poly_mul, poly_pow
from oracles import intersection_array as brute_array
from oracles import profile as brute_profile


def test_graph_validation():
    with pytest.raises(G.GraphError, match="loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(G.GraphError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(G.GraphError, match="outside"):
        Graph(3, [(0, 3)])


@pytest.mark.parametrize("family, params, n, m, deg", [
    ("cycle", (5,), 5, 5, 2),
    ("complete", (4,), 4, 6, 3),
    ("petersen", (), 10, 15, 3),
    ("triangle_replaced_petersen", (), 30, 45, 3),
    ("hypercube", (3,), 8, 12, 3),
    ("hamming", (2, 3), 9, 18, 4),
    ("johnson", (5, 2), 10, 30, 6),
])
def test_named_regular(family, params, n, m, deg):
    g = G.build_named(family, *params)
    assert (g.n, g.m) == (n, m)
    assert set(g.degrees().tolist()) == {deg}


def test_named_errors():
    with pytest.raises(G.GraphError, match="q >= 3"):
        G.build_named("cycle", 2)
    with pytest.raises(G.GraphError, match="d <= n-1"):
        G.build_named("johnson", 3, 3)
    with pytest.raises(G.GraphError, match="unknown family"):
        G.build_named("moebius")


def test_theorem1_family():
    g = G.theorem1_family(5)
    assert g.n == 8 and g.degree(0) == 2
    assert G.distance_profile(g, 0).counts == (1, 2, 5)
    assert G.distance_profile(g, 1).counts == (1, 6, 1)
    assert not G.is_ddr(g)
    assert not G.is_lc_at(g, 0).holds
    verdict, witness = G.is_lc_graph(g)
    assert verdict.holds and witness == 1


def test_triangle_replaced_petersen():
    g = G.triangle_replaced_petersen()
    assert G.is_ddr(g)
    prof = G.distance_profile(g, 0).counts
    assert prof[:4] == (1, 3, 4, 6)
    assert prof == tuple(brute_profile(g.n, g.edges, 0))
    v = G.is_lc_at(g, 0)
    assert not v.holds and v.index == 2
    assert not G.is_lc_graph(g)[0].holds
    assert G.is_distance_regular(g) is None
    # regression value from the polynomial scan, confirmed by the explicit square below
    assert G.minimal_lc_power(g, 0, 10) == 2
    assert G.power_profile_crosscheck(g, 0, 2)


def test_cartesian_product_examples():
    k2 = G.complete(2)
    sq = G.cartesian_product(k2, k2)
    assert sq.n == 4 and set(sq.degrees().tolist()) == {2}
    assert G.is_distance_regular(sq) == G.is_distance_regular(G.cycle(4))
    c5 = G.cycle(5)
    assert G.cartesian_product(c5, c5).m == 50
    assert G.cartesian_power(k2, 3).n == 8
    assert G.cartesian_power(c5, 1) == c5
    h = G.cartesian_power(G.complete(3), 2)
    assert h.n == 9 and set(h.degrees().tolist()) == {4}


def test_product_degree_rule(rng):
    a, b = random_connected_graph(rng, 5), random_connected_graph(rng, 4)
    p = G.cartesian_product(a, b)
    for u, v in itertools.product(range(a.n), range(b.n)):
        assert p.degree(u * b.n + v) == a.degree(u) + b.degree(v)


def test_product_identity_random(rng):
    for _ in range(25):
        a = random_connected_graph(rng, int(rng.integers(1, 8)))
        b = random_connected_graph(rng, int(rng.integers(1, 8)))
        p = G.cartesian_product(a, b)
        for x1 in range(a.n):
            for x2 in range(b.n):
                assert G.profile_polynomial(p, x1 * b.n + x2) == poly_mul(
                    G.profile_polynomial(a, x1), G.profile_polynomial(b, x2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_power_identity(rng, n):
    g = random_connected_graph(rng, 5)
    for x in range(g.n):
        assert G.power_profile_crosscheck(g, x, n)


def test_cycle_generating_functions():
    for q in range(3, 9):
        s = q // 2
        if q % 2 == 0:
            base = IntPolynomial([1] + [2] * (s - 1) + [1])
        else:
            base = IntPolynomial([1] + [2] * s)
        for n in range(1, 5):
            if q ** n > 5000:
                continue
            g = G.cartesian_power(G.cycle(q), n)
            assert G.profile_polynomial(g, 0) == poly_pow(base, n)


@pytest.mark.parametrize("g, prof", [
    (G.petersen(), (1, 3, 6)),
    (G.hypercube(4), (1, 4, 6, 4, 1)),
    (G.cycle(5), (1, 2, 2)),
    (G.cycle(4), (1, 2, 1)),
    (G.complete(6), (1, 5)),
])
def test_profiles(g, prof):
    for x in range(g.n):
        assert G.distance_profile(g, x).counts == prof


def test_disconnected_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(G.DisconnectedGraphError, match="vertex 2 unreachable"):
        G.distance_profile(g, 0)
    with pytest.raises(G.DisconnectedGraphError):
        G.is_ddr(g)


@pytest.mark.parametrize("g", [G.petersen(), G.cycle(5), G.hypercube(3), G.cycle(7), G.johnson(6, 3),
                               G.hamming(3, 3), G.complete(5), G.complete_bipartite(3, 3),
                               G.triangle_replaced_petersen(), G.theorem1_family(3)])
def test_dr_detection_against_brute_force(g):
    ia = G.is_distance_regular(g)
    ref = brute_array(g.n, g.edges)
    if ref is None:
        assert ia is None
    else:
        assert (list(ia.b), list(ia.c)) == ref
        assert G.is_ddr(g)
        assert G.valencies_from_intersection_array(ia) == G.distance_profile(g, 0).counts


def test_known_arrays():
    assert str(G.is_distance_regular(G.petersen())) == "{3,2;1,1}"
    assert str(G.is_distance_regular(G.cycle(5))) == "{2,1;1,1}"
    assert str(G.is_distance_regular(G.hypercube(3))) == "{3,2,1;1,2,3}"


def test_random_graphs_dr_implies_ddr(rng):
    for _ in range(40):
        g = random_connected_graph(rng, int(rng.integers(2, 10)), 0.5)
        ia = G.is_distance_regular(g)
        assert (ia is None) == (brute_array(g.n, g.edges) is None)
        if ia is not None:
            assert G.is_ddr(g)


@pytest.mark.parametrize("b, c, vals", [
    ((3, 2), (1, 1), (1, 3, 6)),
    ((54, 34, 16), (1, 4, 9), (1, 54, 459, 816)),
    ((2, 1), (1, 1), (1, 2, 2)),
    ((5, 4), (1, 2), (1, 5, 10)),
])
def test_valencies_and_certificate(b, c, vals):
    ia = IntersectionArray(b, c)
    assert G.valencies_from_intersection_array(ia) == vals
    cert = G.drg_lc_certificate(ia)
    assert cert["b_monotone"] and cert["c_monotone"] and cert["lc"].holds


def test_j21_3_valency_sum():
    assert sum(G.valencies_from_intersection_array(IntersectionArray((54, 34, 16), (1, 4, 9)))) == comb(21, 3)


def test_infeasible_array():
    with pytest.raises(G.InfeasibleArrayError, match="v_2"):
        G.valencies_from_intersection_array(IntersectionArray((3, 2), (1, 4)))
    with pytest.raises(G.InfeasibleArrayError):
        G.valencies_from_intersection_array(IntersectionArray((3, 0), (1, 1)))


def test_srg():
    p = G.srg_parameters(G.petersen())
    assert (p.v, p.k, p.lam, p.mu) == (10, 3, 0, 1)
    assert p.counting_identity()
    p5 = G.srg_parameters(G.cycle(5))
    assert (p5.v, p5.k, p5.lam, p5.mu) == (5, 2, 0, 1)
    assert G.srg_parameters(G.cycle(6)) is None
    assert G.srg_bounds(2) == (5, 5)
    assert G.srg_bounds(3) == (6, 10)
    assert G.srg_bounds(1) == (3, 2)
    assert G.srg_bounds(4) == (7, 17)
    assert G.srg_bounds_check(p).holds and G.srg_bounds_check(p5).holds


def test_srg_identity_on_srgs():
    for g in (G.petersen(), G.cycle(5), G.johnson(6, 2), G.hamming(2, 4), G.complete_bipartite(4, 4),
              G.complement(G.petersen())):
        p = G.srg_parameters(g)
        assert p is not None and p.counting_identity()
        assert G.srg_bounds_check(p).holds


def test_complement():
    assert G.complement(G.complete(5)).m == 0
    c = G.complement(G.cycle(5))
    assert c.n == 5 and set(c.degrees().tolist()) == {2}
    G.distance_profile(c, 0)  # connected 2-regular on 5 vertices, hence a 5-cycle
    g = G.petersen()
    assert G.complement(G.complement(g)) == g


def test_minimal_lc_power():
    t = G.theorem1_family(5)
    assert G.minimal_lc_power(t, 0, 5) == 2
    assert G.power_profile_crosscheck(t, 0, 2)
    assert G.minimal_lc_power(G.petersen(), 0, 3) == 1
    assert G.minimal_lc_power(t, 0, 1) is None


def _ddr_lc_graphs():
    return [G.complete(2), G.complete(3), G.complete(4), G.cycle(4), G.cycle(5), G.cycle(6), G.petersen(),
            G.hypercube(2), G.johnson(5, 2)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_ddr_lc_graphs()), st.sampled_from(_ddr_lc_graphs()))
def test_ddr_lc_closure(a, b):
    assert G.is_ddr(a) and G.is_lc_graph(a)[0].holds
    p = G.cartesian_product(a, b)
    assert G.is_ddr(p)
    assert G.is_lc_at(p, 0).holds
