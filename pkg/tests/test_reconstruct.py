import itertools
import math

import pytest

from designiso import (Graph, are_isomorphic, boolean_sqs, fano, line_graph, point_cliques, rands_f, reconstruct,
                       scramble, solve_v, sts)
from designiso.reconstruct import CliqueCountError, ReconstructionError, ReconstructionRefused, threshold


def stars(design):
    return sorted((frozenset(bl) for bl in design.blocks_through()), key=sorted)


def test_solve_v():
    assert solve_v(26, 2, 3, 1) == 13
    assert solve_v(140, 3, 4, 1) == 16
    assert solve_v(20, 2, 3, 4) == 6
    with pytest.raises(ReconstructionError):
        solve_v(27, 2, 3, 1)


@pytest.mark.parametrize("k,t,s,expected", [
    (3, 2, 1, 19), (4, 3, 1, 49), (4, 3, 2, 74), (5, 4, 2, 2 + 10 * 4 * 3),
])
def test_rands_f_values(k, t, s, expected):
    assert rands_f(k, t, s) == expected


def test_rands_f_domain():
    with pytest.raises(ValueError):
        rands_f(3, 2, 2)


def test_threshold():
    assert [threshold(k) for k in (3, 4, 5)] == [18, 48, 100]


@pytest.mark.parametrize("name", ["sts13", "sts19", "sts21", "sqs16"])
def test_point_cliques_are_stars(designs, name):
    D = designs[name]
    r = D.b * D.params.k // D.v
    assert point_cliques(line_graph(D), r, D.v) == stars(D)


@pytest.mark.parametrize("name", ["sts13", "sts15", "sts19", "sts21", "sqs16"])
def test_round_trip(designs, name):
    D = scramble(designs[name], 11)
    G = line_graph(D)
    p = D.params
    R = reconstruct(G, p.t, p.k, p.lam)
    assert R.certificate.ok
    assert line_graph(R.design) == G
    assert R.design.params == p
    assert are_isomorphic(R.design, D) is not None


def test_pg32_needs_selection(designs):
    # PG(3,2) has Fano-plane cliques of size 7 besides its 15 point-stars
    D = designs["sts15"]
    G = line_graph(D)
    with pytest.raises(CliqueCountError) as info:
        point_cliques(G, 7, 15)
    assert info.value.found == 30
    R = reconstruct(G, 2, 3, 1)
    assert R.selected and R.certificate.ok


def test_non_pg_sts15_needs_no_selection():
    from designiso import pasch_switch
    D = pasch_switch(sts(15))
    R = reconstruct(line_graph(D), 2, 3, 1)
    assert R.certificate.ok


@pytest.mark.parametrize("design,b,thr", [(fano(), 7, 18), (boolean_sqs(3), 14, 48)])
def test_refusal(design, b, thr):
    p = design.params
    with pytest.raises(ReconstructionRefused, match=rf"b = {b} <= k\^2\(k-1\) = {thr}"):
        reconstruct(line_graph(design), p.t, p.k, p.lam)


def test_sqs8_forced_has_128_maximum_cliques():
    G = line_graph(boolean_sqs(3))
    with pytest.raises(CliqueCountError) as info:
        point_cliques(G, 7, 8)
    assert info.value.found == 128 == 2 ** 7


def test_sqs8_forced_reconstruction_is_certified():
    D = boolean_sqs(3)
    R = reconstruct(line_graph(D), 3, 4, 1, force=True)
    assert R.certificate.ok and are_isomorphic(R.design, D) is not None


def test_not_a_line_graph():
    G = line_graph(sts(13))
    i, j = next(G.edges())
    edges = [e for e in G.edges() if e != (i, j)]
    with pytest.raises(ReconstructionError):
        reconstruct(Graph.from_edges(G.n, edges), 2, 3, 1)


def test_wrong_order_rejected():
    with pytest.raises(ReconstructionError):
        reconstruct(Graph.from_edges(27, []), 2, 3, 1)


def test_spielman_flag():
    R = reconstruct(line_graph(sts(21)), 2, 3, 1)
    assert R.certificate.spielman_ok == (math.sqrt(70) - 2 > 4)
    R = reconstruct(line_graph(boolean_sqs(4)), 3, 4, 1)
    assert R.certificate.spielman_ok is None


def test_rands_warning_raised():
    with pytest.warns(UserWarning, match=r"f\(k,t,1\)"):
        reconstruct(line_graph(sts(13)), 2, 3, 1)


def test_no_warning_when_v_large():
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        R = reconstruct(line_graph(sts(19)), 2, 3, 1)
    assert not R.certificate.warnings


def test_points_numbered_by_sorted_cliques(designs):
    D = designs["sts13"]
    R = reconstruct(line_graph(D), 2, 3, 1)
    assert list(R.point_cliques) == sorted(R.point_cliques, key=sorted)
    for p, C in enumerate(R.point_cliques):
        assert all(p in R.design.blocks[x] for x in C)
    assert all(len(a & b) <= 1 for a, b in itertools.combinations(R.point_cliques, 2))
