import pytest

import starfree as sf


def test_binomial_and_colex():
    assert sf.binomial(6, 3) == 20
    assert sf.colex_rank(5, [4, 5]) == 9
    assert sf.colex_unrank(5, 2, 9) == [4, 5]


def test_petersen():
    g = sf.KneserGraph(5, 2)
    assert g.vertex_count == 10
    assert g.graph.edge_count == 15
    assert g.subset(g.index_of([2, 4])) == [2, 4]
    assert sf.Graph.from_dimacs(g.graph.to_dimacs()) == g.graph


def test_verify_path():
    p3 = sf.Graph(3, [(0, 1), (1, 2)])
    bad = sf.verify(p3, sf.Coloring(2, [1, 2, 1]), sf.Mode.STAR_FREE)
    assert bad["kind"] == "star"
    assert bad["vertices"] == [0, 1, 2]
    assert sf.verify(p3, sf.Coloring(3, [1, 3, 1]), sf.Mode.LOCAL) is None


def test_ladder_is_local():
    for n, k in [(5, 2), (7, 2), (9, 3)]:
        c = sf.ladder_coloring(n, k)
        assert c.value == 2 * n - 4 * k + 2
        assert sf.verify(sf.KneserGraph(n, k).graph, c, sf.Mode.LOCAL) is None


def test_solve_small_kneser():
    r = sf.solve_kneser(5, 2)
    assert r["verdict"] == "SAT"
    assert r["optimum"] == 4
    assert sf.solve_kneser(4, 2)["optimum"] == 2
    r62 = sf.solve_kneser(6, 2, vertex_transitive=True)
    assert 4 <= r62["optimum"] <= 6


def test_decide_and_cnf():
    p3 = sf.Graph(3, [(0, 1), (1, 2)])
    verdict, witness = sf.decide(p3, 2, sf.Mode.STAR_FREE)
    assert verdict == "UNSAT" and witness is None
    verdict, witness = sf.decide(p3, 3, sf.Mode.STAR_FREE)
    assert verdict == "SAT"
    assert sf.verify(p3, witness, sf.Mode.STAR_FREE) is None
    assert sf.export_cnf(p3, 2, sf.Mode.STAR_FREE).startswith("p cnf 6 ")


def test_extend_and_reduce():
    c = sf.ladder_coloring(4, 2)
    e = sf.extend_coloring(c, 4, 2)
    assert e.range == 4
    reduced, element, perm = sf.reduce_coloring(sf.KneserGraph(5, 2), e, 4)
    assert element == 5
    assert reduced == c
    assert len(perm) == 5


def test_hilton_milner():
    assert sf.hm_bound(5, 2) == 4
    assert sf.hm_bound(6, 3) == 11
    size, witness = sf.max_nonstar_intersecting(6, 2)
    assert size == 3
    assert witness == [[1, 2], [1, 3], [2, 3]]


def test_fan():
    assert sf.maximal_chain_count(3) == 48
    text = "FAN 2 2\n+0 1\n0+ 2\n++ 2\n+- 1\n"
    assert sf.fan_validate(text) is None
    census = sf.fan_census(text, collect=True)
    assert census["leading_positive"] == 1
    assert census["positive_chains"] == [["0-", "+-"]]


def test_coloring_labeling_is_valid():
    g = sf.KneserGraph(5, 2)
    c = sf.ladder_coloring(5, 2)
    shifted = sf.Coloring(c.range + 2, [x + 2 for x in c.colors])
    text = sf.coloring_labeling(g, shifted)
    assert sf.fan_validate(text) is None
    assert sf.fan_census(text)["leading_positive"] % 2 == 1


def test_bounds():
    r = sf.bounds_report(5, 2)
    assert r["exact_value_known"] == 4
    assert r["small_n_exact"]
    assert sf.bounds_report(8, 3)["exact_value_known"] == 6
    assert sf.recursion_threshold(3) == 34
    assert sf.ineq1_holds(6, 3)


def test_errors():
    with pytest.raises(sf.StarfreeError, match="resource"):
        sf.KneserGraph(30, 10, max_vertices=1000)
    with pytest.raises(ValueError):
        sf.KneserGraph(3, 2)
    with pytest.raises(sf.StarfreeError):
        sf.Coloring(2, [3])
