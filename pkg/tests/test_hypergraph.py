import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfgeom import (
    AARect,
    Coloring,
    Disc,
    Graph,
    Hypergraph,
    Point,
    Scene,
    all_intervals_hypergraph,
    coloring_from_json,
    coloring_to_json,
    greedy_maximal_independent_set,
    induced,
    intersection_graph,
    min_cf_colors_bruteforce,
    neighborhood_hypergraph,
    verify_cf,
    verify_proper,
)


def test_intersection_graph_empty():
    g = intersection_graph(Scene(()))
    assert g.n == 0 and not g.edges


def test_three_tangent_discs_make_triangle():
    scene = Scene(tuple(Disc(Point(i, 0), 1) for i in range(3)))
    g = intersection_graph(scene)
    assert g.edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_disjoint_rects_isolated():
    scene = Scene((AARect(0, 1, 0, 1), AARect(2, 3, 0, 1)))
    g = intersection_graph(scene)
    assert g.n == 2 and not g.edges


def test_neighborhood_hypergraph_k2():
    g = Graph(2, frozenset({(0, 1)}))
    pointed = neighborhood_hypergraph(g, "pointed")
    assert pointed.edges == ((1,), (0,))
    closed = neighborhood_hypergraph(g, "closed")
    assert closed.edges == ((0, 1), (0, 1))


def test_neighborhood_hypergraph_path_pointed():
    g = Graph(3, frozenset({(0, 1), (1, 2)}))
    pointed = neighborhood_hypergraph(g, "pointed")
    assert pointed.edges == ((1,), (0, 2), (1,))


def test_pointed_mode_omits_empty_neighborhoods():
    g = Graph(3, frozenset({(0, 1)}))
    pointed = neighborhood_hypergraph(g, "pointed")
    assert len(pointed.edges) == 2


def test_induced():
    h = Hypergraph(3, ((0, 1, 2),))
    assert induced(h, [0, 1, 2]).edges == ((0, 1, 2),)
    sub = induced(h, [0, 2])
    assert sub.edges == ((0, 1),)
    assert sub.vertex_labels == (0, 2)
    assert induced(Hypergraph(3, ((0, 1),)), [2]).edges == ((),)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_induced_commutes_with_edge_intersection(data):
    n = data.draw(st.integers(1, 8))
    edges = data.draw(st.lists(st.sets(st.integers(0, n - 1)), max_size=6))
    h = Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))
    keep = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1)))
    sub = induced(h, keep)
    pos = {v: i for i, v in enumerate(keep)}
    for e, se in zip(h.edges, sub.edges):
        assert tuple(sorted(pos[v] for v in e if v in pos)) == se


def test_verify_proper_examples():
    h = Hypergraph(2, ((0, 1),))
    assert verify_proper(h, Coloring((1, 1))) == [0]
    assert verify_proper(h, Coloring((1, 2))) == []
    h1 = Hypergraph(1, ((0,),))
    assert verify_proper(h1, Coloring((1,))) == []


def test_verify_cf_examples():
    h = Hypergraph(3, ((0, 1, 2),))
    assert verify_cf(h, Coloring((1, 1, 2))) == []
    h4 = Hypergraph(4, ((0, 1, 2, 3),))
    assert verify_cf(h4, Coloring((1, 1, 2, 2))) == [0]
    h2 = Hypergraph(3, ((0, 1), (1, 2)))
    assert verify_cf(h2, Coloring((1, 2, 1))) == []


def test_cf_implies_proper_edgewise():
    h = all_intervals_hypergraph(6)
    _, witness = min_cf_colors_bruteforce(h, 6)
    assert verify_cf(h, witness) == []
    assert verify_proper(h, witness) == []


def test_empty_edges_ignored():
    h = Hypergraph(2, ((), (0, 1)))
    assert verify_cf(h, Coloring((1, 2))) == []
    assert verify_proper(h, Coloring((1, 1))) == [1]


def test_oracle_single_edge():
    t, witness = min_cf_colors_bruteforce(Hypergraph(2, ((0, 1),)), 4)
    assert t == 2
    assert verify_cf(Hypergraph(2, ((0, 1),)), witness) == []


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (4, 3), (8, 4)])
def test_oracle_log_growth_on_interval_hypergraphs(n, expected):
    t, witness = min_cf_colors_bruteforce(all_intervals_hypergraph(n), 8)
    assert t == expected
    assert verify_cf(all_intervals_hypergraph(n), witness) == []


def test_oracle_limits():
    with pytest.raises(ValueError):
        min_cf_colors_bruteforce(Hypergraph(17, ()), 4)
    assert min_cf_colors_bruteforce(all_intervals_hypergraph(4), 2) is None


def test_greedy_mis_examples():
    path = Graph(3, frozenset({(0, 1), (1, 2)}))
    assert greedy_maximal_independent_set(path) == [0, 2]
    k3 = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))
    assert len(greedy_maximal_independent_set(k3)) == 1
    empty = Graph(4, frozenset())
    assert greedy_maximal_independent_set(empty) == [0, 1, 2, 3]
    assert greedy_maximal_independent_set(path, [1, 0, 2]) == [1]
    with pytest.raises(ValueError):
        greedy_maximal_independent_set(path, [0, 0, 1])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_greedy_mis_is_independent_and_maximal(data):
    n = data.draw(st.integers(1, 12))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = frozenset(data.draw(st.sets(st.sampled_from(pairs)))) if pairs else frozenset()
    g = Graph(n, edges)
    mis = set(greedy_maximal_independent_set(g))
    for u, v in g.edges:
        assert not (u in mis and v in mis)
    for v in range(n):
        if v not in mis:
            assert any(u in mis for u in g.adjacency[v])


def test_coloring_json_roundtrip():
    c = Coloring((0, 2, 2, 5), {0: (1, 1), 2: (2, 1), 5: (3, 2)})
    again = coloring_from_json(coloring_to_json(c))
    assert again.colors == c.colors
    assert again.palette_map == c.palette_map
    plain = Coloring((1, 2, 1))
    assert coloring_from_json(coloring_to_json(plain)) == plain
    with pytest.raises(ValueError):
        coloring_from_json('{"colors": [1, 2], "palette_size": 7}')


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(2, ((0, 5),))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    h = Hypergraph(3, ((2, 0, 2),))
    assert h.edges == ((0, 2),)


def _verify_cf_reference(h, colors):
    """Literal restatement of the CF condition, independent of the fast path."""
    bad = []
    for idx, e in enumerate(h.edges):
        if not e:
            continue
        if not any(sum(1 for u in e if colors[u] == colors[v]) == 1 for v in e):
            bad.append(idx)
    return bad


def _verify_proper_reference(h, colors):
    bad = []
    for idx, e in enumerate(h.edges):
        if len(e) >= 2 and len({colors[v] for v in e}) == 1:
            bad.append(idx)
    return bad


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_verifiers_match_reference_implementation(data):
    n = data.draw(st.integers(1, 9))
    edges = data.draw(st.lists(st.sets(st.integers(0, n - 1)), max_size=8))
    h = Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))
    colors = data.draw(st.lists(st.integers(-2, 4), min_size=n, max_size=n))
    assert verify_cf(h, colors) == _verify_cf_reference(h, colors)
    assert verify_proper(h, colors) == _verify_proper_reference(h, colors)


def _min_cf_exhaustive_no_pruning(h, max_colors):
    from itertools import product

    for t in range(1, max_colors + 1):
        for assignment in product(range(1, t + 1), repeat=h.n):
            if not _verify_cf_reference(h, assignment):
                return t
    return None


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_oracle_matches_unpruned_enumeration(data):
    n = data.draw(st.integers(1, 5))
    edges = data.draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), max_size=6))
    h = Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))
    slow = _min_cf_exhaustive_no_pruning(h, 3)
    fast = min_cf_colors_bruteforce(h, 3)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast[0] == slow
