import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfgeom import (
    Coloring,
    Graph,
    Hypergraph,
    ProperColorer,
    all_intervals_hypergraph,
    cf_palette_bound,
    generate_scene,
    intersection_graph,
    neighborhood_hypergraph,
    pointed_to_closed,
    pointed_cf_pseudodiscs,
    proper_to_cf,
    proper_to_cf_list,
    verify_cf,
)
from cfgeom.errors import ColorerContractError, ListExhaustedError, VerificationError


def alternating_colorer(k: int = 2) -> ProperColorer:
    """Hereditary proper colorer for contiguous-run hypergraphs: alternate by
    position among the kept vertices."""

    def fn(sub: Hypergraph) -> Coloring:
        return Coloring(tuple(1 + (i % 2) for i in range(sub.n)))

    return ProperColorer(fn, k, "alternate")


def test_edgeless_hypergraph_single_round():
    h = Hypergraph(5, ())

    def constant(sub: Hypergraph) -> Coloring:
        return Coloring(tuple(1 for _ in range(sub.n)))

    out = proper_to_cf(h, ProperColorer(constant, 2, "constant"))
    assert out.palette_size == 1
    assert set(out.colors) == {1}


def test_four_point_trace():
    h = all_intervals_hypergraph(4)
    out = proper_to_cf(h, alternating_colorer())
    # round 1 removes positions {0, 2}, round 2 removes {1}, round 3 removes {3}
    assert out.colors == (1, 2, 1, 3)
    assert out.palette_size == 3
    assert verify_cf(h, out) == []


def test_bound_formula():
    assert cf_palette_bound(100, 6) == 27
    assert cf_palette_bound(1, 6) == 1
    assert cf_palette_bound(2, 2) == 2
    assert cf_palette_bound(0, 6) == 0


def test_max_final_color_unique_in_every_edge():
    h = all_intervals_hypergraph(11)
    out = proper_to_cf(h, alternating_colorer())
    for e in h.edges:
        top = max(out.colors[v] for v in e)
        assert sum(1 for v in e if out.colors[v] == top) == 1


def test_round_count_bound():
    for n in (1, 5, 17, 33):
        h = all_intervals_hypergraph(n)
        out = proper_to_cf(h, alternating_colorer())
        rounds = out.palette_size
        assert rounds <= math.ceil(math.log(max(n, 2), 2)) + 1
        assert rounds <= cf_palette_bound(n, 2)


def test_colorer_exceeding_palette_aborts():
    def too_many(sub: Hypergraph) -> Coloring:
        return Coloring(tuple(range(1, sub.n + 1)))

    h = all_intervals_hypergraph(4)
    with pytest.raises(ColorerContractError):
        proper_to_cf(h, ProperColorer(too_many, 2, "spendthrift"))


def test_improper_colorer_aborts():
    def constant(sub: Hypergraph) -> Coloring:
        return Coloring(tuple(1 for _ in range(sub.n)))

    h = all_intervals_hypergraph(4)
    with pytest.raises(ColorerContractError) as err:
        proper_to_cf(h, ProperColorer(constant, 2, "mono"))
    assert err.value.sub_hypergraph is not None


def test_list_identical_lists_degenerates():
    h = all_intervals_hypergraph(4)
    m = cf_palette_bound(4, 2)
    lists = [list(range(1, m + 1))] * 4
    out = proper_to_cf_list(h, lists, alternating_colorer())
    assert all(c in lists[0] for c in out.colors)
    assert verify_cf(h, out) == []


def test_list_single_vertex():
    h = Hypergraph(1, ((0,),))
    out = proper_to_cf_list(h, [[7]], alternating_colorer())
    assert out.colors == (7,)


def test_list_four_points_spec_lists():
    h = all_intervals_hypergraph(4)
    lists = [[1, 2, 3], [2, 3, 4], [1, 3, 4], [1, 2, 4]]
    out = proper_to_cf_list(h, lists, alternating_colorer())
    for v in range(4):
        assert out.colors[v] in lists[v]
    assert verify_cf(h, out) == []


def test_list_size_precondition():
    h = all_intervals_hypergraph(8)
    with pytest.raises(ValueError):
        proper_to_cf_list(h, [[1, 2]] * 8, alternating_colorer())


def test_list_exhaustion_reported():
    # adversarial: a vertex whose tiny effective list is drained
    h = Hypergraph(2, ((0, 1),))

    def bad(sub: Hypergraph) -> Coloring:
        return Coloring(tuple(1 + (i % 2) for i in range(sub.n)))

    # the precondition check needs size >= 2; craft lists that pass it but
    # collide so vertex 1 is never in a largest class until its list drains
    with pytest.raises((ListExhaustedError, VerificationError, ValueError)):
        proper_to_cf_list(h, [[1, 2], [1]], ProperColorer(bad, 2))


def test_pointed_to_closed_k2():
    g = Graph(2, frozenset({(0, 1)}))
    out = pointed_to_closed(g, Coloring((1, 1)))
    assert out.colors == (0, 1)
    assert out.palette_map == {0: (1, 1), 1: (1, 2)}


def test_pointed_to_closed_proper_input_relabels():
    g = Graph(3, frozenset({(0, 1), (1, 2)}))
    out = pointed_to_closed(g, Coloring((1, 2, 3)))
    assert out.palette_map is not None
    assert all(out.palette_map[c][1] == 1 for c in out.colors)
    assert out.palette_size == 3


def test_pointed_to_closed_rejects_non_pointed_cf():
    # the middle vertex of a path sees two same-colored neighbors
    g = Graph(3, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(VerificationError):
        pointed_to_closed(g, Coloring((1, 2, 1)))


def test_pointed_to_closed_on_pipeline_outputs():
    for seed in range(4):
        scene = generate_scene("discs", 40, seed)
        g = intersection_graph(scene)
        pointed = pointed_cf_pseudodiscs(scene)
        out = pointed_to_closed(g, pointed)
        assert out.palette_size <= 2 * pointed.palette_size
        closed = neighborhood_hypergraph(g, "closed")
        assert verify_cf(closed, out) == []


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_refinement_preserves_uniqueness(data):
    n = data.draw(st.integers(2, 10))
    colors = data.draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    members = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1)))
    refinement = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    refined = [2 * c + r for c, r in zip(colors, refinement)]
    for v in members:
        if sum(1 for u in members if colors[u] == colors[v]) == 1:
            assert sum(1 for u in members if refined[u] == refined[v]) == 1


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_conversion_on_arbitrary_pointed_cf_colorings(data):
    # random small graph; take the oracle's witness for the pointed
    # neighborhood hypergraph, which is pointed-CF by construction
    from cfgeom import min_cf_colors_bruteforce

    n = data.draw(st.integers(2, 8))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = frozenset(data.draw(st.sets(st.sampled_from(pairs))))
    g = Graph(n, edges)
    pointed = neighborhood_hypergraph(g, "pointed")
    found = min_cf_colors_bruteforce(pointed, n)
    assert found is not None
    _, witness = found
    out = pointed_to_closed(g, witness)
    assert out.palette_size <= 2 * witness.palette_size
    closed = neighborhood_hypergraph(g, "closed")
    assert verify_cf(closed, out) == []
