import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfgeom import (
    Interval,
    Scene,
    closed_cf_color_intervals,
    generate_scene,
    intersection_graph,
    neighborhood_hypergraph,
    verify_cf,
)


def scene_of(*pairs):
    return Scene(tuple(Interval(a, b) for a, b in pairs))


def test_single_interval():
    col, chain = closed_cf_color_intervals(scene_of((0, 10)))
    assert col.colors == (1,)
    assert chain == [0]


def test_three_interval_trace():
    col, chain = closed_cf_color_intervals(scene_of((0, 2), (1, 4), (3, 6)))
    assert chain == [0, 1, 2]
    assert col.colors == (1, 2, 1)


def test_empty_family_rejected():
    from cfgeom import AARect

    with pytest.raises(ValueError):
        closed_cf_color_intervals(Scene((), "intervals"))
    with pytest.raises(ValueError):
        closed_cf_color_intervals(Scene((Interval(0, 1), AARect(0, 1, 0, 1))))


def test_disconnected_union_bridged():
    col, chain = closed_cf_color_intervals(scene_of((0, 1), (5, 6), (5.5, 7)))
    assert chain == [0, 1, 2]
    assert col.palette_size <= 3


def test_nested_intervals():
    col, chain = closed_cf_color_intervals(scene_of((0, 10), (1, 2), (3, 4), (6, 9)))
    assert chain == [0]
    assert col.colors == (1, 3, 3, 3)
    h = neighborhood_hypergraph(intersection_graph(scene_of((0, 10), (1, 2), (3, 4), (6, 9))), "closed")
    assert verify_cf(h, col) == []


def test_two_hundred_random_families():
    for seed in range(12):
        scene = generate_scene("intervals", 200, seed)
        col, chain = closed_cf_color_intervals(scene)
        assert col.palette_size <= 3
        # re-verify independently of the constructor's own check
        h = neighborhood_hypergraph(intersection_graph(scene), "closed")
        assert verify_cf(h, col) == []
        rights = [scene[i].hi for i in chain]
        assert rights == sorted(set(rights))


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_random_families_closed_cf(data):
    n = data.draw(st.integers(1, 24))
    los = data.draw(st.lists(st.floats(0, 100, allow_nan=False), min_size=n, max_size=n))
    lens = data.draw(st.lists(st.floats(0, 30, allow_nan=False), min_size=n, max_size=n))
    scene = Scene(tuple(Interval(lo, lo + ln) for lo, ln in zip(los, lens)))
    col, chain = closed_cf_color_intervals(scene)
    assert col.palette_size <= 3
    assert set(chain) <= set(range(n))
