import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridres import (GridMismatchError, InvalidDimsError, Quadrant, UnsupportedRankError, VertexSet,
                     corners, degree, face_count, face_set, is_corner, make_grid, projection, region_of,
                     shortest_path_box)
from gridres.errors import DomainError
from gridres.grid_core import parse_grid

dims3 = st.tuples(*[st.integers(2, 5)] * 3)


@st.composite
def grid_and_vertices(draw, count=2, max_side=6):
    dims = draw(st.tuples(*[st.integers(2, max_side)] * 3))
    grid = make_grid(dims)
    verts = [tuple(draw(st.integers(0, n - 1)) for n in dims) for _ in range(count)]
    return grid, verts


def test_make_grid_examples():
    g = make_grid([3, 6, 7])
    assert g.dims == (3, 6, 7) and g.vertex_count == 126 and g.note is None
    g = make_grid([1, 4, 5])
    assert g.dims == (4, 5)
    assert "unit factors dropped" in g.note
    with pytest.raises(InvalidDimsError):
        make_grid([2, 0, 3])
    with pytest.raises(InvalidDimsError):
        make_grid([])


def test_all_unit_grid_is_trivial():
    g = make_grid([1, 1, 1])
    assert g.trivial and g.vertex_count == 1
    assert list(g.vertices()) == [()]


def test_parse_grid():
    assert parse_grid("3x4x5").dims == (3, 4, 5)
    with pytest.raises(InvalidDimsError):
        parse_grid("3X4")


def test_index_order_is_first_coordinate_fastest():
    g = make_grid([2, 3, 4])
    assert g.vertex_index((1, 0, 0)) == 1
    assert g.vertex_index((0, 1, 0)) == 2
    assert g.vertex_index((0, 0, 1)) == 6
    assert [g.vertex_index(u) for u in g.vertices()] == list(range(24))
    assert [tuple(r) for r in g.coords] == list(g.vertices())


@given(st.lists(st.integers(2, 5), min_size=1, max_size=4))
def test_index_bijection(dims):
    g = make_grid(dims)
    for i in range(g.vertex_count):
        assert g.vertex_index(g.index_vertex(i)) == i


def test_distance_examples():
    assert make_grid([2, 3, 4]).distance((0, 0, 0), (1, 2, 3)) == 6
    assert make_grid([6, 6, 6]).distance((5, 5, 5), (5, 5, 5)) == 0
    assert make_grid([2, 2, 2]).distance((0, 1, 0), (1, 0, 0)) == 2


def test_distance_grid_mismatch():
    g = make_grid([2, 2, 2])
    with pytest.raises(GridMismatchError):
        g.distance((0, 0), (1, 1, 1))
    with pytest.raises(GridMismatchError):
        g.distance((0, 0, 2), (1, 1, 1))


@given(grid_and_vertices(count=3))
def test_metric_axioms(sample):
    g, (u, v, w) = sample
    assert g.distance(u, v) == g.distance(v, u)
    assert (g.distance(u, v) == 0) == (u == v)
    assert g.distance(u, w) <= g.distance(u, v) + g.distance(v, w)


@given(grid_and_vertices(count=3))
def test_parity_law(sample):
    g, (u, v, z) = sample
    if g.distance(u, v) % 2:
        assert g.distance(u, z) % 2 != g.distance(v, z) % 2


def test_distance_matrix_matches_closed_form():
    g = make_grid([3, 2, 4])
    D = g.distance_matrix
    for u, v in itertools.product(g.vertices(), repeat=2):
        assert D[g.vertex_index(u), g.vertex_index(v)] == g.distance(u, v)


def test_face_set_examples():
    assert len(face_set(make_grid([2, 2, 2]))) == 8
    F = face_set(make_grid([3, 3, 3]))
    assert len(F) == 26 and (1, 1, 1) not in F
    assert len(face_set(make_grid([3, 6, 7]))) == 106 == face_count((3, 6, 7))
    with pytest.raises(UnsupportedRankError):
        face_set(make_grid([3, 3]))


def test_face_cardinality_all_small_grids():
    for dims in itertools.product(range(2, 7), repeat=3):
        n1, n2, n3 = dims
        expected = n1 * n2 * n3 - (n1 - 2) * (n2 - 2) * (n3 - 2)
        assert len(face_set(make_grid(dims))) == expected == face_count(dims)


def test_corners_and_degree():
    g = make_grid([3, 3, 3])
    assert is_corner(g, (0, 0, 0)) and degree(g, (0, 0, 0)) == 3
    assert not is_corner(g, (1, 1, 1)) and degree(g, (1, 1, 1)) == 6
    assert not is_corner(g, (1, 0, 0)) and degree(g, (1, 0, 0)) == 4
    assert len(corners(g)) == 8
    g2 = make_grid([2, 5, 3])
    assert all(is_corner(g2, u) for u in corners(g2))
    assert sum(is_corner(g2, u) for u in g2.vertices()) == 8


def test_degree_counts_neighbours():
    g = make_grid([3, 4, 2])
    for u in g.vertices():
        nbrs = sum(g.distance(u, v) == 1 for v in g.vertices())
        assert degree(g, u) == nbrs


def test_projection_examples():
    g = make_grid([3, 3, 3])
    S = VertexSet.from_vertices(g, [(0, 0, 0), (0, 0, 1)])
    assert projection(S, 3) == {(0, 0)}
    assert projection(VertexSet.from_vertices(g, [(1, 2, 0)]), 1) == {(2, 0)}
    assert projection(g.empty_set(), 2) == set()
    with pytest.raises(DomainError):
        projection(S, 4)


def test_region_of_examples():
    g = make_grid([4, 5, 3])
    assert region_of(g, (0, 0), 1, 1).quadrant is Quadrant.MM
    assert region_of(g, (2, 1), 2, 2).quadrant is Quadrant.PM
    assert region_of(g, (1, 2), 2, 2).quadrant is Quadrant.MP
    assert region_of(g, (3, 4), 2, 2).quadrant is Quadrant.PP
    with pytest.raises(DomainError):
        region_of(g, (0, 0), 0, 1)
    with pytest.raises(DomainError):
        region_of(g, (0, 0), 4, 1)


@given(dims3, st.data())
def test_quadrants_partition(dims, data):
    g = make_grid(dims)
    axis = data.draw(st.sampled_from([1, 2, 3]))
    ni, nj = [n for a, n in zip((1, 2, 3), dims) if a != axis]
    a1 = data.draw(st.integers(1, ni - 1))
    a2 = data.draw(st.integers(1, nj - 1))
    counts = {q: 0 for q in Quadrant}
    for p in itertools.product(range(ni), range(nj)):
        counts[region_of(g, p, a1, a2, axis).quadrant] += 1
    assert sum(counts.values()) == ni * nj
    assert counts[Quadrant.MM] == a1 * a2
    assert counts[Quadrant.PP] == (ni - a1) * (nj - a2)


def test_shortest_path_box_examples():
    g = make_grid([3, 3, 3])
    box = shortest_path_box(g, (0, 0, 0), (1, 1, 0))
    assert len(box) == 4 and set(box.vertices()) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)}
    assert len(shortest_path_box(g, (2, 1, 0), (2, 1, 0))) == 1
    box = shortest_path_box(g, (0, 2, 1), (2, 0, 1))
    assert (box.lo, box.hi) == ((0, 0, 1), (2, 2, 1))


def test_box_law_exhaustive():
    for dims in [(2, 2, 2), (2, 3, 4), (3, 3, 3), (4, 4, 4)]:
        g = make_grid(dims)
        D = g.distance_matrix
        verts = list(g.vertices())
        for iu, iv in itertools.combinations(range(len(verts)), 2):
            box = shortest_path_box(g, verts[iu], verts[iv])
            inside = box.to_set().mask()
            on_path = D[iu] + D[iv] == D[iu, iv]
            assert (inside == on_path).all()


def test_vertex_set_semantics():
    g = make_grid([2, 3, 2])
    A = VertexSet.from_vertices(g, [(0, 0, 0), (1, 2, 1), (1, 0, 0)])
    B = VertexSet.from_vertices(g, [(1, 2, 1), (0, 1, 1)])
    assert len(A) == 3 and (1, 2, 1) in A and (0, 1, 1) not in A
    assert A.intersection_count(B) == 1 == len(A & B)
    assert len(A | B) == 4
    assert A.complement().intersection_count(A) == 0
    assert list(A) == sorted(A, key=g.vertex_index)
    with pytest.raises(GridMismatchError):
        A.intersection_count(make_grid([2, 2, 3]).full_set())


def test_lift_maps_unit_axes():
    g = make_grid([1, 4, 5])
    assert g.lift((0, 2, 3)) == (2, 3)
    with pytest.raises(GridMismatchError):
        g.lift((1, 2, 3))


@settings(max_examples=50)
@given(grid_and_vertices(count=2, max_side=4))
def test_box_contains_matches_geodesic(sample):
    g, (u, v) = sample
    box = shortest_path_box(g, u, v)
    for z in g.vertices():
        assert (z in box) == (g.distance(u, z) + g.distance(z, v) == g.distance(u, v))
