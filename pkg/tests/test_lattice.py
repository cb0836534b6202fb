"""Lattice geometry: adjacency, connectivity, complement decomposition, boundary."""
from __future__ import annotations

import itertools
import random

import pytest

from cubeplan import (Configuration, boundary_modules, complement_components,
                      edge_neighbors, face_neighbors, is_connected, outer_boundary,
                      random_connected, GenSpec)
from cubeplan.lattice import directions

from conftest import ring2d, shell3d


def test_directions_global_order():
    assert directions(2) == ((1, 0), (-1, 0), (0, 1), (0, -1))
    assert directions(3)[:4] == ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0))
    assert len(directions(4)) == 8


def test_face_neighbors_2d():
    assert set(face_neighbors((5, 5), 2)) == {(6, 5), (4, 5), (5, 6), (5, 4)}
    with pytest.raises(ValueError):
        face_neighbors((0, 0, 0), 2)


def test_edge_neighbors_2d_origin():
    assert set(edge_neighbors((0, 0), 2)) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_edge_neighbors_excludes_faces_and_far_cells():
    nbrs = set(edge_neighbors((5, 5), 2))
    assert (6, 6) in nbrs
    assert (7, 5) not in nbrs
    assert (6, 5) not in nbrs


def test_edge_neighbor_count_3d():
    assert len(edge_neighbors((0, 0, 0), 3)) == 12  # 2*d*(d-1)


def test_configuration_validation():
    with pytest.raises(ValueError):
        Configuration(1, frozenset({(0,)}))
    with pytest.raises(ValueError):
        Configuration(2, frozenset())
    with pytest.raises(ValueError):
        Configuration(2, frozenset({(0, 0, 0)}))


def test_is_connected_examples():
    assert is_connected(Configuration.of(2, [(0, 0), (1, 0)]))
    # edge adjacency does not connect
    assert not is_connected(Configuration.of(2, [(0, 0), (1, 1)]))
    assert is_connected(Configuration.of(2, [(0, 0), (1, 0), (0, 1)]))


def test_complement_block_no_holes(block2x2):
    _, holes = complement_components(block2x2)
    assert holes == []


def test_complement_ring_one_hole(ring3x3):
    _, holes = complement_components(ring3x3)
    assert holes == [frozenset({(1, 1)})]


def test_complement_hollow_shell_3d():
    V = Configuration(3, frozenset(shell3d(0, 2)))
    assert V.n == 26
    _, holes = complement_components(V)
    assert holes == [frozenset({(1, 1, 1)})]


def test_outer_boundary_domino(domino):
    summary = outer_boundary(domino)
    assert summary.modules == domino.cells
    assert len(summary.faces) == 6
    assert summary.holes == ()


def test_outer_boundary_ring_inward_faces_not_outer(ring3x3):
    summary = outer_boundary(ring3x3)
    assert summary.modules == ring3x3.cells
    # the four edge-center modules face the hole, not the outside
    inward = {((1, 0), (0, 1)), ((0, 1), (1, 0)), ((2, 1), (-1, 0)), ((1, 2), (0, -1))}
    assert not inward & summary.faces
    assert len(summary.holes) == 1


def test_ring_plus_plug_hole(ring_plus_plug):
    _, holes = complement_components(ring_plus_plug)
    interior = {(x, y) for x in range(1, 4) for y in range(1, 4)} - {(2, 1)}
    assert holes == [frozenset(interior)]


def _boundary_oracle(V: Configuration) -> frozenset:
    """Independent outer-boundary computation: flood empty space inside the
    bounding box inflated by 2 instead of 1, from the opposite corner."""
    los = [min(c[i] for c in V.cells) - 2 for i in range(V.d)]
    his = [max(c[i] for c in V.cells) + 2 for i in range(V.d)]
    start = tuple(his)
    outside = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for e in directions(V.d):
                nb = tuple(a + b for a, b in zip(c, e))
                if nb in outside or nb in V.cells:
                    continue
                if any(x < lo or x > hi for x, lo, hi in zip(nb, los, his)):
                    continue
                outside.add(nb)
                nxt.append(nb)
        frontier = nxt
    return frozenset(c for c in V.cells
                     if any(tuple(a + b for a, b in zip(c, e)) in outside
                            for e in directions(V.d)))


@pytest.mark.parametrize("d,seed", [(2, 11), (2, 12), (3, 13), (3, 14), (4, 15)])
def test_boundary_matches_independent_oracle(d, seed):
    V = random_connected(GenSpec(n=30, d=d, seed=seed))
    assert boundary_modules(V) == _boundary_oracle(V)


@pytest.mark.parametrize("seed", range(5))
def test_complement_partitions_inflated_box(seed):
    rng = random.Random(seed)
    V = random_connected(GenSpec(n=rng.randint(5, 30), d=2, seed=seed * 7 + 1))
    infinite, holes = complement_components(V)
    lo = [min(c[i] for c in V.cells) - 1 for i in range(2)]
    hi = [max(c[i] for c in V.cells) + 1 for i in range(2)]
    box = set(itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))))
    parts = [V.cells, infinite & box, *holes]
    assert sum(len(p) for p in parts) == len(box)
    assert set().union(*parts) == box


def test_holes_sorted_by_min_cell():
    # two separate holes: a figure-eight of rings sharing a wall
    cells = ring2d(0, 2) | ring2d(2, 4)
    _, holes = complement_components(Configuration(2, frozenset(cells)))
    assert [min(h) for h in holes] == [(1, 1), (3, 3)]
