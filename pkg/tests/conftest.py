"""Shared geometric fixtures for the test suite."""
from __future__ import annotations

import pytest

from cubeplan import Configuration


def ring2d(lo: int, hi: int) -> set[tuple[int, int]]:
    """Perimeter cells of the square [lo, hi]^2."""
    return {(x, y) for x in range(lo, hi + 1) for y in range(lo, hi + 1)
            if x in (lo, hi) or y in (lo, hi)}


def shell3d(lo: int, hi: int) -> set[tuple[int, int, int]]:
    """Surface cells of the cube [lo, hi]^3."""
    return {(x, y, z) for x in range(lo, hi + 1) for y in range(lo, hi + 1)
            for z in range(lo, hi + 1) if lo in (x, y, z) or hi in (x, y, z)}


def chain2d(n: int, y: int = 0, x0: int = 0) -> Configuration:
    return Configuration.of(2, [(x0 + k, y) for k in range(n)])


@pytest.fixture
def domino() -> Configuration:
    return Configuration.of(2, [(0, 0), (1, 0)])


@pytest.fixture
def block2x2() -> Configuration:
    return Configuration.of(2, [(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def ring3x3() -> Configuration:
    """3x3 square with the center empty: 8 modules, one finite hole."""
    return Configuration(2, frozenset(ring2d(0, 2)))


@pytest.fixture
def ring_plus_plug() -> Configuration:
    """16 perimeter cells of [0,4]^2 plus a plug at (2,1) hanging inside.

    Removing x=(2,0) leaves the plug as an inner component: the canonical
    nearly-non-articulate instance.
    """
    return Configuration(2, frozenset(ring2d(0, 4) | {(2, 1)}))


@pytest.fixture
def nested_rings() -> Configuration:
    """Ring inside a ring, joined by a two-cell bridge, inner plug at (5,4).

    With DFS root (6, 0), freeing the minimum-post-order boundary module
    (5, 0) requires recursing into the inner ring: a depth-2 instance.
    """
    cells = ring2d(0, 10) | {(5, 1), (5, 2)} | ring2d(3, 7) | {(5, 4)}
    return Configuration(2, frozenset(cells))


@pytest.fixture
def box_plug_3d() -> Configuration:
    """Hollow 5x5x5 box surface with a plug at (2,2,1) hanging inside.

    Removing (2,2,0) leaves the plug enclosed: nearly non-articulate in 3D.
    """
    return Configuration(3, frozenset(shell3d(0, 4) | {(2, 2, 1)}))


@pytest.fixture
def l_tromino() -> Configuration:
    return Configuration.of(2, [(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def straight_tromino() -> Configuration:
    return Configuration.of(2, [(0, 0), (1, 0), (2, 0)])
