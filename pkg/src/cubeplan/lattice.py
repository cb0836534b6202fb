"""Integer-lattice geometry for unit-cube module configurations.

Cells are plain integer tuples. Every neighbor enumeration in the package
follows one global direction order (+x1, -x1, +x2, -x2, ...) so that all
traversals, and hence all emitted traces, are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np
from scipy import ndimage

Cell = tuple[int, ...]
Direction = tuple[int, ...]


@lru_cache(maxsize=None)
def directions(d: int) -> tuple[Direction, ...]:
    """Signed unit steps in the global order +x1, -x1, +x2, -x2, ..."""
    out = []
    for axis in range(d):
        for sign in (1, -1):
            out.append(tuple(sign if i == axis else 0 for i in range(d)))
    return tuple(out)


def add(c: Cell, e: Direction) -> Cell:
    if len(c) == 2:
        return (c[0] + e[0], c[1] + e[1])
    if len(c) == 3:
        return (c[0] + e[0], c[1] + e[1], c[2] + e[2])
    if len(c) == 4:
        return (c[0] + e[0], c[1] + e[1], c[2] + e[2], c[3] + e[3])
    return tuple(a + b for a, b in zip(c, e))


def sub(c: Cell, e: Cell) -> Cell:
    return tuple(a - b for a, b in zip(c, e))


def face_neighbors(c: Cell, d: int) -> list[Cell]:
    """The 2d cells differing from c by +-1 in exactly one coordinate."""
    if len(c) != d:
        raise ValueError(f"cell {c} does not have {d} coordinates")
    return [add(c, e) for e in directions(d)]


def edge_neighbors(c: Cell, d: int) -> list[Cell]:
    """The 2d(d-1) cells differing from c by +-1 in exactly two coordinates."""
    if len(c) != d:
        raise ValueError(f"cell {c} does not have {d} coordinates")
    if d < 2:
        raise ValueError("edge adjacency needs d >= 2")
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            for si in (1, -1):
                for sj in (1, -1):
                    nb = list(c)
                    nb[i] += si
                    nb[j] += sj
                    out.append(tuple(nb))
    return out


@dataclass(frozen=True)
class Configuration:
    """A dimension d plus a finite, nonempty set of occupied cells."""

    d: int
    cells: frozenset[Cell]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if not self.cells:
            raise ValueError("configuration must contain at least one cell")
        for c in self.cells:
            if len(c) != self.d:
                raise ValueError(f"cell {c} does not have {self.d} coordinates")

    @staticmethod
    def of(d: int, cells: Iterable[Iterable[int]]) -> "Configuration":
        return Configuration(d, frozenset(tuple(int(x) for x in c) for c in cells))

    @property
    def n(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)


def build_adjacency(cells: frozenset[Cell] | set[Cell], d: int) -> dict[Cell, list[Cell]]:
    """Face-adjacency lists within `cells`, neighbors in global direction order."""
    dirs = directions(d)
    return {c: [nb for e in dirs if (nb := add(c, e)) in cells] for c in cells}


def cells_connected(cells: frozenset[Cell] | set[Cell], d: int,
                    adjacency: dict[Cell, list[Cell]] | None = None) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    if adjacency is not None:
        while frontier:
            nxt = []
            for c in frontier:
                for nb in adjacency[c]:
                    if nb in cells and nb not in seen:
                        seen.add(nb)
                        nxt.append(nb)
            frontier = nxt
        return len(seen) == len(cells)
    dirs = directions(d)
    while frontier:
        nxt = []
        for c in frontier:
            for e in dirs:
                nb = add(c, e)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return len(seen) == len(cells)


def is_connected(V: Configuration) -> bool:
    """True iff the face-adjacency graph on V's cells is connected."""
    return cells_connected(V.cells, V.d)


def _bounding_box(cells) -> tuple[tuple[int, ...], tuple[int, ...]]:
    it = iter(cells)
    first = next(it)
    lo = list(first)
    hi = list(first)
    for c in it:
        for i, x in enumerate(c):
            if x < lo[i]:
                lo[i] = x
            elif x > hi[i]:
                hi[i] = x
    return tuple(lo), tuple(hi)


def _label_complement(cells, d: int):
    """Face-connected component labels of the empty space inside the bounding
    box inflated by 1. Returns (origin, labels, n_labels, occupied, structure);
    grid index p corresponds to lattice cell origin + p."""
    lo0, hi0 = _bounding_box(cells)
    origin = tuple(x - 1 for x in lo0)
    shape = tuple(h - l + 3 for l, h in zip(lo0, hi0))
    occupied = np.zeros(shape, dtype=bool)
    idx = np.array([[x - o for x, o in zip(c, origin)] for c in cells])
    occupied[tuple(idx.T)] = True
    structure = ndimage.generate_binary_structure(d, 1)
    labels, n_labels = ndimage.label(~occupied, structure=structure)
    return origin, labels, n_labels, occupied, structure


def _decode(points, origin) -> frozenset[Cell]:
    return frozenset(tuple(int(x) + o for x, o in zip(p, origin)) for p in points)


def complement_region(cells, d: int) -> tuple[frozenset[Cell], list[frozenset[Cell]]]:
    """Empty-space decomposition inside the bounding box of `cells` inflated by 1.

    Returns (infinite_component, holes). The infinite component is the one
    containing the inflated shell; holes are every other empty component,
    ordered by their lexicographically smallest cell.
    """
    origin, labels, n_labels, _occupied, _structure = _label_complement(cells, d)
    infinite_label = labels[(0,) * d]
    infinite = _decode(np.argwhere(labels == infinite_label), origin)
    holes = []
    for lab in range(1, n_labels + 1):
        if lab == infinite_label:
            continue
        points = np.argwhere(labels == lab)
        # the inflated shell is face-connected for d >= 2, so every other
        # component must be strictly interior
        if points.min() == 0 or (points == np.array(labels.shape) - 1).any():
            raise AssertionError("second complement component touches the shell")
        holes.append(_decode(points, origin))
    holes.sort(key=min)
    return infinite, holes


def complement_components(V: Configuration) -> tuple[frozenset[Cell], list[frozenset[Cell]]]:
    """Face-connected components of the complement of V within its inflated box.

    Exactly one component (the first return value) is infinite; the rest are
    the finite holes.
    """
    return complement_region(V.cells, V.d)


@dataclass(frozen=True)
class BoundarySummary:
    """Outer-boundary faces, the modules owning them, and the finite holes."""

    faces: frozenset[tuple[Cell, Direction]]
    modules: frozenset[Cell]
    holes: tuple[frozenset[Cell], ...]


def outer_region(cells, d: int) -> tuple[frozenset[Cell], frozenset[Cell]]:
    """(module-adjacent cells of the infinite empty component, boundary modules).

    The first set is the infinite component restricted to cells face-adjacent
    to a module: exactly the cells whose membership ever gets queried (outer
    faces are, by definition, faces between a module and the infinite region).
    """
    origin, labels, _n_labels, occupied, structure = _label_complement(cells, d)
    infinite_mask = labels == labels[(0,) * d]
    modules_mask = occupied & ndimage.binary_dilation(infinite_mask, structure)
    near_mask = infinite_mask & ndimage.binary_dilation(occupied, structure)
    return (_decode(np.argwhere(near_mask), origin),
            _decode(np.argwhere(modules_mask), origin))


def boundary_modules(V: Configuration) -> frozenset[Cell]:
    """The modules of V with at least one face on the outer boundary."""
    return outer_region(V.cells, V.d)[1]


def outer_boundary(V: Configuration) -> BoundarySummary:
    """Outer-boundary faces and modules of V, plus its holes."""
    infinite, holes = complement_region(V.cells, V.d)
    dirs = directions(V.d)
    faces = set()
    modules = set()
    for c in V.cells:
        for e in dirs:
            if add(c, e) in infinite:
                faces.add((c, e))
                modules.add(c)
    return BoundarySummary(frozenset(faces), frozenset(modules), tuple(holes))
