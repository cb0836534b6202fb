"""Deterministic random instance generation for tests and benchmarks."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .lattice import Cell, Configuration, add, directions

STYLES = ("blob", "tree", "serpentine")


@dataclass(frozen=True)
class GenSpec:
    """Generation recipe; identical specs always yield identical configurations."""

    n: int
    d: int
    seed: int
    style: str = "blob"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.style not in STYLES:
            raise ValueError(f"unknown style {self.style!r}; expected one of {STYLES}")


def _serpentine(n: int, d: int) -> set[Cell]:
    """Axis-alternating staircase chain in the first two axes."""
    cur = (0,) * d
    cells = {cur}
    axis = 0
    while len(cells) < n:
        step = tuple(1 if i == axis else 0 for i in range(d))
        cur = add(cur, step)
        cells.add(cur)
        axis = 1 - axis
    return cells


def _blob(n: int, d: int, rng: random.Random) -> set[Cell]:
    """Uniform attachment to a random exposed face (rejection sampling)."""
    dirs = directions(d)
    cells = [(0,) * d]
    occupied = {cells[0]}
    while len(occupied) < n:
        c = cells[rng.randrange(len(cells))]
        nb = add(c, dirs[rng.randrange(len(dirs))])
        if nb not in occupied:
            occupied.add(nb)
            cells.append(nb)
    return occupied


def _tree(n: int, d: int, rng: random.Random) -> set[Cell]:
    """Growth biased toward degree-1 attachment (stringy shapes)."""
    dirs = directions(d)
    cells = [(0,) * d]
    occupied = {cells[0]}
    while len(occupied) < n:
        base = cells[-1] if rng.random() < 0.7 else cells[rng.randrange(len(cells))]
        placed = False
        for _ in range(20):
            nb = add(base, dirs[rng.randrange(len(dirs))])
            if nb in occupied:
                continue
            degree = sum(1 for e in dirs if add(nb, e) in occupied)
            if degree == 1:
                occupied.add(nb)
                cells.append(nb)
                placed = True
                break
        if not placed:
            # fall back to blob-style attachment so growth cannot stall
            c = cells[rng.randrange(len(cells))]
            nb = add(c, dirs[rng.randrange(len(dirs))])
            if nb not in occupied:
                occupied.add(nb)
                cells.append(nb)
    return occupied


def random_connected(spec: GenSpec) -> Configuration:
    """A connected configuration of exactly spec.n cells, deterministic in seed."""
    rng = random.Random(spec.seed)
    if spec.style == "serpentine":
        cells = _serpentine(spec.n, spec.d)
    elif spec.style == "blob":
        cells = _blob(spec.n, spec.d, rng)
    else:
        cells = _tree(spec.n, spec.d, rng)
    return Configuration(spec.d, frozenset(cells))
