"""Connectivity-graph analysis: DFS post-order, articulation, split verdicts.

Articulation queries use deletion plus flood fill over a precomputed
adjacency map; the planner only ever asks about specific modules, so
lowpoint machinery would buy nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalAssertionError
from .lattice import (Cell, Configuration, add, build_adjacency, directions,
                      outer_region, sub)


@dataclass(frozen=True)
class PostOrderLabels:
    """DFS finishing ranks 1..n; the root always finishes last (rank n)."""

    root: Cell
    order: dict[Cell, int]


def postorder(V: Configuration, root: Cell) -> PostOrderLabels:
    """Iterative DFS from `root`, neighbors in the global direction order."""
    cells = V.cells
    if root not in cells:
        raise KeyError(f"root {root} not in configuration")
    dirs = directions(V.d)
    ndirs = len(dirs)
    order: dict[Cell, int] = {}
    visited = {root}
    stack: list[list] = [[root, 0]]
    rank = 0
    while stack:
        top = stack[-1]
        cell, i = top
        descended = False
        while i < ndirs:
            nb = add(cell, dirs[i])
            i += 1
            if nb in cells and nb not in visited:
                top[1] = i
                visited.add(nb)
                stack.append([nb, 0])
                descended = True
                break
        if not descended:
            stack.pop()
            rank += 1
            order[cell] = rank
    if len(order) != len(cells):
        raise ValueError("configuration is not connected")
    return PostOrderLabels(root, order)


def _connected_without(cells, adjacency: dict[Cell, list[Cell]], removed: Cell) -> bool:
    rest_size = len(cells) - 1
    start = None
    for nb in adjacency[removed]:
        start = nb
        break
    if start is None:
        # removed had no neighbors: the rest is connected only if empty
        return rest_size == 0
    seen = {start, removed}
    frontier = [start]
    count = 1
    while frontier:
        nxt = []
        for c in frontier:
            for nb in adjacency[c]:
                if nb not in seen:
                    seen.add(nb)
                    count += 1
                    nxt.append(nb)
        frontier = nxt
    return count == rest_size


def is_articulate(V: Configuration, m: Cell) -> bool:
    """True iff removing m disconnects V. Single-module configurations never are."""
    if m not in V.cells:
        raise KeyError(f"module {m} not in configuration")
    if V.n == 1:
        return False
    adjacency = build_adjacency(V.cells, V.d)
    return not _connected_without(V.cells, adjacency, m)


def articulate_cells(cells, d: int, m: Cell,
                     adjacency: dict[Cell, list[Cell]] | None = None) -> bool:
    """Raw-set variant of is_articulate for hot planner paths."""
    if len(cells) == 1:
        return False
    if adjacency is None:
        adjacency = build_adjacency(cells, d)
    return not _connected_without(cells, adjacency, m)


def nonarticulate_modules(V: Configuration) -> list[Cell]:
    """All modules whose removal keeps V connected, in lexicographic order.

    Any connected configuration with n >= 2 has at least two of them (a
    spanning tree has two leaves).
    """
    if V.n == 1:
        return V.sorted_cells()
    adjacency = build_adjacency(V.cells, V.d)
    return [c for c in V.sorted_cells() if _connected_without(V.cells, adjacency, c)]


class Verdict(Enum):
    NON_ARTICULATE = "non-articulate"
    NEARLY_NON_ARTICULATE = "nearly-non-articulate"
    OTHER_ARTICULATE = "other-articulate"


@dataclass(frozen=True)
class SplitClassification:
    """Verdict for removing `subject`, with the outer/inner components when
    the subject is nearly non-articulate."""

    subject: Cell
    verdict: Verdict
    outer: frozenset[Cell] | None = None
    inner: frozenset[Cell] | None = None
    inner_neighbor: Cell | None = None


def _components(cells, adjacency, skip: Cell) -> list[set[Cell]]:
    seen = {skip}
    comps = []
    for c in cells:
        if c in seen:
            continue
        comp = {c}
        seen.add(c)
        frontier = [c]
        while frontier:
            nxt = []
            for u in frontier:
                for nb in adjacency[u]:
                    if nb not in seen:
                        seen.add(nb)
                        comp.add(nb)
                        nxt.append(nb)
            frontier = nxt
        comps.append(comp)
    return comps


def split_at(V: Configuration, x: Cell,
             region: tuple[frozenset[Cell], frozenset[Cell]] | None = None
             ) -> SplitClassification:
    """Classify module x by the component structure of V without it.

    Nearly non-articulate means exactly two components, one of them (the
    inner component I) disjoint from the boundary modules. In that case this
    also asserts the structural guarantees that the planner relies on: the
    face of x opposite its unique inner neighbor lies on the outer boundary,
    and every other neighbor of x lies in the outer component.
    """
    if x not in V.cells:
        raise KeyError(f"module {x} not in configuration")
    if V.n < 2:
        raise ValueError("split_at needs at least two modules")
    adjacency = build_adjacency(V.cells, V.d)
    comps = _components(V.cells, adjacency, x)
    if len(comps) == 1:
        return SplitClassification(x, Verdict.NON_ARTICULATE)
    infinite, bout = region if region is not None else outer_region(V.cells, V.d)
    inner_comps = [c for c in comps if not (c & bout)]
    if len(comps) != 2 or len(inner_comps) != 1:
        return SplitClassification(x, Verdict.OTHER_ARTICULATE)
    inner = inner_comps[0]
    outer = next(c for c in comps if c is not inner)
    inner_nbrs = [nb for nb in adjacency[x] if nb in inner]
    if len(inner_nbrs) != 1:
        raise InternalAssertionError(
            f"nearly non-articulate module {x} has {len(inner_nbrs)} inner neighbors")
    y = inner_nbrs[0]
    opposite = add(x, sub(x, y))
    if opposite not in infinite:
        raise InternalAssertionError(
            f"face of {x} opposite its inner neighbor is not on the outer boundary")
    others = [nb for nb in adjacency[x] if nb != y]
    if not others:
        raise InternalAssertionError(f"nearly non-articulate module {x} has degree 1")
    for w in others:
        if w not in outer:
            raise InternalAssertionError(f"neighbor {w} of {x} escaped the outer component")
    return SplitClassification(x, Verdict.NEARLY_NON_ARTICULATE,
                               outer=frozenset(outer), inner=frozenset(inner),
                               inner_neighbor=y)


def min_postorder_boundary(V: Configuration, labels: PostOrderLabels,
                           region: tuple[frozenset[Cell], frozenset[Cell]] | None = None
                           ) -> tuple[Cell, SplitClassification]:
    """The boundary module finishing first in the DFS, with its classification.

    With labels rooted at a boundary module, the result is guaranteed to be
    non-articulate or nearly non-articulate; anything else is a violated
    invariant, not a recoverable condition.
    """
    if V.n < 2:
        raise ValueError("min_postorder_boundary needs at least two modules")
    if region is None:
        region = outer_region(V.cells, V.d)
    order = labels.order
    x = min(region[1], key=lambda c: order[c])
    if x == labels.root:
        raise InternalAssertionError("minimum-rank boundary module is the DFS root")
    cls = split_at(V, x, region=region)
    if cls.verdict is Verdict.OTHER_ARTICULATE:
        raise InternalAssertionError(
            f"boundary module {x} with minimal post-order is neither non-articulate "
            "nor nearly non-articulate")
    return x, cls
