"""Reconfiguration planning: free a removable module, grow a straight chain,
relocate chains, and compose full source-to-target plans.

Single-module transit is breadth-first search over the mover's reachable
positions with the rest of the world held fixed; any path would do for
correctness, BFS keeps traces short and deterministic. Transit failure is
never retried or worked around: reachability is guaranteed by construction,
so an exhausted search is raised as an internal alarm.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .analysis import (PostOrderLabels, Verdict, articulate_cells, build_adjacency,
                       min_postorder_boundary, postorder)
from .errors import InfeasibleError, InternalAssertionError, TransitUnreachableError
from .lattice import Cell, Configuration, add, directions, outer_region
from .moves import Move, Trace, _raw_legal_moves, _to_move


def _e1(d: int) -> tuple[int, ...]:
    return (1,) + (0,) * (d - 1)


@dataclass(frozen=True)
class ChainSpec:
    """A straight chain of `length` modules along +x1 starting at `anchor`."""

    d: int
    anchor: Cell
    length: int

    def cells(self) -> list[Cell]:
        a = self.anchor
        return [(a[0] + k,) + a[1:] for k in range(self.length)]

    def configuration(self) -> Configuration:
        return Configuration(self.d, frozenset(self.cells()))


def _transit(rest: set[Cell] | frozenset[Cell], d: int, start: Cell,
             goal: Callable[[Cell], bool],
             forbidden: frozenset[Cell] = frozenset()) -> tuple[Cell, list[Move]]:
    """Shortest move sequence taking the module at `start` to a goal position.

    `rest` is every occupied cell except the mover and stays fixed; legality
    is checked against it. Positions in `forbidden` are never entered.
    """
    if goal(start):
        return start, []
    prev: dict[Cell, tuple] = {start: None}
    queue = deque([start])
    while queue:
        pos = queue.popleft()
        for dst, kind, wit in _raw_legal_moves(rest, d, pos):
            if dst in prev or dst in forbidden:
                continue
            prev[dst] = (pos, kind, wit)
            if goal(dst):
                moves = []
                cur = dst
                while prev[cur] is not None:
                    p, k, w = prev[cur]
                    moves.append(_to_move(p, cur, k, w))
                    cur = p
                moves.reverse()
                return dst, moves
            queue.append(dst)
    raise TransitUnreachableError(
        f"no move sequence takes {start} to a goal position")


def boundary_transit(world: Configuration, mover: Cell,
                     goal: Callable[[Cell], bool],
                     forbidden: Iterable[Cell] = ()) -> list[Move]:
    """BFS transit of one module over a fixed world; see _transit."""
    if mover not in world.cells:
        raise KeyError(f"mover {mover} not in configuration")
    _, moves = _transit(world.cells - {mover}, world.d, mover, goal, frozenset(forbidden))
    return moves


def _apply(occupied: set[Cell], moves: list[Move]) -> None:
    for m in moves:
        occupied.remove(m.src)
        occupied.add(m.dst)


def _locate_and_free(occupied: set[Cell], d: int, local: set[Cell], s: Cell,
                     order: dict[Cell, int], sink: list[Move],
                     on_free: Callable | None = None, depth: int = 1) -> Cell:
    """Find and, if needed, free a boundary module of `local` other than s.

    Recursive: if the minimum-postorder boundary module x is nearly
    non-articulate with inner component I and inner neighbor y, recurse on I
    rooted at y (reusing the post-order ranks, which restrict to a valid
    post-order of I), then walk the freed inner module until x stops being
    articulate. Mutates `occupied` and `local`; appends emitted moves to
    `sink`. Move legality is always checked against the full occupancy,
    while all graph analyses run on the recursion's local cell set.

    Post-state: x is on the boundary of the given `local`, non-articulate in
    the updated one, and no boundary module of `local` has moved.
    """
    if len(local) == 1:
        return next(iter(local))
    region = outer_region(local, d)
    bout_before = region[1]
    cfg = Configuration(d, frozenset(local))
    x, cls = min_postorder_boundary(cfg, PostOrderLabels(s, order), region=region)
    if cls.verdict is Verdict.NON_ARTICULATE:
        if on_free is not None:
            on_free(depth, bout_before, bout_before)
        return x
    inner = set(cls.inner)
    y = cls.inner_neighbor
    sub_order = {c: order[c] for c in inner}
    if max(inner, key=sub_order.__getitem__) != y:
        raise InternalAssertionError("inner neighbor does not finish last in its component")
    before = len(sink)
    z = _locate_and_free(occupied, d, inner, y, sub_order, sink, on_free, depth + 1)
    for m in sink[before:]:
        local.discard(m.src)
        local.add(m.dst)

    # x stops being articulate exactly when the mover touches every component
    # of local - {z, x}; labeling those fixed components once makes the goal
    # an O(d) neighborhood probe instead of a flood fill per position.
    base = local - {z, x}
    label: dict[Cell, int] = {}
    n_comps = 0
    base_adj = build_adjacency(base, d)
    for c in base:
        if c in label:
            continue
        n_comps += 1
        label[c] = n_comps
        frontier = [c]
        while frontier:
            nxt = []
            for u in frontier:
                for nb in base_adj[u]:
                    if nb not in label:
                        label[nb] = n_comps
                        nxt.append(nb)
            frontier = nxt
    dirs = directions(d)

    def connects(pos: Cell) -> bool:
        seen = set()
        for e in dirs:
            lbl = label.get(add(pos, e))
            if lbl is not None:
                seen.add(lbl)
        return len(seen) == n_comps

    _, moves = _transit(occupied - {z}, d, z, connects)
    _apply(occupied, moves)
    for m in moves:
        local.discard(m.src)
        local.add(m.dst)
    sink.extend(moves)
    bout_after = outer_region(local, d)[1]
    if bout_after != bout_before:
        raise InternalAssertionError("boundary modules moved during locate_and_free")
    if articulate_cells(local, d, x):
        raise InternalAssertionError(f"freed module {x} is still articulate")
    if on_free is not None:
        on_free(depth, bout_before, bout_after)
    return x


def locate_and_free(V: Configuration, s: Cell,
                    on_free: Callable | None = None) -> tuple[Cell, list[Move]]:
    """Standalone locate-and-free on a configuration rooted at boundary module s.

    Returns the chosen module x and the moves that made it non-articulate.
    """
    labels = postorder(V, s)
    occupied = set(V.cells)
    local = set(V.cells)
    sink: list[Move] = []
    x = _locate_and_free(occupied, V.d, local, s, labels.order, sink, on_free)
    return x, sink


def _as_x1_chain(cells: frozenset[Cell]) -> Cell | None:
    """The anchor if `cells` is exactly a straight +x1 chain, else None."""
    anchor = min(cells)
    tail = anchor[1:]
    for k, c in enumerate(sorted(cells)):
        if c != (anchor[0] + k,) + tail:
            return None
    return anchor


def canonicalize(V: Configuration,
                 on_free: Callable | None = None) -> tuple[Trace, ChainSpec]:
    """Reconfigure V into a straight +x1 chain anchored at its x1-maximal module.

    The anchor never moves. Each round recomputes post-order ranks from the
    anchor, frees a non-articulate module of the remainder, and walks it to
    the next chain cell. Inputs that already form a straight +x1 chain are
    returned untouched (anchored at their low end) rather than re-grown past
    their x1-maximal module.
    """
    d = V.d
    n = V.n
    if n == 1:
        return Trace(V), ChainSpec(d, next(iter(V.cells)), 1)
    anchor = _as_x1_chain(V.cells)
    if anchor is not None:
        return Trace(V), ChainSpec(d, anchor, n)
    s = max(V.cells)  # maximal x1, ties by lexicographically greatest remainder
    occupied = set(V.cells)
    local = set(V.cells)
    moves: list[Move] = []
    e1 = _e1(d)
    for i in range(1, n):
        labels = postorder(Configuration(d, frozenset(local)), s)
        x = _locate_and_free(occupied, d, local, s, labels.order, moves, on_free)
        target = (s[0] + i,) + s[1:]
        _, tmoves = _transit(occupied - {x}, d, x, lambda pos: pos == target)
        _apply(occupied, tmoves)
        moves.extend(tmoves)
        local.discard(x)
    chain = ChainSpec(d, s, n)
    if occupied != set(chain.cells()):
        raise InternalAssertionError("canonicalize did not end at the straight chain")
    return Trace(V, tuple(moves)), chain


def _snake_path(src: ChainSpec, dst: ChainSpec) -> list[Cell]:
    """A simple rectilinear path covering the source cells, a connector, and
    the target cells; consecutive cells are face-adjacent and all distinct."""
    n = src.length
    lat1, lat2 = src.anchor[1:], dst.anchor[1:]
    a1, b1 = src.anchor[0], dst.anchor[0]
    if lat1 == lat2:
        if b1 >= a1:
            return [(x,) + lat1 for x in range(a1, b1 + n)]
        return [(x,) + lat1 for x in range(a1 + n - 1, b1 - 1, -1)]
    top = max(a1, b1) + n - 1 + 2
    path = [(x,) + lat1 for x in range(a1, top + 1)]
    cur = list(lat1)
    for axis in range(len(cur)):
        step = 1 if lat2[axis] > cur[axis] else -1
        while cur[axis] != lat2[axis]:
            cur[axis] += step
            path.append((top,) + tuple(cur))
    path.extend((x,) + lat2 for x in range(top - 1, b1 - 1, -1))
    return path


def transport_chain(src: ChainSpec, dst: ChainSpec) -> Trace:
    """Relocate a straight chain, alone in the world, onto another chain.

    Snakes the chain along a simple lattice path: the rearmost module (an
    endpoint, hence always removable) repeatedly walks to the path cell just
    beyond the foremost one.
    """
    if src.d != dst.d:
        raise InfeasibleError("chains live in different dimensions")
    if src.length != dst.length:
        raise InfeasibleError("chains have different lengths")
    initial = src.configuration()
    if src == dst:
        return Trace(initial)
    n = src.length
    if n < 2:
        raise InfeasibleError("a lone module has no legal moves")
    path = _snake_path(src, dst)
    if set(path[:n]) != set(initial.cells) or set(path[-n:]) != set(dst.cells()):
        raise InternalAssertionError("snake path does not join the two chains")
    occupied = set(initial.cells)
    moves: list[Move] = []
    for i in range(len(path) - n):
        tail, beyond = path[i], path[i + n]
        _, tmoves = _transit(occupied - {tail}, src.d, tail, lambda pos: pos == beyond)
        _apply(occupied, tmoves)
        moves.extend(tmoves)
    if occupied != set(dst.cells()):
        raise InternalAssertionError("chain transport did not end at the target chain")
    return Trace(initial, tuple(moves))


def plan(V: Configuration, V2: Configuration) -> Trace:
    """A validated-by-construction trace reconfiguring V into exactly V2.

    Composition: canonicalize the source, transport the resulting chain onto
    the target's chain, then replay the target's canonicalization in reverse.
    """
    if V.d != V2.d:
        raise InfeasibleError(f"dimension mismatch: {V.d} vs {V2.d}")
    if V.n != V2.n:
        raise InfeasibleError(f"module count mismatch: {V.n} vs {V2.n}")
    if V.n == 1:
        if V.cells == V2.cells:
            return Trace(V)
        raise InfeasibleError("a lone module cannot move: no pivot or support exists")
    from .moves import reverse_trace
    t1, c1 = canonicalize(V)
    t2, c2 = canonicalize(V2)
    transport = transport_chain(c1, c2)
    back = reverse_trace(t2, c2.configuration())
    return Trace(V, t1.moves + transport.moves + back.moves)
