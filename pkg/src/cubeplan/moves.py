"""The move model: rotations and slides, trace replay and reversal.

A rotation carries its pivot and a slide carries its two supports, so a
trace is self-certifying: validators recheck the stored witnesses instead
of searching for new ones. Geometric legality and connectivity are
deliberately separate checks; moves are legal or not locally, while
connectivity is enforced per replay step by validate_trace.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IllegalMoveError, MalformedMoveError, TraceError
from .lattice import Cell, Configuration, add, cells_connected, directions, sub

ROTATION = "R"
SLIDE = "S"


def _is_unit(v: tuple[int, ...]) -> bool:
    return sum(abs(x) for x in v) == 1 and all(abs(x) <= 1 for x in v)


def _is_diagonal(v: tuple[int, ...]) -> bool:
    nonzero = [x for x in v if x != 0]
    return len(nonzero) == 2 and all(abs(x) == 1 for x in nonzero)


@dataclass(frozen=True)
class Move:
    """One relocation of a single module.

    Rotations displace the mover diagonally (L1 distance 2) around a pivot
    face-adjacent to both endpoints; slides displace it by one cell along an
    axis across two co-facial supports.
    """

    kind: str
    src: Cell
    dst: Cell
    pivot: Cell | None = None
    supports: tuple[Cell, Cell] | None = None

    def __post_init__(self):
        if self.kind == ROTATION:
            if self.pivot is None or self.supports is not None:
                raise MalformedMoveError("rotation needs a pivot and no supports")
            if not _is_diagonal(sub(self.dst, self.src)):
                raise MalformedMoveError(f"rotation {self.src}->{self.dst} is not diagonal")
            if not _is_unit(sub(self.src, self.pivot)) or not _is_unit(sub(self.dst, self.pivot)):
                raise MalformedMoveError("rotation endpoints must be face-adjacent to the pivot")
        elif self.kind == SLIDE:
            if self.supports is None or self.pivot is not None:
                raise MalformedMoveError("slide needs two supports and no pivot")
            step = sub(self.dst, self.src)
            if not _is_unit(step):
                raise MalformedMoveError(f"slide {self.src}->{self.dst} is not a unit step")
            b, b2 = self.supports
            lateral = sub(b, self.src)
            if not _is_unit(lateral) or any(a and b_ for a, b_ in zip(step, lateral)):
                raise MalformedMoveError("first support must be lateral to the slide direction")
            if sub(b2, self.dst) != lateral:
                raise MalformedMoveError("second support must mirror the first at the destination")
        else:
            raise MalformedMoveError(f"unknown move kind {self.kind!r}")

    def reversed(self) -> "Move":
        supports = None
        if self.supports is not None:
            supports = (self.supports[1], self.supports[0])
        return Move(self.kind, self.dst, self.src, self.pivot, supports)


@lru_cache(maxsize=None)
def _dir_templates(d: int):
    """For each direction e, the directions on other axes (for pivots/supports)."""
    dirs = directions(d)
    out = []
    for e in dirs:
        axis = next(i for i, x in enumerate(e) if x)
        out.append((e, tuple(e2 for e2 in dirs if not e2[axis])))
    return tuple(out)


def rotation_legal(V: Configuration, a: Cell, pivot: Cell, to: Cell) -> bool:
    """Can module a rotate around `pivot` into cell `to`?

    Requires the target cell and the edge cell diagonal to the pivot
    (between the source and target faces) to both be empty.
    """
    cells = V.cells
    if a not in cells:
        raise MalformedMoveError(f"module {a} not in configuration")
    if pivot not in cells:
        raise MalformedMoveError(f"pivot {pivot} not in configuration")
    e = sub(a, pivot)
    if not _is_unit(e):
        raise MalformedMoveError(f"module {a} is not face-adjacent to pivot {pivot}")
    e2 = sub(to, pivot)
    if not _is_unit(e2) or any(x and y for x, y in zip(e, e2)):
        return False
    if to in cells:
        return False
    corner = add(a, e2)  # == pivot + e + e2
    return corner not in cells


def slide_legal(V: Configuration, a: Cell, to: Cell) -> tuple[bool, tuple[Cell, Cell] | None]:
    """Can module a slide into `to`? Returns the first witness support pair.

    The witness is the pair (b, b') for the first lateral direction in the
    global direction order with both supports present.
    """
    cells = V.cells
    if a not in cells:
        raise MalformedMoveError(f"module {a} not in configuration")
    e = sub(to, a)
    if not _is_unit(e) or to in cells:
        return False, None
    axis = next(i for i, x in enumerate(e) if x)
    for e2 in directions(V.d):
        if e2[axis]:
            continue
        b = add(a, e2)
        if b in cells:
            b2 = add(to, e2)
            if b2 in cells:
                return True, (b, b2)
    return False, None


def _raw_legal_moves(rest: frozenset[Cell] | set[Cell], d: int, pos: Cell):
    """(dst, kind, witness) triples for the module at `pos`, with every other
    occupied cell given by `rest` (which must exclude `pos`).

    Enumeration order: for each direction in the global order, rotations
    around an occupied neighbor before the slide through an empty neighbor.
    Duplicate destinations are kept (distinct witnesses).
    """
    out = []
    for e, laterals in _dir_templates(d):
        p = add(pos, e)
        if p in rest:
            for e2 in laterals:
                t = add(p, e2)
                if t not in rest and add(pos, e2) not in rest:
                    out.append((t, ROTATION, p))
        else:
            for e2 in laterals:
                b = add(pos, e2)
                if b in rest:
                    b2 = add(p, e2)
                    if b2 in rest:
                        out.append((p, SLIDE, (b, b2)))
                        break
    return out


def _to_move(pos: Cell, dst: Cell, kind: str, witness) -> Move:
    if kind == ROTATION:
        return Move(ROTATION, pos, dst, pivot=witness)
    return Move(SLIDE, pos, dst, supports=witness)


def legal_moves(V: Configuration, a: Cell) -> list[Move]:
    """All legal rotations and slides of module a, in deterministic order."""
    if a not in V.cells:
        raise MalformedMoveError(f"module {a} not in configuration")
    rest = V.cells - {a}
    return [_to_move(a, dst, kind, wit) for dst, kind, wit in _raw_legal_moves(rest, V.d, a)]


def _check_move(cells: frozenset[Cell] | set[Cell], m: Move) -> None:
    """Recheck a move's witnesses against an occupancy set; raise if illegal."""
    if m.src not in cells:
        raise IllegalMoveError("source absent")
    if m.dst in cells:
        raise IllegalMoveError("target occupied")
    if m.kind == ROTATION:
        if m.pivot not in cells:
            raise IllegalMoveError("pivot absent")
        corner = add(m.src, sub(m.dst, m.pivot))
        if corner in cells:
            raise IllegalMoveError("edge cell occupied")
    else:
        b, b2 = m.supports
        if b not in cells or b2 not in cells:
            raise IllegalMoveError("missing support")


def apply_move(V: Configuration, m: Move) -> Configuration:
    """Apply a legal move, preserving module count; V itself is untouched."""
    _check_move(V.cells, m)
    return Configuration(V.d, (V.cells - {m.src}) | {m.dst})


@dataclass(frozen=True)
class Trace:
    """An ordered move sequence relative to a declared initial configuration."""

    initial: Configuration
    moves: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)


def validate_trace(t: Trace) -> Configuration:
    """Replay a trace, enforcing geometric legality and connectivity throughout.

    Returns the final configuration; raises TraceError with the index and kind
    of the first failure.
    """
    d = t.initial.d
    cells = set(t.initial.cells)
    if not cells_connected(cells, d):
        raise TraceError(-1, "disconnected", "initial configuration")
    dirs = directions(d)
    # adjacency is kept incrementally so the per-move connectivity flood
    # works on dict lookups instead of rebuilding neighbor tuples
    adjacency: dict[Cell, set[Cell]] = {
        c: {nb for e in dirs if (nb := add(c, e)) in cells} for c in cells}
    for i, m in enumerate(t.moves):
        if len(m.src) != d or len(m.dst) != d:
            raise TraceError(i, "malformed", "wrong dimension")
        try:
            _check_move(cells, m)
        except IllegalMoveError as exc:
            raise TraceError(i, "illegal-geometry", exc.reason) from exc
        cells.discard(m.src)
        for nb in adjacency.pop(m.src):
            adjacency[nb].discard(m.src)
        cells.add(m.dst)
        nbrs = {nb for e in dirs if (nb := add(m.dst, e)) in cells}
        adjacency[m.dst] = nbrs
        for nb in nbrs:
            adjacency[nb].add(m.dst)
        if not cells_connected(cells, d, adjacency):
            raise TraceError(i, "disconnected")
    return Configuration(d, frozenset(cells))


def reverse_trace(t: Trace, final: Configuration) -> Trace:
    """The move-by-move reversal of t, starting from its validated final state."""
    end = validate_trace(t)
    if end.cells != final.cells or end.d != final.d:
        raise ValueError("trace does not end at the supplied final configuration")
    return Trace(final, tuple(m.reversed() for m in reversed(t.moves)))
