"""Text formats for configurations (.cfg) and traces (.trace).

.cfg: '#' comment lines ignored; first data line "d n"; then n lines of d
space-separated integers. Writers emit cells in lexicographic order.

.trace: '#' comment lines ignored; first data line "d m"; then m lines of
"R <from> <pivot> <to>" or "S <from> <support1> <support2> <to>" with
coordinates comma-separated and no spaces (e.g. "R 1,0 0,0 0,1"). The
initial configuration travels separately as a .cfg file.
"""
from __future__ import annotations

from pathlib import Path

from .errors import MalformedMoveError, ParseError
from .lattice import Cell, Configuration
from .moves import Move, ROTATION, SLIDE


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_coords(token: str, d: int, lineno: int) -> Cell:
    parts = token.split(",")
    if len(parts) != d:
        raise ParseError(f"line {lineno}: expected {d} coordinates, got {token!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad coordinate in {token!r}") from exc


def parse_cfg(text: str) -> Configuration:
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty configuration file") from None
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: expected header 'd n', got {header!r}")
    try:
        d, n = int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from exc
    if d < 2:
        raise ParseError(f"line {lineno}: dimension must be at least 2")
    if n < 1:
        raise ParseError(f"line {lineno}: cell count must be at least 1")
    cells: set[Cell] = set()
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != d:
            raise ParseError(f"line {lineno}: expected {d} coordinates, got {line!r}")
        try:
            cell = tuple(int(f) for f in fields)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad coordinate in {line!r}") from exc
        if cell in cells:
            raise ParseError(f"line {lineno}: duplicate cell {cell}")
        cells.add(cell)
    if len(cells) != n:
        raise ParseError(f"expected {n} cells, found {len(cells)}")
    return Configuration(d, frozenset(cells))


def format_cfg(V: Configuration) -> str:
    lines = [f"{V.d} {V.n}"]
    lines.extend(" ".join(str(x) for x in c) for c in V.sorted_cells())
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> tuple[int, list[Move]]:
    """Returns (dimension, moves); the caller pairs them with a configuration."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty trace file") from None
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: expected header 'd m', got {header!r}")
    try:
        d, m = int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from exc
    if d < 2:
        raise ParseError(f"line {lineno}: dimension must be at least 2")
    moves: list[Move] = []
    for lineno, line in lines:
        fields = line.split()
        kind = fields[0] if fields else ""
        try:
            if kind == ROTATION and len(fields) == 4:
                src, pivot, dst = (_parse_coords(f, d, lineno) for f in fields[1:])
                moves.append(Move(ROTATION, src, dst, pivot=pivot))
            elif kind == SLIDE and len(fields) == 5:
                src, b, b2, dst = (_parse_coords(f, d, lineno) for f in fields[1:])
                moves.append(Move(SLIDE, src, dst, supports=(b, b2)))
            else:
                raise ParseError(f"line {lineno}: unrecognized move {line!r}")
        except MalformedMoveError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if len(moves) != m:
        raise ParseError(f"expected {m} moves, found {len(moves)}")
    return d, moves


def _coords(c: Cell) -> str:
    return ",".join(str(x) for x in c)


def format_trace(d: int, moves) -> str:
    lines = [f"{d} {len(moves)}"]
    for m in moves:
        if m.kind == ROTATION:
            lines.append(f"R {_coords(m.src)} {_coords(m.pivot)} {_coords(m.dst)}")
        else:
            b, b2 = m.supports
            lines.append(f"S {_coords(m.src)} {_coords(b)} {_coords(b2)} {_coords(m.dst)}")
    return "\n".join(lines) + "\n"


def load_cfg(path: str | Path) -> Configuration:
    return parse_cfg(Path(path).read_text())


def save_cfg(path: str | Path, V: Configuration) -> None:
    Path(path).write_text(format_cfg(V))


def load_trace(path: str | Path) -> tuple[int, list[Move]]:
    return parse_trace(Path(path).read_text())


def save_trace(path: str | Path, d: int, moves) -> None:
    Path(path).write_text(format_trace(d, moves))
