"""Exact small-instance reachability oracle.

Exhaustive BFS over the configuration space, with states canonicalized by
translation only (lexicographically minimal cell shifted to the origin).
For n >= 2 the quotient is sound because any configuration can reach every
translate of itself; a lone module cannot move at all, so n = 1 is compared
in the fixed frame.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InfeasibleError
from .lattice import Cell, Configuration, cells_connected, sub
from .moves import _raw_legal_moves

DEFAULT_MAX_STATES = 5_000_000


@dataclass(frozen=True)
class OracleResult:
    reachable: bool
    min_moves: int | None
    states_explored: int
    exhausted: bool = False


def canonical_translation(cells) -> frozenset[Cell]:
    """Translate so the lexicographically minimal cell sits at the origin."""
    base = min(cells)
    return frozenset(sub(c, base) for c in cells)


def oracle_reachable(V: Configuration, V2: Configuration,
                     max_states: int = DEFAULT_MAX_STATES) -> OracleResult:
    """Is V2 reachable from V (up to translation, for n >= 2)?

    min_moves is the exact minimum over the translation quotient. When the
    state budget runs out first, the result reports exhausted=True and makes
    no reachability claim.
    """
    if V.d != V2.d:
        raise InfeasibleError(f"dimension mismatch: {V.d} vs {V2.d}")
    if V.n != V2.n:
        raise InfeasibleError(f"module count mismatch: {V.n} vs {V2.n}")
    d = V.d
    if V.n == 1:
        same = V.cells == V2.cells
        return OracleResult(same, 0 if same else None, 1)
    start = canonical_translation(V.cells)
    target = canonical_translation(V2.cells)
    if start == target:
        return OracleResult(True, 0, 1)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        for a in sorted(state):
            rest = state - {a}
            for dst, _kind, _wit in _raw_legal_moves(rest, d, a):
                new = rest | {dst}
                if not cells_connected(new, d):
                    continue
                canon = canonical_translation(new)
                if canon in seen:
                    continue
                if canon == target:
                    return OracleResult(True, depth + 1, len(seen) + 1)
                if len(seen) >= max_states:
                    return OracleResult(False, None, len(seen), exhausted=True)
                seen.add(canon)
                queue.append((canon, depth + 1))
    return OracleResult(False, None, len(seen))


def all_reachable(V: Configuration,
                  max_states: int = DEFAULT_MAX_STATES) -> tuple[set[frozenset[Cell]], bool]:
    """Every translation-canonical configuration reachable from V.

    Returns (states, exhausted); used to certify mutual reachability of whole
    instance families at micro scale.
    """
    d = V.d
    start = canonical_translation(V.cells)
    seen = {start}
    queue = deque([start])
    exhausted = False
    while queue and not exhausted:
        state = queue.popleft()
        for a in sorted(state):
            if exhausted:
                break
            rest = state - {a}
            for dst, _kind, _wit in _raw_legal_moves(rest, d, a):
                new = rest | {dst}
                if not cells_connected(new, d):
                    continue
                canon = canonical_translation(new)
                if canon in seen:
                    continue
                if len(seen) >= max_states:
                    exhausted = True
                    break
                seen.add(canon)
                queue.append(canon)
    return seen, exhausted
