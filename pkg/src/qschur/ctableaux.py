"""Standard composition tableaux via cover chains on compositions.

The partial order on compositions is generated by two cover moves: prepend
a new part of size 1, or add 1 to the first (topmost) part of a given size.
A standard composition tableau (SCT) of shape alpha records a saturated
chain from the empty composition up to alpha: walking the chain downward
from alpha removes the cells containing 1, 2, ..., n in that order.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .compositions import Composition, DescentSet, composition_of


class CompositionTableau:
    """Left-justified rows of integer entries on a composition diagram."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(r) for r in rows)
        if any(not r for r in rows):
            raise ValueError("rows must be nonempty")
        self.rows = rows

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def shift(self, m: int) -> "CompositionTableau":
        """Add ``m`` to every entry (the result is generally not standard)."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        return CompositionTableau(tuple(v + m for v in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CompositionTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CompositionTableau({self.rows})"

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    def to_json_obj(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def covers_up(beta: Composition) -> list[Composition]:
    """All compositions covering ``beta``: the prepend, then one increment
    per distinct part value (applied to its first occurrence)."""
    beta = tuple(beta)
    out = [(1,) + beta]
    seen: set[int] = set()
    for i, part in enumerate(beta):
        if part not in seen:
            seen.add(part)
            out.append(beta[:i] + (part + 1,) + beta[i + 1 :])
    return out


def _down_moves(alpha: Composition) -> list[tuple[int, Composition]]:
    """Inverse cover moves as (removed column, smaller shape) pairs.

    Deleting the leading part needs that part to be 1; decrementing part i
    needs no earlier part of size alpha_i - 1, otherwise the inverse of the
    "first part of its size" rule would pick the earlier position.
    """
    out: list[tuple[int, Composition]] = []
    if alpha[0] == 1:
        out.append((1, alpha[1:]))
    for i, part in enumerate(alpha):
        if part >= 2 and (part - 1) not in alpha[:i]:
            out.append((part, alpha[:i] + (part - 1,) + alpha[i + 1 :]))
    return out


def covers_down(alpha: Composition) -> list[Composition]:
    """All compositions covered by ``alpha`` (delete-leading-1 first, then
    decrements by ascending row index)."""
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("the empty composition covers nothing")
    return [child for _, child in _down_moves(alpha)]


def enumerate_sct(alpha: Composition) -> Iterator[CompositionTableau]:
    """All standard composition tableaux of shape ``alpha``.

    Chains are walked downward; removing a leading 1-part shifts the
    remaining rows up, so each row carries its index in the final shape and
    entries are written at final-shape coordinates.
    """
    alpha = tuple(alpha)
    if any(p < 1 for p in alpha):
        raise ValueError(f"not a composition: {alpha}")
    if not alpha:
        yield CompositionTableau(())
        return
    grid = [[0] * p for p in alpha]

    def rec(entry: int, state: tuple[tuple[int, int], ...]) -> Iterator[CompositionTableau]:
        if not state:
            yield CompositionTableau(grid)
            return
        if state[0][1] == 1:
            grid[state[0][0]][0] = entry
            yield from rec(entry + 1, state[1:])
        for idx, (orig, s) in enumerate(state):
            if s >= 2 and all(t[1] != s - 1 for t in state[:idx]):
                grid[orig][s - 1] = entry
                child = state[:idx] + ((orig, s - 1),) + state[idx + 1 :]
                yield from rec(entry + 1, child)

    yield from rec(1, tuple(enumerate(alpha)))


def des_c(t: CompositionTableau) -> DescentSet:
    """Entries i such that i+1 sits weakly to the right of i."""
    n = t.size
    col_of = [0] * (n + 1)
    for row in t.rows:
        for c, v in enumerate(row, start=1):
            if not 1 <= v <= n or col_of[v]:
                raise ValueError("entries must be 1..n, each once")
            col_of[v] = c
    return DescentSet(n, [i for i in range(1, n) if col_of[i + 1] >= col_of[i]])


def com_c(t: CompositionTableau) -> Composition:
    return composition_of(des_c(t))


def canonical_filling(alpha: Composition) -> CompositionTableau:
    """Row i holds its consecutive block of entries, decreasing to the right."""
    rows = []
    total = 0
    for part in alpha:
        rows.append(tuple(range(total + part, total, -1)))
        total += part
    return CompositionTableau(rows)


def is_valid_sct(t: CompositionTableau) -> bool:
    """True iff deleting the cells 1, 2, ..., n in order realizes a chain of
    inverse cover moves down to the empty composition."""
    n = t.size
    pos: dict[int, tuple[int, int]] = {}
    for r, row in enumerate(t.rows):
        for c, v in enumerate(row, start=1):
            if not 1 <= v <= n or v in pos:
                raise ValueError("entries must be 1..n, each once")
            pos[v] = (r, c)
    live = [[r, size] for r, size in enumerate(t.shape)]
    for e in range(1, n + 1):
        r, c = pos[e]
        idx = next((i for i, (row, _) in enumerate(live) if row == r), None)
        if idx is None or c != live[idx][1]:
            return False
        s = live[idx][1]
        if s == 1:
            if idx != 0:
                return False
            del live[0]
        else:
            if any(row[1] == s - 1 for row in live[:idx]):
                return False
            live[idx][1] = s - 1
    return True
