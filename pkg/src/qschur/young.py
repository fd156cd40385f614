"""Standard Young tableaux on skew shapes and the lattice-filling route to
the Schur-basis expansion of a skew shape."""

from __future__ import annotations

from typing import Iterable, Iterator

from .compositions import Composition, DescentSet, Partition, composition_of
from .errors import BudgetExceededError
from .expansion import Expansion
from .shapes import SkewShape


class SkewTableau:
    """Integer filling of a skew shape; ``rows[i]`` holds only the cells of
    row i+1, left to right."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: SkewShape, rows: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(r) for r in rows)
        ivs = shape.row_intervals()
        if len(rows) != len(ivs) or any(
            len(row) != b - a for row, (a, b) in zip(rows, ivs)
        ):
            raise ValueError("rows do not match the shape")
        self.shape = shape
        self.rows = rows

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewTableau)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"SkewTableau({self.shape!r}, {self.rows})"

    def to_text(self) -> str:
        ivs = self.shape.row_intervals()
        return "\n".join(
            " ".join(["·"] * a + [str(v) for v in row])
            for row, (a, _) in zip(self.rows, ivs)
        )

    def to_json_obj(self) -> list[list[int | None]]:
        ivs = self.shape.row_intervals()
        return [[None] * a + list(row) for row, (a, _) in zip(self.rows, ivs)]


def _cell_values(t: SkewTableau) -> dict[tuple[int, int], int]:
    out = {}
    for i, (row, (a, _)) in enumerate(zip(t.rows, t.shape.row_intervals()), start=1):
        for k, v in enumerate(row):
            out[(i, a + 1 + k)] = v
    return out


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downward."""
    vals = _cell_values(t)
    for (i, j), v in vals.items():
        if v < 1:
            return False
        right = vals.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = vals.get((i + 1, j))
        if below is not None and below <= v:
            return False
    return True


def is_standard(t: SkewTableau) -> bool:
    """Semistandard with entries exactly 1..n."""
    entries = [v for row in t.rows for v in row]
    return sorted(entries) == list(range(1, len(entries) + 1)) and is_semistandard(t)


def content(t: SkewTableau) -> tuple[int, ...]:
    """Multiplicities of 1, 2, ... up to the largest entry."""
    entries = [v for row in t.rows for v in row]
    if not entries:
        return ()
    top = max(entries)
    counts = [0] * (top + 1)
    for v in entries:
        counts[v] += 1
    return tuple(counts[1:])


def enumerate_syt(shape: SkewShape) -> Iterator[SkewTableau]:
    """All standard Young tableaux of ``shape``, deterministically ordered.

    Entries 1..n are placed in increasing order; the cells available for the
    next entry are those with no unfilled cell above or to the left.
    """
    n = shape.size
    if n == 0:
        yield SkewTableau(shape, ())
        return
    ivs = shape.row_intervals()
    r = len(ivs)
    rows = [[0] * (b - a) for a, b in ivs]
    ptr = [a + 1 for a, _ in ivs]
    ends = [b for _, b in ivs]

    def available(i: int) -> bool:
        p = ptr[i]
        if p > ends[i]:
            return False
        if i == 0:
            return True
        a_up, b_up = ivs[i - 1]
        return not (a_up < p <= b_up and ptr[i - 1] <= p)

    def rec(entry: int) -> Iterator[SkewTableau]:
        if entry > n:
            yield SkewTableau(shape, rows)
            return
        for i in range(r):
            if available(i):
                rows[i][ptr[i] - ivs[i][0] - 1] = entry
                ptr[i] += 1
                yield from rec(entry + 1)
                ptr[i] -= 1

    yield from rec(1)


def des_p(t: SkewTableau) -> DescentSet:
    """Entries i such that i+1 sits in a strictly lower row than i."""
    n = t.shape.size
    row_of = [0] * (n + 1)
    for i, row in enumerate(t.rows, start=1):
        for v in row:
            if not 1 <= v <= n or row_of[v]:
                raise ValueError("entries must be 1..n, each once")
            row_of[v] = i
    return DescentSet(n, [i for i in range(1, n) if row_of[i + 1] > row_of[i]])


def com_p(t: SkewTableau) -> Composition:
    return composition_of(des_p(t))


def is_lattice(t: SkewTableau) -> bool:
    """True iff the reverse reading word (right to left along rows, top to
    bottom) keeps every prefix count of i at least that of i+1."""
    counts: dict[int, int] = {}
    for row in t.rows:
        for v in reversed(row):
            if v > 1 and counts.get(v - 1, 0) <= counts.get(v, 0):
                return False
            counts[v] = counts.get(v, 0) + 1
    return True


def lr_expansion(shape: SkewShape, max_fillings: int | None = None) -> Expansion:
    """Schur-basis expansion of the skew shape: the coefficient of a
    partition ``lam`` counts the lattice semistandard fillings of content
    ``lam``.  Fillings are enumerated cell by cell in reverse reading order
    with the lattice condition checked incrementally."""
    n = shape.size
    if n == 0:
        return Expansion("schur", 0, {(): 1})
    ivs = shape.row_intervals()
    order: list[tuple[int, int]] = []
    for i, (a, b) in enumerate(ivs, start=1):
        order.extend((i, j) for j in range(b, a, -1))
    vals: dict[tuple[int, int], int] = {}
    counts = [0] * (len(ivs) + 2)
    result: dict[Partition, int] = {}
    seen = 0

    def in_shape(i: int, j: int) -> bool:
        if not 1 <= i <= len(ivs):
            return False
        a, b = ivs[i - 1]
        return a < j <= b

    def rec(idx: int) -> None:
        nonlocal seen
        if idx == len(order):
            seen += 1
            if max_fillings is not None and seen > max_fillings:
                raise BudgetExceededError(
                    f"lattice fillings of shape {shape}", max_fillings
                )
            lam = []
            for v in range(1, len(ivs) + 1):
                if counts[v] == 0:
                    break
                lam.append(counts[v])
            key = tuple(lam)
            result[key] = result.get(key, 0) + 1
            return
        i, j = order[idx]
        hi = i
        if in_shape(i, j + 1):
            hi = min(hi, vals[(i, j + 1)])
        lo = vals[(i - 1, j)] + 1 if in_shape(i - 1, j) else 1
        for v in range(lo, hi + 1):
            if v == 1 or counts[v - 1] > counts[v]:
                vals[(i, j)] = v
                counts[v] += 1
                rec(idx + 1)
                counts[v] -= 1
        vals.pop((i, j), None)

    rec(0)
    return Expansion("schur", n, result)
