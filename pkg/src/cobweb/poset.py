"""Finite truncations of cobweb posets and their incidence algebra.

A cobweb poset over a sequence F has one root vertex at level 0 and F_p
vertices at each level p >= 1.  Consecutive levels are completely
bipartite: every vertex of level p is covered by every vertex of level
p + 1, and there are no other covers.  Vertices are written (j, p) with
1 <= j <= F_p; two vertices are comparable iff their levels differ or
they coincide.

Matrices use the level-major vertex order: levels ascending, index j
ascending within a level.  All matrix arithmetic is exact big-integer.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:  # pragma: no cover - import cycle is type-only
    from .sequences import AdmissibleSequence

Vertex = tuple[int, int]  # (j, p): index j within level p

DEFAULT_ENUMERATION_BUDGET = 100_000


class EnumerationBudgetError(RuntimeError):
    """An enumeration that would exceed its budget; carries the exact size."""

    def __init__(self, predicted: int, budget: int):
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"enumeration would visit {predicted} chains, over the budget of {budget}"
        )


def _ilen(iterable) -> int:
    """Length of an iterable, consumed at C speed."""
    counter = itertools.count()
    deque(zip(iterable, counter), maxlen=0)
    return next(counter)


# --- exact matrix helpers ---------------------------------------------------

def identity_rows(n: int) -> list[list[int]]:
    return [[1 if j == i else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]] | tuple, b: list[list[int]] | tuple) -> list[list[int]]:
    """Exact product of integer matrices, via row accumulation."""
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, c in enumerate(row):
            if c:
                bk = b[k]
                if c == 1:
                    acc = [x + y for x, y in zip(acc, bk)]
                else:
                    acc = [x + c * y for x, y in zip(acc, bk)]
        out.append(acc)
    return out


def invert_unit_upper(rows: list[list[int]] | tuple) -> list[list[int]]:
    """Exact inverse of a unit upper-triangular integer matrix.

    Back-substitution on rows, bottom-up: inv[i] = e_i - sum over k > i
    of rows[i][k] * inv[k].  Result is again unit upper-triangular with
    integer entries.
    """
    n = len(rows)
    for i, row in enumerate(rows):
        if row[i] != 1 or any(row[j] for j in range(i)):
            raise ValueError("matrix is not unit upper-triangular")
    inv: list[list[int] | None] = [None] * n
    for i in range(n - 1, -1, -1):
        acc = [0] * n
        acc[i] = 1
        row = rows[i]
        for k in range(i + 1, n):
            c = row[k]
            if c:
                ik = inv[k]
                if c == 1:
                    acc = [x - y for x, y in zip(acc, ik)]
                else:
                    acc = [x - c * y for x, y in zip(acc, ik)]
        inv[i] = acc
    return inv  # type: ignore[return-value]


@dataclass(frozen=True)
class IncidenceMatrix:
    """A matrix over a fixed linear order of poset elements."""

    order: tuple[Vertex, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, u: Vertex, v: Vertex) -> int:
        i = self.order.index(u)
        j = self.order.index(v)
        return self.rows[i][j]

    def leading(self, size: int) -> "IncidenceMatrix":
        """The leading size x size block, with the order truncated to match."""
        if not 0 <= size <= len(self.order):
            raise ValueError(
                f"size must be between 0 and {len(self.order)}, got {size}"
            )
        return IncidenceMatrix(
            self.order[:size],
            tuple(row[:size] for row in self.rows[:size]),
        )

    def dump(self) -> str:
        """Text form: a '# order:' header, then one row per line."""
        header = "# order: " + " ".join(f"({j},{p})" for j, p in self.order)
        lines = [header]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"


class CobwebPoset:
    """A cobweb poset truncated at max_level (the prime subposet P_m).

    Level 0 always holds the single root (1, 0); level p >= 1 holds
    F_p vertices (1, p) .. (F_p, p).
    """

    def __init__(self, seq: "AdmissibleSequence", max_level: int):
        if max_level < 0:
            raise ValueError(f"max_level must be >= 0, got {max_level}")
        self.seq = seq
        self.max_level = max_level
        self.level_sizes = tuple(
            [1] + [seq.value(p) for p in range(1, max_level + 1)]
        )
        starts = [0]
        for s in self.level_sizes:
            starts.append(starts[-1] + s)
        self._starts = tuple(starts)
        self.vertex_count = starts[-1]
        self._vertices: tuple[Vertex, ...] | None = None

    # --- structure ---------------------------------------------------------

    def level_size(self, p: int) -> int:
        self._check_level(p)
        return self.level_sizes[p]

    def level_vertices(self, p: int) -> tuple[Vertex, ...]:
        self._check_level(p)
        return tuple((j, p) for j in range(1, self.level_sizes[p] + 1))

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        """All vertices in level-major order."""
        if self._vertices is None:
            out: list[Vertex] = []
            for p in range(self.max_level + 1):
                out.extend((j, p) for j in range(1, self.level_sizes[p] + 1))
            self._vertices = tuple(out)
        return self._vertices

    def _check_level(self, p: int) -> None:
        if not 0 <= p <= self.max_level:
            raise ValueError(f"level {p} outside 0..{self.max_level}")

    def check_vertex(self, v: Vertex) -> None:
        j, p = v
        self._check_level(p)
        if not 1 <= j <= self.level_sizes[p]:
            raise ValueError(
                f"vertex ({j},{p}) invalid: level {p} has {self.level_sizes[p]} vertices"
            )

    def index_of(self, v: Vertex) -> int:
        """Position of v in the level-major linear order."""
        self.check_vertex(v)
        j, p = v
        return self._starts[p] + j - 1

    def leq(self, u: Vertex, v: Vertex) -> bool:
        """u <= v: equal, or u lies on a strictly lower level."""
        self.check_vertex(u)
        self.check_vertex(v)
        return u == v or u[1] < v[1]

    def cover_successors(self, v: Vertex) -> tuple[Vertex, ...]:
        """The covers of v: the whole next level (complete bipartite)."""
        self.check_vertex(v)
        p = v[1]
        if p == self.max_level:
            return ()
        return self.level_vertices(p + 1)

    # --- chain counting ------------------------------------------------------

    def count_max_chains(self, from_level: int, to_level: int) -> int:
        """Saturated chains meeting every level of [from_level, to_level] once.

        Complete bipartite covers make this the product of the level sizes.
        """
        self._check_span(from_level, to_level)
        out = 1
        for p in range(from_level, to_level + 1):
            out *= self.level_sizes[p]
        return out

    def _check_span(self, from_level: int, to_level: int) -> None:
        self._check_level(from_level)
        self._check_level(to_level)
        if from_level > to_level:
            raise ValueError(
                f"need from_level <= to_level, got {from_level} > {to_level}"
            )

    def _span_ranges(
        self, from_level: int, to_level: int, budget: int | None
    ) -> list[range]:
        # Walk the covering relation vertex by vertex so the enumeration
        # below rests on the poset's own covers, not on the size formula.
        self._check_span(from_level, to_level)
        if budget is None:
            budget = DEFAULT_ENUMERATION_BUDGET
        predicted = 1
        for p in range(from_level, to_level + 1):
            predicted *= self.level_sizes[p]
        if predicted > budget:
            raise EnumerationBudgetError(predicted, budget)
        for p in range(from_level, to_level):
            nxt = self.level_vertices(p + 1)
            for v in self.level_vertices(p):
                if self.cover_successors(v) != nxt:
                    raise AssertionError(f"covers of {v} are not the whole next level")
        return [range(1, self.level_sizes[p] + 1) for p in range(from_level, to_level + 1)]

    def enumerate_max_chains(
        self, from_level: int, to_level: int, budget: int | None = None
    ) -> Iterator[tuple[Vertex, ...]]:
        """Yield each saturated chain over the span exactly once.

        Chains come out in lexicographic order of vertex indices (a
        depth-first walk of the covering relation).
        """
        ranges = self._span_ranges(from_level, to_level, budget)
        levels = range(from_level, to_level + 1)
        for js in itertools.product(*ranges):
            yield tuple(zip(js, levels))

    def count_max_chains_by_enumeration(
        self, from_level: int, to_level: int, budget: int | None = None
    ) -> int:
        """Chain count obtained by exhaustive one-by-one enumeration.

        Independent of count_max_chains: after the cover structure is
        verified vertex by vertex, every chain is visited and counted.
        """
        ranges = self._span_ranges(from_level, to_level, budget)
        return _ilen(itertools.product(*ranges))

    def count_chains_of_length(self, t: int) -> int:
        """Strictly increasing chains with exactly t elements.

        Total entry sum of (zeta - I)^(t-1); t = 1 counts the vertices.
        """
        if t < 1:
            raise ValueError(f"chain length must be >= 1, got {t}")
        n = self.vertex_count
        if t == 1:
            return n
        zeta = [list(row) for row in self.zeta_matrix().rows]
        strict = [
            [c if j != i else 0 for j, c in enumerate(row)]
            for i, row in enumerate(zeta)
        ]
        power = strict
        for _ in range(t - 2):
            power = mat_mul(power, strict)
        return sum(sum(row) for row in power)

    def count_chains_of_length_bruteforce(self, t: int) -> int:
        """DFS twin of count_chains_of_length, for cross-checking."""
        if t < 1:
            raise ValueError(f"chain length must be >= 1, got {t}")
        verts = self.vertices
        total = 0
        stack: list[tuple[int, int]] = [(i, 1) for i in range(len(verts))]
        while stack:
            i, depth = stack.pop()
            if depth == t:
                total += 1
                continue
            u = verts[i]
            for j in range(i + 1, len(verts)):
                if u[1] < verts[j][1]:
                    stack.append((j, depth + 1))
        return total

    # --- incidence algebra ---------------------------------------------------

    def zeta_matrix(self) -> IncidenceMatrix:
        """The zeta matrix: entry (u, v) is 1 iff u <= v, level-major order.

        Unit upper-triangular because the order is a linear extension.
        """
        verts = self.vertices
        rows = []
        for p in range(self.max_level + 1):
            size = self.level_sizes[p]
            start = self._starts[p]
            tail = self.vertex_count - self._starts[p + 1]
            for j in range(size):
                row = [0] * start + [0] * size + [1] * tail
                row[start + j] = 1
                rows.append(tuple(row))
        return IncidenceMatrix(verts, tuple(rows))

    def mobius_matrix(self) -> IncidenceMatrix:
        """The Mobius matrix: the exact inverse of zeta (back-substitution)."""
        zeta = self.zeta_matrix()
        inv = invert_unit_upper([list(r) for r in zeta.rows])
        return IncidenceMatrix(zeta.order, tuple(tuple(r) for r in inv))
