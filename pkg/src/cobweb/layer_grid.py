"""The layer grid: layers <Phi_l -> Phi_m> of a subposet, ordered pointwise.

P(k, n) holds the pairs (l, m) with 0 <= l <= k and l < m <= n under the
componentwise order.  Its rank function is r(l, m) = l + m - 1, Whitney
numbers come straight from the rank counts (second kind) and from the
Mobius function of the bottom (first kind), and maximal-chain counting
is the classic ballot problem.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from .poset import IncidenceMatrix, invert_unit_upper

Element = tuple[int, int]  # (l, m)


def _check_kn(k: int, n: int) -> None:
    if k < 0 or n < 0:
        raise ValueError(f"k and n must be >= 0, got k={k}, n={n}")
    if k > n:
        raise ValueError(f"need k <= n, got k={k} > n={n}")


def grid_size(k: int, n: int) -> int:
    """|P(k, n)| = (n - k)(k + 1) + k(k + 1)/2."""
    _check_kn(k, n)
    return (n - k) * (k + 1) + k * (k + 1) // 2


def grid_elements(k: int, n: int) -> tuple[Element, ...]:
    """Elements (l, m), 0 <= l <= k, l < m <= n, in rank-major order."""
    _check_kn(k, n)
    out = [(l, m) for l in range(k + 1) for m in range(l + 1, n + 1)]
    out.sort(key=lambda e: (e[0] + e[1], e[0]))
    return tuple(out)


class LayerGridPoset:
    """P(k, n) with its zeta and Mobius matrices over rank-major order."""

    def __init__(self, k: int, n: int):
        _check_kn(k, n)
        self.k = k
        self.n = n
        self.elements = grid_elements(k, n)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._mobius: IncidenceMatrix | None = None

    def __contains__(self, e: Element) -> bool:
        return e in self._index

    def check_element(self, e: Element) -> None:
        if e not in self._index:
            raise ValueError(f"{e} is not an element of P({self.k}, {self.n})")

    def leq(self, a: Element, b: Element) -> bool:
        self.check_element(a)
        self.check_element(b)
        return a[0] <= b[0] and a[1] <= b[1]

    def rank(self, e: Element) -> int:
        self.check_element(e)
        return e[0] + e[1] - 1

    @property
    def bottom(self) -> Element:
        if not self.elements:
            raise ValueError(f"P({self.k}, {self.n}) is empty")
        return (0, 1)

    def zeta_matrix(self) -> IncidenceMatrix:
        els = self.elements
        rows = tuple(
            tuple(1 if (a[0] <= b[0] and a[1] <= b[1]) else 0 for b in els)
            for a in els
        )
        return IncidenceMatrix(els, rows)

    def mobius_matrix(self) -> IncidenceMatrix:
        if self._mobius is None:
            zeta = self.zeta_matrix()
            inv = invert_unit_upper([list(r) for r in zeta.rows])
            self._mobius = IncidenceMatrix(zeta.order, tuple(tuple(r) for r in inv))
        return self._mobius


def whitney_second(k: int, n: int, r: int) -> int:
    """Number of elements of rank r (the Whitney numbers of the second kind)."""
    _check_kn(k, n)
    return sum(
        1
        for l in range(k + 1)
        for m in range(l + 1, n + 1)
        if l + m - 1 == r
    )


def whitney_first(k: int, n: int, r: int) -> int:
    """Sum of mu(bottom, e) over the rank-r elements (first kind).

    Computed by exact inversion of the zeta matrix.  An empty grid has
    no bottom, so every value is 0.
    """
    _check_kn(k, n)
    grid = LayerGridPoset(k, n)
    if not grid.elements:
        return 0
    mob = grid.mobius_matrix()
    bottom_row = mob.rows[grid._index[grid.bottom]]
    return sum(
        c
        for e, c in zip(grid.elements, bottom_row)
        if e[0] + e[1] - 1 == r
    )


def bell_like(k: int, n: int) -> int:
    """Sum of the rank counts over all ranks; equals the grid size."""
    _check_kn(k, n)
    return sum(whitney_second(k, n, r) for r in range(0, k + n))


# --- maximal chains as dominated lattice paths ------------------------------

def count_grid_max_chains(k: int, n: int) -> int:
    """Monotone lattice paths (0,1) -> (k,n) that never leave l <= m.

    Equivalently the 0-dominated binary strings with n zeros and k ones;
    the diagonal k = n gives the Catalan numbers.  Evaluated through the
    ballot closed form (n+1-k)/(n+1) * C(n+k, k), which the brute-force
    enumerator confirms; the division is checked exact.
    """
    _check_kn(k, n)
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    num = (n + 1 - k) * math.comb(n + k, k)
    q, r = divmod(num, n + 1)
    if r:  # ballot numbers are integers; a remainder means a broken formula
        raise AssertionError(f"ballot form not integral at k={k}, n={n}")
    return q


def iter_grid_max_paths(k: int, n: int) -> Iterator[tuple[Element, ...]]:
    """Yield every dominated path from (0,1) to (k,n) as a point tuple.

    Steps move one unit in l or in m; every visited point keeps l <= m.
    This is the brute-force oracle behind count_grid_max_chains.
    """
    _check_kn(k, n)
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")

    def walk(l: int, m: int, trail: list[Element]) -> Iterator[tuple[Element, ...]]:
        if l == k and m == n:
            yield tuple(trail)
            return
        if l + 1 <= k and l + 1 <= m:
            trail.append((l + 1, m))
            yield from walk(l + 1, m, trail)
            trail.pop()
        if m + 1 <= n:
            trail.append((l, m + 1))
            yield from walk(l, m + 1, trail)
            trail.pop()

    yield from walk(0, 1, [(0, 1)])


def count_grid_max_chains_bruteforce(k: int, n: int) -> int:
    """Count of iter_grid_max_paths, one path at a time."""
    return sum(1 for _ in iter_grid_max_paths(k, n))


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)
