"""Stirling set numbers, Bell numbers, and the Dobinski series check.

The exact side is the classical triangle recurrence; the approximate
side evaluates e^-1 * sum k^n / k! with extended-precision decimals and
an a-posteriori truncation bound, so a 1e-9 relative tolerance is
meaningful through n = 20.
"""
from __future__ import annotations

from decimal import Decimal, localcontext

MAX_DOBINSKI_N = 20
_MAX_TERMS = 4000


class StirlingTable:
    """S(n, k) rows 0..max_n by the recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)."""

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {max_n}")
        self.max_n = max_n
        rows: list[list[int]] = [[1]]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                above = prev[k] if k < n else 0
                row[k] = k * above + prev[k - 1]
            rows.append(row)
        self._rows = tuple(tuple(r) for r in rows)

    def stirling2(self, n: int, k: int) -> int:
        """Partitions of an n-set into k nonempty parts; 0 when k > n."""
        if n < 0 or k < 0:
            raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
        if n > self.max_n:
            raise ValueError(f"n = {n} outside the primed range 0..{self.max_n}")
        if k > n:
            return 0
        return self._rows[n][k]

    def bell_exact(self, n: int) -> int:
        """B_n: the row sum of the Stirling triangle."""
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        if n > self.max_n:
            raise ValueError(f"n = {n} outside the primed range 0..{self.max_n}")
        return sum(self._rows[n])


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    return StirlingTable(n).stirling2(n, k)


def bell_exact(n: int) -> int:
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return StirlingTable(n).bell_exact(n)


def bell_dobinski(n: int, rel_tol: float = 1e-9) -> float:
    """B_n through the Dobinski series, to a requested relative tolerance.

    Terms k^n / k! are accumulated in 60-digit decimals.  Summation
    stops once a geometric bound on the whole tail drops below
    rel_tol * partial_sum / 4; the e^-1 factor rescales the sum and its
    relative error alike, so the bound carries over to the result.
    """
    if not 0 <= n <= MAX_DOBINSKI_N:
        raise ValueError(f"need 0 <= n <= {MAX_DOBINSKI_N}, got {n}")
    if rel_tol <= 0:
        raise ValueError(f"rel_tol must be positive, got {rel_tol}")
    with localcontext() as ctx:
        ctx.prec = 60
        tol = Decimal(str(rel_tol))
        total = Decimal(1) if n == 0 else Decimal(0)  # the k = 0 term
        factorial = Decimal(1)
        k = 0
        while True:
            k += 1
            if k > _MAX_TERMS:
                raise ValueError(
                    f"tolerance {rel_tol} not reached within {_MAX_TERMS} terms"
                )
            factorial *= k
            term = Decimal(k) ** n / factorial
            total += term
            # Past k >= 2n + 2 the term ratio is below 1/2, so the tail
            # is at most twice the next term.
            if k >= 2 * n + 2:
                next_term = Decimal(k + 1) ** n / (factorial * (k + 1))
                if 2 * next_term < tol * total / 4:
                    break
        return float(total * Decimal(-1).exp())
