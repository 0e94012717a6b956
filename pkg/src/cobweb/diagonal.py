"""Whitney numbers along the layer diagonal and their Bell-like sums.

The rank-k count of the diagonal structure on n is the F-nomial
coefficient (n-k choose k)_F, nonzero while 2k <= n.  Summing over k
gives a Bell-like number B_n(F); for F = nat these sums are the shallow
diagonals of the Pascal triangle and reproduce the Fibonacci numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .fnomial import FNomialTable

if TYPE_CHECKING:  # pragma: no cover - import cycle is type-only
    from .sequences import AdmissibleSequence


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")


def whitney(n: int, k: int, seq: "AdmissibleSequence") -> int:
    """S(k, n-k, F) = (n-k choose k)_F while 2k <= n, else 0.

    The k = n/2 layer of even n is a single element and is counted.
    """
    _check_nk(n, k)
    if 2 * k > n:
        return 0
    return FNomialTable(seq, n - k).fnomial(n - k, k)


def bell(n: int, seq: "AdmissibleSequence") -> int:
    """B_n(F): the sum of whitney(n, k, seq) over 0 <= 2k <= n."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    table = FNomialTable(seq, n)
    return sum(table.fnomial(n - k, k) for k in range(n // 2 + 1))


def bell_sequence(seq: "AdmissibleSequence", n_max: int) -> list[int]:
    """[B_0(F), ..., B_n_max(F)], sharing one primed table."""
    if n_max < 0:
        raise ValueError(f"need n_max >= 0, got {n_max}")
    table = FNomialTable(seq, n_max)
    return [
        sum(table.fnomial(n - k, k) for k in range(n // 2 + 1))
        for n in range(n_max + 1)
    ]


@dataclass(frozen=True)
class DiagonalPoset:
    """The ranked diagonal structure on n: rank k holds whitney(n, k) items."""

    seq: "AdmissibleSequence"
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"need n >= 0, got {self.n}")

    def ranks(self) -> range:
        return range(self.n // 2 + 1)

    def rank_count(self, k: int) -> int:
        return whitney(self.n, k, self.seq)

    def size(self) -> int:
        return bell(self.n, self.seq)
