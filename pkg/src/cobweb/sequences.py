"""Admissible sequences: the integer sequences F that index cobweb posets.

An admissible sequence has F_0 = 0 and F_n >= 1 for every n >= 1.  Level p
of the associated poset holds F_p vertices, so a zero anywhere past the
root would tear the poset apart.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .fnomial import FNomialTable, NonIntegralError


class SequenceSpecError(ValueError):
    """A sequence spec string that does not match the grammar."""


class AdmissibleSequence:
    """A sequence F with F_0 = 0 and F_n >= 1 for all n >= 1.

    ``value(n)`` is a pure function of ``n``; results are cached, so a
    sequence behaves as if fully precomputed regardless of call order.
    Explicit-list sequences carry a finite ``length`` and reject indices
    beyond it.
    """

    def __init__(self, name: str, fn: Callable[[int], int], length: int | None = None):
        self.name = name
        self.length = length
        self._fn = fn
        self._cache: dict[int, int] = {0: 0}

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"sequence index must be >= 0, got {n}")
        if self.length is not None and n > self.length:
            raise ValueError(
                f"sequence {self.name!r} defines values for n <= {self.length}, got {n}"
            )
        v = self._cache.get(n)
        if v is None:
            v = self._fn(n)
            if v < 1:
                raise ValueError(
                    f"sequence {self.name!r} has F_{n} = {v}; need F_n >= 1 for n >= 1"
                )
            self._cache[n] = v
        return v

    def values(self, upto: int) -> list[int]:
        """[F_0, F_1, ..., F_upto]."""
        return [self.value(n) for n in range(upto + 1)]

    def __repr__(self) -> str:
        return f"AdmissibleSequence({self.name!r})"


def _fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


_BUILTINS: dict[str, Callable[[int], int]] = {
    "nat": lambda n: n,
    "fib": _fib,
    # 1, 2, 4, 6, 8, ...
    "even1": lambda n: 1 if n == 1 else 2 * (n - 1),
    # 1, 3, 5, 7, ...
    "odd": lambda n: 2 * n - 1,
    # 1, 3, 6, 9, ...
    "div3": lambda n: 1 if n == 1 else 3 * (n - 1),
}

_GRAMMAR = "nat | fib | const:<c> | gauss:<q> | even1 | odd | div3 | list:[v1,v2,...]"


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTINS) + ("const:<c>", "gauss:<q>", "list:[...]")


def parse_sequence(spec: str) -> AdmissibleSequence:
    """Parse a sequence spec string into an AdmissibleSequence.

    The grammar is case-sensitive: nat, fib, even1, odd, div3,
    const:<c> (c >= 1), gauss:<q> (q >= 1, F_n = 1 + q + ... + q^(n-1))
    and list:[v1,v2,...] (whitespace inside the brackets is ignored).
    """
    if not isinstance(spec, str):
        raise SequenceSpecError(f"sequence spec must be a string, got {type(spec).__name__}")
    spec = spec.strip()
    if spec in _BUILTINS:
        return AdmissibleSequence(spec, _BUILTINS[spec])
    if spec.startswith("const:"):
        c = _parse_int(spec[len("const:"):], spec)
        if c < 1:
            raise SequenceSpecError(f"const:{c}: constant must be >= 1")
        return AdmissibleSequence(spec, lambda n: c)
    if spec.startswith("gauss:"):
        q = _parse_int(spec[len("gauss:"):], spec)
        if q < 1:
            raise SequenceSpecError(f"gauss:{q}: base must be >= 1")
        if q == 1:
            return AdmissibleSequence(spec, lambda n: n)
        return AdmissibleSequence(spec, lambda n: (q ** n - 1) // (q - 1))
    if spec.startswith("list:"):
        body = spec[len("list:"):]
        m = re.fullmatch(r"\[([^\[\]]*)\]", body, flags=re.S)
        if m is None:
            raise SequenceSpecError(f"bad list spec {spec!r}; expected {_GRAMMAR}")
        inner = re.sub(r"\s+", "", m.group(1))
        if inner == "":
            values: tuple[int, ...] = ()
        else:
            parts = inner.split(",")
            values = tuple(_parse_int(p, spec) for p in parts)
        for i, v in enumerate(values, start=1):
            if v < 1:
                raise SequenceSpecError(f"list value F_{i} = {v}; need F_n >= 1 for n >= 1")
        return AdmissibleSequence(spec, lambda n: values[n - 1], length=len(values))
    raise SequenceSpecError(f"unknown sequence spec {spec!r}; expected {_GRAMMAR}")


def _parse_int(token: str, spec: str) -> int:
    token = token.strip()
    if not re.fullmatch(r"-?\d+", token):
        raise SequenceSpecError(f"bad integer {token!r} in sequence spec {spec!r}")
    return int(token)


# --- cobweb-admissibility -------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of a bounded integrality scan of the F-nomial triangle."""

    requested_bound: int
    admissible_up_to: int
    first_failure: tuple[int, int] | None  # (n, k)
    failure_quotient: Fraction | None

    @property
    def admissible(self) -> bool:
        return self.first_failure is None


def is_cobweb_admissible(seq: AdmissibleSequence, bound: int) -> AdmissibilityVerdict:
    """Check that (n k)_F is an integer for all 0 <= k <= n <= bound.

    Scans n ascending, k ascending within n, and stops at the first
    non-integral coefficient; the verdict carries the reduced quotient.
    A pass is only a statement about the scanned range.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    table = FNomialTable(seq, bound)
    for n in range(bound + 1):
        for k in range(n + 1):
            try:
                table.fnomial(n, k)
            except NonIntegralError as err:
                return AdmissibilityVerdict(bound, n - 1, (n, k), err.fraction)
    return AdmissibilityVerdict(bound, bound, None, None)


# --- GCD-morphism (experimental checker) ----------------------------------

@dataclass(frozen=True)
class GcdMorphismVerdict:
    """Outcome of a bounded GCD(F_n, F_m) = F_GCD(n, m) scan."""

    requested_bound: int
    morphic_up_to: int
    first_failure: tuple[int, int] | None  # (n, m)
    gcd_value: int | None
    expected: int | None

    @property
    def gcd_morphic(self) -> bool:
        return self.first_failure is None


def gcd_morphism_failures(seq: AdmissibleSequence, bound: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield every (n, m, gcd, expected) with GCD(F_n, F_m) != F_GCD(n,m).

    Pairs are scanned with n ascending, m ascending, 1 <= m <= n <= bound.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    for n in range(1, bound + 1):
        fn = seq.value(n)
        for m in range(1, n + 1):
            got = math.gcd(fn, seq.value(m))
            expected = seq.value(math.gcd(n, m))
            if got != expected:
                yield n, m, got, expected


def is_gcd_morphic(seq: AdmissibleSequence, bound: int) -> GcdMorphismVerdict:
    """Bounded check of the GCD-morphism property, first failure reported."""
    for n, m, got, expected in gcd_morphism_failures(seq, bound):
        return GcdMorphismVerdict(bound, n - 1, (n, m), got, expected)
    return GcdMorphismVerdict(bound, bound, None, None, None)
