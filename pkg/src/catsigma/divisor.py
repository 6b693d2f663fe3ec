"""Sum-of-divisors arithmetic on factorizations, exact and modular, plus the
pairing of divisors across the square root used by the divisibility sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .factorint import Factorization


def sigma_exact(f: Factorization) -> int:
    """Sum of all divisors of f.value, as a product of prime-power terms."""
    total = 1
    for p, e in f:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def sigma_mod(f: Factorization, m: int) -> int:
    """sigma(f.value) mod m.

    Each prime-power term is a geometric sum evaluated by repeated modular
    addition, so m never needs to be coprime to anything.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    total = 1 % m
    for p, e in f:
        term = 1 % m
        power = 1
        for _ in range(e):
            power = power * p % m
            term = (term + power) % m
        total = total * term % m
    return total


def divisor_list(f: Factorization) -> list[int]:
    """All divisors of f.value in increasing order."""
    divs = [1]
    for p, e in f:
        pk = 1
        grown = []
        for _ in range(e):
            pk *= p
            grown.extend(d * pk for d in divs)
        divs.extend(grown)
    divs.sort()
    return divs


@dataclass(frozen=True)
class DivisorPairing:
    """sigma(value) written as a sum of (d + value/d) over divisor pairs that
    straddle the square root.  Only defined for non-square values."""

    value: int
    pairs: tuple[tuple[int, int], ...]

    def pair_sums(self) -> list[int]:
        return [d + q for d, q in self.pairs]

    def total(self) -> int:
        return sum(self.pair_sums())


def divisor_pairing(n: int, f: Factorization) -> DivisorPairing:
    """Pair every divisor d < sqrt(n) with n // d.  n must not be square."""
    if n < 1:
        raise ValueError("n must be positive")
    if f.value != n:
        raise ValueError("factorization does not describe n")
    if isqrt(n) ** 2 == n:
        raise ValueError(f"{n} is a perfect square; pairing undefined")
    small = [d for d in divisor_list(f) if d * d < n]
    return DivisorPairing(n, tuple((d, n // d) for d in small))
