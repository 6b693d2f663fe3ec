"""One verifier per divisibility claim.

Each verifier sweeps an integer range, collects counterexample witnesses,
and returns a VerificationOutcome.  Sweeps are partitioned into contiguous
blocks that can run on a thread pool; block results merge in ascending
order, so the outcome is identical no matter how many threads run it.
Witness records are plain dicts so they serialize as-is.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from time import perf_counter

from .catalan import _valuation, catalan_factorization, catalan_v2
from .divisor import sigma_exact, sigma_mod
from .errors import InconclusiveError
from .factorint import binary_digit_sum, factor_u64
from .primes import PrimeTable, build_prime_table

# The six moduli z for which z | sigma(z*k - 1) holds for every k; the
# conjecture search asks whether any other modulus shares the property.
FAMILY_MODULI = (3, 4, 6, 8, 12, 24)

# Catalan indices below 6 whose value has no prime factor congruent to
# 5 mod 6 (values 1, 1, 2, 14, 42; index 3 is absent because its value is 5).
SMALL_INDEX_EXCEPTIONS = frozenset({0, 1, 2, 4, 5})

ALWAYS_COPRIME = "always_coprime"
SHARED_DIVISOR = "shared_divisor"

_BLOCK = 50_000
_MAX_WITNESSES = 10


@dataclass
class VerificationOutcome:
    """Result of one claim sweep.  holds is true iff no counterexamples."""

    claim_id: str
    range: tuple[int, int]
    holds: bool
    counterexamples: list[dict]
    elapsed: float = 0.0


@dataclass(frozen=True)
class CoprimalityEdge:
    """Coprimality status of the pair (a*k - 1, b*k - 1) over all k >= 1.

    always_coprime edges satisfy gcd(a*k-1, b*k-1) == 1 for every k; the
    shared_divisor status carries the gcd at the smallest violating k.
    """

    a: int
    b: int
    status: str
    shared_divisor: int | None = None
    witness_k: int | None = None


def _outcome(claim_id, span, witnesses, started) -> VerificationOutcome:
    return VerificationOutcome(
        claim_id=claim_id,
        range=span,
        holds=not witnesses,
        counterexamples=witnesses[:_MAX_WITNESSES],
        elapsed=perf_counter() - started,
    )


def _sweep(lo: int, hi: int, worker, threads: int) -> list[dict]:
    spans = [(a, min(a + _BLOCK - 1, hi)) for a in range(lo, hi + 1, _BLOCK)]
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: worker(*s), spans))
    else:
        parts = [worker(a, b) for a, b in spans]
    return [w for part in parts for w in part]


def _ensure_table(table: PrimeTable | None, needed: int) -> PrimeTable:
    if table is None:
        return build_prime_table(max(needed, 2))
    if table.limit < needed:
        raise ValueError(f"table limit {table.limit} below required {needed}")
    return table


def _sigma_witness(k: int, n: int, z: int, table: PrimeTable) -> dict | None:
    """Witness record if z does not divide sigma(n), else None; sigma(1) == 1."""
    if n == 1:
        return {"k": k, "value": 1, "sigma": 1, "remainder": 1 % z}
    f = factor_u64(n, table)
    r = sigma_mod(f, z)
    if r == 0:
        return None
    return {"k": k, "value": n, "sigma": sigma_exact(f), "remainder": r}


def verify_lemma_six(k_max: int, table: PrimeTable | None = None, threads: int = 1) -> VerificationOutcome:
    """Check 6 | sigma(6k - 1) for every 1 <= k <= k_max."""
    started = perf_counter()
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    table = _ensure_table(table, 6 * k_max - 1)
    table.spf  # build once, before any thread needs it

    def worker(lo, hi):
        bad = []
        for k in range(lo, hi + 1):
            n = 6 * k - 1
            r = sigma_mod(factor_u64(n, table), 6)
            if r:
                bad.append({"k": k, "value": n, "remainder": r})
        return bad

    witnesses = _sweep(1, k_max, worker, threads)
    return _outcome("lemma-six", (1, k_max), witnesses, started)


def verify_family(z: int, k_max: int, table: PrimeTable | None = None, threads: int = 1) -> VerificationOutcome:
    """Check z | sigma(z*k - 1) for 1 <= k <= k_max; witnesses carry the
    smallest violating k values."""
    started = perf_counter()
    if z < 2:
        raise ValueError("z must be >= 2")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    table = _ensure_table(table, z * k_max - 1)
    table.spf

    def worker(lo, hi):
        bad = []
        for k in range(lo, hi + 1):
            hit = _sigma_witness(k, z * k - 1, z, table)
            if hit is not None:
                bad.append(hit)
        return bad

    witnesses = _sweep(1, k_max, worker, threads)
    return _outcome(f"family-z{z}", (1, k_max), witnesses, started)


@dataclass
class ConjectureSearch:
    """Moduli in [2, b_max] that survive the divisibility sweep to k_max.

    Survival up to a bound is not a proof; the checked bound is part of the
    result so reports never overstate it.
    """

    b_max: int
    k_max: int
    survivors: list[int]
    eliminated: list[dict]
    elapsed: float = 0.0


def search_conjecture(b_max: int, k_max: int, table: PrimeTable | None = None, threads: int = 1) -> ConjectureSearch:
    """For each b in [2, b_max], find the minimal k <= k_max with
    b not dividing sigma(b*k - 1), or record b as a survivor."""
    started = perf_counter()
    if b_max < 2:
        raise ValueError("b_max must be >= 2")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    table = _ensure_table(table, b_max * k_max - 1)
    table.spf

    def probe(b):
        for k in range(1, k_max + 1):
            hit = _sigma_witness(k, b * k - 1, b, table)
            if hit is not None:
                return {
                    "b": b,
                    "witness_k": k,
                    "value": hit["value"],
                    "sigma": hit["sigma"],
                    "remainder": hit["remainder"],
                }
        return None

    moduli = range(2, b_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            probed = list(pool.map(probe, moduli))
    else:
        probed = [probe(b) for b in moduli]

    survivors = [b for b, hit in zip(moduli, probed) if hit is None]
    eliminated = [hit for hit in probed if hit is not None]
    return ConjectureSearch(b_max, k_max, survivors, eliminated, perf_counter() - started)


def verify_theorem_6kminus1(n_min: int, n_max: int, table: PrimeTable | None = None, threads: int = 1) -> VerificationOutcome:
    """Check that each Catalan number in the index range has at least one
    prime factor congruent to 5 mod 6; witnesses list the indices without."""
    started = perf_counter()
    if n_min < 0 or n_max < n_min:
        raise ValueError("need 0 <= n_min <= n_max")
    table = _ensure_table(table, max(2 * n_max, 2))

    def worker(lo, hi):
        bad = []
        for n in range(lo, hi + 1):
            factors = catalan_factorization(n, table).factors
            if not any(p % 6 == 5 for p, _ in factors):
                bad.append({"n": n, "primes": list(factors.prime_factors())})
        return bad

    witnesses = _sweep(n_min, n_max, worker, threads)
    return _outcome("theorem1", (n_min, n_max), witnesses, started)


def verify_sigma_catalan(n_min: int, n_max: int, table: PrimeTable | None = None, threads: int = 1) -> VerificationOutcome:
    """Check 6 | sigma(catalan(n)) over the index range, working modulo 6
    on the factorization (the exact sigma value is never formed)."""
    started = perf_counter()
    if n_min < 0 or n_max < n_min:
        raise ValueError("need 0 <= n_min <= n_max")
    table = _ensure_table(table, max(2 * n_max, 2))

    def worker(lo, hi):
        bad = []
        for n in range(lo, hi + 1):
            r = sigma_mod(catalan_factorization(n, table).factors, 6)
            if r:
                bad.append({"n": n, "remainder": r})
        return bad

    witnesses = _sweep(n_min, n_max, worker, threads)
    return _outcome("sigma-catalan", (n_min, n_max), witnesses, started)


def verify_erdos_interval(n_max: int, table: PrimeTable | None = None, threads: int = 1) -> VerificationOutcome:
    """Check that every prime in (n+1, 2n] divides the nth Catalan number
    with exponent exactly 1, for all n <= n_max."""
    started = perf_counter()
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = _ensure_table(table, 2 * n_max)

    def worker(lo, hi):
        bad = []
        for n in range(lo, hi + 1):
            for p in table.primes_between(n + 1, 2 * n):
                v = _valuation(n, p)
                if v != 1:
                    bad.append({"n": n, "p": p, "exponent": v})
        return bad

    witnesses = _sweep(1, n_max, worker, threads)
    return _outcome("erdos-interval", (1, n_max), witnesses, started)


def verify_mersenne_parity(n_max: int, threads: int = 1) -> VerificationOutcome:
    """Check the parity criterion for all n <= n_max: catalan(n) is odd iff
    n + 1 is a power of two, with the Legendre and digit-sum routes for the
    2-adic valuation agreeing everywhere."""
    started = perf_counter()
    if n_max < 0:
        raise ValueError("n_max must be >= 0")

    def worker(lo, hi):
        bad = []
        for n in range(lo, hi + 1):
            v_legendre = catalan_v2(n)
            v_digit = binary_digit_sum(n + 1) - 1
            power_of_two = (n + 1) & n == 0
            if v_legendre != v_digit or (v_legendre == 0) != power_of_two:
                bad.append({"n": n, "v2_legendre": v_legendre, "v2_digit_sum": v_digit})
        return bad

    witnesses = _sweep(0, n_max, worker, threads)
    return _outcome("mersenne-parity", (0, n_max), witnesses, started)


def analyze_coprimality(a: int, b: int, search_bound: int = 1000) -> CoprimalityEdge:
    """Decide whether a*k - 1 and b*k - 1 are coprime for every k.

    They always are exactly when every prime factor of b - a divides a
    (any common prime q divides b*(a*k-1) - a*(b*k-1) = a - b yet cannot
    divide a).  Otherwise the smallest k with a nontrivial gcd is located
    by direct scan and reported with that gcd.
    """
    if a < 2:
        raise ValueError("a must be >= 2")
    if b <= a:
        raise ValueError("need a < b")
    if search_bound < 1:
        raise ValueError("search_bound must be >= 1")
    d = b - a
    while (g := gcd(d, a)) > 1:
        d //= g
    if d == 1:
        return CoprimalityEdge(a, b, ALWAYS_COPRIME)
    for k in range(1, search_bound + 1):
        g = gcd(a * k - 1, b * k - 1)
        if g > 1:
            return CoprimalityEdge(a, b, SHARED_DIVISOR, shared_divisor=g, witness_k=k)
    raise InconclusiveError(
        f"pair ({a}, {b}) shares divisors of {d} but no witness k <= {search_bound}"
    )


def coprimality_graph(coeffs, search_bound: int = 1000) -> list[CoprimalityEdge]:
    """analyze_coprimality over every unordered pair, in sorted pair order."""
    values = sorted(coeffs)
    if len(values) != len(set(values)):
        raise ValueError("coefficients must be distinct")
    if any(c < 2 for c in values):
        raise ValueError("coefficients must be >= 2")
    return [
        analyze_coprimality(a, b, search_bound)
        for i, a in enumerate(values)
        for b in values[i + 1 :]
    ]
