"""Mod-2 linking numbers of odd primes and their reciprocity symmetry.

lk(p, q) mod 2 is 0 iff (-1)^eps(p) * p is a quadratic residue mod q, with
eps(p) = 0 for p = 1 (mod 4) and 1 for p = 3 (mod 4).  Two independent
residue tests back every answer: exhaustive enumeration of the squares
mod q (the oracle) and the Euler-criterion power; the scan insists they
agree pairwise.  The symmetry lk(p, q) = lk(q, p) over all distinct odd
prime pairs is quadratic reciprocity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic trial division; bounds here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def epsilon(p: int) -> int:
    """0 if p = 1 (mod 4), 1 if p = 3 (mod 4); odd primes only."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"epsilon needs an odd prime, got {p}")
    return 0 if p % 4 == 1 else 1


@dataclass(frozen=True)
class PrimePair:
    p: int
    q: int

    def __post_init__(self):
        for v in (self.p, self.q):
            if not is_prime(v) or v == 2:
                raise ValueError(f"not an odd prime: {v}")
        if self.p == self.q:
            raise ValueError("primes must be distinct")


@lru_cache(maxsize=None)
def _squares_mod(q: int) -> frozenset[int]:
    return frozenset((x * x) % q for x in range(q))


def is_square_mod_enumerate(a: int, q: int) -> bool:
    """Oracle: membership in the exhaustively enumerated set of squares."""
    return a % q in _squares_mod(q)


def is_square_mod_euler(a: int, q: int) -> bool:
    """Euler criterion a^((q-1)/2) = 1 (mod q); q an odd prime, a != 0."""
    return pow(a % q, (q - 1) // 2, q) == 1


def lk_mod2(pair: PrimePair, method: str = "both") -> int:
    """0 iff (-1)^eps(p) * p is a square mod q.

    method: "enumerate", "euler", or "both" (both must agree).
    """
    p, q = pair.p, pair.q
    a = ((-1) ** epsilon(p) * p) % q
    if method == "enumerate":
        sq = is_square_mod_enumerate(a, q)
    elif method == "euler":
        sq = is_square_mod_euler(a, q)
    elif method == "both":
        e1 = is_square_mod_enumerate(a, q)
        e2 = is_square_mod_euler(a, q)
        if e1 != e2:
            raise AssertionError(f"residue oracles disagree at {pair}")
        sq = e1
    else:
        raise ValueError(f"unknown method {method!r}")
    return 0 if sq else 1


def odd_primes_below(bound: int) -> list[int]:
    if bound <= 3:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:bound:i] = b"\x00" * len(range(i * i, bound, i))
    return [i for i in range(3, bound, 2) if sieve[i]]


def reciprocity_scan(bound: int) -> list[tuple[int, int]]:
    """All distinct odd prime pairs (p, q) below `bound` with
    lk(p,q) != lk(q,p); quadratic reciprocity says: none."""
    primes = odd_primes_below(bound)
    table: dict[tuple[int, int], int] = {}
    for p in primes:
        a_plus = ((-1) ** epsilon(p)) * p
        for q in primes:
            if p == q:
                continue
            a = a_plus % q
            e1 = a in _squares_mod(q)
            e2 = is_square_mod_euler(a, q)
            if e1 != e2:
                raise AssertionError(f"residue oracles disagree at ({p},{q})")
            table[(p, q)] = 0 if e1 else 1
    violations = []
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            if table[(p, q)] != table[(q, p)]:
                violations.append((p, q))
    return violations
