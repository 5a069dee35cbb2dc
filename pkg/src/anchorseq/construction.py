"""Anchor families and the coefficient sequence they induce.

An anchor family assigns to every prime p and exponent n >= 1 a residue
class representative anchor(p, n).  The multiplicity of p in the
coefficient a_s is the largest n with s = anchor(p, n) (mod p^n); the
coefficient is the product of those prime powers.  Coherence of the
anchors (anchor(p, n) = anchor(p, m) mod p^m for m < n) makes the
satisfied exponents an initial segment, so the multiplicity is found by
scanning n upward until the first failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .primality import is_prime, sieve_primes


class SchemeError(Exception):
    """An anchor scheme violated one of its structural guarantees."""


def anchor_default(p: int, n: int) -> int:
    """Default anchors: (p^n + 1)/2 for odd p, (1 - (-2)^n)/3 for p = 2."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return (1 - (-2) ** n) // 3
    return (p**n + 1) // 2


class AnchorScheme:
    """Base class; subclasses supply anchors and candidate-prime windows."""

    scheme_id: str

    def anchor(self, p: int, n: int) -> int:
        raise NotImplementedError

    def candidate_primes(self, s: int) -> list[int]:
        """Every prime p that can satisfy s = anchor(p, 1) (mod p)."""
        raise NotImplementedError

    def range_primes(self, lo: int, hi: int) -> list[int]:
        """Superset of candidate primes for all s in [lo, hi]."""
        raise NotImplementedError

    def exponent_cap(self, p: int, s: int) -> int:
        """Smallest n at which s = anchor(p, n) (mod p^n) is provably false.

        Guaranteed false whenever |s| is smaller than the distance of the
        anchor's residue class from 0; by coherence, failure at one n
        forces failure at every larger n.
        """
        for n in range(1, 8 * max(abs(s), 2).bit_length() + 64):
            pn = p**n
            a0 = self.anchor(p, n) % pn
            if min(a0, pn - a0) > abs(s):
                return n
        raise SchemeError(
            f"scheme {self.scheme_id!r}: no exponent cap for p={p}, s={s} "
            "(anchors converge p-adically to an integer?)"
        )

    def __repr__(self) -> str:
        return f"<AnchorScheme {self.scheme_id}>"


class DefaultScheme(AnchorScheme):
    scheme_id = "default"

    def anchor(self, p: int, n: int) -> int:
        return anchor_default(p, n)

    def candidate_primes(self, s: int) -> list[int]:
        # s = (p+1)/2 (mod p) iff p | 2s - 1, so the odd candidates are the
        # odd prime factors of |2s - 1|; p = 2 hits exactly the odd s.
        primes = [2] if s % 2 else []
        m = abs(2 * s - 1)
        d = 3
        while d * d <= m:
            if m % d == 0:
                primes.append(d)
                while m % d == 0:
                    m //= d
            d += 2
        if m > 1:
            primes.append(m)
        return sorted(primes)

    def range_primes(self, lo: int, hi: int) -> list[int]:
        bound = 2 * max(abs(lo), abs(hi)) + 1
        return sieve_primes(max(bound, 2))


def np_exponent(scheme: AnchorScheme, p: int, s: int) -> int:
    """Multiplicity of p in the coefficient at index s."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    cap = scheme.exponent_cap(p, s)
    n = 0
    while n + 1 <= cap:
        pn = p ** (n + 1)
        if (s - scheme.anchor(p, n + 1)) % pn != 0:
            break
        n += 1
    return n


@dataclass(frozen=True)
class Factorization:
    """A coefficient as a finite map prime -> exponent, plus its value."""

    exponents: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.exponents)

    def exponent_of(self, p: int) -> int:
        for q, e in self.exponents:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.exponents)

    def to_json_dict(self, s: int) -> dict:
        return {
            "s": s,
            "value": str(self.value),
            "factors": [[p, e] for p, e in self.exponents],
        }


def coefficient(scheme: AnchorScheme, s: int) -> Factorization:
    """The coefficient a_s = prod p^(multiplicity of p at s)."""
    exps = []
    for p in scheme.candidate_primes(s):
        e = np_exponent(scheme, p, s)
        if e > 0:
            exps.append((p, e))
    return Factorization(tuple(sorted(exps)))


def coefficient_range(scheme: AnchorScheme, lo: int, hi: int) -> dict[int, Factorization]:
    """Coefficients for every s in [lo, hi], computed sieve-style.

    One pass per relevant prime marks the indices in its n = 1 residue
    class; only those indices get an exact multiplicity scan.  Much
    faster than per-index candidate enumeration over large ranges.
    """
    if lo > hi:
        raise ValueError("lo must be <= hi")
    exps: dict[int, list[tuple[int, int]]] = {s: [] for s in range(lo, hi + 1)}
    for p in scheme.range_primes(lo, hi):
        a1 = scheme.anchor(p, 1) % p
        start = lo + (a1 - lo) % p
        for s in range(start, hi + 1, p):
            e = np_exponent(scheme, p, s)
            if e > 0:
                exps[s].append((p, e))
    return {s: Factorization(tuple(sorted(pe))) for s, pe in exps.items()}


def coefficient_table(scheme: AnchorScheme, lo: int, hi: int) -> list[tuple[int, Factorization]]:
    """(s, a_s) rows for s in [lo, hi] inclusive."""
    by_s = coefficient_range(scheme, lo, hi)
    return [(s, by_s[s]) for s in range(lo, hi + 1)]
