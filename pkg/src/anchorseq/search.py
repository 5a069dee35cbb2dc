"""Sieve-accelerated search for all-prime solution tuples.

Each index contributes a linear form x_s(k) = xbar_s + step_s * k; a
witness is a shift k where every form is prime and exceeds the floor
r_min.  A residue pre-sieve removes shifts where some form is divisible
by a small prime, taking care never to remove a shift whose form equals
that prime itself.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .conditions import InadmissibleFamily, full_admissibility
from .construction import AnchorScheme, coefficient_range
from .crt import SolutionFamily
from .primality import is_prime, sieve_primes

DEFAULT_SIEVE_BOUND = 10_000
DEFAULT_BLOCK_SIZE = 1 << 14


@dataclass(frozen=True)
class TupleWitness:
    """A shift k whose whole solution tuple is prime and above r_min."""

    k: int
    values: dict[int, int]  # s -> x_s(k)
    r_min: int

    @property
    def omega(self) -> int:
        return self.values[0]

    @property
    def min_entry(self) -> int:
        return min(self.values.values())

    def to_json_dict(self) -> dict:
        return {
            "k": str(self.k),
            "r_min": str(self.r_min),
            "values": {str(s): str(x) for s, x in sorted(self.values.items())},
        }


def witness_from_json_dict(data: dict) -> TupleWitness:
    return TupleWitness(
        k=int(data["k"]),
        values={int(s): int(x) for s, x in data["values"].items()},
        r_min=int(data.get("r_min", 0)),
    )


def verify_witness(family: SolutionFamily, witness: TupleWitness, extra_rounds: int = 0) -> bool:
    """Independent recheck: defining equations, primality, and the floor."""
    vals = witness.values
    if set(vals) != set(family.indices()):
        return False
    x0 = vals[0]
    for s, x in vals.items():
        if family.moduli[s] * x - x0 != -s:
            return False
        if x <= witness.r_min or not is_prime(x, extra_rounds=extra_rounds):
            return False
    return True


def _scan_block(
    forms: list[tuple[int, int, int]],
    k_lo: int,
    k_hi: int,
    r_min: int,
    sieve_primes_list: list[int],
    extra_rounds: int,
) -> list[tuple[int, dict[int, int]]]:
    """Witnesses with k in [k_lo, k_hi), found via pre-sieve + direct test."""
    size = k_hi - k_lo
    alive = bytearray([1]) * size
    rescue: set[int] = set()
    for p in sieve_primes_list:
        for s, xb, st in forms:
            if st % p == 0:
                if xb % p != 0:
                    continue
                # p divides the whole progression: only x = p can be prime
                if (p - xb) % st == 0:
                    rescue.add((p - xb) // st)
                alive[:] = bytearray(size)
                continue
            # shifts with x = 0 (mod p); the one with x = p exactly is rescued
            bad = (-xb * pow(st, -1, p)) % p
            if (p - xb) % st == 0:
                rescue.add((p - xb) // st)
            first = k_lo + (bad - k_lo) % p
            if first < k_hi:
                alive[first - k_lo :: p] = bytearray(len(range(first, k_hi, p)))
    candidates = {k_lo + i for i, a in enumerate(alive) if a}
    candidates.update(k for k in rescue if k_lo <= k < k_hi)
    found = []
    for k in sorted(candidates):
        values = {s: xb + st * k for s, xb, st in forms}
        if all(x > r_min and is_prime(x, extra_rounds=extra_rounds) for x in values.values()):
            found.append((k, values))
    return found


def search_tuples(
    family: SolutionFamily,
    k_start: int,
    k_count: int,
    r_min: int = 0,
    max_witnesses: int | None = None,
    sieve_bound: int = DEFAULT_SIEVE_BOUND,
    use_sieve: bool = True,
    extra_rounds: int = 0,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> list[TupleWitness]:
    """All-prime tuples with k in [k_start, k_start + k_count), ascending.

    Deterministic for fixed arguments regardless of worker count: blocks
    partition the range contiguously and results merge in block order.
    """
    report = full_admissibility(family)
    if not report.overall:
        raise InadmissibleFamily(report.failing_primes()[0])
    if sieve_bound < 2:
        raise ValueError("sieve_bound must be >= 2")
    forms = [(s, family.bases[s], family.steps[s]) for s in family.indices()]
    primes = sieve_primes(sieve_bound) if use_sieve else []
    blocks = [
        (k0, min(k0 + block_size, k_start + k_count))
        for k0 in range(k_start, k_start + k_count, block_size)
    ]
    witnesses: list[TupleWitness] = []

    def take(found) -> bool:
        for k, values in found:
            witnesses.append(TupleWitness(k=k, values=values, r_min=r_min))
            if max_witnesses is not None and len(witnesses) >= max_witnesses:
                return True
        return False

    if workers <= 1:
        for k0, k1 in blocks:
            if take(_scan_block(forms, k0, k1, r_min, primes, extra_rounds)):
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_block, forms, k0, k1, r_min, primes, extra_rounds)
                for k0, k1 in blocks
            ]
            for fut in futures:
                if take(fut.result()):
                    break
    for w in witnesses:
        if not verify_witness(family, w, extra_rounds=extra_rounds):
            raise AssertionError(f"witness at k={w.k} failed re-verification")
    return witnesses[:max_witnesses] if max_witnesses is not None else witnesses


@dataclass(frozen=True)
class GalaxyRow:
    s: int
    difference: int  # omega - s
    a: int
    pi: int
    prime: bool


@dataclass(frozen=True)
class GalaxyReport:
    """Factored neighborhood of a witness: omega - s = a_s * pi_s per row."""

    q: int
    omega: int
    rows: tuple[GalaxyRow, ...]

    def prime_rows(self) -> list[GalaxyRow]:
        return [row for row in self.rows if row.prime]

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "omega": str(self.omega),
            "rows": [
                {
                    "s": row.s,
                    "difference": str(row.difference),
                    "a": str(row.a),
                    "pi": str(row.pi),
                    "prime": row.prime,
                }
                for row in self.rows
            ],
        }

    def render_text(self) -> str:
        headers = ("s", "omega-s", "a_s", "pi_s", "prime?")
        cells = [
            (str(r.s), str(r.difference), str(r.a), str(r.pi), "prime" if r.prime else "composite")
            for r in self.rows
        ]
        widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
        for c in cells:
            lines.append("  ".join(v.rjust(w) for v, w in zip(c, widths)))
        return "\n".join(lines)


def galaxy_report(scheme: AnchorScheme, witness: TupleWitness) -> GalaxyReport:
    """Reconstruct omega - s = a_s * pi_s around the witness's omega.

    The solver pins the s = 0 modulus to 1, but a scheme may give a_0 > 1
    (the all-composite galaxies do); rows therefore factor through the
    scheme's own coefficients, which must divide omega - s exactly.
    """
    indices = sorted(witness.values)
    q = max(abs(s) for s in indices)
    coeffs = coefficient_range(scheme, -q, q)
    omega = witness.omega
    rows = []
    for s in indices:
        x = witness.values[s]
        if x == 0 or (omega - s) % x != 0:
            raise ValueError(f"witness value at s={s} does not divide omega - s")
        a = coeffs[s].value
        if (omega - s) % a != 0:
            raise ValueError(f"coefficient a_{s}={a} does not divide omega - s")
        pi = (omega - s) // a
        rows.append(GalaxyRow(s=s, difference=omega - s, a=a, pi=pi, prime=is_prime(omega - s)))
    return GalaxyReport(q=q, omega=omega, rows=tuple(rows))
