"""Exact arithmetic over Z_n: factorization, square roots of unity, CRT.

An involution of Z_n is an element u with u^2 = 1. The set has a closed form
determined by the prime factorization n = 2^r0 * p_1^r_1 * ... * p_t^r_t:
each odd prime-power factor contributes {1, -1}, the 2-part contributes
{1}, {1, 3}, or {1, 2^(k-1) - 1, 2^(k-1) + 1, 2^k - 1} depending on r0,
and the sets combine multiplicatively through the CRT.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

from .errors import CapExceeded, DomainError

ZN_BRUTE_FORCE_CAP = 1_000_000


@dataclass(frozen=True)
class Factorization:
    """n = 2**two_exp * prod(p**r for p, r in odd_parts), odd primes ascending."""

    n: int
    two_exp: int
    odd_parts: tuple[tuple[int, int], ...]

    @property
    def num_odd_primes(self) -> int:
        return len(self.odd_parts)

    def prime_power_moduli(self) -> tuple[int, ...]:
        """Pairwise-coprime prime-power moduli whose product is n, 2-part first."""
        mods: list[int] = []
        if self.two_exp:
            mods.append(2**self.two_exp)
        mods.extend(p**r for p, r in self.odd_parts)
        return tuple(mods)


def factorize(n: int) -> Factorization:
    """Trial-division factorization; deterministic and fine at desk scale."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {n!r}")
    m = n
    two = 0
    while m % 2 == 0:
        m //= 2
        two += 1
    odd: list[tuple[int, int]] = []
    p = 3
    while p * p <= m:
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            odd.append((p, r))
        p += 2
    if m > 1:
        odd.append((m, 1))
    return Factorization(n=n, two_exp=two, odd_parts=tuple(odd))


def is_odd_prime_power(n: int) -> bool:
    f = factorize(n)
    return f.two_exp == 0 and f.num_odd_primes == 1


def is_cycle_modulus(n: int) -> bool:
    """True when n = p^k or n = 2*p^k for an odd prime p."""
    f = factorize(n)
    return f.two_exp <= 1 and f.num_odd_primes == 1


def prime_power_involutions(p: int, k: int) -> tuple[int, ...]:
    """Involutions of Z_(p**k), ascending."""
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    q = p**k
    if p == 2:
        if k == 1:
            return (1,)
        if k == 2:
            return (1, 3)
        h = q // 2
        return (1, h - 1, h + 1, q - 1)
    return (1, q - 1)


def _crt_basis(moduli: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    n = 1
    for q in moduli:
        n *= q
    basis = []
    for q in moduli:
        m = n // q
        basis.append(m * pow(m, -1, q) % n)
    return n, tuple(basis)


def crt_combine_moduli(residues: tuple[int, ...], moduli: tuple[int, ...]) -> int:
    """Unique value mod prod(moduli) matching the residues; moduli must be coprime."""
    if len(residues) != len(moduli):
        raise DomainError("residue and modulus counts differ")
    for i, q in enumerate(moduli):
        if q < 2:
            raise DomainError(f"modulus must be >= 2, got {q}")
        if not 0 <= residues[i] < q:
            raise DomainError(f"residue {residues[i]} out of range for modulus {q}")
        for r in moduli[i + 1 :]:
            if gcd(q, r) != 1:
                raise DomainError(f"moduli {q} and {r} are not coprime")
    n, basis = _crt_basis(tuple(moduli))
    return sum(r * b for r, b in zip(residues, basis)) % n


def crt_split(a: int, fact: Factorization) -> tuple[int, ...]:
    """Residues of a modulo each prime-power factor, 2-part first."""
    if not 0 <= a < fact.n:
        raise DomainError(f"value {a} out of range for modulus {fact.n}")
    return tuple(a % q for q in fact.prime_power_moduli())


def crt_combine(residues: tuple[int, ...], fact: Factorization) -> int:
    """Inverse of crt_split."""
    return crt_combine_moduli(tuple(residues), fact.prime_power_moduli())


def involutions_zn(n: int) -> tuple[int, ...]:
    """Involutions of Z_n via the closed form per prime-power factor, ascending."""
    fact = factorize(n)
    moduli = fact.prime_power_moduli()
    factor_sets = []
    if fact.two_exp:
        factor_sets.append(prime_power_involutions(2, fact.two_exp))
    for p, r in fact.odd_parts:
        factor_sets.append(prime_power_involutions(p, r))
    _, basis = _crt_basis(moduli)
    values = [
        sum(r * b for r, b in zip(combo, basis)) % n
        for combo in product(*factor_sets)
    ]
    return tuple(sorted(values))


def involutions_zn_bruteforce(n: int, *, cap: int = ZN_BRUTE_FORCE_CAP) -> tuple[int, ...]:
    """Definition-level scan: every u in Z_n with u*u % n == 1, ascending."""
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    if n > cap:
        raise CapExceeded(f"brute-force scan over Z_{n} exceeds cap {cap}")
    u = np.arange(n, dtype=np.int64)
    hits = np.nonzero((u * u) % n == 1)[0]
    return tuple(int(v) for v in hits)


def inv_count_zn(n: int) -> int:
    """|involutions of Z_n| from the factorization alone."""
    fact = factorize(n)
    t = fact.num_odd_primes
    if fact.two_exp <= 1:
        return 2**t
    if fact.two_exp == 2:
        return 2 ** (t + 1)
    return 2 ** (t + 2)
