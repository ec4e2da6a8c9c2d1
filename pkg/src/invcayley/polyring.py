"""Polynomials over Z_n in a bounded degree window, and their involutions.

Elements are coefficient tuples (a_0, ..., a_d) with 0 <= a_i < n, indexed by
the mixed-radix codec index(f) = sum a_i * n^i. Two finite structures share this
element set and are both implemented here:

* the degree window of Z_n[x]: squares are computed exactly in Z_n[x] (degree
  up to 2d), and `is_involution` asks whether that exact square is 1. This is
  the membership that drives graph adjacency; it is stable under CRT splitting
  and under projection to a smaller window.
* the quotient ring Z_n[x]/(x^(d+1)): `mul` is the truncated convolution and
  `is_quotient_involution` asks whether the truncated square is 1.

The two predicates agree unless n ≡ 2 (mod 4) and d >= 1, where the quotient
ring gains extra involutions: the equation that forces coefficient a_m to vanish
sits at degree 2m of the square, and truncation removes it for 2m > d. Witness:
(1 + x)^2 = 1 + 2x + x^2 ≡ 1 in Z_2[x]/(x^2), so 1 + x is a quotient-ring
involution of Z_2[x]/(x^2), while its exact square 1 + x^2 is not 1.

Closed form for the exact-square involutions, through the CRT: each odd
prime-power factor p^k contributes the constants {1, p^k - 1}; a 2-part 2^k with
k >= 2 contributes a_0 in inv(Z_2^k) and a_i in {0, 2^(k-1)} for i >= 1; a
2-part 2^1 contributes the constant {1} alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import kernels
from .errors import CapExceeded, DomainError
from .rings import Factorization, _crt_basis, factorize, prime_power_involutions

POLY_BRUTE_FORCE_CAP = 50_000

Element = tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    """Coefficient window of Z_n[x] at degree <= d (d = 0 is plain Z_n)."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 0:
            raise DomainError(f"degree bound must be an integer >= 0, got {self.d!r}")

    @property
    def width(self) -> int:
        return self.d + 1

    @property
    def size(self) -> int:
        return self.n**self.width

    def label(self, *, power_series: bool = False) -> str:
        if self.d == 0:
            return f"Z_{self.n}"
        base = f"Z_{self.n}[[x]]" if power_series else f"Z_{self.n}[x]"
        return f"{base} deg<={self.d}"

    # -- element plumbing ---------------------------------------------------

    def check_element(self, f: Element) -> None:
        if len(f) != self.width:
            raise DomainError(
                f"element has {len(f)} coefficients, ring window holds {self.width}"
            )
        for a in f:
            if not 0 <= a < self.n:
                raise DomainError(f"coefficient {a} out of range for modulus {self.n}")

    def zero(self) -> Element:
        return (0,) * self.width

    def one(self) -> Element:
        return (1,) + (0,) * self.d

    def x_power(self, i: int) -> Element:
        if not 0 <= i <= self.d:
            raise DomainError(f"x^{i} is outside the degree-{self.d} window")
        return tuple(1 if j == i else 0 for j in range(self.width))

    def index_of(self, f: Element) -> int:
        self.check_element(f)
        idx = 0
        for a in reversed(f):
            idx = idx * self.n + a
        return idx

    def element_of(self, idx: int) -> Element:
        if not 0 <= idx < self.size:
            raise DomainError(f"index {idx} out of range for ring of size {self.size}")
        coeffs = []
        for _ in range(self.width):
            coeffs.append(idx % self.n)
            idx //= self.n
        return tuple(coeffs)

    def render(self, f: Element) -> str:
        """Human-readable form: 'a0 + a1*x + a2*x^2' with zero terms omitted."""
        self.check_element(f)
        terms = []
        for i, a in enumerate(f):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                power = "x" if i == 1 else f"x^{i}"
                terms.append(power if a == 1 else f"{a}*{power}")
        return " + ".join(terms) if terms else "0"

    # -- arithmetic ----------------------------------------------------------

    def add(self, f: Element, g: Element) -> Element:
        self.check_element(f)
        self.check_element(g)
        return tuple((a + b) % self.n for a, b in zip(f, g))

    def neg(self, f: Element) -> Element:
        self.check_element(f)
        return tuple((-a) % self.n for a in f)

    def sub(self, f: Element, g: Element) -> Element:
        return self.add(f, self.neg(g))

    def mul(self, f: Element, g: Element) -> Element:
        """Product in the quotient ring: terms beyond x^d are truncated away."""
        self.check_element(f)
        self.check_element(g)
        out = [0] * self.width
        for i, a in enumerate(f):
            if a == 0:
                continue
            for j in range(self.width - i):
                out[i + j] = (out[i + j] + a * g[j]) % self.n
        return tuple(out)

    # -- involution membership ------------------------------------------------

    def is_involution(self, f: Element) -> bool:
        """True when the square of f, computed exactly in Z_n[x], is 1."""
        self.check_element(f)
        n = self.n
        w = self.width
        if (f[0] * f[0]) % n != 1:
            return False
        for k in range(1, 2 * w - 1):
            s = 0
            for j in range(max(0, k - w + 1), min(k, w - 1) + 1):
                s += f[j] * f[k - j]
            if s % n:
                return False
        return True

    def is_quotient_involution(self, f: Element) -> bool:
        """True when the truncated square (x^(d+1) = 0) is 1."""
        return self.mul(f, f) == self.one()


# -- enumeration and counting ----------------------------------------------


def _factor_involution_tuples(p: int, k: int, d: int) -> list[Element]:
    """Exact-square involutions of the degree window over Z_(p**k)."""
    q = p**k
    if p != 2 or k == 1:
        return [(c,) + (0,) * d for c in prime_power_involutions(p, k)]
    half = q // 2
    out = []
    for c in prime_power_involutions(2, k):
        for tail in product((0, half), repeat=d):
            out.append((c,) + tail)
    return out


def involutions_closed_form(ring: PolyRing) -> tuple[Element, ...]:
    """Exact-square involutions from the per-factor closed form, index order."""
    fact = factorize(ring.n)
    moduli = fact.prime_power_moduli()
    _, basis = _crt_basis(moduli)
    factor_sets: list[list[Element]] = []
    if fact.two_exp:
        factor_sets.append(_factor_involution_tuples(2, fact.two_exp, ring.d))
    for p, r in fact.odd_parts:
        factor_sets.append(_factor_involution_tuples(p, r, ring.d))
    elements = []
    for combo in product(*factor_sets):
        coeffs = tuple(
            sum(part[i] * b for part, b in zip(combo, basis)) % ring.n
            for i in range(ring.width)
        )
        elements.append(coeffs)
    elements.sort(key=ring.index_of)
    return tuple(elements)


def involution_indices(ring: PolyRing) -> np.ndarray:
    """Codec indices of the closed-form involution set, ascending int64."""
    return np.array(
        sorted(ring.index_of(f) for f in involutions_closed_form(ring)), dtype=np.int64
    )


def involutions_bruteforce(
    ring: PolyRing, *, quotient: bool = False, cap: int = POLY_BRUTE_FORCE_CAP
) -> tuple[Element, ...]:
    """Definition-level scan over all n^(d+1) elements.

    quotient=False tests the exact square in Z_n[x]; quotient=True tests the
    truncated square of the quotient ring.
    """
    if ring.size > cap:
        raise CapExceeded(
            f"brute-force scan over {ring.size} elements exceeds cap {cap}"
        )
    idx = kernels.involution_scan(ring.n, ring.d, bool(quotient))
    return tuple(ring.element_of(int(i)) for i in idx)


def inv_count_formula(ring: PolyRing) -> int:
    """Exact-square involution count from the factorization of n alone."""
    fact = factorize(ring.n)
    t = fact.num_odd_primes
    if fact.two_exp <= 1:
        return 2**t
    if fact.two_exp == 2:
        return 2**t * 2 * 2**ring.d
    return 2**t * 4 * 2**ring.d
