"""Exact scalar arithmetic: rationals, primes, Bernoulli numbers, mod-p residues.

All arithmetic in the package is exact.  Rationals are stdlib
fractions.Fraction; this module fixes their canonical string form, provides
the Bernoulli table feeding the intersection-number formula, and wraps
prime-field arithmetic in a checked ModN type.

Bernoulli convention: B_1 = -1/2 (the x/(e^x - 1) expansion).  Callers of the
intersection-number formula never reach an odd index > 0; the lone odd value
B_1 is kept for completeness.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "format_rational",
    "parse_rational",
    "binomial",
    "is_prime",
    "next_prime",
    "BernoulliTable",
    "bernoulli",
    "von_staudt_denominator",
    "ModN",
    "inv_mod",
    "factorial_mod",
]


# ---------------------------------------------------------------------------
# rational formatting


def format_rational(q: Fraction | int) -> str:
    """Canonical string "num/den" in lowest terms, "/den" omitted when den == 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Inverse of format_rational; accepts any "num" or "num/den" string."""
    return Fraction(s.strip())


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the range 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# primality

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division, then Miller-Rabin)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    # Miller-Rabin with the fixed witness set is exact for n < 3.3e24,
    # far beyond any modulus this package touches.
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    m = max(n + 1, 2)
    while not is_prime(m):
        m += 1
    return m


# ---------------------------------------------------------------------------
# Bernoulli numbers


class BernoulliTable:
    """Memoized Bernoulli numbers via sum(C(q+1, j) * B_j, j=0..q) == 0.

    Negative indices give 0.  Extension is guarded by a lock so shared use
    from several threads stays consistent.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, q: int) -> Fraction:
        if q < 0:
            return Fraction(0)
        if q >= 3 and q % 2 == 1:
            return Fraction(0)
        with self._lock:
            while len(self._values) <= q:
                m = len(self._values)
                acc = Fraction(0)
                for j in range(m):
                    acc += binomial(m + 1, j) * self._values[j]
                self._values.append(-acc / (m + 1))
            return self._values[q]


_BERNOULLI = BernoulliTable()


def bernoulli(q: int) -> Fraction:
    """Bernoulli number B_q, with B_1 = -1/2 and B_q = 0 for q < 0."""
    return _BERNOULLI.get(q)


def von_staudt_denominator(q: int) -> int:
    """Denominator of B_q for even q >= 0: product of primes p with (p-1) | q."""
    if q < 0 or q % 2 != 0:
        raise ValueError(f"von Staudt-Clausen applies to even q >= 0, got {q}")
    if q == 0:
        return 1
    out = 1
    for p in range(2, q + 2):
        if is_prime(p) and q % (p - 1) == 0:
            out *= p
    return out


# ---------------------------------------------------------------------------
# prime fields


@dataclass(frozen=True)
class ModN:
    """A residue in the prime field F_p; primality is checked on construction.

    Package callers always use odd primes; p == 2 is accepted for generic
    identities such as Wilson's theorem.
    """

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other: ModN) -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: ModN) -> ModN:
        self._check(other)
        return ModN(self.residue + other.residue, self.modulus)

    def __sub__(self, other: ModN) -> ModN:
        self._check(other)
        return ModN(self.residue - other.residue, self.modulus)

    def __mul__(self, other: ModN) -> ModN:
        self._check(other)
        return ModN(self.residue * other.residue, self.modulus)

    def __pow__(self, n: int) -> ModN:
        return ModN(pow(self.residue, n, self.modulus), self.modulus)

    def inverse(self) -> ModN:
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return ModN(pow(self.residue, -1, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.residue


def inv_mod(a: int, p: int) -> ModN:
    """Multiplicative inverse of a in F_p."""
    return ModN(a, p).inverse()


def factorial_mod(n: int, p: int) -> ModN:
    """n! in F_p (0 when n >= p)."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if n >= p:
        return ModN(0, p)
    acc = 1
    for i in range(2, n + 1):
        acc = acc * i % p
    return ModN(acc, p)
