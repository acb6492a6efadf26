"""Chern class sequence of the tautological quotient on the Hecke fibration.

Three exactly-matching realizations of the same sequence:

* chern_full(n): trivariate in h, beta, gamma via the four-term recurrence
  (n+4)c_{n+4} - (beta/2)(n+2)c_{n+2} + (beta/4)^2 n c_n
      = h c_{n+3} - (beta h/4 + gamma/2) c_{n+1},
  with seeds c_1 = h, 2c_2 = h^2, 3c_3 = h^3/2 + (beta/4)h - gamma/2,
  4c_4 = h^4/6 + (beta/3)h^2 - (2gamma/3)h, and c_0 = 2.

* chern_oracle(n): independent route, expanding
  c(t) - 1 = exp(sum_{n>=0} (beta h/4 - (n/2) gamma) (beta/4)^{n-1}
             t^{2n+1}/(2n+1))
  as a truncated power series.  Used to cross-check the recurrence.

* chern_tilde(n): the h = 1, gamma = 0 specialization, directly via
  (n+1) ct_{n+1} = ct_n + (beta/4)(n-1) ct_{n-1}, ct_0 = 2, ct_1 = 1.

chern_hat(n, g) is the mod-g sequence u * ct_n with u = (g-1)! 2^{g-1} mod g,
computed natively in F_g; it needs n < g so every denominator is a unit.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .numbers import binomial, factorial_mod, is_prime
from .poly import BETA, GAMMA, H, GradedPoly, poly_from_coeffs

__all__ = [
    "chern_full",
    "chern_tilde",
    "chern_hat",
    "chern_oracle",
    "beta4_closed_form",
    "tilde_mod_coeffs",
]

_lock = threading.Lock()

_QUARTER = Fraction(1, 4)


def _full_seeds() -> list[GradedPoly]:
    c0 = GradedPoly.constant(2)
    c1 = H
    c2 = H**2 * Fraction(1, 2)
    c3 = (H**3 * Fraction(1, 2) + BETA * H * _QUARTER - GAMMA * Fraction(1, 2)) * Fraction(1, 3)
    c4 = (
        H**4 * Fraction(1, 6) + BETA * H**2 * Fraction(1, 3) - GAMMA * H * Fraction(2, 3)
    ) * Fraction(1, 4)
    return [c0, c1, c2, c3, c4]


_FULL: list[GradedPoly] = []


def chern_full(n: int) -> GradedPoly:
    """n-th Chern class as a polynomial in h, beta, gamma (c_0 = 2, c_{<0} = 0)."""
    if n < 0:
        return GradedPoly.zero()
    with _lock:
        if not _FULL:
            _FULL.extend(_full_seeds())
        while len(_FULL) <= n:
            m = len(_FULL) - 4  # recurrence index: computing c_{m+4}, m >= 1
            rhs = (
                H * _FULL[m + 3]
                + BETA * _FULL[m + 2] * Fraction(m + 2, 2)
                - (BETA * H * _QUARTER + GAMMA * Fraction(1, 2)) * _FULL[m + 1]
                - BETA**2 * _FULL[m] * Fraction(m, 16)
            )
            _FULL.append(rhs * Fraction(1, m + 4))
        return _FULL[n]


_TILDE: list[GradedPoly] = []


def chern_tilde(n: int) -> GradedPoly:
    """The h = 1, gamma = 0 specialization, as a polynomial in beta alone."""
    if n < 0:
        return GradedPoly.zero()
    with _lock:
        if not _TILDE:
            _TILDE.extend([GradedPoly.constant(2), GradedPoly.one()])
        while len(_TILDE) <= n:
            m = len(_TILDE) - 1  # computing ct_{m+1}, m >= 1
            rhs = _TILDE[m] + BETA * _TILDE[m - 1] * Fraction(m - 1, 4)
            _TILDE.append(rhs * Fraction(1, m + 1))
        return _TILDE[n]


_TILDE_MOD: dict[int, list[list[int]]] = {}


def tilde_mod_coeffs(n: int, g: int) -> list[list[int]]:
    """Ascending beta-coefficient lists of ct_0..ct_n over F_g; needs n < g."""
    if not is_prime(g) or g == 2:
        raise ValueError(f"g={g} is not an odd prime")
    if n >= g:
        raise ValueError(f"reduced Chern index {n} needs n < g = {g}")
    with _lock:
        seq = _TILDE_MOD.setdefault(g, [[2], [1]])
        inv4 = pow(4, -1, g)
        while len(seq) <= n:
            m = len(seq) - 1
            prev, cur = seq[m - 1], seq[m]
            scale = (m - 1) * inv4 % g
            shifted = [0] + [c * scale % g for c in prev]
            acc = [0] * max(len(cur), len(shifted))
            for i, c in enumerate(cur):
                acc[i] = c
            for i, c in enumerate(shifted):
                acc[i] = (acc[i] + c) % g
            inv = pow(m + 1, -1, g)
            seq.append([c * inv % g for c in acc])
        return [row[:] for row in seq[: n + 1]]


def chern_hat(n: int, g: int) -> GradedPoly:
    """(g-1)! 2^{g-1} ct_n over F_g, for 0 <= n < g with g an odd prime."""
    if n < 0:
        return GradedPoly.zero(g)
    coeffs = tilde_mod_coeffs(n, g)[n]
    u = int(factorial_mod(g - 1, g)) * pow(2, g - 1, g) % g
    return poly_from_coeffs([c * u % g for c in coeffs], "beta", g)


_ORACLE: list[GradedPoly] = []


def chern_oracle(n: int) -> GradedPoly:
    """Independent expansion of the closed-form exponential series."""
    if n < 0:
        return GradedPoly.zero()
    if n == 0:
        return GradedPoly.constant(2)
    with _lock:
        if len(_ORACLE) <= n:
            _extend_oracle(n)
        return _ORACLE[n]


def _extend_oracle(upto: int) -> None:
    # S(t) has odd coefficients s_1 = h and, for m >= 1,
    # s_{2m+1} = (beta h/4 - (m/2) gamma)(beta/4)^{m-1} / (2m+1).
    s: list[GradedPoly] = [GradedPoly.zero() for _ in range(upto + 2)]
    if len(s) > 1:
        s[1] = H
    m = 1
    while 2 * m + 1 < len(s):
        s[2 * m + 1] = (
            (BETA * H * _QUARTER - GAMMA * Fraction(m, 2))
            * BETA ** (m - 1)
            * _QUARTER ** (m - 1)
            * Fraction(1, 2 * m + 1)
        )
        m += 1
    # E = exp(S) via (n+1) E_{n+1} = sum_j (j+1) s_{j+1} E_{n-j}.
    e: list[GradedPoly] = [GradedPoly.one()]
    for n in range(upto + 1):
        acc = GradedPoly.zero()
        for j in range(n + 1):
            if not s[j + 1].is_zero():
                acc = acc + s[j + 1] * e[n - j] * (j + 1)
        e.append(acc * Fraction(1, n + 1))
    new = [GradedPoly.constant(2)] + e[1:]
    del _ORACLE[:]
    _ORACLE.extend(new)


def beta4_closed_form(n: int) -> Fraction:
    """Value of ct_n at beta = 4: central binomial ratio (2m)! / (4^m m!^2).

    For n >= 2 the odd and even neighbors agree: ct_{2m} = ct_{2m+1}.
    n = 0 gives 2 and n = 1 gives 1 from the seeds.
    """
    if n < 0:
        raise ValueError("negative Chern index")
    if n == 0:
        return Fraction(2)
    if n == 1:
        return Fraction(1)
    m = n // 2
    return Fraction(binomial(2 * m, m), 4**m)
