"""Prime-field certificates: M_j residues and the two nonzero-sum criteria.

For an odd prime g > 2k the scaled class w = ((g-1)! 2^{g-1})^k P_k has
integer coefficients; M_j is the coefficient of beta^j h^{k(k+1)/2 - 2j}
mod g.  The engine computes the M_j natively in F_g[beta] as the Giambelli
determinant of the scaled reduced Chern entries and applies

  e6.1:  M_0 + M_{(g-1)/2} + M_{g-1}        != 0 (mod g)
  e6.2:  M_{(g-1)/2 - l} + M_{g-1-l}        != 0 (mod g),  1 <= l <= e/2,

with e = 3g - 3 - k(k+1)/2.  Either one certifies that the class is nonzero
at genus g.  Failure of all criteria proves nothing.

Every matrix entry, including the constant last row (0, ..., 0, 2, 1), is
scaled by the unit u = (g-1)! 2^{g-1} mod g, so the determinant equals
u^k P_k(1, beta, 0) mod g exactly, which is the defining expansion of the
M_j.  A uniform unit rescale cannot change the vanishing of any M_j sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import Certificate
from .chern import tilde_mod_coeffs
from .errors import InapplicablePrimeError
from .numbers import factorial_mod, is_prime, next_prime
from .poly import det_mod_univariate

__all__ = [
    "find_gk",
    "find_gpk",
    "valid_primes_above",
    "ModularRun",
    "mj_mod",
    "criterion_e61",
    "criterion_e62",
    "certify_mod",
    "theorem43_gate",
]


def find_gk(k: int) -> int:
    """Smallest odd prime g with g - 1 >= k(k-1)/4."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = 3
    while 4 * (g - 1) < k * (k - 1):
        g = next_prime(g)
    return g


def find_gpk(k: int) -> int:
    """Smallest odd prime g with 3g - 3 >= k(k+1)/2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = 3
    while 6 * (g - 1) < k * (k + 1):
        g = next_prime(g)
    return g


def valid_primes_above(k: int, count: int = 2) -> list[int]:
    """First `count` primes g > 2k (all odd, so mj_mod accepts them)."""
    out = []
    g = 2 * k
    while len(out) < count:
        g = next_prime(g)
        out.append(g)
    return out


@dataclass(frozen=True)
class ModularRun:
    """M_j residues of the scaled class at one prime."""

    k: int
    g: int
    unit: int
    m: tuple[int, ...]
    e: int

    def m_at(self, j: int) -> int:
        if j < 0 or j >= len(self.m):
            return 0
        return self.m[j]


def mj_mod(k: int, g: int) -> ModularRun:
    """Residues M_j mod g via the Giambelli determinant over F_g[beta]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_prime(g) or g == 2:
        raise ValueError(f"g={g} is not an odd prime")
    if g <= 2 * k:
        raise InapplicablePrimeError(
            k, g, f"prime {g} does not exceed 2k = {2 * k}; the scaled class "
            "is not integral below that"
        )
    u = int(factorial_mod(g - 1, g)) * pow(2, g - 1, g) % g
    tilde = tilde_mod_coeffs(2 * k - 1, g)
    hat = [[c * u % g for c in row] for row in tilde]

    def entry(n: int) -> list[int]:
        return hat[n] if n >= 0 else [0]

    rows = [[entry(k - 2 * i + j) for j in range(k)] for i in range(k)]
    coeffs = det_mod_univariate(rows, g)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 > k * k // 4:
        raise AssertionError(
            f"M_j nonzero beyond the floor(k^2/4) degree bound at k={k}, g={g}"
        )
    e = 3 * g - 3 - k * (k + 1) // 2
    return ModularRun(k=k, g=g, unit=u, m=tuple(coeffs), e=e)


def criterion_e61(run: ModularRun) -> tuple[int, bool]:
    """Residue M_0 + M_{(g-1)/2} + M_{g-1} mod g and whether it is nonzero."""
    g = run.g
    residue = (run.m_at(0) + run.m_at((g - 1) // 2) + run.m_at(g - 1)) % g
    return residue, residue != 0


def criterion_e62(run: ModularRun, ell: int) -> tuple[int, bool]:
    """Residue M_{(g-1)/2 - ell} + M_{g-1-ell} mod g; 1 <= ell <= e/2."""
    if not 1 <= ell <= run.e // 2:
        raise ValueError(
            f"ell={ell} outside 1..{max(run.e // 2, 0)} for e={run.e}"
        )
    g = run.g
    residue = (run.m_at((g - 1) // 2 - ell) + run.m_at(g - 1 - ell)) % g
    return residue, residue != 0


def _usable_prime(k: int, g: int) -> bool:
    return g > 2 * k and 3 * g - 3 - k * (k + 1) // 2 >= 0


def certify_mod(k: int, g: int | None = None, fallback: bool = False) -> Certificate | None:
    """Run e6.1 then the e6.2 sweep at one prime; first success certifies.

    Default prime is find_gpk(k).  A prime with g <= 2k, or with negative
    expected dimension, is inapplicable; with fallback=True the search moves
    to the next primes until both preconditions hold (certificates found
    there prove non-vanishing at that larger genus, feeding monotonicity).
    Returns None when every criterion gives 0: that is inconclusive, never
    a proof of vanishing.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g is None:
        g = find_gpk(k)
    if not is_prime(g) or g == 2:
        raise ValueError(f"g={g} is not an odd prime")
    if not _usable_prime(k, g):
        if not fallback:
            if g <= 2 * k:
                raise InapplicablePrimeError(
                    k, g, f"prime {g} does not exceed 2k = {2 * k}"
                )
            raise InapplicablePrimeError(
                k, g, "expected dimension is negative at this prime"
            )
        while not _usable_prime(k, g):
            g = next_prime(g)
    run = mj_mod(k, g)
    residue, ok = criterion_e61(run)
    if ok:
        idx = [0, (g - 1) // 2, g - 1]
        return Certificate(
            kind="modular",
            k=k,
            g0=g,
            criterion="e6.1",
            ell=0,
            unit=run.unit,
            witness_residue=residue,
            m_indices=tuple(idx),
            m_values=tuple(run.m_at(i) for i in idx),
        )
    for ell in range(1, run.e // 2 + 1):
        residue, ok = criterion_e62(run, ell)
        if ok:
            idx = [i for i in ((g - 1) // 2 - ell, g - 1 - ell) if i >= 0]
            return Certificate(
                kind="modular",
                k=k,
                g0=g,
                criterion="e6.2",
                ell=ell,
                unit=run.unit,
                witness_residue=residue,
                m_indices=tuple(idx),
                m_values=tuple(run.m_at(i) for i in idx),
            )
    return None


def theorem43_gate(g: int, k: int) -> bool:
    """Non-vanishing holds when g is an odd prime with g-1 >= max(k(k-1)/4, 2k-1)."""
    if k < 1:
        return False
    if not is_prime(g) or g == 2:
        return False
    return 4 * (g - 1) >= k * (k - 1) and g >= 2 * k
