"""Giambelli determinant for the virtual class polynomial P_k and its analyses.

P_k is the k x k determinant with entry(i, j) = c_{k - 2(i-1) + (j-1)}
(1-based), where c is the Chern sequence, c_0 = 2 and c_{<0} = 0.  The three
incarnations plug in the three Chern variants: trivariate (full), the
beta-only specialization (beta), and the prime-field sequence (hat).

Structural facts checked here: the beta = 4 closed form
(-1)^{delta(k)} 2^{-k(k-1)/2}, the degree bound floor(k^2/4) on the beta
specialization, root multiplicities at beta = 1/i^2, and the Schur dimension
count backing the nonvanishing of P_k(1,4,0) mod p.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import tool_stamp
from .chern import chern_full, chern_hat, chern_tilde
from .numbers import is_prime
from .poly import GradedPoly, PolyMatrix, det, det_numeric, root_multiplicity

__all__ = [
    "PK_FULL_DEFAULT_LIMIT",
    "PkRecord",
    "Partition",
    "giambelli_matrix",
    "pk_full",
    "pk_beta",
    "pk_eval",
    "delta_parity",
    "closed_form_14",
    "DegreeReport",
    "degree_check",
    "multiplicity_profile",
    "lemma37_bound",
    "conjecture_bound",
    "schur_dim",
    "lemma35_check",
]

# Symbolic trivariate determinants grow quickly; the rational-certificate
# pipeline only ever needs small k, so larger k must be forced explicitly.
PK_FULL_DEFAULT_LIMIT = 12

_lock = threading.Lock()
_MEMO: dict[tuple[int, str], "PkRecord"] = {}


@dataclass(frozen=True)
class PkRecord:
    """A computed P_k with provenance; `created` stays out of persisted form."""

    k: int
    variant: str
    polynomial: GradedPoly
    algorithm: str
    version: str = field(default_factory=tool_stamp)
    created: float | None = field(default=None, compare=False)

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "variant": self.variant,
            "algorithm": self.algorithm,
            "version": self.version,
            "poly": self.polynomial.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> PkRecord:
        return cls(
            k=int(obj["k"]),
            variant=obj["variant"],
            polynomial=GradedPoly.from_json_obj(obj["poly"]),
            algorithm=obj["algorithm"],
            version=obj["version"],
        )


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def stripped(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p > 0)


def _chern_entry(n: int, variant: str, g: int | None) -> GradedPoly:
    if variant == "full":
        return chern_full(n)
    if variant == "beta":
        return chern_tilde(n)
    if variant == "hat":
        if g is None:
            raise ValueError("variant 'hat' needs the prime g")
        return chern_hat(n, g)
    raise ValueError(f"unknown variant {variant!r}")


def giambelli_matrix(k: int, variant: str = "full", g: int | None = None) -> PolyMatrix:
    """k x k matrix with entry(i, j) = c_{k - 2(i-1) + (j-1)}, 1-based."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = []
    for i in range(1, k + 1):
        rows.append(
            tuple(
                _chern_entry(k - 2 * (i - 1) + (j - 1), variant, g)
                for j in range(1, k + 1)
            )
        )
    return PolyMatrix(tuple(rows))


def pk_full(k: int, store=None, force: bool = False) -> PkRecord:
    """Trivariate P_k(h, beta, gamma); homogeneous of half-degree k(k+1)/2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > PK_FULL_DEFAULT_LIMIT and not force:
        raise ValueError(
            f"trivariate P_k is limited to k <= {PK_FULL_DEFAULT_LIMIT} by default; "
            "pass force=True to override"
        )
    return _pk_cached(k, "full", store)


def pk_beta(k: int, store=None) -> PkRecord:
    """P_k(1, beta, 0) computed directly from the reduced Chern entries."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _pk_cached(k, "beta", store)


def _pk_cached(k: int, variant: str, store) -> PkRecord:
    with _lock:
        rec = _MEMO.get((k, variant))
    if rec is not None:
        if store is not None:
            store.put_pk_record(rec)
        return rec
    if store is not None:
        rec = store.get_pk_record(k, variant)
        if rec is not None and rec.version == tool_stamp():
            with _lock:
                _MEMO[(k, variant)] = rec
            return rec
    matrix = giambelli_matrix(k, variant)
    if variant == "full":
        algorithm = "minor-expansion"
    else:
        algorithm = "evaluate-interpolate" if matrix.symbols_used() else "numeric"
    poly = det(matrix)
    rec = PkRecord(k, variant, poly, algorithm, created=time.time())
    if variant == "full" and not poly.is_homogeneous(k * (k + 1) // 2):
        raise AssertionError(f"P_{k} is not homogeneous of half-degree {k*(k+1)//2}")
    with _lock:
        _MEMO[(k, variant)] = rec
    if store is not None:
        store.put_pk_record(rec)
    return rec


def _chern_values_at(
    nmax: int, h0: Fraction, beta0: Fraction, gamma0: Fraction
) -> list[Fraction]:
    """c_0..c_nmax at a rational point, via the recurrence on plain scalars."""
    c = [
        Fraction(2),
        h0,
        h0**2 / 2,
        (h0**3 / 2 + beta0 * h0 / 4 - gamma0 / 2) / 3,
        (h0**4 / 6 + beta0 * h0**2 / 3 - gamma0 * h0 * Fraction(2, 3)) / 4,
    ]
    while len(c) <= nmax:
        m = len(c) - 4
        rhs = (
            h0 * c[m + 3]
            + beta0 * Fraction(m + 2, 2) * c[m + 2]
            - (beta0 * h0 / 4 + gamma0 / 2) * c[m + 1]
            - beta0**2 * Fraction(m, 16) * c[m]
        )
        c.append(rhs / (m + 4))
    return c


def pk_eval(k: int, h0, beta0, gamma0) -> Fraction:
    """P_k at a rational point, by numeric recurrence plus exact determinant."""
    if k < 1:
        raise ValueError("k must be >= 1")
    h0, beta0, gamma0 = Fraction(h0), Fraction(beta0), Fraction(gamma0)
    c = _chern_values_at(2 * k - 1, h0, beta0, gamma0)

    def entry(n: int) -> Fraction:
        return c[n] if n >= 0 else Fraction(0)

    rows = [
        [entry(k - 2 * i + j) for j in range(k)] for i in range(k)
    ]
    return det_numeric(rows)


# redundant parity table guarding the delta convention for small k
_DELTA_TABLE = {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 1}


def delta_parity(k: int) -> int:
    """delta(k) = 1 iff k = 2m with m odd, else 0."""
    d = 1 if (k % 2 == 0 and (k // 2) % 2 == 1) else 0
    if k in _DELTA_TABLE and _DELTA_TABLE[k] != d:
        raise AssertionError(f"delta convention slipped at k={k}")
    return d


def closed_form_14(k: int) -> Fraction:
    """Predicted P_k(1,4,0) = (-1)^delta(k) / 2^{k(k-1)/2}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction((-1) ** delta_parity(k), 2 ** (k * (k - 1) // 2))


@dataclass(frozen=True)
class DegreeReport:
    """Degree of P_k(1, beta, 0) against the floor(k^2/4) bound."""

    k: int
    degree: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.degree <= self.bound

    @property
    def equality(self) -> bool:
        return self.degree == self.bound

    def __bool__(self) -> bool:
        return self.within_bound


def degree_check(k: int, store=None) -> DegreeReport:
    poly = pk_beta(k, store).polynomial
    return DegreeReport(k, poly.degree_in("beta"), k * k // 4)


def lemma37_bound(k: int, i: int) -> int:
    """Proven multiplicity lower bound at beta = 1/i^2 for 1 <= i < floor((k+1)/2)."""
    if not 1 <= i < (k + 1) // 2:
        return 0
    return (k + 1) // 2 - i


def conjecture_bound(k: int, i: int) -> int:
    """Conjectured multiplicity lower bound floor((k-i+1)/2) for 1 <= i <= k-1."""
    if not 1 <= i <= k - 1:
        return 0
    return (k - i + 1) // 2


def multiplicity_profile(k: int, store=None) -> list[tuple[int, int]]:
    """Exact multiplicity of beta = 1/i^2 in P_k(1, beta, 0) for 1 <= i <= k-1."""
    if k < 2:
        raise ValueError("multiplicity profile needs k >= 2")
    poly = pk_beta(k, store).polynomial
    return [
        (i, root_multiplicity(poly, Fraction(1, i * i))) for i in range(1, k)
    ]


def schur_dim(lam, n: int) -> int:
    """S_lambda(1, ..., 1) with n ones, by the hook-content product formula."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    parts = lam.stripped()
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(parts) > n:
        raise ValueError(f"partition has {len(parts)} rows > n = {n}")
    num = 1
    den = 1
    for i, row in enumerate(parts):  # 0-based cell (i, j)
        for j in range(row):
            num *= n + j - i
            arm = row - j - 1
            leg = sum(1 for r in parts[i + 1 :] if r > j)
            den *= arm + leg + 1
    q, r = divmod(num, den)
    if r:
        raise AssertionError("hook-content product is not an integer")
    return q


def lemma35_check(k: int, p: int, store=None) -> bool:
    """P_k(1,4,0) is a unit mod p for odd primes p > k.

    Evaluates the determinant exactly, reduces mod p, and cross-checks the
    residue against the closed form.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} is not an odd prime")
    if p <= k:
        raise ValueError(f"lemma needs p > k, got p={p}, k={k}")
    value = pk_eval(k, 1, 4, 0)
    if value.denominator % p == 0:
        return False
    residue = value.numerator * pow(value.denominator, -1, p) % p
    predicted = closed_form_14(k)
    pred_residue = predicted.numerator * pow(predicted.denominator, -1, p) % p
    if residue != pred_residue:
        raise AssertionError(
            f"P_{k}(1,4,0) mod {p}: determinant gives {residue}, closed form {pred_residue}"
        )
    return residue != 0
