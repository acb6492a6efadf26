"""Decision engine: combine certificates, trusted gates, and exception rows.

Assumption levels order the curve hypotheses: any_curve < petri < general.
A fact proved at some level applies whenever the requested level is at least
as strong, so a verdict requested for a general curve may use any_curve,
petri, and general facts.  Each verdict reports the weakest level that
justifies everything it claims; rows where nothing applies stay UNKNOWN and
carry the requested level.

Class facts (b_H(k) zero or nonzero) live in the curve-independent
cohomology ring of the Hecke correspondence, so they always hold at
any_curve.  Locus facts inherit the hypothesis of the rule that produced
them.  EMPTY is only ever emitted from the exception rows or from the
negative-expected-dimension rule for general curves; the engine never
extrapolates vanishing.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .certificates import Certificate
from .errors import InapplicableError
from .hecke import rational_certificate
from .modular import (
    certify_mod,
    find_gk,
    find_gpk,
    theorem43_gate,
    valid_primes_above,
)
from .numbers import is_prime

__all__ = [
    "ANY_CURVE",
    "PETRI",
    "GENERAL",
    "LEVELS",
    "beta_rank2",
    "beta_rank1",
    "Verdict",
    "decide",
    "twisted_bounds",
    "emit_table",
    "CSV_HEADER",
]

ANY_CURVE = "any_curve"
PETRI = "petri"
GENERAL = "general"
LEVELS = {ANY_CURVE: 0, PETRI: 1, GENERAL: 2}

CSV_HEADER = [
    "g", "k", "beta", "class_status", "locus_status",
    "assumption", "witness_rule", "certificate_ref",
]


def beta_rank2(g: int, k: int) -> int:
    """Expected dimension of B(2,K,k): 3g - 3 - k(k+1)/2."""
    if g < 2 or k < 1:
        raise ValueError("need g >= 2 and k >= 1")
    return 3 * g - 3 - k * (k + 1) // 2


def beta_rank1(g: int, d: int, k: int) -> int:
    """Expected dimension of B(1,d,k): g - k(k - d + g - 1)."""
    if g < 2:
        raise ValueError("need g >= 2")
    return g - k * (k - d + g - 1)


# (g, k) -> (class_status, class_level, locus_status, locus_level)
# g = 2 is outside every theorem gate; (3,4) and (4,4) are the documented
# failures of the general transfer rule.
_EXCEPTIONS = {
    (2, 1): ("NONZERO", ANY_CURVE, "NONEMPTY", ANY_CURVE),
    (2, 2): ("NONZERO", ANY_CURVE, "EMPTY", ANY_CURVE),
    (3, 4): ("ZERO", ANY_CURVE, "EMPTY", GENERAL),
    (4, 4): ("NONZERO", ANY_CURVE, "EMPTY", PETRI),
}


def _exception_row(g: int, k: int):
    if g == 2 and k >= 3:
        return ("ZERO", ANY_CURVE, "EMPTY", ANY_CURVE)
    return _EXCEPTIONS.get((g, k))


@dataclass(frozen=True)
class Verdict:
    """One decided (g, k) cell with its audit trail."""

    g: int
    k: int
    beta: int
    class_status: str
    locus_status: str
    assumption: str
    witness_rule: str
    certificate: Certificate | None = field(default=None, compare=False)
    twisted_lower: int | None = None
    twisted_upper: int | None = None

    @property
    def certificate_ref(self) -> str:
        return self.certificate.hash() if self.certificate is not None else ""

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "beta": self.beta,
            "class_status": self.class_status,
            "locus_status": self.locus_status,
            "assumption": self.assumption,
            "witness_rule": self.witness_rule,
            "certificate_ref": self.certificate_ref,
            "twisted_lower": self.twisted_lower,
            "twisted_upper": self.twisted_upper,
        }


def _usable(k: int, p: int) -> bool:
    return (
        p > 2 * k
        and is_prime(p)
        and p != 2
        and 3 * p - 3 - k * (k + 1) // 2 >= 0
    )


def _candidate_primes(g: int, k: int) -> list[int]:
    cands = [g, find_gpk(k), find_gk(k), *valid_primes_above(k, 2)]
    seen: list[int] = []
    for p in cands:
        if p <= g and _usable(k, p) and p not in seen:
            seen.append(p)
    return seen


def _certificate_witness(cert: Certificate, g: int) -> str:
    if cert.kind == "modular":
        label = cert.criterion
        if cert.criterion == "e6.2":
            label += f"(l={cert.ell})"
    else:
        label = "pairing"
    tail = "+monotone" if cert.g0 < g else ""
    return f"certificate:{label}@{cert.g0}{tail}"


def _class_certificate(g: int, k: int, store) -> Certificate | None:
    """Modular certificate at the given genus or a smaller usable prime.

    A certificate at prime g0 <= g proves the class nonzero at g0; the
    relation ideal only grows as the genus drops, so non-vanishing persists
    for every g >= g0 and the witness records the monotone step.
    """
    for p in _candidate_primes(g, k):
        cert = None
        if store is not None:
            cert = store.get_certificate("modular", k, p)
        if cert is None:
            try:
                cert = certify_mod(k, p)
            except InapplicableError:
                continue
            if cert is not None and store is not None:
                store.put_certificate(cert)
        if cert is not None:
            return cert
    return None


def _class_gate(g: int, k: int) -> str | None:
    """Trusted theorem gates for b_H(k) != 0, all curve-independent."""
    if g >= k * (k + 1) // 2 + 2:
        return "expected-dim-gate"
    if theorem43_gate(g, k):
        return "prime-gate"
    if is_prime(g) and g >= 19 and 4 * (g - 1) >= k * (k - 1):
        return "large-prime-gate"
    if k >= 8 and g >= find_gk(k):
        return "gk-gate"
    return None


def decide(
    g: int,
    k: int,
    assumption: str = GENERAL,
    store=None,
    rational_budget: int = 0,
) -> Verdict:
    """Deterministic verdict for one (g, k) at the requested curve level.

    Precedence: exception rows, then class certificates and gates, then the
    locus rules in order of weakest sufficient hypothesis.  rational_budget
    enables the exact-pairing fallback for the class when no modular
    certificate or gate applies (off by default: it recomputes P_k over the
    rationals, which is far slower than one prime-field determinant).
    """
    if assumption not in LEVELS:
        raise ValueError(f"unknown assumption level: {assumption!r}")
    req = LEVELS[assumption]
    beta = beta_rank2(g, k)

    class_status = "UNKNOWN"
    locus_status = "UNKNOWN"
    class_rule = "none"
    locus_rule = "none"
    cert: Certificate | None = None
    used_levels: list[int] = []

    row = _exception_row(g, k)
    if row is not None:
        cstat, clevel, lstat, llevel = row
        if LEVELS[clevel] <= req:
            class_status, class_rule = cstat, "exception"
            used_levels.append(LEVELS[clevel])
        if LEVELS[llevel] <= req:
            locus_status, locus_rule = lstat, "exception"
            used_levels.append(LEVELS[llevel])
    else:
        cert = _class_certificate(g, k, store)
        if cert is not None:
            class_status = "NONZERO"
            class_rule = _certificate_witness(cert, g)
            used_levels.append(LEVELS[ANY_CURVE])
        else:
            gate = _class_gate(g, k)
            if gate is not None:
                class_status = "NONZERO"
                class_rule = gate
                used_levels.append(LEVELS[ANY_CURVE])
            elif rational_budget > 0 and beta >= 0:
                witness = rational_certificate(
                    g, k, budget=rational_budget, store=store
                )
                if witness is not None:
                    cert = witness.certificate
                    if store is not None:
                        store.put_certificate(cert)
                    class_status = "NONZERO"
                    class_rule = _certificate_witness(cert, g)
                    used_levels.append(LEVELS[ANY_CURVE])

        if beta < 0:
            if req >= LEVELS[GENERAL]:
                locus_status, locus_rule = "EMPTY", "negative-expected-dim"
                used_levels.append(LEVELS[GENERAL])
        elif g >= k * (k + 1) // 2 + 2:
            locus_status, locus_rule = "NONEMPTY", "expected-dim-gate"
            used_levels.append(LEVELS[ANY_CURVE])
        elif (
            class_status == "NONZERO"
            and g >= 3
            and (g, k) != (4, 4)
            and req >= LEVELS[PETRI]
        ):
            locus_status, locus_rule = "NONEMPTY", "petri-transfer"
            used_levels.append(LEVELS[PETRI])
        elif k <= 7 and g >= 3 and req >= LEVELS[GENERAL]:
            locus_status, locus_rule = "NONEMPTY", "small-k-gate"
            used_levels.append(LEVELS[GENERAL])
        elif 4 * g >= k * k and req >= LEVELS[GENERAL]:
            locus_status, locus_rule = "NONEMPTY", "teixidor-bound"
            used_levels.append(LEVELS[GENERAL])

    if used_levels:
        level = [ANY_CURVE, PETRI, GENERAL][max(used_levels)]
    else:
        level = assumption

    lower, upper = twisted_bounds(
        g, k, class_nonzero=class_status == "NONZERO", level=assumption
    )
    return Verdict(
        g=g,
        k=k,
        beta=beta,
        class_status=class_status,
        locus_status=locus_status,
        assumption=level,
        witness_rule=f"class={class_rule};locus={locus_rule}",
        certificate=cert,
        twisted_lower=lower,
        twisted_upper=upper,
    )


def twisted_bounds(
    g: int, k: int, class_nonzero: bool, level: str = GENERAL
) -> tuple[int | None, int | None]:
    """Dimension bounds for the twisted locus B(2,K(p),k).

    Lower bound beta+1 needs the class nonzero (any curve, g >= 2); upper
    bound beta+k needs a general curve with g >= 3 and k >= 2.  Inapplicable
    sides are None.
    """
    beta = beta_rank2(g, k)
    lower = beta + 1 if class_nonzero else None
    upper = (
        beta + k
        if g >= 3 and k >= 2 and LEVELS[level] >= LEVELS[GENERAL]
        else None
    )
    return lower, upper


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def emit_table(
    g_range,
    k_range,
    assumption: str = GENERAL,
    fmt: str = "csv",
    store=None,
    rational_budget: int = 0,
) -> str:
    """Verdict table over a (g, k) grid, ordered by (k, g)."""
    if isinstance(g_range, str):
        g_range = _parse_range(g_range)
    if isinstance(k_range, str):
        k_range = _parse_range(k_range)
    rows = [
        decide(g, k, assumption, store, rational_budget)
        for k in k_range
        for g in g_range
    ]
    if fmt == "json":
        return json.dumps([r.to_json_obj() for r in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format: {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([
            r.g, r.k, r.beta, r.class_status, r.locus_status,
            r.assumption, r.witness_rule, r.certificate_ref,
        ])
    return buf.getvalue()
