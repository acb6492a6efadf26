"""Machine-checkable non-vanishing certificates.

Two kinds share one record type.  A modular certificate stores the residues
whose nonzero combination mod g0 witnesses non-vanishing of the class at
genus g0; a rational certificate stores a monomial and the exact nonzero
intersection pairing.  JSON forms keep every integer as a decimal string so
readers in any language can parse them without overflow.

verify() rechecks a certificate from its own stored data; verify(deep=True)
recomputes the underlying determinant or pairing from scratch.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from . import tool_stamp
from .numbers import format_rational, parse_rational

__all__ = ["SCHEMA_VERSION", "Certificate", "canonical_json_bytes", "content_hash"]

SCHEMA_VERSION = "1"


def canonical_json_bytes(obj) -> bytes:
    """Stable byte serialization used for hashing and on-disk records."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json_bytes(obj)).hexdigest()


def _e61_indices(g0: int) -> list[int]:
    return [0, (g0 - 1) // 2, g0 - 1]


def _e62_indices(g0: int, ell: int) -> list[int]:
    # a negative first index means that term is absent and contributes 0
    return [i for i in ((g0 - 1) // 2 - ell, g0 - 1 - ell) if i >= 0]


@dataclass(frozen=True)
class Certificate:
    """Evidence that the class is nonzero at genus g0 for a given k."""

    kind: str  # "modular" | "rational"
    k: int
    g0: int
    criterion: str  # "e6.1" | "e6.2" | "pairing"
    ell: int = 0  # used by e6.2; 0 otherwise
    unit: int | None = None
    witness_residue: int | None = None
    m_indices: tuple[int, ...] = ()
    m_values: tuple[int, ...] = ()
    monomial: tuple[int, int, int, int] | None = None
    witness_value: Fraction | None = None
    generated_by: str = ""

    def __post_init__(self):
        if self.kind not in ("modular", "rational"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if not self.generated_by:
            object.__setattr__(self, "generated_by", tool_stamp())

    def verify(self, deep: bool = False) -> bool:
        """Recheck the witness; deep recomputes it from the parameters alone."""
        if self.kind == "modular":
            return self._verify_modular(deep)
        return self._verify_rational(deep)

    def _verify_modular(self, deep: bool) -> bool:
        if self.criterion == "e6.1":
            if self.ell != 0:
                return False
            expected_idx = _e61_indices(self.g0)
        elif self.criterion == "e6.2":
            if self.ell < 1:
                return False
            expected_idx = _e62_indices(self.g0, self.ell)
        else:
            return False
        if list(self.m_indices) != expected_idx:
            return False
        if self.witness_residue != sum(self.m_values) % self.g0:
            return False
        if self.witness_residue % self.g0 == 0:
            return False
        if deep:
            from .modular import mj_mod

            run = mj_mod(self.k, self.g0)
            for idx, val in zip(self.m_indices, self.m_values):
                if run.m_at(idx) != val:
                    return False
            if self.unit is not None and self.unit != run.unit:
                return False
        return True

    def _verify_rational(self, deep: bool) -> bool:
        if self.criterion != "pairing" or self.monomial is None:
            return False
        if self.witness_value is None or self.witness_value == 0:
            return False
        if deep:
            from .giambelli import pk_full
            from .hecke import pair_with_monomial

            value = pair_with_monomial(
                pk_full(self.k).polynomial, self.monomial, self.g0
            )
            if value != self.witness_value:
                return False
        return True

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        if self.kind == "modular":
            return {
                "version": SCHEMA_VERSION,
                "kind": "modular",
                "k": str(self.k),
                "g0": str(self.g0),
                "unit": str(self.unit),
                "criterion": self.criterion,
                "ell": str(self.ell),
                "witness_residue": str(self.witness_residue),
                "M_indices_used": [str(i) for i in self.m_indices],
                "M_values_used": [str(v) for v in self.m_values],
                "generated_by": self.generated_by,
            }
        return {
            "version": SCHEMA_VERSION,
            "kind": "rational",
            "k": str(self.k),
            "g0": str(self.g0),
            "criterion": self.criterion,
            "monomial": [str(e) for e in self.monomial],
            "witness_value": format_rational(self.witness_value),
            "generated_by": self.generated_by,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> Certificate:
        if obj.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported certificate version {obj.get('version')!r}")
        kind = obj["kind"]
        if kind == "modular":
            return cls(
                kind="modular",
                k=int(obj["k"]),
                g0=int(obj["g0"]),
                criterion=obj["criterion"],
                ell=int(obj["ell"]),
                unit=int(obj["unit"]),
                witness_residue=int(obj["witness_residue"]),
                m_indices=tuple(int(i) for i in obj["M_indices_used"]),
                m_values=tuple(int(v) for v in obj["M_values_used"]),
                generated_by=obj["generated_by"],
            )
        if kind == "rational":
            return cls(
                kind="rational",
                k=int(obj["k"]),
                g0=int(obj["g0"]),
                criterion=obj["criterion"],
                monomial=tuple(int(e) for e in obj["monomial"]),
                witness_value=parse_rational(obj["witness_value"]),
                generated_by=obj["generated_by"],
            )
        raise ValueError(f"unknown certificate kind {kind!r}")

    def hash(self) -> str:
        return content_hash(self.to_json_obj())
