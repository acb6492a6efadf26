"""Exact intersection-theoretic certificates for rank-2 canonical Brill-Noether loci.

The package computes the virtual fundamental class of the Brill-Noether locus
inside the Hecke correspondence over the moduli space of rank-2 bundles with
canonical determinant, certifies its non-vanishing by exact rational pairings
or by prime-field congruences, and turns certified non-vanishing into
per-(genus, section-count) existence verdicts.
"""

from __future__ import annotations

__version__ = "0.1.0"

TOOL_NAME = "heckebn"


def tool_stamp() -> str:
    """Version string recorded inside every emitted certificate."""
    return f"{TOOL_NAME} {__version__}"
