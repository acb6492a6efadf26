"""Sparse exact polynomials in h, alpha, beta, gamma, and determinants of them.

Coefficients live either in Q (stdlib Fraction) or in a prime field F_p; the
field is a tag on the polynomial and mixing fields raises.  The grading gives
h and alpha weight 1, beta weight 2, gamma weight 3 ("half-degree": all
geometric classes here have even cohomological degree).

Determinants get an engine per shape: memoized Laplace expansion along the
sparse bottom rows for genuinely multivariate matrices, fraction-free Bareiss
with exact polynomial division as the generic cross-check, exact
evaluation/interpolation for univariate rational matrices, and a dense
coefficient-vector Bareiss over F_p[x] for univariate modular matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import FieldMismatchError
from .numbers import format_rational, is_prime, parse_rational

__all__ = [
    "SYMBOLS",
    "WEIGHTS",
    "Monomial",
    "GradedPoly",
    "PolyMatrix",
    "det",
    "det_minor_expansion",
    "det_bareiss",
    "det_interpolate",
    "root_multiplicity",
    "poly_from_coeffs",
    "H",
    "ALPHA",
    "BETA",
    "GAMMA",
]

SYMBOLS = ("h", "alpha", "beta", "gamma")
WEIGHTS = (1, 1, 2, 3)

Monomial = tuple[int, int, int, int]

_ZERO_MONO: Monomial = (0, 0, 0, 0)


def _coerce_scalar(c, modulus: int | None):
    if modulus is None:
        return Fraction(c)
    if isinstance(c, Fraction):
        if c.denominator % modulus == 0:
            raise ZeroDivisionError(f"denominator of {c} vanishes mod {modulus}")
        return c.numerator * pow(c.denominator, -1, modulus) % modulus
    return int(c) % modulus


class GradedPoly:
    """Immutable sparse polynomial over Q or F_p.

    coeffs maps exponent tuples (e_h, e_alpha, e_beta, e_gamma) to nonzero
    scalars; modulus None means rational coefficients.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(
        self,
        coeffs: Mapping[Monomial, object] | None = None,
        modulus: int | None = None,
    ):
        if modulus is not None and not is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        clean: dict[Monomial, object] = {}
        if coeffs:
            for mono, c in coeffs.items():
                mono = tuple(int(e) for e in mono)  # type: ignore[assignment]
                if len(mono) != 4 or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono}")
                v = _coerce_scalar(c, modulus)
                if v:
                    clean[mono] = clean.get(mono, _zero(modulus)) + v
                    if modulus is not None:
                        clean[mono] %= modulus
                    if not clean[mono]:
                        del clean[mono]
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, modulus: int | None = None) -> GradedPoly:
        return cls({}, modulus)

    @classmethod
    def one(cls, modulus: int | None = None) -> GradedPoly:
        return cls({_ZERO_MONO: 1}, modulus)

    @classmethod
    def constant(cls, c, modulus: int | None = None) -> GradedPoly:
        return cls({_ZERO_MONO: c}, modulus)

    @classmethod
    def symbol(cls, name: str, modulus: int | None = None) -> GradedPoly:
        i = SYMBOLS.index(name)
        mono = tuple(1 if j == i else 0 for j in range(4))
        return cls({mono: 1}, modulus)  # type: ignore[arg-type]

    @classmethod
    def monomial(cls, mono: Monomial, c=1, modulus: int | None = None) -> GradedPoly:
        return cls({tuple(mono): c}, modulus)  # type: ignore[dict-item]

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPoly):
            if isinstance(other, (int, Fraction)):
                other = GradedPoly.constant(other, self.modulus)
            else:
                return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, frozenset(self.coeffs.items())))

    def coefficient_of(self, mono: Monomial):
        return self.coeffs.get(tuple(mono), _zero(self.modulus))

    def symbols_used(self) -> set[str]:
        out: set[str] = set()
        for mono in self.coeffs:
            for i, e in enumerate(mono):
                if e:
                    out.add(SYMBOLS[i])
        return out

    def degree_in(self, name: str) -> int:
        """Largest exponent of the symbol; -1 on the zero polynomial."""
        i = SYMBOLS.index(name)
        return max((mono[i] for mono in self.coeffs), default=-1)

    def weights(self) -> set[int]:
        return {
            sum(e * w for e, w in zip(mono, WEIGHTS)) for mono in self.coeffs
        }

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if not ws:
            return True
        if len(ws) > 1:
            return False
        return weight is None or ws == {weight}

    def half_degree(self) -> int | None:
        """Largest monomial weight, None on the zero polynomial."""
        ws = self.weights()
        return max(ws) if ws else None

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: GradedPoly) -> None:
        if self.modulus != other.modulus:
            raise FieldMismatchError(
                f"cannot mix fields: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other) -> GradedPoly:
        other = self._coerce(other)
        self._check_field(other)
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, _zero(self.modulus)) + c
        return GradedPoly(out, self.modulus)

    def __radd__(self, other) -> GradedPoly:
        return self.__add__(other)

    def __neg__(self) -> GradedPoly:
        return GradedPoly({m: -c for m, c in self.coeffs.items()}, self.modulus)

    def __sub__(self, other) -> GradedPoly:
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other) -> GradedPoly:
        return (-self).__add__(other)

    def __mul__(self, other) -> GradedPoly:
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other, self.modulus)
            return GradedPoly(
                {m: v * c for m, v in self.coeffs.items()}, self.modulus
            )
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_field(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                out[m] = out.get(m, _zero(self.modulus)) + c1 * c2
        return GradedPoly(out, self.modulus)

    def __rmul__(self, other) -> GradedPoly:
        return self.__mul__(other)

    def __pow__(self, n: int) -> GradedPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = GradedPoly.one(self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def _coerce(self, other) -> GradedPoly:
        if isinstance(other, GradedPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return GradedPoly.constant(other, self.modulus)
        raise TypeError(f"cannot combine GradedPoly with {type(other)!r}")

    # -- substitution ------------------------------------------------------

    def substitute(self, **values) -> GradedPoly:
        """Bind some symbols to scalars; the rest stay symbolic."""
        idx = {}
        for name, v in values.items():
            if name not in SYMBOLS:
                raise ValueError(f"unknown symbol {name!r}")
            idx[SYMBOLS.index(name)] = _coerce_scalar(v, self.modulus)
        out: dict[Monomial, object] = {}
        for mono, c in self.coeffs.items():
            for i, v in idx.items():
                e = mono[i]
                if e:
                    c = c * (v**e if self.modulus is None else pow(v, e, self.modulus))
            rest = tuple(0 if i in idx else e for i, e in enumerate(mono))
            out[rest] = out.get(rest, _zero(self.modulus)) + c
        return GradedPoly(out, self.modulus)

    def evaluate(self, **values):
        """Bind every symbol that occurs and return the scalar value."""
        r = self.substitute(**values)
        if r.symbols_used():
            missing = sorted(r.symbols_used())
            raise ValueError(f"unbound symbols in evaluation: {missing}")
        return r.coefficient_of(_ZERO_MONO)

    def reduce_mod(self, p: int) -> GradedPoly:
        """Image in F_p[h, alpha, beta, gamma]; denominators must be units mod p."""
        if self.modulus is not None:
            raise ValueError("polynomial is already modular")
        return GradedPoly(dict(self.coeffs), p)

    def coeffs_in(self, name: str) -> list:
        """Ascending coefficient list for a univariate polynomial in `name`."""
        extra = self.symbols_used() - {name}
        if extra:
            raise ValueError(f"not univariate in {name}: also uses {sorted(extra)}")
        i = SYMBOLS.index(name)
        out = [_zero(self.modulus)] * max(self.degree_in(name) + 1, 1)
        for mono, c in self.coeffs.items():
            out[mono[i]] = c
        return out

    def beta_coefficients(self) -> list:
        return self.coeffs_in("beta")

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """Canonical form: terms sorted by exponent tuple, exact coefficients."""
        out = []
        for mono in sorted(self.coeffs):
            c = self.coeffs[mono]
            s = format_rational(c) if self.modulus is None else str(int(c))
            out.append({"e": list(mono), "c": s})
        return out

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict], modulus: int | None = None) -> GradedPoly:
        coeffs = {}
        for term in obj:
            mono = tuple(term["e"])
            c = parse_rational(term["c"]) if modulus is None else int(term["c"])
            coeffs[mono] = c
        return cls(coeffs, modulus)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for mono in sorted(self.coeffs, key=self._display_key):
            c = self.coeffs[mono]
            body = "*".join(
                f"{SYMBOLS[i]}^{e}" if e > 1 else SYMBOLS[i]
                for i, e in enumerate(mono)
                if e
            )
            cs = format_rational(c) if self.modulus is None else str(int(c))
            parts.append(f"({cs})*{body}" if body else f"({cs})")
        s = " + ".join(parts)
        return s if self.modulus is None else f"{s} mod {self.modulus}"

    def _display_key(self, mono: Monomial):
        return (-sum(e * w for e, w in zip(mono, WEIGHTS)), mono)


def _zero(modulus: int | None):
    return Fraction(0) if modulus is None else 0


# module-level rational symbols
H = GradedPoly.symbol("h")
ALPHA = GradedPoly.symbol("alpha")
BETA = GradedPoly.symbol("beta")
GAMMA = GradedPoly.symbol("gamma")


def poly_from_coeffs(coeffs: Iterable, name: str = "beta", modulus: int | None = None) -> GradedPoly:
    """Univariate polynomial from an ascending coefficient list."""
    i = SYMBOLS.index(name)
    d = {}
    for e, c in enumerate(coeffs):
        mono = tuple(e if j == i else 0 for j in range(4))
        d[mono] = c
    return GradedPoly(d, modulus)


# ---------------------------------------------------------------------------
# exact division (needed by fraction-free elimination)


def _lead(p: GradedPoly) -> tuple[Monomial, object]:
    mono = max(p.coeffs)
    return mono, p.coeffs[mono]


def exact_div(num: GradedPoly, den: GradedPoly) -> GradedPoly:
    """Exact quotient num/den; raises ArithmeticError if den does not divide num."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    num._check_field(den)
    modulus = num.modulus
    dm, dc = _lead(den)
    if modulus is not None:
        dc_inv = pow(int(dc), -1, modulus)
    rem = dict(num.coeffs)
    quo: dict[Monomial, object] = {}
    while rem:
        m = max(rem)
        c = rem[m]
        qm = tuple(a - b for a, b in zip(m, dm))
        if any(e < 0 for e in qm):
            raise ArithmeticError("inexact polynomial division")
        qc = c / dc if modulus is None else c * dc_inv % modulus
        quo[qm] = qc
        for m2, c2 in den.coeffs.items():
            t = (qm[0] + m2[0], qm[1] + m2[1], qm[2] + m2[2], qm[3] + m2[3])
            v = rem.get(t, _zero(modulus)) - qc * c2
            if modulus is not None:
                v %= modulus
            if v:
                rem[t] = v
            elif t in rem:
                del rem[t]
    return GradedPoly(quo, modulus)


# ---------------------------------------------------------------------------
# matrices and determinants


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of GradedPoly entries over one coefficient field."""

    entries: tuple[tuple[GradedPoly, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise ValueError("empty matrix")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
        mods = {p.modulus for row in self.entries for p in row}
        if len(mods) > 1:
            raise FieldMismatchError(f"mixed coefficient fields in matrix: {mods}")

    @classmethod
    def build(cls, rows, modulus: int | None = None) -> PolyMatrix:
        out = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, GradedPoly):
                    if x.modulus != modulus:
                        raise FieldMismatchError(
                            f"entry field {x.modulus} != matrix field {modulus}"
                        )
                    r.append(x)
                else:
                    r.append(GradedPoly.constant(x, modulus))
            out.append(tuple(r))
        return cls(tuple(out))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def modulus(self) -> int | None:
        return self.entries[0][0].modulus

    def symbols_used(self) -> set[str]:
        out: set[str] = set()
        for row in self.entries:
            for p in row:
                out |= p.symbols_used()
        return out


def det_minor_expansion(m: PolyMatrix) -> GradedPoly:
    """Laplace expansion along bottom rows, memoized on remaining column sets.

    The bottom rows of the matrices this package builds are the sparsest, so
    expanding there keeps the number of distinct cofactors small.
    """
    entries = m.entries
    memo: dict[frozenset, GradedPoly] = {}

    def rec(cols: frozenset) -> GradedPoly:
        got = memo.get(cols)
        if got is not None:
            return got
        r = len(cols) - 1
        ordered = sorted(cols)
        if r == 0:
            memo[cols] = entries[0][ordered[0]]
            return memo[cols]
        acc = GradedPoly.zero(m.modulus)
        for pos, j in enumerate(ordered):
            a = entries[r][j]
            if a.is_zero():
                continue
            term = a * rec(cols - {j})
            acc = acc - term if (r + pos) % 2 else acc + term
        memo[cols] = acc
        return acc

    return rec(frozenset(range(m.n)))


def det_bareiss(m: PolyMatrix) -> GradedPoly:
    """Fraction-free Bareiss elimination with exact polynomial division."""
    n = m.n
    a = [list(row) for row in m.entries]
    modulus = m.modulus
    sign = 1
    prev = GradedPoly.one(modulus)
    for r in range(n - 1):
        if a[r][r].is_zero():
            for i in range(r + 1, n):
                if not a[i][r].is_zero():
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return GradedPoly.zero(modulus)
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = a[r][r] * a[i][j] - a[i][r] * a[r][j]
                a[i][j] = exact_div(num, prev)
            a[i][r] = GradedPoly.zero(modulus)
        prev = a[r][r]
    out = a[n - 1][n - 1]
    return -out if sign < 0 else out


def _det_bareiss_int(rows: list[list[int]]) -> int:
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for r in range(n - 1):
        if a[r][r] == 0:
            for i in range(r + 1, n):
                if a[i][r]:
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) // prev
            a[i][r] = 0
        prev = a[r][r]
    return sign * a[n - 1][n - 1]


def det_numeric(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a matrix of rationals (integer Bareiss inside)."""
    n = len(rows)
    factor = 1
    int_rows = []
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        l = math.lcm(*(Fraction(c).denominator for c in row)) if row else 1
        factor *= l
        int_rows.append([int(Fraction(c) * l) for c in row])
    return Fraction(_det_bareiss_int(int_rows), factor)


def det_interpolate(m: PolyMatrix, name: str | None = None) -> GradedPoly:
    """Univariate rational determinant by evaluation at 0..B and interpolation.

    B is the generic row-degree bound sum(max_j deg entry(i, j)); the true
    determinant degree can be smaller, which interpolation detects on its own.
    """
    if m.modulus is not None:
        raise ValueError("interpolation path is for rational matrices")
    syms = m.symbols_used()
    if name is None:
        if len(syms) > 1:
            raise ValueError(f"matrix is not univariate: uses {sorted(syms)}")
        name = next(iter(syms)) if syms else "beta"
    elif not syms <= {name}:
        raise ValueError(f"matrix uses symbols {sorted(syms)} besides {name}")
    bound = 0
    for row in m.entries:
        degs = [p.degree_in(name) for p in row]
        d = max(degs)
        if d < 0:
            return GradedPoly.zero()
        bound += d
    xs = list(range(bound + 1))
    ys = []
    for x in xs:
        rows = [[p.evaluate(**{name: x}) for p in row] for row in m.entries]
        ys.append(det_numeric(rows))
    return poly_from_coeffs(_interp_newton(xs, ys), name)


def _interp_newton(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for i in range(n):
        for t, c in enumerate(basis):
            poly[t] += coef[i] * c
        nxt = [Fraction(0)] * (len(basis) + 1)
        for t, c in enumerate(basis):
            nxt[t] -= c * xs[i]
            nxt[t + 1] += c
        basis = nxt
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


# dense univariate arithmetic over F_p, on trimmed ascending coefficient lists


def _trim(v):
    n = len(v)
    while n and not v[n - 1]:
        n -= 1
    return v[:n]


def _mod_mul(a, b, p: int, use_numpy: bool):
    if not len(a) or not len(b):
        return a[:0]
    if use_numpy:
        return np.convolve(a, b) % p
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _mod_sub(a, b, p: int, use_numpy: bool):
    n = max(len(a), len(b))
    if use_numpy:
        out = np.zeros(n, dtype=a.dtype if len(a) else np.int64)
        out[: len(a)] += a
        out[: len(b)] -= b
        return _trim(out % p)
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _mod_divexact(num, den, p: int, use_numpy: bool):
    num = _trim(num)
    den = _trim(den)
    if not len(den):
        raise ZeroDivisionError("division by zero polynomial")
    if not len(num):
        return num
    dn = len(den) - 1
    qd = len(num) - 1 - dn
    if qd < 0:
        raise ArithmeticError("inexact modular polynomial division")
    inv_lead = pow(int(den[-1]), -1, p)
    if use_numpy:
        rem = num.astype(np.int64).copy()
        q = np.zeros(qd + 1, dtype=np.int64)
        for t in range(qd, -1, -1):
            c = int(rem[t + dn]) * inv_lead % p
            q[t] = c
            if c:
                rem[t : t + dn + 1] = (rem[t : t + dn + 1] - c * den) % p
        if rem.any():
            raise ArithmeticError("inexact modular polynomial division")
        return q
    rem = list(num)
    q = [0] * (qd + 1)
    for t in range(qd, -1, -1):
        c = rem[t + dn] * inv_lead % p
        q[t] = c
        if c:
            for i, d in enumerate(den):
                rem[t + i] = (rem[t + i] - c * d) % p
    if any(rem):
        raise ArithmeticError("inexact modular polynomial division")
    return q


def det_mod_univariate(coeff_rows: list[list[list[int]]], p: int) -> list[int]:
    """Determinant over F_p[x] of a matrix given as coefficient lists.

    Fraction-free Bareiss on dense coefficient vectors; intermediate products
    stay below 2^62 for the numpy path, otherwise plain Python ints are used.
    """
    n = len(coeff_rows)
    max_len = max((len(e) for row in coeff_rows for e in row), default=1)
    use_numpy = p * p * max(1, n * max_len) < 2**62
    if use_numpy:
        a = [
            [np.array(_trim([c % p for c in e]), dtype=np.int64) for e in row]
            for row in coeff_rows
        ]
        zero = np.zeros(0, dtype=np.int64)
        one = np.ones(1, dtype=np.int64)
    else:
        a = [[_trim([c % p for c in e]) for e in row] for row in coeff_rows]
        zero = []
        one = [1]
    sign = 1
    prev = one
    for r in range(n - 1):
        if not len(a[r][r]):
            for i in range(r + 1, n):
                if len(a[i][r]):
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return [0]
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = _mod_sub(
                    _mod_mul(a[r][r], a[i][j], p, use_numpy),
                    _mod_mul(a[i][r], a[r][j], p, use_numpy),
                    p,
                    use_numpy,
                )
                a[i][j] = _mod_divexact(num, prev, p, use_numpy)
            a[i][r] = zero
        prev = a[r][r]
    out = [int(c) % p for c in a[n - 1][n - 1]]
    if sign < 0:
        out = [(-c) % p for c in out]
    return out if out else [0]


def det(m: PolyMatrix, method: str = "auto") -> GradedPoly:
    """Determinant with engine selection by matrix shape.

    method: auto | minor | bareiss | interp.
    """
    if method == "minor":
        return det_minor_expansion(m)
    if method == "bareiss":
        return det_bareiss(m)
    if method == "interp":
        return det_interpolate(m)
    if method != "auto":
        raise ValueError(f"unknown determinant method {method!r}")
    syms = m.symbols_used()
    if m.modulus is not None:
        if len(syms) <= 1:
            name = next(iter(syms)) if syms else "beta"
            rows = [[p.coeffs_in(name) for p in row] for row in m.entries]
            coeffs = det_mod_univariate(rows, m.modulus)
            return poly_from_coeffs(coeffs, name, m.modulus)
        return det_minor_expansion(m)
    if not syms:
        rows = [[p.coefficient_of(_ZERO_MONO) for p in row] for row in m.entries]
        return GradedPoly.constant(det_numeric(rows))
    if len(syms) == 1:
        return det_interpolate(m)
    return det_minor_expansion(m)


def root_multiplicity(p: GradedPoly, root: Fraction | int, name: str = "beta") -> int:
    """Multiplicity of `root` in a univariate rational polynomial.

    Repeated exact synthetic division; the zero polynomial is rejected.
    """
    if p.modulus is not None:
        raise ValueError("root multiplicity is computed over the rationals")
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root multiplicity")
    coeffs = [Fraction(c) for c in p.coeffs_in(name)]
    root = Fraction(root)
    mult = 0
    while True:
        # Horner evaluation, keeping the quotient coefficients as we go.
        quo: list[Fraction] = []
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * root + c
            quo.append(acc)
        if acc != 0:
            return mult
        quo.reverse()
        coeffs = quo[1:]
        mult += 1
