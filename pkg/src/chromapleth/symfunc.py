"""Exact symmetric functions stored sparsely over a polynomial coefficient ring.

Every :class:`SymFunc` carries a basis tag (``p``, ``m``, ``e``, ``h`` or
``mt`` for the augmented monomials) and a map from partitions to
:class:`~chromapleth.poly.Poly` coefficients in formal parameters such as
``t`` and ``q``.  Arithmetic happens in the power-sum basis.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import CapacityError, SymFuncFormatError
from .poly import Poly, as_rational, make_monomial

BASES = ("p", "m", "e", "h", "mt")

#: Largest degree for which m / mt conversions are attempted.
DEGREE_BOUND = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def z(self) -> int:
        """Size of the centralizer of a permutation of cycle type ``self``."""
        out = 1
        for i, r in self.multiplicities().items():
            out *= i**r * math.factorial(r)
        return out

    def aut(self) -> int:
        """Product of factorials of part multiplicities."""
        out = 1
        for r in self.multiplicities().values():
            out *= math.factorial(r)
        return out

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition.of(tuple(self) + tuple(other))

    def scaled(self, k: int) -> "Partition":
        return Partition(p * k for p in self)

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        return ()
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            out.append(Partition(acc))
            return
        for k in range(min(remaining, cap), 0, -1):
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


# ---------------------------------------------------------------------------
# transition data
# ---------------------------------------------------------------------------

def _elementary_row(n: int, sign: bool) -> dict[Partition, Fraction]:
    row = {}
    for mu in partitions(n):
        c = Fraction(1, mu.z())
        if sign and (n - len(mu)) % 2:
            c = -c
        row[mu] = c
    return row


def _mul_rows(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = la.union(lb)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def monomial_coefficient(mu: Partition, lam: Partition) -> int:
    """Coefficient of ``x1^lam1 x2^lam2 ...`` in ``p_mu``."""
    if mu.size() != lam.size():
        return 0

    @lru_cache(maxsize=None)
    def rec(j: int, remaining: tuple) -> int:
        if j == len(mu):
            return 1 if not any(remaining) else 0
        total = 0
        part = mu[j]
        for i, r in enumerate(remaining):
            if r >= part:
                nxt = remaining[:i] + (r - part,) + remaining[i + 1:]
                total += rec(j + 1, nxt)
        return total

    return rec(0, tuple(lam))


def _invert(labels: tuple, rows: Mapping) -> dict:
    """Invert the square matrix ``rows[a][b]`` (sparse dict-of-dicts) exactly."""
    n = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    a = [[Fraction(0)] * n + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for lab, row in rows.items():
        for k, v in row.items():
            a[idx[lab]][idx[k]] = Fraction(v)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {
        labels[i]: {labels[j]: a[i][n + j] for j in range(n) if a[i][n + j] != 0}
        for i in range(n)
    }


def _check_bound(basis: str, degree: int, bound: int | None) -> None:
    bound = DEGREE_BOUND if bound is None else bound
    if basis in ("m", "mt") and degree > bound:
        raise CapacityError(
            f"conversion involving basis {basis!r} at degree {degree} exceeds bound {bound}"
        )


@lru_cache(maxsize=None)
def _p_to_m_matrix(d: int) -> dict:
    lams = partitions(d)
    return {mu: {lam: c for lam in lams if (c := monomial_coefficient(mu, lam))} for mu in lams}


@lru_cache(maxsize=None)
def _to_p_matrix(basis: str, d: int) -> dict:
    """``{lam: {mu: c}}`` with ``b_lam = sum c p_mu``."""
    lams = partitions(d)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in lams}
    if basis in ("e", "h"):
        out = {}
        for lam in lams:
            row = {Partition(): Fraction(1)}
            for part in lam:
                row = _mul_rows(row, _elementary_row(part, basis == "e"))
            out[lam] = row
        return out
    if basis == "m":
        return _invert(lams, _p_to_m_matrix(d))
    if basis == "mt":
        m = _to_p_matrix("m", d)
        return {lam: {mu: c * lam.aut() for mu, c in m[lam].items()} for lam in lams}
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_p_matrix(basis: str, d: int) -> dict:
    """``{mu: {lam: c}}`` with ``p_mu = sum c b_lam``."""
    lams = partitions(d)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in lams}
    if basis == "m":
        return {mu: {lam: Fraction(c) for lam, c in row.items()} for mu, row in _p_to_m_matrix(d).items()}
    if basis == "mt":
        return {
            mu: {lam: Fraction(c, lam.aut()) for lam, c in row.items()}
            for mu, row in _p_to_m_matrix(d).items()
        }
    return _invert(lams, _to_p_matrix(basis, d))


def _basis_rows(basis: str, d: int, bound: int | None, to_p: bool) -> dict:
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    _check_bound(basis, d, bound)
    return _to_p_matrix(basis, d) if to_p else _from_p_matrix(basis, d)


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------

def _as_coeff(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


class SymFunc:
    """Immutable sparse symmetric function in a fixed basis."""

    __slots__ = ("basis", "_terms", "_p")

    def __init__(self, basis: str, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, Poly] = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = _as_coeff(c)
            if lam in clean:
                c = clean[lam] + c
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self.basis = basis
        self._terms = clean
        self._p = self if basis == "p" else None

    # ---- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "p") -> "SymFunc":
        return cls(basis)

    @classmethod
    def one(cls) -> "SymFunc":
        return cls("p", {Partition(): 1})

    @classmethod
    def term(cls, basis: str, parts: Iterable[int], coeff=1) -> "SymFunc":
        return cls(basis, {Partition.of(parts): coeff})

    # ---- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Partition, Poly]:
        return self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, parts: Iterable[int]) -> Poly:
        return self._terms.get(Partition.of(parts), Poly())

    def degree(self) -> int:
        return max((lam.size() for lam in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({lam.size() for lam in self._terms}) <= 1

    def parameters(self) -> list[str]:
        names = set()
        for c in self._terms.values():
            names.update(c.variables())
        return sorted(names)

    # ---- basis changes ----------------------------------------------------

    def to_p(self, bound: int | None = None) -> "SymFunc":
        if self._p is not None:
            return self._p
        acc: dict[Partition, Poly] = {}
        for lam, c in self._terms.items():
            row = _basis_rows(self.basis, lam.size(), bound, to_p=True)[lam]
            for mu, r in row.items():
                acc[mu] = acc.get(mu, Poly()) + c * r
        self._p = SymFunc("p", acc)
        return self._p

    def convert(self, basis: str, bound: int | None = None) -> "SymFunc":
        if basis == self.basis:
            return self
        f = self.to_p(bound)
        if basis == "p":
            return f
        acc: dict[Partition, Poly] = {}
        for mu, c in f._terms.items():
            row = _basis_rows(basis, mu.size(), bound, to_p=False)[mu]
            for lam, r in row.items():
                acc[lam] = acc.get(lam, Poly()) + c * r
        return SymFunc(basis, acc)

    # ---- arithmetic -------------------------------------------------------

    def _pair(self, other: "SymFunc"):
        if self.basis == other.basis:
            return self.basis, self._terms, other._terms
        return "p", self.to_p()._terms, other.to_p()._terms

    def __add__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            other = SymFunc.one() * other
        basis, a, b = self._pair(other)
        out = dict(a)
        for lam, c in b.items():
            out[lam] = out.get(lam, Poly()) + c
        return SymFunc(basis, out)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other) -> "SymFunc":
        return self + (-other)

    def __rsub__(self, other) -> "SymFunc":
        return (-self) + other

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            c = _as_coeff(other)
            return SymFunc(self.basis, {lam: v * c for lam, v in self._terms.items()})
        a, b = self.to_p()._terms, other.to_p()._terms
        out: dict[Partition, Poly] = {}
        for la, ca in a.items():
            for lb, cb in b.items():
                key = la.union(lb)
                out[key] = out.get(key, Poly()) + ca * cb
        return SymFunc("p", out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "SymFunc":
        c = as_rational(c)
        return SymFunc(self.basis, {lam: v / c for lam, v in self._terms.items()})

    def __pow__(self, k: int) -> "SymFunc":
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            if isinstance(other, (int, Fraction, Poly)):
                other = SymFunc.one() * other
            else:
                return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_p()._terms == other.to_p()._terms

    def __hash__(self) -> int:
        return hash(frozenset(self.to_p()._terms.items()))

    def omega(self) -> "SymFunc":
        return omega(self)

    def subs(self, values: Mapping) -> "SymFunc":
        """Substitute values for coefficient parameters, e.g. ``{"t": -1}``."""
        return SymFunc(self.basis, {lam: c.subs(values) for lam, c in self._terms.items()})

    def expand(self, n_vars: int, alphabet: str = "x") -> Poly:
        return expand_truncated(self, n_vars, alphabet)

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self._terms.items() if lam.size() == d})

    # ---- output -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, Poly]]:
        """Terms by degree, then lexicographically by parts."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].size(), tuple(kv[0])))

    def to_text(self) -> str:
        return _render_sym(self, latex=False)

    def to_latex(self) -> str:
        return _render_sym(self, latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"SymFunc({self.to_text()})"

    def to_json(self) -> dict:
        terms = []
        for lam, c in sorted(self._terms.items(), key=lambda kv: tuple(kv[0]), reverse=True):
            for mono, r in c.sorted_terms():
                entry = {"partition": list(lam), "coeff": str(r)}
                if mono:
                    entry["params"] = {v: e for v, e in mono}
                terms.append(entry)
        return {"basis": self.basis, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        try:
            basis = data["basis"]
            acc: dict[Partition, Poly] = {}
            for t in data["terms"]:
                lam = Partition(t["partition"])
                c = Poly({make_monomial(t.get("params", {})): as_rational(t["coeff"])})
                acc[lam] = acc.get(lam, Poly()) + c
            return cls(basis, acc)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SymFuncFormatError(f"malformed symmetric function JSON: {exc}") from exc


_LATEX_BASIS = {"p": "p", "m": "m", "e": "e", "h": "h", "mt": r"\tilde{m}"}


def _render_sym(f: SymFunc, latex: bool) -> str:
    items = f.sorted_terms()
    if not items:
        return "0"
    out = []
    for i, (lam, c) in enumerate(items):
        if latex:
            body = f"{_LATEX_BASIS[f.basis]}_{{{','.join(map(str, lam))}}}" if lam else ""
        else:
            body = f"{f.basis}[{','.join(map(str, lam))}]" if lam else ""
        neg = False
        if len(c) == 1:
            (mono, r), = c.terms.items()
            neg = r < 0
            shown = -c if neg else c
            ctext = shown.to_latex() if latex else shown.to_text()
        else:
            ctext = "(" + (c.to_latex() if latex else c.to_text()) + ")"
        if not body:
            piece = ctext
        elif ctext == "1":
            piece = body
        else:
            piece = f"{ctext} {body}"
        if i == 0:
            out.append(f"-{piece}" if neg else piece)
        else:
            out.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(out)


# ---------------------------------------------------------------------------
# named constructors and free functions
# ---------------------------------------------------------------------------

def p(*parts: int) -> SymFunc:
    return SymFunc.term("p", parts)


def m(*parts: int) -> SymFunc:
    return SymFunc.term("m", parts)


def e(*parts: int) -> SymFunc:
    return SymFunc.term("e", parts)


def h(*parts: int) -> SymFunc:
    return SymFunc.term("h", parts)


def mt(*parts: int) -> SymFunc:
    return SymFunc.term("mt", parts)


def mul(a: SymFunc, b: SymFunc) -> SymFunc:
    return a * b


def omega(f: SymFunc) -> SymFunc:
    """Apply the involution ``p_lam -> (-1)^(|lam| - l(lam)) p_lam``."""
    fp = f.to_p()
    return SymFunc(
        "p",
        {lam: (-c if (lam.size() - len(lam)) % 2 else c) for lam, c in fp.terms.items()},
    )


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:(mt|p|m|e|h)\[\s*([0-9,\s]*)\])?\s*"
)


def parse_symfunc(text: str) -> SymFunc:
    """Read ``2 p[2,1] - 1/2 e[3] + 1`` (rational coefficients) or a JSON object."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return SymFunc.from_json(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise SymFuncFormatError(f"malformed symmetric function JSON: {exc}") from exc
    if not stripped:
        raise SymFuncFormatError("empty symmetric function")
    by_basis: dict[str, dict[Partition, Fraction]] = {}
    constant = Fraction(0)
    pos = 0
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise SymFuncFormatError(f"cannot read a term at position {pos} of {text!r}")
        if pos and not m.group(1):
            raise SymFuncFormatError(f"expected + or - at position {pos} of {text!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coeff = -coeff
        if m.group(3):
            body = m.group(4).replace(" ", "")
            try:
                lam = Partition.of(int(x) for x in body.split(",") if x)
            except ValueError as exc:
                raise SymFuncFormatError(f"bad partition [{body}]: {exc}") from None
            terms = by_basis.setdefault(m.group(3), {})
            terms[lam] = terms.get(lam, 0) + coeff
        else:
            constant += coeff
        pos = m.end()
    if not by_basis:
        by_basis["p"] = {}
    out = None
    for basis, terms in by_basis.items():
        part = SymFunc(basis, terms)
        out = part if out is None else out + part
    if constant:
        out = out + SymFunc(out.basis, {Partition(()): constant})
    return out


def convert(f: SymFunc, basis: str, bound: int | None = None) -> SymFunc:
    return f.convert(basis, bound)


@lru_cache(maxsize=None)
def power_sum_poly(n: int, n_vars: int, alphabet: str = "x") -> Poly:
    return Poly({((f"{alphabet}{i}", n),): 1 for i in range(1, n_vars + 1)})


def expand_truncated(f: SymFunc, n_vars: int, alphabet: str = "x") -> Poly:
    """Substitute ``p_n -> x1^n + ... + xN^n`` and expand."""
    if n_vars < 1:
        raise ValueError("n_vars must be positive")
    out = Poly()
    for lam, c in f.to_p().terms.items():
        term = c
        for part in lam:
            term = term * power_sum_poly(part, n_vars, alphabet)
        out = out + term
    return out
