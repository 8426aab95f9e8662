"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by
:func:`var_key`; the empty tuple is the constant monomial.  Coefficients are
``int`` or :class:`fractions.Fraction` and zero coefficients are never stored,
so two polynomials are equal exactly when their term dictionaries are.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...]

_NAME = re.compile(r"^([A-Za-z_]+)(\d*)$")


def var_key(name: str) -> tuple[str, int]:
    """Sort key that orders ``x2`` before ``x10``."""
    m = _NAME.match(name)
    if m is None:
        return (name, 0)
    return (m.group(1), int(m.group(2)) if m.group(2) else 0)


def as_rational(c) -> Rational:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return as_rational(Fraction(c))
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not supported")
    raise TypeError(f"not a rational coefficient: {c!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in a)


def mono_degree(a: Monomial, names: Iterable[str] | None = None) -> int:
    if names is None:
        return sum(e for _, e in a)
    names = set(names)
    return sum(e for v, e in a if v in names)


def _canonical(m: Monomial) -> Monomial:
    """Sort by :func:`var_key`, merge repeated variables, drop zero exponents."""
    keys = [var_key(v) for v, _ in m]
    if all(e > 0 for _, e in m) and all(a < b for a, b in zip(keys, keys[1:])):
        return tuple(m)
    d: dict = {}
    for v, e in m:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r} for {v}")
        d[v] = d.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda ve: var_key(ve[0])))


def make_monomial(exps: Mapping[str, int]) -> Monomial:
    for v, e in exps.items():
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r} for {v}")
    return tuple(sorted(((v, e) for v, e in exps.items() if e), key=lambda ve: var_key(ve[0])))


class Poly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean: dict = {}
        if terms:
            for m, c in terms.items():
                c = as_rational(c)
                if c:
                    m = _canonical(m)
                    clean[m] = clean.get(m, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = as_rational(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        return cls._raw({make_monomial({name: exp}): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Rational = 1) -> "Poly":
        return cls({mono: coeff})

    # ---- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Rational]:
        return self._terms

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def variables(self) -> list[str]:
        names = {v for m in self._terms for v, _ in m}
        return sorted(names, key=var_key)

    def degree(self, names: Iterable[str] | None = None) -> int:
        if not self._terms:
            return -1
        names = None if names is None else list(names)
        return max(mono_degree(m, names) for m in self._terms)

    def coeff(self, mono: Monomial) -> Rational:
        return self._terms.get(mono, 0)

    # ---- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_rational(other)
            if not c:
                return Poly()
            return Poly._raw({m: v * c for m, v in self._terms.items()})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Poly":
        c = as_rational(c)
        return Poly({m: Fraction(v) / c for m, v in self._terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        try:
            return self._terms == Poly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- substitution -----------------------------------------------------

    def subs(self, values: Mapping[str, "Poly | Rational"]) -> "Poly":
        """Substitute polynomials or rationals for variables."""
        out = Poly()
        cache: dict = {}
        for m, c in self._terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = Poly._coerce(values[v]) ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            out = out + term * Poly._raw({tuple(rest): 1})
        return out

    def map_coefficients(self, fn) -> "Poly":
        return Poly({m: fn(c) for m, c in self._terms.items()})

    # ---- output -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Rational]]:
        """Terms in graded lexicographic order (highest degree first)."""
        names = self.variables()

        def key(item):
            d = dict(item[0])
            vec = tuple(d.get(v, 0) for v in names)
            return (-sum(vec), tuple(-e for e in vec))

        return sorted(self._terms.items(), key=key)

    def to_text(self) -> str:
        return _render(self.sorted_terms(), _mono_text, " ")

    def to_latex(self) -> str:
        return _render(self.sorted_terms(), _mono_latex, " ", latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"monomial": {v: e for v, e in m}, "coeff": str(c)}
                for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        out = Poly()
        for t in data["terms"]:
            out = out + Poly({make_monomial(t.get("monomial", {})): as_rational(t["coeff"])})
        return out


def _mono_text(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def _mono_latex(m: Monomial) -> str:
    parts = []
    for v, e in m:
        base, idx = var_key(v)
        s = f"{base}_{{{idx}}}" if idx else base
        parts.append(s if e == 1 else f"{s}^{{{e}}}")
    return " ".join(parts)


def _coeff_text(c: Rational, latex: bool) -> str:
    if latex and isinstance(c, Fraction):
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def _render(terms, mono_fmt, sep: str, latex: bool = False) -> str:
    if not terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        body = mono_fmt(m)
        if not body:
            piece = _coeff_text(a, latex)
        elif a == 1:
            piece = body
        else:
            piece = f"{_coeff_text(a, latex)}{sep}{body}"
        if i == 0:
            out.append(f"-{piece}" if neg else piece)
        else:
            out.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(out)


def rational_str(c: Rational) -> str:
    return str(as_rational(c))
