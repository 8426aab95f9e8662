"""Plethystic alphabets: expression trees and their signed variable sets.

An expression such as ``x + eps(y) - 1`` describes the alphabet a symmetric
function is evaluated on.  :func:`var_set` turns it into a finite list of
:class:`SignedVar` objects.  Each carries a sign flag (flipped by ``-``) and a
value-negation parity (flipped by ``eps``); duplicates created by overlapping
sums are told apart by prime marks, which are erased only when a variable is
evaluated to a monomial.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence, Union

from .errors import (
    CapacityError,
    ExprParseError,
    UnboundedAlphabetError,
    UnknownAlphabetError,
)
from .poly import Poly, make_monomial

ALPHABET_NAMES = frozenset("uvwxyz")
PARAM_NAMES = frozenset("abcqrs")

#: Largest variable set :func:`var_set` will build.
MAX_VARS = 200_000

Bounds = Union[int, Mapping[str, int], None]


# ---------------------------------------------------------------------------
# expression trees
# ---------------------------------------------------------------------------

class PlethExpr:
    """Base class of expression nodes; supports ``+ - *`` and unary ``-``."""

    def __add__(self, other) -> "PlethExpr":
        return Sum(self, lift(other))

    def __radd__(self, other) -> "PlethExpr":
        return Sum(lift(other), self)

    def __sub__(self, other) -> "PlethExpr":
        return Sum(self, Neg(lift(other)))

    def __rsub__(self, other) -> "PlethExpr":
        return Sum(lift(other), Neg(self))

    def __neg__(self) -> "PlethExpr":
        return Neg(self)

    def __mul__(self, other) -> "PlethExpr":
        return Prod(self, lift(other))

    def __rmul__(self, other) -> "PlethExpr":
        return Prod(lift(other), self)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True)
class One(PlethExpr):
    pass


@dataclass(frozen=True, eq=True)
class Param(PlethExpr):
    name: str


@dataclass(frozen=True, eq=True)
class Alphabet(PlethExpr):
    """``x`` (``bound=None``: infinite, truncated later) or ``x[n]``."""

    name: str
    bound: int | None = None

    def __post_init__(self):
        if self.bound is not None and self.bound < 1:
            raise ValueError("alphabet bound must be at least 1")


@dataclass(frozen=True, eq=True)
class Var(PlethExpr):
    """The single variable ``x_i``."""

    name: str
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be at least 1")


@dataclass(frozen=True, eq=True)
class Sum(PlethExpr):
    left: PlethExpr
    right: PlethExpr


@dataclass(frozen=True, eq=True)
class Neg(PlethExpr):
    child: PlethExpr


@dataclass(frozen=True, eq=True)
class Eps(PlethExpr):
    child: PlethExpr


@dataclass(frozen=True, eq=True)
class Prod(PlethExpr):
    left: PlethExpr
    right: PlethExpr


@dataclass(frozen=True, eq=True)
class Int(PlethExpr):
    """Non-negative integer constant; negative constants are ``Neg(Int(c))``."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("use integer() for negative constants")


def integer(c: int) -> PlethExpr:
    return Int(c) if c >= 0 else Neg(Int(-c))


def eps(e: PlethExpr) -> PlethExpr:
    return Eps(lift(e))


def lift(obj) -> PlethExpr:
    if isinstance(obj, PlethExpr):
        return obj
    if isinstance(obj, int) and not isinstance(obj, bool):
        return integer(obj)
    raise TypeError(f"cannot use {obj!r} as a plethystic expression")


def alphabets(e: PlethExpr) -> set[str]:
    """Names of infinite alphabets appearing in ``e``."""
    if isinstance(e, Alphabet):
        return {e.name} if e.bound is None else set()
    if isinstance(e, (Sum, Prod)):
        return alphabets(e.left) | alphabets(e.right)
    if isinstance(e, (Neg, Eps)):
        return alphabets(e.child)
    return set()


# ---------------------------------------------------------------------------
# textual grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+)|(?P<op>[-+*()\[\]_]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExprParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> PlethExpr:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprParseError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def expr(self) -> PlethExpr:
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            e = Sum(e, rhs) if op == "+" else Sum(e, Neg(rhs))
        return e

    def term(self) -> PlethExpr:
        e = self.unary()
        while self.peek()[1] == "*":
            self.take()
            e = Prod(e, self.unary())
        return e

    def unary(self) -> PlethExpr:
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> PlethExpr:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return Int(int(value))
        if value == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "name":
            self.take()
            if value == "eps":
                self.take("(")
                e = self.expr()
                self.take(")")
                return Eps(e)
            if value in ALPHABET_NAMES:
                if self.peek()[1] == "[":
                    self.take()
                    n = int(self.take(kind="num")[1])
                    self.take("]")
                    if n < 1:
                        raise ExprParseError("alphabet bound must be at least 1", pos)
                    return Alphabet(value, n)
                if self.peek()[1] == "_":
                    self.take()
                    n = int(self.take(kind="num")[1])
                    if n < 1:
                        raise ExprParseError("variable index must be at least 1", pos)
                    return Var(value, n)
                return Alphabet(value)
            if value in PARAM_NAMES:
                return Param(value)
            raise UnknownAlphabetError(f"unknown alphabet or parameter {value!r} at position {pos}")
        raise ExprParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_expr(text: str) -> PlethExpr:
    """Parse ``x``, ``x[5]``, ``x_2``, ``q``, ``3``, ``-e``, ``eps(e)``, ``e+e``, ``e-e``, ``e*e``."""
    return _Parser(text).parse()


def _prec(e: PlethExpr) -> int:
    if isinstance(e, Sum):
        return 1
    if isinstance(e, Prod):
        return 2
    if isinstance(e, Neg):
        return 3
    return 4


def to_text(e: PlethExpr, min_prec: int = 0) -> str:
    if isinstance(e, One):
        s = "1"
    elif isinstance(e, Int):
        s = str(e.value)
    elif isinstance(e, Param):
        s = e.name
    elif isinstance(e, Alphabet):
        s = e.name if e.bound is None else f"{e.name}[{e.bound}]"
    elif isinstance(e, Var):
        s = f"{e.name}_{e.index}"
    elif isinstance(e, Eps):
        s = f"eps({to_text(e.child)})"
    elif isinstance(e, Neg):
        s = "-" + to_text(e.child, 3)
    elif isinstance(e, Prod):
        s = to_text(e.left, 2) + "*" + to_text(e.right, 3)
    elif isinstance(e, Sum):
        if isinstance(e.right, Neg):
            s = to_text(e.left, 1) + "-" + to_text(e.right.child, 2)
        else:
            s = to_text(e.left, 1) + "+" + to_text(e.right, 2)
    else:
        raise TypeError(f"not an expression node: {e!r}")
    if _prec(e) < min_prec:
        return f"({s})"
    return s


# ---------------------------------------------------------------------------
# signed variables
# ---------------------------------------------------------------------------

Atom = tuple  # (source name, index, prime count)


@dataclass(frozen=True)
class SignedVar:
    """A formal variable: ordered factor atoms plus sign flag and negation parity.

    Identity is the atom tuple alone; ``sign`` and ``parity`` are attributes.
    """

    atoms: tuple
    sign: int = 1
    parity: int = 0

    @property
    def key(self) -> tuple:
        return self.atoms

    def flipped_sign(self) -> "SignedVar":
        return SignedVar(self.atoms, -self.sign, self.parity)

    def negated(self) -> "SignedVar":
        return SignedVar(self.atoms, self.sign, 1 - self.parity)

    def primed(self) -> "SignedVar":
        (name, idx, pr), *rest = self.atoms
        return SignedVar(((name, idx, pr + 1), *rest), self.sign, self.parity)

    def times(self, other: "SignedVar") -> "SignedVar":
        return SignedVar(
            self.atoms + other.atoms,
            self.sign * other.sign,
            (self.parity + other.parity) % 2,
        )

    def base_exponents(self) -> dict[str, int]:
        """Exponents of the unmarked base monomial (primes erased)."""
        out: dict[str, int] = {}
        for name, idx, _ in self.atoms:
            if name == "1":
                continue
            v = f"{name}{idx}" if idx else name
            out[v] = out.get(v, 0) + 1
        return out

    def __str__(self) -> str:
        parts = []
        for name, idx, pr in self.atoms:
            parts.append((f"{name}{idx}" if idx else name) + "'" * pr)
        s = "*".join(parts)
        if self.sign < 0:
            s = f"bar({s})"
        if self.parity:
            s = f"-{s}"
        return s


def evaluate(v: SignedVar, weight: int) -> Poly:
    """``sgn(v) * ((-1)^parity * base)^weight`` with primes erased."""
    c = v.sign * (-1 if (v.parity and weight % 2) else 1)
    exps = {k: e * weight for k, e in v.base_exponents().items()}
    return Poly({make_monomial(exps): c})


@dataclass(frozen=True)
class VarSet:
    """A truncated variable set together with the bounds used to truncate it."""

    elements: tuple
    truncation: Mapping[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SignedVar]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> SignedVar:
        return self.elements[i]

    def keys(self) -> list[tuple]:
        return [v.key for v in self.elements]


def _resolve_bound(name: str, bounds: Bounds) -> int:
    if isinstance(bounds, int):
        return bounds
    if bounds is not None and name in bounds:
        return bounds[name]
    raise UnboundedAlphabetError(f"infinite alphabet {name!r} needs a truncation bound")


def _disjoint(items) -> list[SignedVar]:
    seen: set = set()
    out = []
    for v in items:
        while v.key in seen:
            v = v.primed()
        seen.add(v.key)
        out.append(v)
        if len(out) > MAX_VARS:
            raise CapacityError(f"variable set exceeds {MAX_VARS} elements")
    return out


def _vars(e: PlethExpr, bounds: Bounds, used: dict) -> list[SignedVar]:
    if isinstance(e, One):
        return [SignedVar((("1", 0, 0),))]
    if isinstance(e, Int):
        return [SignedVar((("1", 0, k),)) for k in range(e.value)]
    if isinstance(e, Param):
        return [SignedVar(((e.name, 0, 0),))]
    if isinstance(e, Var):
        return [SignedVar(((e.name, e.index, 0),))]
    if isinstance(e, Alphabet):
        n = e.bound
        if n is None:
            n = _resolve_bound(e.name, bounds)
            used[e.name] = n
        if n < 1:
            raise ValueError("truncation bound must be at least 1")
        return [SignedVar(((e.name, i, 0),)) for i in range(1, n + 1)]
    if isinstance(e, Sum):
        return _disjoint(_vars(e.left, bounds, used) + _vars(e.right, bounds, used))
    if isinstance(e, Neg):
        return [v.flipped_sign() for v in _vars(e.child, bounds, used)]
    if isinstance(e, Eps):
        return [v.negated() for v in _vars(e.child, bounds, used)]
    if isinstance(e, Prod):
        left = _vars(e.left, bounds, used)
        right = _vars(e.right, bounds, used)
        if len(left) * len(right) > MAX_VARS:
            raise CapacityError(f"product alphabet exceeds {MAX_VARS} elements")
        return _disjoint(z.times(w) for z in left for w in right)
    raise TypeError(f"not an expression node: {e!r}")


def var_set(e: PlethExpr, bounds: Bounds = None) -> VarSet:
    """The truncated variable set of ``e``."""
    used: dict[str, int] = {}
    elems = _vars(e, bounds, used)
    return VarSet(tuple(elems), dict(used))


# ---------------------------------------------------------------------------
# total orders, stored as a rank per element
# ---------------------------------------------------------------------------

def _order_key(v: SignedVar):
    return (tuple(sorted(v.atoms)), v.atoms)


def default_ordering(vs: VarSet) -> tuple[int, ...]:
    order = sorted(range(len(vs)), key=lambda i: _order_key(vs[i]))
    rank = [0] * len(vs)
    for r, i in enumerate(order):
        rank[i] = r
    return tuple(rank)


def random_ordering(vs: VarSet, seed: int) -> tuple[int, ...]:
    rank = list(range(len(vs)))
    random.Random(seed).shuffle(rank)
    return tuple(rank)


def ordering_from_spec(vs: VarSet, spec: str | Sequence[int] | None) -> tuple[int, ...]:
    """``None`` / ``"default"`` / ``"seed:<k>"`` / an explicit rank sequence."""
    if spec is None or spec == "default":
        return default_ordering(vs)
    if isinstance(spec, str):
        if spec.startswith("seed:"):
            try:
                seed = int(spec[5:])
            except ValueError:
                raise ValueError(f"bad ordering spec {spec!r}") from None
            return random_ordering(vs, seed)
        raise ValueError(f"bad ordering spec {spec!r}")
    rank = tuple(spec)
    if sorted(rank) != list(range(len(vs))):
        raise ValueError("an explicit ordering must rank every element exactly once")
    return rank


def ordered(vs: VarSet, rank: Sequence[int]) -> list[SignedVar]:
    """Elements of ``vs`` listed from smallest to largest."""
    out = [None] * len(vs)
    for i, r in enumerate(rank):
        out[r] = vs[i]
    return out
