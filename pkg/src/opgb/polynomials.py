"""Linear combinations of tree monomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

from .orderings import DEFAULT_ORDERING, OrderingSpec
from .trees import Tree, format_tree

Coefficient = Fraction


def as_coefficient(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class OperadPolynomial:
    """An element of the free shuffle operad: a finite sum ``c1*t1 + c2*t2 + ...``.

    All monomials share one arity.  Values are immutable; arithmetic returns
    new polynomials.  Terms are kept in decreasing order for ``spec``.
    """

    __slots__ = ("_terms", "spec")

    def __init__(self, terms: dict[Tree, Fraction] | None = None, spec: OrderingSpec = DEFAULT_ORDERING):
        # trusted constructor: nonzero coefficients, one arity
        self.spec = spec
        if terms:
            self._terms = dict(sorted(terms.items(), key=lambda kv: spec.key(kv[0]), reverse=True))
        else:
            self._terms = {}

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Tree, object]], spec: OrderingSpec = DEFAULT_ORDERING) -> "OperadPolynomial":
        acc: dict[Tree, Fraction] = {}
        arity = None
        for t, c in pairs:
            if arity is None:
                arity = t.arity
            elif t.arity != arity:
                raise ValueError(f"mixed arities {arity} and {t.arity} in one element")
            acc[t] = acc.get(t, 0) + as_coefficient(c)
        return cls({t: c for t, c in acc.items() if c}, spec)

    @classmethod
    def monomial(cls, t: Tree, spec: OrderingSpec = DEFAULT_ORDERING, c=1) -> "OperadPolynomial":
        return cls.from_terms([(t, c)], spec)

    @classmethod
    def zero(cls, spec: OrderingSpec = DEFAULT_ORDERING) -> "OperadPolynomial":
        return cls({}, spec)

    # -- container protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Tree, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Tree]:
        return list(self._terms)

    def coefficient(self, t: Tree) -> Fraction:
        return self._terms.get(t, Fraction(0))

    def __iter__(self) -> Iterator[tuple[Tree, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, t: Tree):
        return t in self._terms

    @property
    def arity(self) -> int | None:
        for t in self._terms:
            return t.arity
        return None

    def __eq__(self, other):
        if not isinstance(other, OperadPolynomial):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self):
        return hash((self.spec, frozenset(self._terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "OperadPolynomial"):
        if self.spec != other.spec:
            raise ValueError(f"orderings differ: {self.spec} vs {other.spec}")
        if self and other and self.arity != other.arity:
            raise ValueError(f"arities differ: {self.arity} vs {other.arity}")

    def __add__(self, other: "OperadPolynomial") -> "OperadPolynomial":
        if not isinstance(other, OperadPolynomial):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for t, c in other._terms.items():
            s = acc.get(t, 0) + c
            if s:
                acc[t] = s
            else:
                acc.pop(t, None)
        return OperadPolynomial(acc, self.spec)

    def __neg__(self):
        return OperadPolynomial({t: -c for t, c in self._terms.items()}, self.spec)

    def __sub__(self, other: "OperadPolynomial") -> "OperadPolynomial":
        if not isinstance(other, OperadPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> "OperadPolynomial":
        c = as_coefficient(c)
        if not c:
            return OperadPolynomial({}, self.spec)
        return OperadPolynomial({t: c * v for t, v in self._terms.items()}, self.spec)

    __rmul__ = __mul__

    def with_spec(self, spec: OrderingSpec) -> "OperadPolynomial":
        return OperadPolynomial(self._terms, spec)

    # -- leading data -------------------------------------------------------

    def leading_term(self) -> Tree:
        if not self._terms:
            raise ValueError("the zero element has no leading term")
        return next(iter(self._terms))

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            raise ValueError("the zero element has no leading coefficient")
        return next(iter(self._terms.values()))

    def monic(self) -> "OperadPolynomial":
        return self * (1 / self.leading_coefficient())

    def weights(self) -> set[int]:
        return {t.weight for t in self._terms}

    def __repr__(self):
        return format_element(self)


def from_terms(pairs, spec: OrderingSpec = DEFAULT_ORDERING) -> OperadPolynomial:
    return OperadPolynomial.from_terms(pairs, spec)


def add(f: OperadPolynomial, g: OperadPolynomial) -> OperadPolynomial:
    return f + g


def scale(c, f: OperadPolynomial) -> OperadPolynomial:
    return f * c


def leading_term(f: OperadPolynomial) -> Tree:
    return f.leading_term()


def leading_coefficient(f: OperadPolynomial) -> Fraction:
    return f.leading_coefficient()


def monic(f: OperadPolynomial) -> OperadPolynomial:
    return f.monic()


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(f: OperadPolynomial) -> str:
    """Text form ``c1*t1 + c2*t2 - t3``; the zero element prints as ``0``."""
    if not f:
        return "0"
    parts = []
    for i, (t, c) in enumerate(f.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_tree(t) if mag == 1 else f"{format_coefficient(mag)}*{format_tree(t)}"
        if i == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
