"""Symmetric-group actions on shuffle-operad elements.

Input for a symmetric operad has to be rewritten in terms of tree
monomials, and its relations closed under the symmetric groups so that
they generate the right shuffle ideal.  The symmetry of each generator is
given by the effect of the adjacent transpositions ``s_i`` on its inputs:
``g`` with inputs ``i`` and ``i+1`` swapped equals a linear combination of
generators of the same arity.  ``action b s1 = -1*b`` makes ``b``
antisymmetric, ``action m s1 = mop`` pairs a product with its opposite.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import prod
from typing import Iterable, Mapping, Sequence

from .polynomials import OperadPolynomial, as_coefficient
from .trees import Generator, Leaf, Tree, Vertex, relabel_leaves


class ActionError(ValueError):
    """Missing or inconsistent symmetry data."""


class GeneratorAction:
    """Adjacent-transposition table: ``(generator name, i) -> {generator name: coefficient}``."""

    def __init__(self, generators: Iterable[Generator], table: Mapping[tuple[str, int], Mapping[str, object]] | None = None):
        self.generators = {g.name: g for g in generators}
        self.table: dict[tuple[str, int], dict[str, Fraction]] = {}
        for (name, i), combo in (table or {}).items():
            self.set(name, i, combo)

    def set(self, name: str, i: int, combo: Mapping[str, object]) -> None:
        g = self.generators.get(name)
        if g is None:
            raise ActionError(f"unknown generator {name!r}")
        if not 1 <= i < g.arity:
            raise ActionError(f"s{i} does not act on the {g.arity} inputs of {name}")
        clean = {}
        for other, c in combo.items():
            h = self.generators.get(other)
            if h is None:
                raise ActionError(f"unknown generator {other!r}")
            if h.arity != g.arity:
                raise ActionError(f"{name} s{i} = ... uses {other} of a different arity")
            c = as_coefficient(c)
            if c:
                clean[other] = clean.get(other, 0) + c
        self.table[(name, i)] = clean

    def swap(self, g: Generator, i: int) -> list[tuple[Generator, Fraction]]:
        try:
            combo = self.table[(g.name, i)]
        except KeyError:
            raise ActionError(f"no action given for {g.name} s{i}") from None
        return [(self.generators[name], c) for name, c in combo.items()]

    def missing(self, gens: Iterable[Generator] | None = None) -> list[tuple[str, int]]:
        gens = self.generators.values() if gens is None else gens
        return [(g.name, i) for g in gens for i in range(1, g.arity) if (g.name, i) not in self.table]

    def check_involutions(self) -> None:
        """Raise unless applying each ``s_i`` twice gives back every generator."""
        for (name, i), combo in self.table.items():
            twice: dict[str, Fraction] = {}
            for other, c in combo.items():
                for h, d in self.swap(self.generators[other], i):
                    twice[h.name] = twice.get(h.name, 0) + c * d
            twice = {k: v for k, v in twice.items() if v}
            if twice != {name: 1}:
                raise ActionError(f"{name} s{i} applied twice gives {twice}, not {name}")

    def __eq__(self, other):
        if not isinstance(other, GeneratorAction):
            return NotImplemented
        return self.generators == other.generators and self.table == other.table

    def __bool__(self):
        return bool(self.table)

    def __repr__(self):
        return f"GeneratorAction({self.table})"


def _canon(t: Tree, actions: GeneratorAction | None) -> dict[Tree, Fraction]:
    if isinstance(t, Leaf):
        return {t: Fraction(1)}
    kids = [_canon(c, actions) for c in t.children]
    mins = [c.min_leaf for c in t.children]
    order = list(range(len(mins)))
    combo = {t.gen: Fraction(1)}
    # bubble sort: each swap of neighbours i, i+1 rewrites the vertex by s_{i+1}
    for end in range(len(order) - 1, 0, -1):
        for i in range(end):
            if mins[order[i]] > mins[order[i + 1]]:
                if actions is None:
                    raise ActionError(f"{t} is not a tree monomial and no symmetry data is given")
                order[i], order[i + 1] = order[i + 1], order[i]
                new: dict[Generator, Fraction] = {}
                for g, c in combo.items():
                    for h, d in actions.swap(g, i + 1):
                        new[h] = new.get(h, 0) + c * d
                combo = {g: c for g, c in new.items() if c}
    kid_terms = [list(kids[j].items()) for j in order]
    out: dict[Tree, Fraction] = {}
    for g, c in combo.items():
        for choice in product(*kid_terms):
            v = Vertex(g, [s for s, _ in choice])
            out[v] = out.get(v, 0) + c * prod((d for _, d in choice), start=Fraction(1))
    return {v: c for v, c in out.items() if c}


def canonicalize(t: Tree, actions: GeneratorAction | None = None) -> dict[Tree, Fraction]:
    """Express a labelled tree with arbitrary child order through tree monomials."""
    return _canon(t, actions)


def canonical_element(pairs: Iterable[tuple[Tree, object]], spec, actions: GeneratorAction | None = None) -> OperadPolynomial:
    acc: list[tuple[Tree, Fraction]] = []
    for t, c in pairs:
        c = as_coefficient(c)
        acc.extend((u, c * d) for u, d in _canon(t, actions).items())
    return OperadPolynomial.from_terms(acc, spec)


def act(sigma: Sequence[int], f: OperadPolynomial, actions: GeneratorAction | None) -> OperadPolynomial:
    """Apply ``sigma`` to the leaf labels of ``f`` and rewrite in tree monomials."""
    return canonical_element(((relabel_leaves(t, sigma), c) for t, c in f.items()), f.spec, actions)


def orbit_closure(relations: Iterable[OperadPolynomial], actions: GeneratorAction | None) -> list[OperadPolynomial]:
    """The images of every relation under its full symmetric group, monic and without repeats."""
    out: list[OperadPolynomial] = []
    seen: set[OperadPolynomial] = set()
    for r in relations:
        if not r:
            continue
        for sigma in permutations(range(1, r.arity + 1)):
            image = act(sigma, r, actions)
            if not image:
                continue
            image = image.monic()
            if image not in seen:
                seen.add(image)
                out.append(image)
    return out
