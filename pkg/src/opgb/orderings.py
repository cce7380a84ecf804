"""Path-sequence orderings of tree monomials.

Every monomial of arity n gets n words (the generator ordinals met on the
way from the root to leaf i) and the planar left-to-right reading of its
leaf labels.  The eight orderings compare arities, then the two
components in either priority, with degree-lex or reverse degree-lex on
words and lex or reverse-lex on the leaf reading.

Ordering keys are plain nested tuples so that comparisons run at C speed;
they are computed once per monomial and cached on the node.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .trees import Hole, Leaf, Tree


@dataclass(frozen=True)
class PathKey:
    words: tuple[tuple[int, ...], ...]
    perm: tuple[int, ...]
    arity: int


def path_key(t: Tree) -> PathKey:
    cache = t.cache()
    pk = cache.get("path")
    if pk is None:
        if isinstance(t, Hole):
            raise TypeError("trees with holes have no ordering key")
        words: list[tuple[int, ...]] = [()] * t.arity
        perm: list[int] = []
        stack = [(t, ())]
        while stack:
            node, word = stack.pop()
            if isinstance(node, Leaf):
                words[node.label - 1] = word
                perm.append(node.label)
            else:
                w = word + (node.gen.ordinal,)
                for child in reversed(node.children):
                    stack.append((child, w))
        pk = PathKey(tuple(words), tuple(perm), t.arity)
        cache["path"] = pk
    return pk


@dataclass(frozen=True)
class OrderingSpec:
    """One of the eight admissible orderings.

    ``path_first`` gives the comparison priority; ``reverse_path`` makes
    shorter words larger (same-length words stay lexicographic);
    ``reverse_perm`` flips the comparison of the leaf readings.
    """

    path_first: bool = True
    reverse_path: bool = False
    reverse_perm: bool = False

    @property
    def name(self) -> str:
        path = ("R" if self.reverse_path else "") + "Path"
        perm = ("R" if self.reverse_perm else "") + "Perm"
        return path + perm if self.path_first else perm + path

    def __str__(self):
        return self.name

    def key(self, t: Tree) -> tuple:
        cache = t.cache()
        k = cache.get(self)
        if k is None:
            pk = path_key(t)
            if self.reverse_path:
                words = tuple((-len(w), w) for w in pk.words)
            else:
                words = tuple((len(w), w) for w in pk.words)
            perm = tuple(-i for i in pk.perm) if self.reverse_perm else pk.perm
            k = (pk.arity, words, perm) if self.path_first else (pk.arity, perm, words)
            cache[self] = k
        return k

    def max(self, monomials: Iterable[Tree]) -> Tree:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[Tree], reverse: bool = False) -> list[Tree]:
        return sorted(monomials, key=self.key, reverse=reverse)


ORDERINGS: dict[str, OrderingSpec] = {
    spec.name: spec
    for spec in (
        # the leading component's "R" varies fastest
        [OrderingSpec(True, rpath, rperm) for rperm in (False, True) for rpath in (False, True)]
        + [OrderingSpec(False, rpath, rperm) for rpath in (False, True) for rperm in (False, True)]
    )
}

DEFAULT_ORDERING = ORDERINGS["PathPerm"]


def ordering(name: str | OrderingSpec) -> OrderingSpec:
    """Look an ordering up by name, case-insensitively."""
    if isinstance(name, OrderingSpec):
        return name
    for key, spec in ORDERINGS.items():
        if key.lower() == name.strip().lower():
            return spec
    raise ValueError(f"unknown ordering {name!r}; expected one of {', '.join(ORDERINGS)}")


def compare(spec: OrderingSpec, s: Tree, t: Tree) -> int:
    """-1, 0 or 1 as ``s`` is smaller than, equal to or larger than ``t``."""
    a, b = spec.key(s), spec.key(t)
    return (a > b) - (a < b)


def word_string(word: Sequence[int], alphabet: Sequence[str]) -> str:
    return "".join(alphabet[i] for i in word)
