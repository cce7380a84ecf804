"""Tree monomials of the free shuffle operad.

A tree monomial is a planar rooted tree whose internal vertices carry
generators and whose leaves carry the labels ``1..n``.  The planar
representative is canonical: at every vertex the children are listed in
increasing order of the smallest leaf reachable through them.

Trees are immutable.  Each node caches its arity, weight (number of
internal vertices), smallest leaf label, a structural key and a hash, so
equality tests and dictionary lookups never walk the tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .permutations import (
    compositions,
    is_shuffle_permutation,
    shuffle_permutations,
)


class TreeError(ValueError):
    """Raised on malformed trees or invalid tree operations."""


class MalformedTreeError(TreeError):
    """The leaf labels of a tree are not a bijection onto ``1..n``."""


@dataclass(frozen=True)
class Generator:
    """A generating operation: a name, an arity and its position in the alphabet."""

    name: str
    arity: int
    ordinal: int = 0

    def __post_init__(self):
        if self.arity < 1:
            raise TreeError(f"generator {self.name!r} must have arity >= 1")

    def __repr__(self):
        return self.name


class Tree:
    __slots__ = ("arity", "weight", "min_leaf", "_key", "_hash", "_cache")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # structural order, only used for reproducible output
        return self._key < other._key

    def __repr__(self):
        return format_tree(self)

    @property
    def is_leaf(self) -> bool:
        return False

    def cache(self) -> dict:
        """Per-node scratch dictionary for derived invariants (ordering keys)."""
        if self._cache is None:
            self._cache = {}
        return self._cache


class Leaf(Tree):
    __slots__ = ("label",)

    def __init__(self, label: int):
        if label < 1:
            raise TreeError(f"leaf labels are positive integers, got {label}")
        self.label = label
        self.arity = 1
        self.weight = 0
        self.min_leaf = label
        self._key = (0, label)
        self._hash = hash(self._key)
        self._cache = None

    @property
    def is_leaf(self) -> bool:
        return True


class Vertex(Tree):
    """An internal vertex.  The constructor checks arities but not canonicity."""

    __slots__ = ("gen", "children")

    def __init__(self, gen: Generator, children: Sequence[Tree]):
        children = tuple(children)
        if len(children) != gen.arity:
            raise TreeError(
                f"generator {gen.name} has arity {gen.arity}, got {len(children)} children"
            )
        self.gen = gen
        self.children = children
        self.arity = sum(c.arity for c in children)
        self.weight = 1 + sum(c.weight for c in children)
        self.min_leaf = min(c.min_leaf for c in children)
        self._key = (1, gen.ordinal, gen.name) + tuple(c._key for c in children)
        self._hash = hash((gen.name, tuple(c._hash for c in children)))
        self._cache = None


class Hole(Tree):
    """The marked vertex of an embedding: a collapsed divisor occurrence."""

    __slots__ = ("children",)

    def __init__(self, children: Sequence[Tree]):
        children = tuple(children)
        if not children:
            raise TreeError("a hole needs at least one child")
        self.children = children
        self.arity = sum(c.arity for c in children)
        self.weight = sum(c.weight for c in children)
        self.min_leaf = min(c.min_leaf for c in children)
        self._key = (2,) + tuple(c._key for c in children)
        self._hash = hash(("_", tuple(c._hash for c in children)))
        self._cache = None


def format_tree(t: Tree) -> str:
    if isinstance(t, Leaf):
        return str(t.label)
    head = "_" if isinstance(t, Hole) else t.gen.name
    return head + "(" + ",".join(format_tree(c) for c in t.children) + ")"


def corolla(g: Generator, leaf_labels: Sequence[int] | None = None) -> Vertex:
    """The one-vertex tree ``g`` with the given leaves (default ``1..arity``).

    Children are sorted, so ``corolla(m, [2, 1])`` is ``m(1,2)``.
    """
    if leaf_labels is None:
        leaf_labels = range(1, g.arity + 1)
    labels = list(leaf_labels)
    if len(labels) != g.arity:
        raise TreeError(f"{g.name} has arity {g.arity}, got {len(labels)} leaves")
    if len(set(labels)) != len(labels):
        raise TreeError(f"duplicate leaf labels {labels}")
    return Vertex(g, [Leaf(i) for i in sorted(labels)])


def arity(t: Tree) -> int:
    return t.arity


def weight(t: Tree) -> int:
    return t.weight


def min_leaf(t: Tree) -> int:
    return t.min_leaf


def leaves(t: Tree) -> list[int]:
    """Leaf labels in planar (left-to-right) order."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.label)
        else:
            stack.extend(reversed(node.children))
    return out


def generators_of(t: Tree) -> set[Generator]:
    out = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Vertex):
            out.add(node.gen)
        if not isinstance(node, Leaf):
            stack.extend(node.children)
    return out


def check_labels(t: Tree) -> None:
    labels = leaves(t)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise MalformedTreeError(f"leaf labels {labels} are not a bijection onto 1..{len(labels)}")


def is_canonical(t: Tree) -> bool:
    """Children at every vertex appear in increasing order of their minimal leaf."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            continue
        ch = node.children
        for a, b in zip(ch, ch[1:]):
            if a.min_leaf >= b.min_leaf:
                return False
        stack.extend(ch)
    return True


def is_shuffle_monomial(t: Tree) -> bool:
    """True iff ``t`` is the canonical planar representative of its tree.

    Trees whose labels are not ``1..n`` raise :class:`MalformedTreeError`
    instead of returning False.
    """
    if isinstance(t, Hole):
        raise MalformedTreeError("trees with holes are not monomials")
    check_labels(t)
    return is_canonical(t)


def map_leaves(t: Tree, f) -> Tree:
    """Replace each leaf ``Leaf(l)`` by ``f(l)`` (a tree); vertices are kept."""
    if isinstance(t, Leaf):
        return f(t.label)
    if isinstance(t, Hole):
        return Hole([map_leaves(c, f) for c in t.children])
    return Vertex(t.gen, [map_leaves(c, f) for c in t.children])


def relabel_leaves(t: Tree, sigma: Sequence[int]) -> Tree:
    """Replace each leaf label ``l`` by ``sigma[l-1]``.

    The result is not re-canonicalized.
    """
    if len(sigma) != t.arity:
        raise TreeError(f"permutation of degree {len(sigma)} applied to arity {t.arity}")
    leaf_cache = [Leaf(i) for i in sigma]
    return map_leaves(t, lambda l: leaf_cache[l - 1])


def divisor_monomial(sub: Tree) -> Tree:
    """Relabel the leaves of a subtree occurrence by rank.

    ``sub`` carries, on each of its leaves, the smallest ambient leaf that
    can be reached through it; the leaf with the smallest such label gets
    1, the next one 2 and so on.
    """
    labels = sorted(leaves(sub))
    if len(set(labels)) != len(labels):
        raise MalformedTreeError(f"duplicate leaf labels in {sub}")
    rank = {l: i + 1 for i, l in enumerate(labels)}
    return map_leaves(sub, lambda l: Leaf(rank[l]))


def graft(root: Tree, args: Sequence[Tree]) -> Tree:
    """Nonsymmetric composition ``root(args[0], ..., args[n-1])``.

    Leaf ``i`` of ``root`` is replaced by ``args[i-1]`` whose labels are
    shifted by the total arity of the preceding arguments.
    """
    if len(args) != root.arity:
        raise TreeError(f"root of arity {root.arity} grafted with {len(args)} arguments")
    shifted = []
    offset = 0
    for a in args:
        shifted.append(a if offset == 0 else map_leaves(a, lambda l, o=offset: Leaf(l + o)))
        offset += a.arity
    return map_leaves(root, lambda l: shifted[l - 1])


def shuffle_compose(root: Tree, args: Sequence[Tree], sigma: Sequence[int], check: bool = True) -> Tree:
    """Shuffle composition ``root(args)_sigma``: graft, then apply ``sigma`` to the labels.

    ``sigma`` is applied directly (leaf ``l`` becomes ``sigma[l-1]``), not its inverse.
    """
    if len(args) != root.arity:
        raise TreeError(f"root of arity {root.arity} composed with {len(args)} arguments")
    if check and not is_shuffle_permutation(sigma, [a.arity for a in args]):
        raise TreeError(
            f"{list(sigma)} is not a shuffle permutation of type {[a.arity for a in args]}"
        )
    # graft and relabel in one pass
    offset = 0
    placed = []
    for a in args:
        placed.append(map_leaves(a, lambda l, o=offset: Leaf(sigma[l + o - 1])))
        offset += a.arity
    return map_leaves(root, lambda l: placed[l - 1])


def vertex_paths(t: Tree) -> Iterator[tuple[tuple[int, ...], Tree]]:
    """Internal vertices in pre-order, as ``(path, subtree)`` pairs.

    A path is the tuple of child indices leading from the root.
    """
    stack: list[tuple[tuple[int, ...], Tree]] = [((), t)]
    while stack:
        path, node = stack.pop()
        if isinstance(node, Leaf):
            continue
        yield path, node
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((path + (i,), node.children[i]))


def subtree_at(t: Tree, path: Sequence[int]) -> Tree:
    for i in path:
        t = t.children[i]
    return t


def replace_at(t: Tree, path: Sequence[int], new: Tree) -> Tree:
    if not path:
        return new
    i = path[0]
    children = list(t.children)
    children[i] = replace_at(children[i], path[1:], new)
    if isinstance(t, Hole):
        return Hole(children)
    return Vertex(t.gen, children)


@lru_cache(maxsize=None)
def _enumerate(gens: tuple[Generator, ...], n: int, w: int) -> tuple[Tree, ...]:
    # monomials of arity n and weight exactly w
    if w == 0:
        return (Leaf(1),) if n == 1 else ()
    out = []
    for g in gens:
        k = g.arity
        if k > n:
            continue
        root = corolla(g)
        for sizes in compositions(n, k):
            sigmas = shuffle_permutations(sizes)
            for weights in compositions(w - 1 + k, k):
                child_sets = [_enumerate(gens, s, cw - 1) for s, cw in zip(sizes, weights)]
                if not all(child_sets):
                    continue
                for args in product(*child_sets):
                    for sigma in sigmas:
                        out.append(shuffle_compose(root, args, sigma, check=False))
    return tuple(out)


def enumerate_monomials(generators: Sequence[Generator], n: int, max_weight: int | None = None) -> list[Tree]:
    """All tree monomials of arity ``n`` over ``generators``, each once.

    Output is grouped by increasing weight.  Unary generators make the set
    infinite, so ``max_weight`` is then required.
    """
    if n < 1:
        raise TreeError("arity must be >= 1")
    gens = tuple(generators)
    if max_weight is None:
        if any(g.arity == 1 for g in gens):
            raise TreeError("unary generators give infinitely many monomials; pass max_weight")
        max_weight = n - 1
    out: list[Tree] = []
    for w in range(max_weight + 1):
        out.extend(_enumerate(gens, n, w))
    return out
