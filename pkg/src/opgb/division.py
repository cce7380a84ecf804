"""Divisor occurrences as trees with a hole, and the insertion ``m_{alpha,beta}``.

An occurrence of ``beta`` inside ``alpha`` is stored as ``alpha`` with the
occurrence collapsed into a single :class:`~opgb.trees.Hole` vertex.  The
hole keeps, in order, the ambient subtrees that hung below the leaves of
``beta``; leaf ``j`` of ``beta`` corresponds to the hole child with the
``j``-th smallest minimal leaf.  Inserting any tree ``gamma`` of the same
arity into the hole yields ``m_{alpha,beta}(gamma)``.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .polynomials import OperadPolynomial
from .trees import Hole, Leaf, Tree, TreeError, map_leaves, replace_at, vertex_paths


class Embedding:
    __slots__ = ("base", "path", "slots", "_context")

    def __init__(self, base: Tree, path: Sequence[int], slots: Sequence[Tree]):
        self.base = base
        self.path = tuple(path)
        self.slots = tuple(slots)
        self._context = None

    @property
    def hole_arity(self) -> int:
        return len(self.slots)

    @property
    def context(self) -> Tree:
        """The ambient tree with the divisor occurrence replaced by a hole."""
        if self._context is None:
            self._context = replace_at(self.base, self.path, Hole(self.slots))
        return self._context

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.path == other.path and self.context == other.context

    def __hash__(self):
        return hash((self.path, self.context))

    def __repr__(self):
        return f"Embedding({self.context!r} at {list(self.path)})"


def _match(a: Tree, b: Tree, slots: list) -> bool:
    if isinstance(b, Leaf):
        slots[b.label - 1] = a
        return True
    if isinstance(a, Leaf):
        return False
    if a.gen is not b.gen and a.gen != b.gen:
        return False
    for ac, bc in zip(a.children, b.children):
        if not _match(ac, bc, slots):
            return False
    return True


def rooted_slots(alpha: Tree, beta: Tree) -> list[Tree] | None:
    """Hole children of the occurrence of ``beta`` sharing the root of ``alpha``."""
    if isinstance(beta, Leaf) or isinstance(alpha, Leaf):
        return None
    if alpha.weight < beta.weight or alpha.arity < beta.arity:
        return None
    slots: list = [None] * beta.arity
    if not _match(alpha, beta, slots):
        return None
    prev = 0
    for s in slots:
        if s.min_leaf <= prev:
            return None
        prev = s.min_leaf
    return slots


def rooted_embedding(alpha: Tree, beta: Tree) -> Embedding | None:
    """The occurrence of ``beta`` at the root of ``alpha``, if there is one.

    Child pairing is forced by position, so there is at most one.
    """
    slots = rooted_slots(alpha, beta)
    return None if slots is None else Embedding(alpha, (), slots)


def embedding_at(alpha: Tree, beta: Tree, path: Sequence[int]) -> Embedding | None:
    sub = alpha
    for i in path:
        sub = sub.children[i]
    slots = rooted_slots(sub, beta)
    return None if slots is None else Embedding(alpha, path, slots)


def iter_embeddings(alpha: Tree, beta: Tree) -> Iterator[Embedding]:
    """Occurrences of ``beta`` in ``alpha``, in pre-order of their root vertex."""
    if isinstance(beta, Leaf) or alpha.weight < beta.weight or alpha.arity < beta.arity:
        return
    for path, sub in vertex_paths(alpha):
        slots = rooted_slots(sub, beta)
        if slots is not None:
            yield Embedding(alpha, path, slots)


def all_embeddings(alpha: Tree, beta: Tree) -> list[Embedding]:
    return list(iter_embeddings(alpha, beta))


def first_embedding(alpha: Tree, beta: Tree) -> Embedding | None:
    return next(iter_embeddings(alpha, beta), None)


def divides(alpha: Tree, beta: Tree) -> bool:
    """True when ``alpha`` is divisible by ``beta``."""
    return first_embedding(alpha, beta) is not None


def occurrence_vertices(path: Sequence[int], beta: Tree) -> set[tuple[int, ...]]:
    """Paths (in the ambient tree) of the vertices covered by an occurrence of ``beta``."""
    path = tuple(path)
    return {path + p for p, _ in vertex_paths(beta)}


def reconstruct(e: Embedding, gamma: Tree) -> Tree:
    """Insert ``gamma`` into the hole: leaf ``j`` of ``gamma`` receives hole child ``j``."""
    if gamma.arity != e.hole_arity:
        raise TreeError(f"hole of arity {e.hole_arity} filled with a tree of arity {gamma.arity}")
    slots = e.slots
    filled = map_leaves(gamma, lambda j: slots[j - 1])
    return replace_at(e.base, e.path, filled)


def substitute(e: Embedding, g: OperadPolynomial) -> OperadPolynomial:
    """Apply :func:`reconstruct` term by term."""
    if g and g.arity != e.hole_arity:
        raise TreeError(f"hole of arity {e.hole_arity} filled with an element of arity {g.arity}")
    # reconstruct is injective and preserves the order, so no merging is needed
    return OperadPolynomial({reconstruct(e, t): c for t, c in g.items()}, g.spec)
