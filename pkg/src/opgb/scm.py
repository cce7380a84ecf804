"""Small common multiples of two tree monomials.

The search runs in two stages.  First the two trees are superposed as
planar trees with vertex labels only: the root of one tree is identified
with some vertex of the other and the overlapping vertices must carry the
same generators; wherever one tree stops at a leaf, the remaining subtree
of the other is attached.  Second, the leaves of the superposition are
labelled.  Each copy demands that the leftmost leaves below its own leaves
appear in the order of its labels, so admissible labellings are exactly
the linear extensions of two chains on the leaf set.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .division import Embedding, embedding_at
from .permutations import Permutation
from .trees import Leaf, Tree, Vertex, vertex_paths


@dataclass(frozen=True)
class TwoChainPoset:
    """Elements ``1..size`` ordered by two chains (each listed bottom to top)."""

    size: int
    chains: tuple[tuple[int, ...], tuple[int, ...]]

    def __post_init__(self):
        first, second = (tuple(c) for c in self.chains)
        object.__setattr__(self, "chains", (first, second))
        for chain in (first, second):
            if len(set(chain)) != len(chain):
                raise ValueError(f"chain {chain} repeats an element")
            if any(not 1 <= x <= self.size for x in chain):
                raise ValueError(f"chain {chain} leaves 1..{self.size}")
        if set(first) | set(second) != set(range(1, self.size + 1)):
            raise ValueError("every element must lie on one of the chains")


def linear_extensions(p: TwoChainPoset) -> list[Permutation]:
    """All labellings extending both chains, as image lists ``label[element-1]``.

    The largest free label goes to the top of one chain, provided that
    element is not a non-top element of the other chain; the rest is
    handled recursively.  Contradictory chains give no extensions.
    """
    c1, c2 = p.chains

    @lru_cache(maxsize=None)
    def extend(i: int, j: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        remaining = len(set(c1[:i]) | set(c2[:j]))
        if remaining == 0:
            return ((),)
        out = []
        t1 = c1[i - 1] if i else None
        t2 = c2[j - 1] if j else None
        if t1 is not None and t1 == t2:
            moves = [(t1, i - 1, j - 1)]
        else:
            moves = []
            if t1 is not None and t1 not in c2[:j]:
                moves.append((t1, i - 1, j))
            if t2 is not None and t2 not in c1[:i]:
                moves.append((t2, i, j - 1))
        for element, ni, nj in moves:
            for rest in extend(ni, nj):
                out.append(rest + ((element, remaining),))
        return tuple(out)

    result = []
    for assignment in extend(len(c1), len(c2)):
        images = [0] * p.size
        for element, label in assignment:
            images[element - 1] = label
        result.append(tuple(images))
    result.sort()
    return result


@dataclass(frozen=True)
class SmallCommonMultiple:
    multiple: Tree
    emb_a: Embedding
    emb_b: Embedding

    def __repr__(self):
        return (f"SCM({self.multiple!r}, a at {list(self.emb_a.path)}, "
                f"b at {list(self.emb_b.path)})")


class _Node:
    __slots__ = ("gen", "children", "index")

    def __init__(self, gen=None, children=None):
        self.gen = gen
        self.children = children
        self.index = -1


def _copy(t: Tree, rec: dict) -> _Node:
    if isinstance(t, Leaf):
        node = _Node()
        rec[t.label] = node
        return node
    return _Node(t.gen, [_copy(c, rec) for c in t.children])


def _superpose(a: Tree, b: Tree, rec_a: dict, rec_b: dict) -> _Node | None:
    if isinstance(a, Leaf):
        if isinstance(b, Leaf):
            node = _Node()
            rec_a[a.label] = node
            rec_b[b.label] = node
            return node
        node = _copy(b, rec_b)
        rec_a[a.label] = node
        return node
    if isinstance(b, Leaf):
        node = _copy(a, rec_a)
        rec_b[b.label] = node
        return node
    if a.gen is not b.gen and a.gen != b.gen:
        return None
    children = []
    for ac, bc in zip(a.children, b.children):
        child = _superpose(ac, bc, rec_a, rec_b)
        if child is None:
            return None
        children.append(child)
    return _Node(a.gen, children)


def _graft_at(big: Tree, small: Tree, path: Sequence[int], rec_big: dict, rec_small: dict) -> _Node | None:
    if not path:
        return _superpose(big, small, rec_big, rec_small)
    children = []
    for i, c in enumerate(big.children):
        if i == path[0]:
            child = _graft_at(c, small, path[1:], rec_big, rec_small)
            if child is None:
                return None
        else:
            child = _copy(c, rec_big)
        children.append(child)
    return _Node(big.gen, children)


def _number_leaves(root: _Node) -> int:
    count = 0
    stack = [root]
    while stack:
        node = stack.pop()
        if node.children is None:
            node.index = count
            count += 1
        else:
            stack.extend(reversed(node.children))
    return count


def _leftmost(node: _Node) -> int:
    while node.children is not None:
        node = node.children[0]
    return node.index


def _labelled(node: _Node, labels: Sequence[int]) -> Tree:
    if node.children is None:
        return Leaf(labels[node.index])
    return Vertex(node.gen, [_labelled(c, labels) for c in node.children])


def superpositions(big: Tree, small: Tree, path: Sequence[int]) -> list[Tree]:
    """Labelled common multiples with ``small`` rooted at ``path`` of ``big``."""
    rec_big: dict = {}
    rec_small: dict = {}
    root = _graft_at(big, small, path, rec_big, rec_small)
    if root is None:
        return []
    size = _number_leaves(root)
    chain_big = tuple(_leftmost(rec_big[j]) + 1 for j in range(1, big.arity + 1))
    chain_small = tuple(_leftmost(rec_small[j]) + 1 for j in range(1, small.arity + 1))
    poset = TwoChainPoset(size, (chain_big, chain_small))
    return [_labelled(root, labels) for labels in linear_extensions(poset)]


def small_common_multiples(alpha: Tree, beta: Tree) -> list[SmallCommonMultiple]:
    """Every small common multiple of ``alpha`` and ``beta`` with both embeddings.

    Both orientations are searched (``beta`` rooted inside ``alpha`` and
    vice versa).  The fully coincident overlap of a tree with itself is
    left out since its S-polynomial vanishes.
    """
    if isinstance(alpha, Leaf) or isinstance(beta, Leaf):
        return []
    found: dict[tuple, SmallCommonMultiple] = {}

    def record(gamma: Tree, path_a, path_b):
        if path_a == path_b and alpha == beta:
            return
        key = (gamma, path_a, path_b)
        if key in found:
            return
        ea = embedding_at(gamma, alpha, path_a)
        eb = embedding_at(gamma, beta, path_b)
        assert ea is not None and eb is not None, (gamma, alpha, beta)
        found[key] = SmallCommonMultiple(gamma, ea, eb)

    for path, _ in vertex_paths(alpha):
        for gamma in superpositions(alpha, beta, path):
            record(gamma, (), path)
    for path, _ in vertex_paths(beta):
        if not path:
            continue
        for gamma in superpositions(beta, alpha, path):
            record(gamma, path, ())
    return [found[k] for k in sorted(found, key=lambda k: (k[0]._key, k[1], k[2]))]
