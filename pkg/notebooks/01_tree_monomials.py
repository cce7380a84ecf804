# coding: utf-8
"""
Tree monomials, shuffle composition and orderings
=================================================

A walk through the basic objects: labelled trees in canonical form,
shuffle permutations and the eight path orderings.
"""

# %%
from opgb import Generator, Leaf, Vertex, corolla, enumerate_monomials, format_tree, is_shuffle_monomial
from opgb import ORDERINGS, count_shuffle_permutations, shuffle_permutations, shuffle_compose

m = Generator("m", 2)

# A tree monomial lists the children of every vertex by increasing minimal leaf.
t = Vertex(m, [Vertex(m, [Leaf(1), Leaf(3)]), Leaf(2)])
print(format_tree(t), is_shuffle_monomial(t))

flipped = Vertex(m, [Leaf(2), Vertex(m, [Leaf(1), Leaf(3)])])
print(format_tree(flipped), is_shuffle_monomial(flipped))

# %%
# Shuffle permutations of type (2, 1) keep each block increasing and the
# block minima in order.  Their number has a closed form.
print(shuffle_permutations([2, 1]))
print(count_shuffle_permutations([2, 2, 3]), len(shuffle_permutations([2, 2, 3])))

# %%
# Composing m(1,2) with m(1,2) in its first input; the permutation is applied
# to the leaf labels directly.
for sigma in shuffle_permutations([2, 1]):
    print(sigma, format_tree(shuffle_compose(corolla(m), [corolla(m), Leaf(1)], sigma)))

# %%
# With one binary generator there are (2n-3)!! monomials of arity n.
print([len(enumerate_monomials([m], n)) for n in range(1, 8)])

# %%
# The same three monomials of arity 3, sorted by two different orderings.
trees = enumerate_monomials([m], 3)
for name in ("PathPerm", "PermPath"):
    spec = ORDERINGS[name]
    print(name, [format_tree(x) for x in spec.sorted(trees, reverse=True)])
