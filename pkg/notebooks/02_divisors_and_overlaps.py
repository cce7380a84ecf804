# coding: utf-8
"""
Divisors, holes and small common multiples
==========================================
"""

# %%
from opgb import Generator, all_embeddings, format_tree, parse_tree, reconstruct, small_common_multiples

m = Generator("m", 2)
t = Generator("t", 3, 1)
gens = [m, t]

alpha = parse_tree("m(t(m(1,2),3,m(4,5)),m(6,t(7,8,9)))", gens)
beta = parse_tree("t(1,2,m(3,4))", gens)

# An occurrence is stored as alpha with the occurrence collapsed to a hole "_".
for e in all_embeddings(alpha, beta):
    print(e.path, format_tree(e.context))
    print("  refilled:", format_tree(reconstruct(e, beta)))

# %%
# Refilling the hole with a different tree of the same arity.
e = all_embeddings(alpha, beta)[0]
print(format_tree(reconstruct(e, parse_tree("m(m(m(1,3),2),4)", gens))))

# %%
# Occurrences must respect the order of the minimal leaves below them:
# m(m(1,3),2) does not contain the left comb m(m(1,2),3) at its root.
comb = parse_tree("m(m(1,2),3)", gens)
print(len(all_embeddings(parse_tree("m(m(1,3),2)", gens), comb)))

# %%
# Overlaps of the left comb with itself.  The two leaf orders forced by the
# occurrences leave a single labelling of the four-leaf comb.
for s in small_common_multiples(comb, comb):
    print(format_tree(s.multiple), s.emb_a.path, s.emb_b.path)

# %%
# A richer pair: the overlaps come with several labellings.
a = parse_tree("m(m(1,3),2)", gens)
for s in small_common_multiples(a, comb):
    print(format_tree(s.multiple), s.emb_a.path, s.emb_b.path)
