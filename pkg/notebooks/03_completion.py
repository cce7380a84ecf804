# coding: utf-8
"""
Completing the Lie, commutative and associative operads
=======================================================

The shipped presentations are closed under the symmetric groups and then
completed.  A quadratic basis means the operad is Koszul; the normal
monomials count the dimensions.
"""

# %%
from math import factorial

from opgb import ORDERINGS, buchberger, format_element
from opgb.cli import shipped_text
from opgb.text import parse_presentation

def load(name):
    return parse_presentation(shipped_text(name)).symmetrized()

lie = load("lie.op")
for r in lie.relations:
    print(format_element(r))

# %%
result = buchberger(lie, max_arity=6)
print(result.complete, result.quadratic)
print(result.dims(6), [factorial(n - 1) for n in range(1, 7)])

# %%
com = load("com.op")
print(buchberger(com, max_arity=6).dims(6))

# %%
# The associative operad is PBW for the orderings that compare paths first,
# but not for those that compare the leaf readings first.
assoc = load("assoc.op")
for name, spec in ORDERINGS.items():
    r = buchberger(assoc.with_spec(spec), max_arity=5)
    print(f"{name:11s} basis {len(r.basis):3d}  quadratic {r.quadratic!s:5s}  dims {list(r.dims(5).values())}")

# %%
# Truncating the completion keeps every arity up to the bound exact.
spec = ORDERINGS["PermPath"]
for bound in (4, 5, 6):
    r = buchberger(assoc.with_spec(spec), max_arity=bound)
    print(bound, r.complete, [r.dimension(n) for n in range(1, 5)], r.stats["skipped"])
