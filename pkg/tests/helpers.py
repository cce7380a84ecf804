"""Builders, random generators and brute-force oracles shared by the tests.

The oracles avoid the engine's own search code wherever possible so that
they can cross-check it.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from math import factorial

from opgb.buchberger import Presentation
from opgb.division import all_embeddings, occurrence_vertices, substitute
from opgb.orderings import DEFAULT_ORDERING
from opgb.permutations import shuffle_permutations
from opgb.polynomials import OperadPolynomial
from opgb.text import parse_presentation
from opgb.trees import Generator, Leaf, Tree, Vertex, enumerate_monomials, shuffle_compose, vertex_paths
from opgb.cli import shipped_text

m = Generator("m", 2, 0)
n2 = Generator("n", 2, 1)
t3 = Generator("t", 3, 2)


def T(g: Generator, *children) -> Vertex:
    """``T(m, T(m, 1, 2), 3)`` builds ``m(m(1,2),3)``."""
    return Vertex(g, [Leaf(c) if isinstance(c, int) else c for c in children])


def P(*pairs, spec=DEFAULT_ORDERING) -> OperadPolynomial:
    return OperadPolynomial.from_terms(pairs, spec)


def shipped(name: str) -> Presentation:
    return parse_presentation(shipped_text(name))


# random objects

def _random_shape(rng: random.Random, gens, n: int):
    # abstract planar tree with n leaves as nested lists; None marks a leaf
    if n == 1:
        return None
    options = [g for g in gens if 2 <= g.arity <= n]
    g = rng.choice(options)
    cuts = sorted(rng.sample(range(1, n), g.arity - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return (g, [_random_shape(rng, gens, s) for s in sizes])


def _build(shape, labels):
    if shape is None:
        return Leaf(labels.pop())
    g, kids = shape
    children = [_build(k, labels) for k in kids]
    children.sort(key=lambda c: c.min_leaf)
    return Vertex(g, children)


def random_monomial(rng: random.Random, gens, n: int) -> Tree:
    """A random tree monomial of arity ``n`` (non-unary generators only).

    Random shape, random leaf labels, then children sorted by minimal leaf.
    """
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return _build(_random_shape(rng, gens, n), labels)


def random_shuffle(rng: random.Random, sizes) -> tuple[int, ...]:
    return rng.choice(shuffle_permutations(sizes))


def random_coefficient(rng: random.Random) -> Fraction:
    c = 0
    while c == 0:
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return c


def random_polynomial(rng, gens, n: int, terms: int = 4, spec=DEFAULT_ORDERING) -> OperadPolynomial:
    return OperadPolynomial.from_terms(
        [(random_monomial(rng, gens, n), random_coefficient(rng)) for _ in range(terms)], spec)


def compose_poly(root: OperadPolynomial, args, sigma) -> OperadPolynomial:
    """Multilinear shuffle composition; ``args`` mixes polynomials and plain trees."""
    spec = root.spec
    expanded = [list(a.items()) if isinstance(a, OperadPolynomial) else [(a, Fraction(1))] for a in args]
    acc = []
    for t, c in root.items():
        for choice in itertools.product(*expanded):
            coef = c
            for _, d in choice:
                coef *= d
            acc.append((shuffle_compose(t, [s for s, _ in choice], sigma), coef))
    return OperadPolynomial.from_terms(acc, spec)


def random_ideal_element(rng, relations, gens, max_arity: int, steps: int = 2) -> OperadPolynomial:
    """Compose a random relation with random monomials from above and below."""
    f = rng.choice(relations)
    for _ in range(steps):
        room = max_arity - f.arity
        if room <= 0:
            break
        if rng.random() < 0.5:
            # f as an argument of a random monomial
            k = rng.randint(2, min(room + 1, 3))
            mu = random_monomial(rng, gens, k)
            pos = rng.randrange(k)
            args = [f if i == pos else Leaf(1) for i in range(k)]
            sizes = [f.arity if i == pos else 1 for i in range(k)]
            f = compose_poly(OperadPolynomial.monomial(mu, f.spec), args, random_shuffle(rng, sizes))
        else:
            # a random monomial plugged into one input of f
            k = rng.randint(2, min(room + 1, 3))
            pos = rng.randrange(f.arity)
            args = [random_monomial(rng, gens, k) if i == pos else Leaf(1) for i in range(f.arity)]
            sizes = [a.arity for a in args]
            f = compose_poly(f, args, random_shuffle(rng, sizes))
    return f * random_coefficient(rng)


# oracles

def brute_shuffles(sizes) -> list[tuple[int, ...]]:
    n = sum(sizes)
    return sorted(p for p in itertools.permutations(range(1, n + 1)) if _is_shuffle_by_definition(p, sizes))


def _is_shuffle_by_definition(p, sizes) -> bool:
    starts = list(itertools.accumulate([0] + list(sizes)))[:-1]
    for s, k in zip(starts, sizes):
        block = p[s:s + k]
        if list(block) != sorted(block):
            return False
    firsts = [p[s] for s in starts]
    return firsts == sorted(firsts)


def closed_form_shuffle_count(sizes) -> Fraction:
    """The closed form prod(k_i)/prod(suffix sums) * multinomial, in exact rationals."""
    n = sum(sizes)
    multinomial = Fraction(factorial(n))
    for k in sizes:
        multinomial /= factorial(k)
    num = Fraction(1)
    den = Fraction(1)
    suffix = 0
    for k in reversed(sizes):
        suffix += k
        num *= k
        den *= suffix
    return num / den * multinomial


def abstract_binary_trees(labels: frozenset):
    """Unordered leaf-labelled binary trees as nested pairs (the block holding the minimum first)."""
    if len(labels) == 1:
        yield next(iter(labels))
        return
    first = min(labels)
    rest = sorted(labels - {first})
    for r in range(0, len(rest)):
        for extra in itertools.combinations(rest, r):
            left = frozenset((first,) + extra)
            right = labels - left
            for a in abstract_binary_trees(left):
                for b in abstract_binary_trees(right):
                    yield (a, b)


def canonical_from_abstract(node, g=m) -> Tree:
    if isinstance(node, int):
        return Leaf(node)
    kids = sorted((canonical_from_abstract(c, g) for c in node), key=lambda c: c.min_leaf)
    return Vertex(g, kids)


def brute_scms(alpha: Tree, beta: Tree):
    """Definition-level small common multiples.

    Every monomial with fewer vertices than ``alpha`` and ``beta`` together
    is tried; a pair of occurrences counts when together they cover every
    vertex.  The coincident occurrence of a tree with itself is dropped.
    """
    gens = sorted({g for t in (alpha, beta) for _, s in vertex_paths(t) for g in [s.gen]},
                  key=lambda g: g.ordinal)
    total = alpha.weight + beta.weight
    found = set()
    for n in range(max(alpha.arity, beta.arity), alpha.arity + beta.arity):
        for gamma in _monomials(tuple(gens), n, total - 1):
            if gamma.weight >= total:
                continue
            vertices = {p for p, _ in vertex_paths(gamma)}
            ea = all_embeddings(gamma, alpha)
            if not ea:
                continue
            eb = all_embeddings(gamma, beta)
            for a in ea:
                va = occurrence_vertices(a.path, alpha)
                for b in eb:
                    if alpha == beta and a.path == b.path:
                        continue
                    if va | occurrence_vertices(b.path, beta) == vertices:
                        found.add((gamma, a.path, b.path))
    return found


@lru_cache(maxsize=None)
def _monomials(gens, n, max_weight):
    return tuple(enumerate_monomials(list(gens), n, max_weight=max_weight))


def rank(rows: list[dict]) -> int:
    """Rank of sparse rational row vectors by Gaussian elimination."""
    pivots: dict = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            key = max(row, key=lambda k: k._key)
            if key in pivots:
                prow = pivots[key]
                factor = row[key] / prow[key]
                for k, v in prow.items():
                    nv = row.get(k, 0) - factor * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                pivots[key] = row
                r += 1
                break
    return r


def naive_quotient_dimension(relations, generators, n: int) -> int:
    """dim F(n) minus the rank of every insertion of every relation into every context.

    Contexts come from occurrences of each relation monomial inside each
    monomial of arity ``n``; no leading terms or normal forms are used.
    """
    monomials = enumerate_monomials(generators, n)
    shapes = {t for r in relations for t in r.monomials()}
    rows = []
    seen = set()
    for gamma in monomials:
        for shape in shapes:
            for e in all_embeddings(gamma, shape):
                ctx = (e.path, e.context)
                if ctx in seen:
                    continue
                seen.add(ctx)
                for r in relations:
                    if r.arity == e.hole_arity:
                        rows.append(dict(substitute(e, r).items()))
    return len(monomials) - rank(rows)


def _distinct_pair(rng, gens, k):
    while True:
        s = random_monomial(rng, gens, k)
        t = random_monomial(rng, gens, k)
        if s != t:
            return s, t


def monotonicity_violations(spec, rng, trials: int, gens=(m, n2, t3), max_arity: int = 8) -> int:
    """Count failures of ``s < t  =>  C[s] < C[t]`` for random shuffle compositions.

    Half the trials put ``s, t`` at the root, half as one argument of a
    random root monomial.
    """
    bad = 0
    for i in range(trials):
        if i % 2 == 0:
            k = rng.randint(2, 4)
            s, t = _distinct_pair(rng, gens, k)
            sizes = [1] * k
            while sum(sizes) < max_arity and rng.random() < 0.7:
                sizes[rng.randrange(k)] += 1
            args = [random_monomial(rng, gens, a) for a in sizes]
            sigma = random_shuffle(rng, sizes)
            left = shuffle_compose(s, args, sigma)
            right = shuffle_compose(t, args, sigma)
        else:
            k = rng.randint(2, 3)
            root = random_monomial(rng, gens, k)
            a = rng.randint(2, max_arity - k + 1)
            s, t = _distinct_pair(rng, gens, a)
            pos = rng.randrange(k)
            others = [random_monomial(rng, gens, 1 if rng.random() < 0.6 else 2) for _ in range(k)]
            args_s = [s if j == pos else others[j] for j in range(k)]
            args_t = [t if j == pos else others[j] for j in range(k)]
            sigma = random_shuffle(rng, [x.arity for x in args_s])
            left = shuffle_compose(root, args_s, sigma)
            right = shuffle_compose(root, args_t, sigma)
        if (spec.key(s) < spec.key(t)) != (spec.key(left) < spec.key(right)):
            bad += 1
    return bad


def total_order_violations(spec, rng, trials: int, gens=(m, n2, t3)) -> int:
    """Antisymmetry, totality, transitivity and agreement with equality on random triples."""
    from opgb.orderings import compare
    bad = 0
    for _ in range(trials):
        arities = [rng.randint(2, 5) for _ in range(3)]
        if rng.random() < 0.7:
            arities = [arities[0]] * 3
        x, y, z = (random_monomial(rng, gens, a) for a in arities)
        if rng.random() < 0.1:
            y = random_monomial(random.Random(0), gens, arities[0])
            x = random_monomial(random.Random(0), gens, arities[0])
        cxy, cyx = compare(spec, x, y), compare(spec, y, x)
        if cxy != -cyx or (cxy == 0) != (x == y):
            bad += 1
            continue
        cyz, cxz = compare(spec, y, z), compare(spec, x, z)
        if cxy <= 0 and cyz <= 0 and cxz > 0:
            bad += 1
        elif cxy >= 0 and cyz >= 0 and cxz < 0:
            bad += 1
    return bad


def random_divisor(rng, alpha: Tree) -> Tree:
    """A random connected sub-occurrence of ``alpha``, relabelled into a monomial."""
    from opgb.trees import divisor_monomial
    _, sub = rng.choice(list(vertex_paths(alpha)))

    def cut(node, top):
        if isinstance(node, Leaf) or (not top and rng.random() < 0.4):
            return Leaf(node.min_leaf)
        return Vertex(node.gen, [cut(c, False) for c in node.children])

    return divisor_monomial(cut(sub, True))


def random_scm_pair(rng, max_total: int = 7):
    """Two random monomials with arity(alpha) + arity(beta) <= max_total."""
    gens = rng.choice([[m], [m, n2], [m, t3], [m, n2, t3]])
    a = rng.randint(2, max_total - 2)
    b = rng.randint(2, max_total - a)
    alpha = random_monomial(rng, gens, a)
    beta = random_monomial(rng, gens, b)
    return alpha, beta
