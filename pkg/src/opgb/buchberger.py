"""Reduction, S-polynomials and the Buchberger completion for shuffle operads."""
from __future__ import annotations

import heapq
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Sequence

from .division import first_embedding, iter_embeddings, reconstruct, substitute, divides
from .orderings import DEFAULT_ORDERING, OrderingSpec
from .polynomials import OperadPolynomial
from .scm import small_common_multiples
from .symmetrize import GeneratorAction, orbit_closure
from .trees import Generator, Tree, enumerate_monomials

log = logging.getLogger(__name__)


@dataclass
class Presentation:
    generators: list[Generator]
    relations: list[OperadPolynomial]
    spec: OrderingSpec = DEFAULT_ORDERING
    actions: GeneratorAction | None = None

    def with_spec(self, spec: OrderingSpec) -> "Presentation":
        return Presentation(self.generators, [r.with_spec(spec) for r in self.relations], spec, self.actions)

    def symmetrized(self) -> "Presentation":
        """Relations closed under the symmetric groups (a no-op without action data)."""
        if not self.actions:
            return self
        return Presentation(self.generators, orbit_closure(self.relations, self.actions), self.spec, self.actions)


@dataclass
class GroebnerResult:
    basis: list[OperadPolynomial]
    generators: list[Generator]
    spec: OrderingSpec
    truncation_arity: int | None = None
    complete: bool = True
    quadratic: bool = True
    rounds: int = 0
    stats: dict = field(default_factory=dict)

    def normal_monomials(self, n: int) -> list[Tree]:
        return normal_monomials(self, self.generators, n)

    def dimension(self, n: int) -> int:
        return dimension(self, self.generators, n)

    def dims(self, upto: int) -> dict[int, int]:
        return {n: self.dimension(n) for n in range(1, upto + 1)}


class _Desc:
    # max-heap entry
    __slots__ = ("key", "tree")

    def __init__(self, key, tree):
        self.key = key
        self.tree = tree

    def __lt__(self, other):
        return self.key > other.key


def normal_form(f: OperadPolynomial, G: Sequence[OperadPolynomial], rng: Random | None = None) -> OperadPolynomial:
    """Fully reduce ``f`` modulo ``G``.

    Terms are handled from the largest down.  By default the first element
    of ``G`` whose leading term divides the current term is used, at its
    first occurrence in pre-order; with ``rng`` both choices are random.
    """
    if not f:
        return f
    spec = f.spec
    basis = [(g.leading_term(), g.leading_coefficient(), g) for g in G if g]
    if not basis:
        return f
    work = dict(f.items())
    heap = [_Desc(spec.key(t), t) for t in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        t = heapq.heappop(heap).tree
        c = work.pop(t, None)
        if c is None:
            continue
        hit = None
        if rng is None:
            for lt, lc, g in basis:
                e = first_embedding(t, lt)
                if e is not None:
                    hit = (e, lc, g)
                    break
        else:
            options = [(e, lc, g) for lt, lc, g in basis for e in iter_embeddings(t, lt)]
            if options:
                hit = rng.choice(options)
        if hit is None:
            out[t] = c
            continue
        e, lc, g = hit
        factor = c / lc
        terms = iter(g.items())
        next(terms)  # the leading term cancels t
        for s, d in terms:
            u = reconstruct(e, s)
            v = work.get(u, 0) - factor * d
            if v:
                if u not in work:
                    heapq.heappush(heap, _Desc(spec.key(u), u))
                work[u] = v
            else:
                work.pop(u, None)
    return OperadPolynomial(out, spec)


def s_polynomial(f: OperadPolynomial, g: OperadPolynomial, scm) -> OperadPolynomial:
    ratio = f.leading_coefficient() / g.leading_coefficient()
    return substitute(scm.emb_a, f) - substitute(scm.emb_b, g) * ratio


def s_polynomials(f: OperadPolynomial, g: OperadPolynomial) -> list[OperadPolynomial]:
    """One S-polynomial per small common multiple of the leading terms."""
    if not f or not g:
        return []
    return [s_polynomial(f, g, scm) for scm in small_common_multiples(f.leading_term(), g.leading_term())]


def is_quadratic(G: Iterable[OperadPolynomial]) -> bool:
    return all(g.weights() == {2} for g in G)


class _Completion:
    def __init__(self, spec: OrderingSpec, max_arity: int | None):
        self.spec = spec
        self.max_arity = max_arity
        self.elements: dict[int, OperadPolynomial] = {}
        self.pending: list = []
        self.skipped: dict[tuple[int, int], int] = {}
        self.ids = itertools.count()
        self.seq = itertools.count()
        self.round = 0
        self.stats = {"s_polynomials": 0, "reduced_to_zero": 0, "added": 0, "removed": 0, "skipped": 0}

    def basis(self) -> list[OperadPolynomial]:
        return list(self.elements.values())

    def insert(self, h: OperadPolynomial) -> bool:
        h = normal_form(h, self.basis())
        if not h:
            return False
        h = h.monic()
        lt = h.leading_term()
        victims = [i for i, g in self.elements.items() if divides(g.leading_term(), lt)]
        removed = [self.elements.pop(i) for i in victims]
        self.stats["removed"] += len(removed)
        nid = next(self.ids)
        self.elements[nid] = h
        self.stats["added"] += 1
        self._queue_pairs(nid)
        for g in removed:
            self.insert(g)
        return True

    def _queue_pairs(self, nid: int):
        f = self.elements[nid]
        for oid, g in list(self.elements.items()):
            scms = small_common_multiples(f.leading_term(), g.leading_term())
            if oid == nid:
                # mirrored records give S-polynomials differing only by sign
                scms = [s for s in scms if s.emb_a.path <= s.emb_b.path]
            for scm in scms:
                a = scm.multiple.arity
                if self.max_arity is not None and a > self.max_arity:
                    self.skipped[(nid, oid)] = self.skipped.get((nid, oid), 0) + 1
                    continue
                heapq.heappush(self.pending, (a, self.round, next(self.seq), nid, oid, scm))

    def pop_batch(self) -> list[OperadPolynomial]:
        arity = self.pending[0][0]
        batch = []
        while self.pending and self.pending[0][0] == arity:
            _, _, _, i, j, scm = heapq.heappop(self.pending)
            if i in self.elements and j in self.elements:
                batch.append(s_polynomial(self.elements[i], self.elements[j], scm))
        return batch

    def tail_reduce(self):
        for i in list(self.elements):
            g = self.elements[i]
            lt = g.leading_term()
            head = OperadPolynomial({lt: g.leading_coefficient()}, self.spec)
            tail = g - head
            if not tail:
                continue
            others = [h for j, h in self.elements.items() if j != i]
            reduced = normal_form(tail, others)
            if reduced != tail:
                self.elements[i] = head + reduced

    def live_skips(self) -> int:
        return sum(n for (i, j), n in self.skipped.items() if i in self.elements and j in self.elements)


def buchberger(p: Presentation, max_arity: int | None = None, max_rounds: int | None = None,
               threads: int = 1) -> GroebnerResult:
    """Complete the relations of ``p`` to a Gröbner basis.

    S-polynomials are processed in rounds, smallest arity first; each round
    reduces its batch against a frozen copy of the basis (optionally in a
    thread pool) and merges the results in batch order, so the output does
    not depend on ``threads``.  With ``max_arity`` every S-polynomial of a
    larger arity is skipped and the basis is exact up to that arity;
    ``complete`` is False if anything was skipped or ``max_rounds`` ran out.
    """
    spec = p.spec
    state = _Completion(spec, max_arity)
    for r in p.relations:
        state.insert(r.with_spec(spec))
    state.tail_reduce()
    rounds = 0
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while state.pending:
            if max_rounds is not None and rounds >= max_rounds:
                break
            rounds += 1
            state.round = rounds
            batch = state.pop_batch()
            state.stats["s_polynomials"] += len(batch)
            snapshot = state.basis()
            if pool is not None:
                reduced = list(pool.map(lambda s: normal_form(s, snapshot), batch))
            else:
                reduced = [normal_form(s, snapshot) for s in batch]
            for h in reduced:
                if not h:
                    state.stats["reduced_to_zero"] += 1
                else:
                    state.insert(h)
            state.tail_reduce()
            log.debug("round %d: basis %d, pending %d", rounds, len(state.elements), len(state.pending))
    finally:
        if pool is not None:
            pool.shutdown()
    state.stats["skipped"] = state.live_skips()
    basis = sorted(state.basis(), key=lambda g: spec.key(g.leading_term()))
    return GroebnerResult(
        basis=basis,
        generators=list(p.generators),
        spec=spec,
        truncation_arity=max_arity,
        complete=not state.pending and state.stats["skipped"] == 0,
        quadratic=is_quadratic(basis),
        rounds=rounds,
        stats=dict(state.stats),
    )


def normal_monomials(G, generators: Sequence[Generator], n: int) -> list[Tree]:
    """Monomials of arity ``n`` divisible by no leading term of ``G``.

    ``G`` is a list of elements or a :class:`GroebnerResult`; the latter
    refuses arities above its truncation.
    """
    if isinstance(G, GroebnerResult):
        if G.truncation_arity is not None and n > G.truncation_arity:
            raise ValueError(f"basis was truncated at arity {G.truncation_arity}; cannot answer arity {n}")
        G = G.basis
    lts = [g.leading_term() for g in G if g]
    return [t for t in enumerate_monomials(generators, n) if not any(divides(t, lt) for lt in lts)]


def dimension(G, generators: Sequence[Generator], n: int) -> int:
    return len(normal_monomials(G, generators, n))
