"""Permutations stored as image lists, and shuffle permutations.

A permutation of degree n is a tuple ``p`` with ``p[i-1]`` the image of
``i``.  Shuffle permutations of type ``(k1, ..., kn)`` are increasing on
each consecutive block and send the first elements of the blocks to an
increasing sequence.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Sequence

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, image in enumerate(p, 1):
        out[image - 1] = i
    return tuple(out)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p o q``: apply ``q`` first."""
    return tuple(p[i - 1] for i in q)


def _check_sizes(block_sizes: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(block_sizes)
    if not sizes:
        raise ValueError("block sizes must be a nonempty list")
    if any(k < 1 for k in sizes):
        raise ValueError(f"block sizes must be positive, got {list(sizes)}")
    return sizes


def is_shuffle_permutation(p: Sequence[int], block_sizes: Sequence[int]) -> bool:
    sizes = _check_sizes(block_sizes)
    if len(p) != sum(sizes) or not is_permutation(p):
        return False
    start = 0
    prev_first = 0
    for k in sizes:
        block = p[start:start + k]
        if block[0] <= prev_first:
            return False
        if any(a >= b for a, b in zip(block, block[1:])):
            return False
        prev_first = block[0]
        start += k
    return True


@lru_cache(maxsize=None)
def _shuffles(sizes: tuple[int, ...]) -> tuple[Permutation, ...]:
    total = sum(sizes)
    if total == 0:
        return ((),)
    out = []
    for b, k in enumerate(sizes):
        # the preimage of the largest label closes its block; a singleton
        # block can only take it when it is the last block
        if k == 1 and b != len(sizes) - 1:
            continue
        reduced = list(sizes)
        reduced[b] -= 1
        pos = sum(sizes[:b + 1]) - 1
        for p in _shuffles(tuple(k for k in reduced if k)):
            out.append(p[:pos] + (total,) + p[pos:])
    out.sort()
    return tuple(out)


def shuffle_permutations(block_sizes: Sequence[int]) -> list[Permutation]:
    """All shuffle permutations of the given type, in lexicographic order.

    >>> shuffle_permutations([2, 1])
    [(1, 2, 3), (1, 3, 2)]
    """
    return list(_shuffles(_check_sizes(block_sizes)))


def count_shuffle_permutations(block_sizes: Sequence[int]) -> int:
    """Closed-form count: ``prod(k) / prod(suffix sums) * multinomial``."""
    sizes = _check_sizes(block_sizes)
    total = sum(sizes)
    multinomial = factorial(total) // prod(factorial(k) for k in sizes)
    suffixes = prod(sum(sizes[i:]) for i in range(len(sizes)))
    num = prod(sizes) * multinomial
    assert num % suffixes == 0
    return num // suffixes


def reorder_by_images(sigma: Sequence[int], items: Sequence) -> list:
    """Place ``items[i]`` at position ``sigma[i]``: pair, sort by image, strip."""
    if len(sigma) != len(items):
        raise ValueError(f"permutation of degree {len(sigma)} applied to {len(items)} items")
    return [item for _, item in sorted(zip(sigma, items), key=lambda pair: pair[0])]


def compositions(n: int, k: int) -> list[tuple[int, ...]]:
    """Ordered ways to write ``n`` as a sum of ``k`` positive integers."""
    if k == 0:
        return [()] if n == 0 else []
    if k == 1:
        return [(n,)] if n >= 1 else []
    out = []
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            out.append((first,) + rest)
    return out
