"""Signed permutations: descent and peak statistics, shuffles, representatives.

A signed permutation is a tuple of nonzero ints with distinct absolute
values. The absolute values may be any set of positive integers, so a word on
the shifted alphabet ``[n+1, n+m]`` is still a signed permutation. Unsigned
permutations are the all-positive case.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

from .compositions import (
    Composition,
    CompositionError,
    DescentSet,
    PseudoComposition,
    as_pseudo,
    from_descent_set,
    split_first,
)

SignedPermutation = tuple[int, ...]


def signed_permutation(letters: Iterable[int]) -> SignedPermutation:
    p = tuple(int(x) for x in letters)
    if any(x == 0 for x in p):
        raise ValueError(f"signed permutation letters must be nonzero: {p}")
    if len({abs(x) for x in p}) != len(p):
        raise ValueError(f"absolute values must be distinct: {p}")
    return p


def ground_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(abs(x) for x in p)


def _require_unsigned(p):
    if any(x < 0 for x in p):
        raise ValueError(f"expected an unsigned permutation, got {p}")


def descent_set_b(p: Sequence[int]) -> DescentSet:
    """Positions ``i`` in ``[0, n-1]`` with ``p_i > p_{i+1}``, where ``p_0 = 0``."""
    p = signed_permutation(p)
    w = (0, *p)
    return DescentSet(len(p), frozenset(i for i in range(len(p)) if w[i] > w[i + 1]))


def descent_set_a(p: Sequence[int]) -> DescentSet:
    """Ordinary descent set of an unsigned permutation (positions ``1..n-1``)."""
    p = signed_permutation(p)
    _require_unsigned(p)
    return DescentSet(len(p), frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i]))


def descent_composition(p: Sequence[int], embed: bool = False) -> PseudoComposition:
    """Lengths of the increasing runs, with a leading 0 part when ``p_1 < 0``.

    For unsigned input this is the ordinary descent composition; pass
    ``embed=True`` to get it 0-prefixed, as a type A index inside BQ.
    """
    c = from_descent_set(descent_set_b(p))
    if embed:
        _require_unsigned(p)
        return (0, *c) if c else ()
    return c


def peak_set(p: Sequence[int]) -> DescentSet:
    """Interior peaks ``i`` in ``[2, n-1]`` (1-based) of an unsigned permutation."""
    p = signed_permutation(p)
    _require_unsigned(p)
    n = len(p)
    # p[i-1] is the 1-based letter p_i
    peaks = {i for i in range(2, n) if p[i - 2] < p[i - 1] > p[i]}
    return DescentSet(n, frozenset(peaks))


def peak_set_b(p: Sequence[int]) -> DescentSet:
    """Type B peaks in ``[0, n-1]`` with ``p_0 = 0`` and ``p_{-1} = -inf``."""
    p = signed_permutation(p)
    n = len(p)
    w = (float("-inf"), 0, *p)  # w[i + 1] is p_i
    return DescentSet(n, frozenset(i for i in range(n) if w[i] < w[i + 1] > w[i + 2]))


def peak_composition(p: Sequence[int]) -> Composition:
    return from_descent_set(peak_set(p))


def peak_composition_b(p: Sequence[int]) -> PseudoComposition:
    return from_descent_set(peak_set_b(p))


def shift(t: Sequence[int], n: int) -> SignedPermutation:
    """Add ``n`` to every absolute value, keeping signs."""
    return tuple(x + n if x > 0 else x - n for x in signed_permutation(t))


def shuffles(s: Sequence[int], t: Sequence[int]) -> list[SignedPermutation]:
    """All interleavings of ``s`` and ``t`` that keep each word's letter order.

    Output order is deterministic: by the set of positions taken by ``s``,
    in lexicographic order.
    """
    s, t = signed_permutation(s), signed_permutation(t)
    if ground_set(s) & ground_set(t):
        raise ValueError(f"shuffled words must use disjoint letters: {s}, {t}")
    n, m = len(s), len(t)
    out = []
    for positions in itertools.combinations(range(n + m), n):
        word = [0] * (n + m)
        si, ti = iter(s), iter(t)
        chosen = set(positions)
        for k in range(n + m):
            word[k] = next(si) if k in chosen else next(ti)
        out.append(tuple(word))
    return out


def representative(a: PseudoComposition) -> SignedPermutation:
    """A signed permutation with descent composition ``a``.

    Runs are filled right to left with the smallest unused values of the pool,
    each run increasing. The pool is ``1..n`` when ``a`` has positive first
    part and ``-n..-1`` otherwise.
    """
    a = as_pseudo(a)
    first, tail = split_first(a)
    n = sum(a)
    if first > 0:
        runs, pool = list(a), list(range(1, n + 1))
    else:
        runs, pool = list(tail), list(range(-n, 0))
    blocks = []
    for r in reversed(runs):
        blocks.append(pool[:r])
        pool = pool[r:]
    return tuple(x for block in reversed(blocks) for x in block)


def permutations_of(n: int) -> Iterator[SignedPermutation]:
    return itertools.permutations(range(1, n + 1))


def signed_permutations_of(n: int) -> Iterator[SignedPermutation]:
    """All ``2^n n!`` signed permutations of ``[n]``."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, perm))


def descent_class(a: PseudoComposition) -> list[SignedPermutation]:
    """Every signed permutation of ``[n]`` whose descent composition is ``a``."""
    a = as_pseudo(a)
    return [p for p in signed_permutations_of(sum(a)) if descent_composition(p) == a]


def parse_permutation(text: str) -> SignedPermutation:
    """Parse a literal such as ``"(-3,2,-4,5,1)"``; whitespace also separates letters."""
    body = text.strip()
    if body[:1] in "([" and body[-1:] in ")]":
        body = body[1:-1]
    if not body.strip():
        return ()
    try:
        return signed_permutation(int(x) for x in re.split(r"[,\s]+", body.strip()))
    except ValueError as exc:
        raise CompositionError(f"bad permutation literal {text!r}: {exc}") from None
