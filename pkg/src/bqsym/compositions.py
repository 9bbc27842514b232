"""Compositions, pseudo-compositions and their combinatorial transforms.

Everything here is a plain tuple of ints. A *composition* has positive
parts; a *pseudo-composition* may additionally start with a 0. Degree 0 is
always the empty tuple, and ``(0,)`` is normalized to it.

The refinement order is handled through descent sets (proper prefix sums):
``a <= b`` exactly when the descent set of ``a`` is contained in that of ``b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Composition = tuple[int, ...]
PseudoComposition = tuple[int, ...]


class CompositionError(ValueError):
    """Raised for malformed compositions or incompatible arguments."""


def as_pseudo(parts: Iterable[int]) -> PseudoComposition:
    """Validate and normalize a pseudo-composition."""
    p = tuple(int(x) for x in parts)
    if p == (0,):
        return ()
    if p and p[0] < 0:
        raise CompositionError(f"first part must be >= 0, got {p}")
    if any(x < 1 for x in p[1:]):
        raise CompositionError(f"parts after the first must be >= 1, got {p}")
    return p


def as_composition(parts: Iterable[int]) -> Composition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise CompositionError(f"composition parts must be >= 1, got {p}")
    return p


def split_first(a: PseudoComposition) -> tuple[int, Composition]:
    """Split ``a`` into its x0-exponent and the trailing ordinary composition."""
    if not a:
        return 0, ()
    return a[0], a[1:]


def join_first(first: int, tail: Sequence[int]) -> PseudoComposition:
    """Inverse of :func:`split_first`; ``join_first(0, ())`` is the empty index."""
    if first == 0 and not tail:
        return ()
    return (first, *tail)


def embed(alpha: Composition) -> PseudoComposition:
    """Type A composition -> its 0-prefixed pseudo-composition."""
    return join_first(0, as_composition(alpha))


def is_type_a(a: PseudoComposition) -> bool:
    """True when ``M_a`` has no x0 content (first part 0, or the empty index)."""
    return not a or a[0] == 0


def degree(a: Sequence[int]) -> int:
    return sum(a)


def length(a: Sequence[int]) -> int:
    return len(a)


@dataclass(frozen=True)
class DescentSet:
    """A subset of ``{0, ..., n-1}``; type A descent sets never contain 0."""

    n: int
    elements: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        bad = [e for e in self.elements if not 0 <= e < max(self.n, 0)]
        if bad:
            raise CompositionError(f"descent positions {sorted(bad)} outside [0, {self.n - 1}]")

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, i):
        return i in self.elements

    def __str__(self):
        return "{" + ",".join(str(i) for i in self) + "}"


def descent_set(a: PseudoComposition) -> DescentSet:
    """Proper prefix sums of ``a``. Contains 0 iff the first part is 0."""
    a = as_pseudo(a)
    sums = list(itertools.accumulate(a))[:-1]
    return DescentSet(sum(a), frozenset(sums))


def from_descent_set(s: DescentSet | Iterable[int], n: int | None = None) -> PseudoComposition:
    """Rebuild the pseudo-composition whose descent set is ``s``.

    Accepts either a :class:`DescentSet` or an iterable of positions together
    with ``n``.
    """
    if not isinstance(s, DescentSet):
        if n is None:
            raise CompositionError("n is required when s is not a DescentSet")
        s = DescentSet(n, frozenset(s))
    cuts = [0, *sorted(s.elements), s.n]
    if s.n == 0:
        return ()
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def _check_same_degree(a, b):
    if sum(a) != sum(b):
        raise CompositionError(f"degree mismatch: {a} has degree {sum(a)}, {b} has degree {sum(b)}")


def leq(a: PseudoComposition, b: PseudoComposition) -> bool:
    """Refinement order: ``b`` refines ``a``."""
    _check_same_degree(a, b)
    return descent_set(a).elements <= descent_set(b).elements


def _subsets(items: Sequence[int]):
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def refinements(a: PseudoComposition, type_a: bool = False) -> list[PseudoComposition]:
    """All ``b`` with ``a <= b``.

    With ``type_a=True``, ``a`` is an ordinary composition and only ordinary
    compositions are produced (descent position 0 is excluded).
    """
    a = as_composition(a) if type_a else as_pseudo(a)
    d = descent_set(a)
    lo = 1 if type_a else 0
    free = [i for i in range(lo, d.n) if i not in d]
    out = [from_descent_set(d.elements | set(extra), d.n) for extra in _subsets(free)]
    return sorted(out)


def coarsenings(a: PseudoComposition) -> list[PseudoComposition]:
    """All ``b`` with ``b <= a``."""
    d = descent_set(a)
    return sorted(from_descent_set(sub, d.n) for sub in _subsets(sorted(d.elements)))


def concatenate(b: Sequence[int], c: Sequence[int]) -> PseudoComposition:
    b, c = as_pseudo(b), as_pseudo(c)
    if b and c and c[0] == 0:
        raise CompositionError(f"concatenating {b} and {c} would create an internal zero part")
    return as_pseudo(b + c)


def reverse(a: Composition) -> Composition:
    return as_composition(a)[::-1]


def star(b: PseudoComposition) -> PseudoComposition:
    """Split every part ``>= 2`` after the first into ``(1, part - 1)``."""
    b = as_pseudo(b)
    if not b:
        return ()
    out = [b[0]]
    for p in b[1:]:
        out.extend((1, p - 1) if p >= 2 else (p,))
    return tuple(out)


def hat(a: Composition) -> Composition:
    """Merge every run of 1's into the next part to its right.

    A trailing run with no part to its right becomes one part equal to its
    length, so ``(2, 1, 1) -> (2, 2)`` and ``(1, 1) -> (2,)``.
    """
    out = []
    run = 0
    for p in as_composition(a):
        if p == 1:
            run += 1
        else:
            out.append(p + run)
            run = 0
    if run:
        out.append(run)
    return tuple(out)


def hat_b(a: PseudoComposition) -> PseudoComposition:
    a = as_pseudo(a)
    if not a:
        return ()
    return (a[0], *hat(a[1:]))


def is_peak_composition(a: Sequence[int]) -> bool:
    """Compositions whose parts are all > 1 except possibly the last."""
    a = tuple(a)
    if any(x < 1 for x in a):
        return False
    return all(x > 1 for x in a[:-1])


def is_peak_pseudo_composition(a: Sequence[int]) -> bool:
    a = as_pseudo(a)
    return all(x > 1 for x in a[1:-1])


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    return tuple((first, *rest) for first in range(1, n + 1) for rest in _compositions(n - first))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n < 0:
        raise CompositionError("n must be nonnegative")
    return list(_compositions(n))


def pseudo_compositions_of(n: int) -> list[PseudoComposition]:
    """Every composition of ``n`` together with its 0-prefixed twin, sorted."""
    if n == 0:
        return [()]
    comps = compositions_of(n)
    return sorted(comps + [(0, *c) for c in comps])


def peak_compositions_of(n: int) -> list[Composition]:
    return [c for c in compositions_of(n) if is_peak_composition(c)]


def peak_pseudo_compositions_of(n: int) -> list[PseudoComposition]:
    return [c for c in pseudo_compositions_of(n) if is_peak_pseudo_composition(c)]


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed with ``f(0) = f(1) = 1``."""
    if n < 0:
        raise ValueError("fibonacci index must be nonnegative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a
