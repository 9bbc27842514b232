"""Peak functions of types A and B and the projections onto the peak algebras.

``K_a`` is defined for any pseudo-composition ``a``:

* type B: ``K_a = sum_{b, a <= star(b)} 2^{l(b)-1} M_b`` over pseudo-compositions ``b``
* type A: ``K_a = sum_{b, a <= star(b)} 2^{l(b)} M_b`` over compositions ``b``

K-tagged terms inside a :class:`~bqsym.qsym.QSymElement` always use the
type B formula. At peak indices ``K^B_{(0, a)}`` coincides with the type A
``K^A_a`` (checked in the test suite), so a leading 0 still reads as type A.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Literal

from .compositions import (
    CompositionError,
    DescentSet,
    PseudoComposition,
    as_composition,
    as_pseudo,
    compositions_of,
    descent_set,
    fibonacci,
    from_descent_set,
    hat,
    hat_b,
    is_peak_composition,
    is_peak_pseudo_composition,
    is_type_a,
    peak_compositions_of,
    peak_pseudo_compositions_of,
    pseudo_compositions_of,
    star,
    _subsets,
)
from .permutations import peak_composition, peak_composition_b, representative, shift, shuffles
from .qsym import (
    NotTypeAError,
    QSymElement,
    _add_into,
    _clean,
    _to_mdict,
    to_fundamental,
)

Flavor = Literal["A", "B"]


def _type_a_parts(a) -> tuple[int, ...]:
    a = tuple(a)
    if a and a[0] == 0:
        a = a[1:]
    return as_composition(a)


@lru_cache(maxsize=None)
def _k_b(a: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    if not a:
        return (((), 1),)
    d = descent_set(a).elements
    return tuple(
        (b, 2 ** (len(b) - 1))
        for b in pseudo_compositions_of(sum(a))
        if d <= descent_set(star(b)).elements
    )


@lru_cache(maxsize=None)
def _k_a(alpha: tuple[int, ...]) -> tuple[tuple[PseudoComposition, int], ...]:
    d = descent_set(alpha).elements
    return tuple(
        ((0, *b) if b else (), 2 ** len(b))
        for b in compositions_of(sum(alpha))
        if d <= descent_set(star(b)).elements
    )


def k_monomial_expansion(a: PseudoComposition) -> dict[PseudoComposition, int]:
    """Type B ``K_a`` as ``{b: coeff}`` in the M basis. ``K_() = 1``."""
    return dict(_k_b(as_pseudo(a)))


def _k_monomial_expansion_a(alpha: tuple[int, ...]) -> dict[PseudoComposition, int]:
    return dict(_k_a(alpha))


def k_function(a: Iterable[int], flavor: Flavor = "B") -> QSymElement:
    """Monomial expansion of ``K_a``.

    With ``flavor="A"``, ``a`` is an ordinary composition (a leading 0 is
    tolerated and dropped) and the result is embedded in BQ with 0-prefixed
    indices.
    """
    if flavor == "A":
        return QSymElement._from_mdict(_k_monomial_expansion_a(_type_a_parts(a)))
    if flavor == "B":
        return QSymElement._from_mdict(k_monomial_expansion(as_pseudo(a)))
    raise ValueError(f"flavor must be 'A' or 'B', got {flavor!r}")


def is_valid_peak_set(peaks: Iterable[int], n: int, flavor: Flavor = "B") -> bool:
    s = sorted(set(peaks))
    lo = 2 if flavor == "A" else 0
    if any(not lo <= i <= n - 1 for i in s):
        return False
    return all(b - a > 1 for a, b in zip(s, s[1:]))


def k_function_set_form(peaks: DescentSet | Iterable[int], n: int | None = None, flavor: Flavor = "B") -> QSymElement:
    """``K`` indexed by a peak set ``P``: sum over ``S`` with ``P`` inside ``S | (S+1)``.

    Type A sums over ``S`` in ``[1, n-1]`` with weight ``2^{|S|+1}``; type B
    sums over ``S`` in ``[0, n-1]`` with weight ``2^{|S|}``.
    """
    if isinstance(peaks, DescentSet):
        n, peaks = peaks.n, peaks.elements
    if n is None:
        raise ValueError("n is required")
    peaks = frozenset(peaks)
    if not is_valid_peak_set(peaks, n, flavor):
        raise CompositionError(f"{sorted(peaks)} is not a valid type {flavor} peak set for n={n}")
    if n == 0:
        return QSymElement._from_mdict({(): 1})
    lo, bonus = (1, 1) if flavor == "A" else (0, 0)
    acc: dict = {}
    for sub in _subsets(range(lo, n)):
        s = set(sub)
        if peaks <= s | {i + 1 for i in s}:
            b = from_descent_set(s, n)
            if flavor == "A":
                b = (0, *b)
            _add_into(acc, b, 2 ** (len(s) + bonus))
    return QSymElement._from_mdict(acc)


def k_in_f(a: Iterable[int], flavor: Flavor = "B") -> QSymElement:
    """F-basis expansion of ``K_a``."""
    return to_fundamental(k_function(a, flavor))


# projections -------------------------------------------------------------

def _theta_generic(x: QSymElement, image, basis: str) -> QSymElement:
    acc: dict = {}
    for (_, a), c in to_fundamental(x).items():
        if basis == "K":
            key, expansion = image(a)
            _add_into(acc, key, c)
        else:
            _, expansion = image(a)
            for b, e in expansion.items():
                _add_into(acc, b, c * e)
    acc = _clean(acc)
    if basis == "K":
        return QSymElement({("K", k): c for k, c in acc.items()})
    return QSymElement._from_mdict(acc)


def _theta_a_image(a):
    alpha = hat(a[1:]) if a else ()
    return ((0, *alpha) if alpha else ()), _k_monomial_expansion_a(alpha)


def _theta_b_image(a):
    idx = hat_b(a)
    return idx, k_monomial_expansion(idx)


def theta(x: QSymElement, basis: str = "M") -> QSymElement:
    """Stembridge's projection ``F_alpha -> K_{hat(alpha)}`` on type A elements.

    Returns the M-basis expansion (built from the type A ``K`` formula), or the
    K-tagged symbols with ``basis="K"``.
    """
    bad = [p for p in _to_mdict(x) if not is_type_a(p)]
    if bad:
        raise NotTypeAError(f"theta needs a type A element; offending index {bad[0]}")
    return _theta_generic(x, _theta_a_image, basis)


def theta_b(x: QSymElement, basis: str = "M") -> QSymElement:
    """``F_a -> K_{hat_b(a)}``, extended linearly."""
    return _theta_generic(x, _theta_b_image, basis)


# rank computations -------------------------------------------------------

def integer_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = max((len(r) for r in rows), default=0)
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            if r[col]:
                new = [p[col] * u - r[col] * v for u, v in zip(r, p)]
                g = 0
                for v in new:
                    g = gcd(g, v)
                rows[i] = [v // g for v in new] if g > 1 else new
        rank += 1
    return rank


def _rank_of(elements: list[QSymElement], n: int, flavor: Flavor) -> int:
    cols = pseudo_compositions_of(n)
    rows = []
    for x in elements:
        m = _to_mdict(x)
        rows.append([m.get(b, 0) for b in cols])
    return integer_rank(rows)


def peak_indices(n: int, flavor: Flavor = "B") -> list[PseudoComposition]:
    if flavor == "A":
        return peak_compositions_of(n)
    return peak_pseudo_compositions_of(n)


def k_basis_rank(n: int, flavor: Flavor = "B") -> int:
    """Rank of ``{K_a : a a peak index of degree n}``."""
    return _rank_of([k_function(a, flavor) for a in peak_indices(n, flavor)], n, flavor)


def theta_image_rank(n: int, flavor: Flavor = "B") -> int:
    """Rank of the image of the degree-n F basis under theta (A) or theta_b (B)."""
    if flavor == "A":
        images = [theta(QSymElement({("F", (0, *c) if c else ()): 1})) for c in compositions_of(n)]
    else:
        images = [theta_b(QSymElement({("F", a): 1})) for a in pseudo_compositions_of(n)]
    return _rank_of(images, n, flavor)


def expected_peak_dimension(n: int, flavor: Flavor = "B") -> int:
    """``f_{n-1}`` for type A and ``f_{n+1}`` for type B; degree 0 is the unit."""
    if flavor == "A":
        return 1 if n == 0 else fibonacci(n - 1)
    return fibonacci(n + 1)


# shuffle identity for K ------------------------------------------------------

def k_shuffle_sum(a: Iterable[int], b: Iterable[int], flavor: Flavor = "B") -> QSymElement:
    """``sum_{p in Sh(s, t)} K_{peak(p)}`` for representatives ``s`` of ``a`` and ``t`` of ``b``."""
    if flavor == "A":
        a, b = _type_a_parts(a), _type_a_parts(b)
        stat = peak_composition
    else:
        a, b = as_pseudo(a), as_pseudo(b)
        stat = peak_composition_b
    sigma = representative(a)
    tau = shift(representative(b), sum(a))
    acc: dict = {}
    for pi in shuffles(sigma, tau):
        for g, e in _to_mdict(k_function(stat(pi), flavor)).items():
            _add_into(acc, g, e)
    return QSymElement._from_mdict(_clean(acc))


def k_multiply_check(a: Iterable[int], b: Iterable[int], flavor: Flavor = "B") -> bool:
    """Does ``K_a K_b`` equal the shuffle sum of peak statistics?"""
    a, b = tuple(a), tuple(b)
    check = is_peak_composition if flavor == "A" else is_peak_pseudo_composition
    for idx in (a, b):
        parts = _type_a_parts(idx) if flavor == "A" else idx
        if not check(parts):
            raise CompositionError(f"{idx} is not a type {flavor} peak index")
    return k_function(a, flavor) * k_function(b, flavor) == k_shuffle_sum(a, b, flavor)

