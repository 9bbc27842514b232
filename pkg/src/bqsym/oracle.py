"""Brute-force ground truth: quasisymmetric functions as explicit polynomials.

Every element is expanded into an exact polynomial in finitely many
variables ``x0, x1, ..., xN`` (and, for coproducts, a second copy
``y0, ..., yN``). Nothing here calls the product, coproduct or antipode code
in :mod:`bqsym.qsym`; only the M-basis conversion is shared.

Truncating at ``N = degree`` is faithful: an M-index of degree ``n`` has at
most ``n`` parts after the first, so distinct indices still have distinct
"packed" monomials ``x0^{a_1} x1^{a_2} ... x_{k-1}^{a_k}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

from .compositions import PseudoComposition, as_pseudo, descent_set, join_first, split_first
from .qsym import QSymElement, TensorElement, _to_mdict

Exponent = tuple[int, ...]
Mode = Literal["a", "b", "chow"]


class OracleError(ValueError):
    pass


class OracleConsistencyError(RuntimeError):
    """The doubled-alphabet expansion did not decompose as a sum of R(X) S(Y)."""


@dataclass(frozen=True, eq=False)
class TruncatedPolynomial:
    """Exact polynomial over a fixed ordered alphabet; zero terms are dropped."""

    variables: tuple[str, ...]
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        width = len(self.variables)
        clean = {}
        for e, c in self.terms.items():
            if len(e) != width:
                raise OracleError(f"exponent {e} does not match alphabet of {width} variables")
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, variables, c: int = 1):
        return cls(tuple(variables), {(0,) * len(variables): c})

    def _check(self, other):
        if not isinstance(other, TruncatedPolynomial):
            raise TypeError(f"expected TruncatedPolynomial, got {type(other).__name__}")
        if other.variables != self.variables:
            raise OracleError("polynomials over different alphabets")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return TruncatedPolynomial(self.variables, acc)

    def __neg__(self):
        return TruncatedPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedPolynomial(self.variables, {e: other * c for e, c in self.terms.items()})
        self._check(other)
        acc: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return TruncatedPolynomial(self.variables, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedPolynomial.constant(self.variables)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                out.append(str(c))
            else:
                out.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(out)


def alphabet(N: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(N + 1))


def doubled_alphabet(N: int) -> tuple[str, ...]:
    return alphabet(N) + tuple(f"y{i}" for i in range(N + 1))


def _var(variables, i) -> TruncatedPolynomial:
    e = [0] * len(variables)
    e[i] = 1
    return TruncatedPolynomial(variables, {tuple(e): 1})


def _chain_sum(variables, exponents: Sequence[int], slots: Sequence[int]) -> TruncatedPolynomial:
    """Sum over strictly increasing choices of ``len(exponents)`` slots."""
    width = len(variables)
    acc: dict[Exponent, int] = {}
    for chosen in itertools.combinations(slots, len(exponents)):
        e = [0] * width
        for slot, k in zip(chosen, exponents):
            e[slot] += k
        key = tuple(e)
        acc[key] = acc.get(key, 0) + 1
    return TruncatedPolynomial(variables, acc)


def _check_level(a: PseudoComposition, N: int):
    _, tail = split_first(a)
    if N < len(tail):
        raise OracleError(f"N={N} is too small for M_{a}: needs at least {len(tail)} positive variables")


def expand_m(a: Iterable[int], N: int) -> TruncatedPolynomial:
    """``x0^{a_1} * sum_{0 < i_2 < ... < i_k <= N} x_{i_2}^{a_2} ... x_{i_k}^{a_k}``."""
    a = as_pseudo(a)
    _check_level(a, N)
    v = alphabet(N)
    first, tail = split_first(a)
    return _var(v, 0) ** first * _chain_sum(v, tail, range(1, N + 1))


def expand_f(a: Iterable[int], N: int) -> TruncatedPolynomial:
    """Sum of ``x_{i_1} ... x_{i_n}`` over ``0 <= i_1 <= ... <= i_n <= N``, strict at descents.

    A descent at 0 forces ``i_1 >= 1`` (the convention ``i_0 = 0``).
    """
    a = as_pseudo(a)
    _check_level(a, N)
    v = alphabet(N)
    n = sum(a)
    des = descent_set(a).elements
    acc: dict[Exponent, int] = {}

    def rec(pos, prev, e):
        if pos > n:
            key = tuple(e)
            acc[key] = acc.get(key, 0) + 1
            return
        lo = prev + 1 if (pos - 1) in des else prev
        for i in range(lo, N + 1):
            e[i] += 1
            rec(pos + 1, i, e)
            e[i] -= 1

    rec(1, 0, [0] * (N + 1))
    return TruncatedPolynomial(v, acc)


def expand_element(x: QSymElement, N: int) -> TruncatedPolynomial:
    out = TruncatedPolynomial(alphabet(N))
    for a, c in _to_mdict(x).items():
        out = out + expand_m(a, N) * c
    return out


# doubled alphabets ---------------------------------------------------------
#
# Layout of doubled_alphabet(N): slot 0 is x0, 1..N are x1..xN, N+1 is y0,
# N+2..2N+1 are y1..yN.

def _x_pos(N):
    return list(range(1, N + 1))


def _y_pos(N):
    return list(range(N + 2, 2 * N + 2))


def _doubled_m(a: PseudoComposition, N: int, mode: Mode) -> TruncatedPolynomial:
    v = doubled_alphabet(N)
    first, tail = split_first(a)
    xy = _x_pos(N) + _y_pos(N)
    if mode == "a":
        if first:
            raise OracleError(f"mode 'a' needs type A input, got index {a}")
        return _chain_sum(v, tail, xy)
    if mode == "b":
        # x0 -> x0 + y0, positive variables ordered x1 < ... < xN < y1 < ... < yN
        return (_var(v, 0) + _var(v, N + 1)) ** first * _chain_sum(v, tail, xy)
    if mode == "chow":
        if not first:
            return _chain_sum(v, tail, xy)
        # order x0 < x1 < ... < y1 < ...; the first part sits on x0 unless the
        # whole monomial lives in Y (there is no y0)
        ys = set(_y_pos(N))
        width = len(v)
        acc: dict[Exponent, int] = {}
        for chosen in itertools.combinations([0] + xy, len(a)):
            if chosen[0] != 0 and not all(s in ys for s in chosen):
                continue
            e = [0] * width
            for slot, k in zip(chosen, a):
                e[slot] += k
            key = tuple(e)
            acc[key] = acc.get(key, 0) + 1
        return TruncatedPolynomial(v, acc)
    raise OracleError(f"unknown mode {mode!r}")


def expand_doubled(x: QSymElement, N: int, mode: Mode) -> TruncatedPolynomial:
    """``x`` evaluated on the doubled alphabet for the given coproduct mode."""
    out = TruncatedPolynomial(doubled_alphabet(N))
    for a, c in _to_mdict(x).items():
        _check_level(a, N)
        out = out + _doubled_m(a, N, mode) * c
    return out


def _packed(exps: Sequence[int]):
    """Nonzero prefix of ``exps`` if the nonzero entries are contiguous from the start."""
    k = 0
    while k < len(exps) and exps[k]:
        k += 1
    if any(exps[k:]):
        return None
    return tuple(exps[:k])


def _side_m(a: PseudoComposition, N: int, side: str) -> TruncatedPolynomial:
    v = doubled_alphabet(N)
    first, tail = split_first(a)
    zero_slot, pos = (0, _x_pos(N)) if side == "x" else (N + 1, _y_pos(N))
    return _var(v, zero_slot) ** first * _chain_sum(v, tail, pos)


def read_off_tensor(poly: TruncatedPolynomial, N: int) -> TensorElement:
    """Rewrite ``poly`` as ``sum c * M_b(X0) M_g(Y0)`` and return the tensor.

    Raises :class:`OracleConsistencyError` when the residue is not zero.
    """
    acc: dict = {}
    for e, c in poly.terms.items():
        xt, yt = _packed(e[1:N + 1]), _packed(e[N + 2:])
        if xt is None or yt is None:
            continue
        key = (join_first(e[0], xt), join_first(e[N + 1], yt))
        acc[key] = acc.get(key, 0) + c
    rebuilt = TruncatedPolynomial(poly.variables)
    for (b, g), c in acc.items():
        rebuilt = rebuilt + _side_m(b, N, "x") * _side_m(g, N, "y") * c
    if rebuilt != poly:
        residue = poly - rebuilt
        raise OracleConsistencyError(f"non-decomposable residue: {residue}")
    return TensorElement._from_mdict(acc)


def coproduct_oracle(x: QSymElement, N: int | None = None, mode: Mode = "b") -> TensorElement:
    """Coproduct read off from an alphabet-doubling expansion.

    ``mode="b"``: ``X0 + Y0`` with ``x0 -> x0 + y0``.
    ``mode="chow"``: ``X0 + Y`` (no ``y0``).
    ``mode="a"``: ``X + Y``, type A input only.
    """
    if N is None:
        N = max((sum(a) for a in _to_mdict(x)), default=0)
    return read_off_tensor(expand_doubled(x, N, mode), N)
