"""The graded algebra BQ of type B quasisymmetric functions.

Elements are finite integer combinations of basis-tagged pseudo-compositions.
Three tags are understood:

* ``"M"``: monomial, ``M_a = x0^{a_1} * sum_{0 < i_2 < ... < i_k} x_{i_2}^{a_2} ... x_{i_k}^{a_k}``
* ``"F"``: fundamental, ``F_a = sum_{a <= b} M_b``
* ``"K"``: peak function, see :mod:`bqsym.peak`

Ordinary quasisymmetric functions live inside BQ as the indices with first
part 0. All structure maps (product, coproducts, antipodes) are computed in
the monomial basis; other tags are converted on demand. Coefficients are
Python ints, so nothing ever overflows.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from .compositions import (
    PseudoComposition,
    as_pseudo,
    coarsenings,
    descent_set,
    is_type_a,
    join_first,
    refinements,
    reverse,
    split_first,
)
from .permutations import descent_composition, representative as _default_representative, shift, shuffles

BASES = ("M", "F", "K")
_BASIS_RANK = {b: i for i, b in enumerate(BASES)}

Index = tuple[str, PseudoComposition]
Scalar = int


class NotTypeAError(ValueError):
    """A type A operation was handed an element with x0 content."""


def _index(basis: str, parts: Iterable[int]) -> Index:
    if basis not in _BASIS_RANK:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    return basis, as_pseudo(parts)


def _sort_key(idx: Index):
    basis, parts = idx
    return sum(parts), parts, _BASIS_RANK[basis]


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


def _add_into(acc: dict, key, coeff: int) -> None:
    acc[key] = acc.get(key, 0) + coeff


class QSymElement:
    """An immutable element of BQ.

    Supports ``+``, ``-``, scalar ``*`` and ring ``*`` (the power-series
    product). Equality is semantic: both sides are rewritten in the monomial
    basis before comparison, so ``F[1] == M[1] + M[0,1]`` holds.
    """

    __slots__ = ("_terms",)
    __hash__ = None  # equality is semantic across bases

    def __init__(self, terms: Mapping[Index, int] | Iterable[tuple[Index, int]] | None = None):
        acc: dict[Index, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for (basis, parts), coeff in items:
            _add_into(acc, _index(basis, parts), int(coeff))
        self._terms = dict(sorted(_clean(acc).items(), key=lambda kv: _sort_key(kv[0])))

    @classmethod
    def _from_mdict(cls, mdict: Mapping[PseudoComposition, int], basis: str = "M") -> QSymElement:
        # trusted fast path: keys are already normalized pseudo-compositions
        obj = cls.__new__(cls)
        terms = (((basis, p), c) for p, c in mdict.items() if c)
        obj._terms = dict(sorted(terms, key=lambda kv: _sort_key(kv[0])))
        return obj

    @property
    def terms(self) -> dict[Index, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(_to_mdict(self))

    def is_zero(self) -> bool:
        return not self

    def bases(self) -> set[str]:
        return {b for b, _ in self._terms}

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSymElement(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return QSymElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if isinstance(other, QSymElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        out = one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _to_mdict(self) == _to_mdict(other)

    def __repr__(self):
        return f"QSymElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)

    def degree(self):
        return degree(self)


def _coerce(x):
    if isinstance(x, QSymElement):
        return x
    if isinstance(x, int):
        return QSymElement({("M", ()): x})
    return NotImplemented


# constructors ------------------------------------------------------------

def monomial(parts: Iterable[int], coeff: int = 1) -> QSymElement:
    return QSymElement({("M", tuple(parts)): coeff})


def fundamental(parts: Iterable[int], coeff: int = 1) -> QSymElement:
    return QSymElement({("F", tuple(parts)): coeff})


def peak_element(parts: Iterable[int], coeff: int = 1) -> QSymElement:
    """The K-tagged basis symbol ``K_a`` (expanded lazily via :mod:`bqsym.peak`)."""
    return QSymElement({("K", tuple(parts)): coeff})


def one() -> QSymElement:
    return monomial(())


def zero() -> QSymElement:
    return QSymElement()


def add(x: QSymElement, y: QSymElement) -> QSymElement:
    return x + y


def negate(x: QSymElement) -> QSymElement:
    return -x


def scale(x: QSymElement, c: int) -> QSymElement:
    return QSymElement({k: c * v for k, v in x.items()})


def equals(x: QSymElement, y: QSymElement) -> bool:
    return x == y


# basis conversion --------------------------------------------------------

@lru_cache(maxsize=None)
def _f_to_m(a: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    return tuple((b, 1) for b in refinements(a))


@lru_cache(maxsize=None)
def _m_to_f(a: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    la = len(descent_set(a))
    return tuple((b, (-1) ** (len(descent_set(b)) - la)) for b in refinements(a))


def _k_to_m(a: PseudoComposition):
    from .peak import k_monomial_expansion

    return k_monomial_expansion(a).items()


def _to_mdict(x: QSymElement) -> dict[PseudoComposition, int]:
    acc: dict[PseudoComposition, int] = {}
    for (basis, parts), c in x.items():
        if basis == "M":
            _add_into(acc, parts, c)
        elif basis == "F":
            for b, e in _f_to_m(parts):
                _add_into(acc, b, c * e)
        else:
            for b, e in _k_to_m(parts):
                _add_into(acc, b, c * e)
    return _clean(acc)


def to_monomial(x: QSymElement) -> QSymElement:
    return QSymElement._from_mdict(_to_mdict(x))


def to_fundamental(x: QSymElement) -> QSymElement:
    acc: dict[PseudoComposition, int] = {}
    for a, c in _to_mdict(x).items():
        for b, e in _m_to_f(a):
            _add_into(acc, b, c * e)
    return QSymElement._from_mdict(_clean(acc), "F")


def to_basis(x: QSymElement, basis: str) -> QSymElement:
    if basis == "M":
        return to_monomial(x)
    if basis == "F":
        return to_fundamental(x)
    raise ValueError(f"unknown basis {basis!r}")


# grading -----------------------------------------------------------------

def homogeneous_component(x: QSymElement, n: int) -> QSymElement:
    return QSymElement({k: v for k, v in x.items() if sum(k[1]) == n})


def degree(x: QSymElement) -> int | None:
    """Degree of a homogeneous element; ``None`` for zero."""
    degrees = {sum(parts) for parts in _to_mdict(x)}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise ValueError(f"element is not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def max_degree(x: QSymElement) -> int:
    return max((sum(p) for _, p in x._terms), default=0)


# product -----------------------------------------------------------------

@lru_cache(maxsize=None)
def quasi_shuffle(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Quasi-shuffle (stuffle) of two ordinary compositions, with multiplicities."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[tuple[int, ...], int] = {}
    for rest, c in quasi_shuffle(a[1:], b):
        _add_into(acc, (a[0], *rest), c)
    for rest, c in quasi_shuffle(a, b[1:]):
        _add_into(acc, (b[0], *rest), c)
    for rest, c in quasi_shuffle(a[1:], b[1:]):
        _add_into(acc, (a[0] + b[0], *rest), c)
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _m_product(a: PseudoComposition, b: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    fa, ta = split_first(a)
    fb, tb = split_first(b)
    return tuple((join_first(fa + fb, g), c) for g, c in quasi_shuffle(ta, tb))


def _mdict_product(x: Mapping, y: Mapping) -> dict:
    acc: dict[PseudoComposition, int] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for g, c in _m_product(a, b):
                _add_into(acc, g, ca * cb * c)
    return _clean(acc)


def multiply(x: QSymElement, y: QSymElement) -> QSymElement:
    """Power-series product, computed as a quasi-shuffle in the M basis."""
    return QSymElement._from_mdict(_mdict_product(_to_mdict(x), _to_mdict(y)))


def _f_shuffle(a: PseudoComposition, b: PseudoComposition, rep: Callable) -> dict:
    n = sum(a)
    sigma = rep(a)
    tau = shift(rep(b), n)
    acc: dict[PseudoComposition, int] = {}
    for pi in shuffles(sigma, tau):
        _add_into(acc, descent_composition(pi), 1)
    return acc


def multiply_f(x: QSymElement, y: QSymElement, representative: Callable = _default_representative) -> QSymElement:
    """Product in the F basis by shuffling descent-class representatives.

    ``F_{C(s)} F_{C(t)} = sum over shuffles p of s and t of F_{C(p)}``, with
    ``t`` shifted onto letters above those of ``s``. ``representative`` maps a
    pseudo-composition to a signed permutation with that descent composition.
    """
    xf, yf = to_fundamental(x), to_fundamental(y)
    acc: dict[PseudoComposition, int] = {}
    for (_, a), ca in xf.items():
        for (_, b), cb in yf.items():
            for g, c in _f_shuffle(a, b, representative).items():
                _add_into(acc, g, ca * cb * c)
    return QSymElement._from_mdict(_clean(acc), "F")


# tensors -----------------------------------------------------------------

TensorKey = tuple[Index, ...]


class TensorElement:
    """An element of a tensor power of BQ, stored as ``{(idx_1, ..., idx_k): coeff}``.

    Coproducts return arity-2 tensors in the M basis. Equality converts every
    factor to the M basis first.
    """

    __slots__ = ("_terms", "arity")
    __hash__ = None

    def __init__(self, terms: Mapping[TensorKey, int] | Iterable[tuple[TensorKey, int]] | None = None, arity: int = 2):
        acc: dict[TensorKey, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for key, coeff in items:
            key = tuple(_index(b, p) for b, p in key)
            if len(key) != arity:
                raise ValueError(f"tensor factor count {len(key)} does not match arity {arity}")
            _add_into(acc, key, int(coeff))
        self.arity = arity
        self._terms = dict(sorted(_clean(acc).items(), key=lambda kv: _tensor_sort_key(kv[0])))

    @classmethod
    def _from_mdict(cls, mdict: Mapping[tuple[PseudoComposition, ...], int], arity: int = 2) -> TensorElement:
        return cls({tuple(("M", p) for p in key): c for key, c in mdict.items()}, arity)

    @property
    def terms(self) -> dict[TensorKey, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_arity(other)
        return TensorElement(list(self._terms.items()) + list(other._terms.items()), self.arity)

    def __neg__(self):
        return TensorElement({k: -v for k, v in self._terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorElement({k: other * v for k, v in self._terms.items()}, self.arity)
        if isinstance(other, TensorElement):
            self._check_arity(other)
            acc: dict = {}
            for ka, ca in _tensor_mdict(self).items():
                for kb, cb in _tensor_mdict(other).items():
                    factors = [_m_product(a, b) for a, b in zip(ka, kb)]
                    _expand_factor_products(acc, factors, ca * cb)
            return TensorElement._from_mdict(acc, self.arity)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and _tensor_mdict(self) == _tensor_mdict(other)

    def _check_arity(self, other):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __repr__(self):
        return f"TensorElement({format_tensor(self)!r})"

    def __str__(self):
        return format_tensor(self)


def _tensor_sort_key(key: TensorKey):
    return sum(sum(p) for _, p in key), tuple(_sort_key(i) for i in key)


def _expand_factor_products(acc, factors, coeff):
    def rec(i, key, c):
        if i == len(factors):
            _add_into(acc, tuple(key), c)
            return
        for g, e in factors[i]:
            rec(i + 1, key + [g], c * e)

    rec(0, [], coeff)


def _tensor_mdict(t: TensorElement) -> dict[tuple[PseudoComposition, ...], int]:
    acc: dict = {}
    for key, c in t.items():
        factors = [tuple(_to_mdict(QSymElement({idx: 1})).items()) for idx in key]
        _expand_factor_products(acc, factors, c)
    return _clean(acc)


def tensor(*elements: QSymElement) -> TensorElement:
    """Outer tensor product of elements."""
    acc: dict = {}

    def rec(i, key, c):
        if i == len(elements):
            _add_into(acc, tuple(key), c)
            return
        for idx, e in elements[i].items():
            rec(i + 1, key + [idx], c * e)

    rec(0, [], 1)
    return TensorElement(acc, arity=len(elements))


def tensor_to_monomial(t: TensorElement) -> TensorElement:
    return TensorElement._from_mdict(_tensor_mdict(t), t.arity)


def apply_factor(t: TensorElement, position: int, f: Callable) -> TensorElement:
    """Apply a linear map to one tensor factor.

    ``f`` takes a QSymElement and returns a QSymElement (arity unchanged) or a
    TensorElement, whose factors are spliced in at ``position``.
    """
    acc: dict = {}
    arity = None
    for key, c in t.items():
        image = f(QSymElement({key[position]: 1}))
        if isinstance(image, QSymElement):
            pieces = [((idx,), e) for idx, e in image.items()]
            width = 1
        else:
            pieces = list(image.items())
            width = image.arity
        arity = t.arity - 1 + width
        for sub, e in pieces:
            _add_into(acc, key[:position] + tuple(sub) + key[position + 1:], c * e)
    if arity is None:
        arity = t.arity
    return TensorElement(acc, arity)


def multiply_factors(t: TensorElement) -> QSymElement:
    """The multiplication map ``m``: collapse a tensor into a product of its factors."""
    out: dict = {}
    for key, c in _tensor_mdict(t).items():
        acc = {(): c}
        for p in key:
            acc = _mdict_product(acc, {p: 1})
        for g, e in acc.items():
            _add_into(out, g, e)
    return QSymElement._from_mdict(_clean(out))


# coproducts --------------------------------------------------------------

def _require_type_a(mdict: Mapping, what: str) -> None:
    bad = [p for p in mdict if not is_type_a(p)]
    if bad:
        raise NotTypeAError(f"{what} needs a type A element (first part 0); offending index {bad[0]}")


@lru_cache(maxsize=None)
def _coproduct_b_index(a: PseudoComposition) -> tuple[tuple[tuple[PseudoComposition, PseudoComposition], int], ...]:
    n, alpha = split_first(a)
    acc: dict = {}
    for j in range(len(alpha) + 1):
        beta, gamma = alpha[:j], alpha[j:]
        for i in range(n + 1):
            _add_into(acc, (join_first(i, beta), join_first(n - i, gamma)), math.comb(n, i))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _coproduct_chow_index(a: PseudoComposition) -> tuple[tuple[tuple[PseudoComposition, PseudoComposition], int], ...]:
    # Cuts of the tuple a; the cuts "before" and "after" a leading 0 give the
    # same term (M_0 = M_empty) and are counted once.
    acc: dict = {}
    start = 1 if a and a[0] == 0 else 0
    for j in range(start, len(a) + 1):
        beta, gamma = a[:j], a[j:]
        _add_into(acc, (as_pseudo(beta), join_first(0, gamma)), 1)
    return tuple(acc.items())


def _linear_tensor(x: QSymElement, per_index) -> TensorElement:
    acc: dict = {}
    for a, c in _to_mdict(x).items():
        for key, e in per_index(a):
            _add_into(acc, key, c * e)
    return TensorElement._from_mdict(_clean(acc))


def coproduct_b(x: QSymElement) -> TensorElement:
    """BQ coproduct: ``M_{n alpha} -> sum_{beta gamma = alpha} sum_i C(n,i) M_{i beta} (x) M_{(n-i) gamma}``."""
    return _linear_tensor(x, _coproduct_b_index)


def coproduct_a(x: QSymElement) -> TensorElement:
    """Deconcatenation coproduct of QSym; the input must be type A."""
    mdict = _to_mdict(x)
    _require_type_a(mdict, "coproduct_a")
    # on first-part-0 indices the BQ coproduct is exactly deconcatenation
    return _linear_tensor(x, _coproduct_b_index)


def coproduct_chow(x: QSymElement) -> TensorElement:
    """The coaction ``BQ -> BQ (x) QSym``: ``M_a -> sum_{beta gamma = a} M_beta (x) M_{0 gamma}``."""
    return _linear_tensor(x, _coproduct_chow_index)


COPRODUCTS = {"a": coproduct_a, "b": coproduct_b, "chow": coproduct_chow}


def counit(x: QSymElement) -> int:
    return _to_mdict(x).get((), 0)


# antipodes ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_closed_index(a: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    n, alpha = split_first(a)
    sign = (-1) ** (len(alpha) + n)
    acc: dict = {}
    for beta in coarsenings(alpha):
        _add_into(acc, join_first(n, reverse(beta)), sign)
    return tuple(acc.items())


def _linear(x: QSymElement, per_index) -> QSymElement:
    acc: dict = {}
    for a, c in _to_mdict(x).items():
        for g, e in per_index(a):
            _add_into(acc, g, c * e)
    return QSymElement._from_mdict(_clean(acc))


def antipode_a(x: QSymElement) -> QSymElement:
    """QSym antipode ``S(M_alpha) = (-1)^{l(alpha)} sum_{beta <= alpha} M_{reverse(beta)}``."""
    _require_type_a(_to_mdict(x), "antipode_a")
    return _linear(x, _antipode_closed_index)


def antipode_b(x: QSymElement) -> QSymElement:
    """BQ antipode ``S(M_{n alpha}) = (-1)^{l(alpha)+n} sum_{beta <= alpha} M_{n reverse(beta)}``."""
    return _linear(x, _antipode_closed_index)


@lru_cache(maxsize=None)
def _antipode_rec_index(a: PseudoComposition) -> tuple[tuple[PseudoComposition, int], ...]:
    if not a:
        return (((), 1),)
    acc: dict = {}
    for (left, right), c in _coproduct_b_index(a):
        if not right:
            continue  # the M_a (x) 1 term, solved for
        s_left = dict(_antipode_rec_index(left))
        for g, e in _mdict_product(s_left, {right: 1}).items():
            _add_into(acc, g, -c * e)
    return tuple(_clean(acc).items())


def antipode_recursive(x: QSymElement) -> QSymElement:
    """Antipode from ``m(S (x) I) Delta = unit o counit``, solved degree by degree."""
    return _linear(x, _antipode_rec_index)


ANTIPODES = {"a": antipode_a, "b": antipode_b, "recursive": antipode_recursive}


# text formatting ---------------------------------------------------------

def format_index(basis: str, parts: PseudoComposition, type_a: bool = False) -> str:
    if not parts:
        return "1"
    if type_a:
        if parts[0] != 0:
            raise NotTypeAError(f"index {parts} has x0 content and has no type A notation")
        parts = parts[1:]
    return f"{basis}[{','.join(str(p) for p in parts)}]"


def _join_terms(pieces: list[tuple[int, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for k, (c, label) in enumerate(pieces):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if label == "1":
            body = str(mag)
        elif mag == 1:
            body = label
        else:
            body = f"{mag}*{label}"
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_element(x: QSymElement, type_a: bool = False) -> str:
    """Render as e.g. ``M[0,2] + 2*M[0,1,1]``; ``type_a`` drops the leading 0."""
    return _join_terms([(c, format_index(b, p, type_a)) for (b, p), c in x.items()])


def format_tensor(t: TensorElement, type_a: bool = False) -> str:
    """Render as e.g. ``M[2,1] (x) 1 + M[2] (x) M[1] + 1 (x) M[2,1]``."""
    pieces = []
    for key, c in t.items():
        label = " (x) ".join(format_index(b, p, type_a) for b, p in key)
        pieces.append((c, label if abs(c) == 1 else f"{abs(c)}*{label}"))
    out = []
    for k, (c, body) in enumerate(pieces):
        if k == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out) or "0"


# serialization -----------------------------------------------------------

def _index_json(idx: Index) -> dict:
    return {"basis": idx[0], "parts": list(idx[1])}


def to_json(x: QSymElement | TensorElement) -> dict:
    """Canonical JSON object; coefficients are decimal strings."""
    if isinstance(x, TensorElement):
        return {
            "kind": "tensor",
            "terms": [{"pairs": [_index_json(i) for i in key], "coeff": str(c)} for key, c in x.items()],
        }
    return {
        "kind": "element",
        "terms": [{**_index_json(idx), "coeff": str(c)} for idx, c in x.items()],
    }


def from_json(obj: Mapping) -> QSymElement | TensorElement:
    kind = obj.get("kind")
    if kind == "element":
        return QSymElement([((t["basis"], tuple(t["parts"])), int(t["coeff"])) for t in obj["terms"]])
    if kind == "tensor":
        terms = [(tuple((p["basis"], tuple(p["parts"])) for p in t["pairs"]), int(t["coeff"])) for t in obj["terms"]]
        arity = len(terms[0][0]) if terms else 2
        return TensorElement(terms, arity)
    raise ValueError(f"unknown serialized kind {kind!r}")


Element = Union[QSymElement, TensorElement]
