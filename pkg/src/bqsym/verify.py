"""Identity sweeps: every algebraic claim checked exhaustively at small degree.

Each check takes a degree ``n`` and a :class:`Kernel` (the operations under
test) and looks at all basis indices, or pairs of indices, of total degree
exactly ``n``. Failures are reported as data with a counterexample;
nothing raises.

The kernel indirection exists so that a deliberately broken operation can be
swapped in (``corrupted_kernel``) to confirm the sweeps actually catch faults.
"""

from __future__ import annotations

import dataclasses
import time
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import compositions as comp
from . import oracle, peak, qsym
from .permutations import descent_composition, peak_composition, peak_composition_b, signed_permutations_of
from .qsym import QSymElement, fundamental, monomial


@dataclass(frozen=True)
class Kernel:
    multiply: Callable = qsym.multiply
    multiply_f: Callable = qsym.multiply_f
    coproduct_a: Callable = qsym.coproduct_a
    coproduct_b: Callable = qsym.coproduct_b
    coproduct_chow: Callable = qsym.coproduct_chow
    antipode_a: Callable = qsym.antipode_a
    antipode_b: Callable = qsym.antipode_b
    antipode_recursive: Callable = qsym.antipode_recursive
    theta: Callable = peak.theta
    theta_b: Callable = peak.theta_b


DEFAULT_KERNEL = Kernel()


def corrupted_kernel(fault: str, base: Kernel = DEFAULT_KERNEL) -> Kernel:
    """A kernel with one operation deliberately broken (fault-injection hook)."""
    if fault == "product":
        def bad_multiply(x, y):
            out = base.multiply(x, y)
            n = qsym.max_degree(x) + qsym.max_degree(y)
            return out + monomial((n,)) if qsym.max_degree(x) and qsym.max_degree(y) else out

        return dataclasses.replace(base, multiply=bad_multiply)
    if fault == "coproduct":
        def bad_coproduct(x):
            return base.coproduct_b(x) * 2 if qsym.max_degree(x) > 1 else base.coproduct_b(x)

        return dataclasses.replace(base, coproduct_b=bad_coproduct)
    if fault == "antipode":
        def bad_antipode(x):
            return -base.antipode_b(x) if qsym.max_degree(x) > 1 else base.antipode_b(x)

        return dataclasses.replace(base, antipode_b=bad_antipode)
    raise ValueError(f"unknown fault {fault!r}; expected product, coproduct or antipode")


@dataclass
class CheckResult:
    name: str
    status: str = "pass"
    cases: int = 0
    counterexample: str | None = None
    degrees: list[int] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "counterexample": self.counterexample,
            "cases": self.cases,
            "degrees": self.degrees,
        }


class _Sweep:
    """Collects cases for one check; records the first failing case."""

    def __init__(self):
        self.cases = 0
        self.counterexample = None

    def expect(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe()


# index families --------------------------------------------------------------

def _s(a) -> str:
    return "[" + ",".join(str(x) for x in a) + "]"


def _m(a):
    return monomial(a)


def _f(a):
    return fundamental(a)


def _pairs(n: int, family=comp.pseudo_compositions_of):
    for k in range(n + 1):
        for a in family(k):
            for b in family(n - k):
                yield a, b


def _type_a_indices(n: int):
    return [comp.join_first(0, c) for c in comp.compositions_of(n)]


@lru_cache(maxsize=None)
def _descent_classes(n: int) -> dict:
    classes = defaultdict(list)
    for p in signed_permutations_of(n):
        classes[descent_composition(p)].append(p)
    return dict(classes)


def alternate_representative(a):
    """A member of the descent class of ``a`` other than the default representative when possible."""
    members = _descent_classes(sum(a))[comp.as_pseudo(a)]
    default = qsym._default_representative(a)
    others = [p for p in members if p != default]
    return others[-1] if others else default


# checks ----------------------------------------------------------------------

def check_counting(n, k: Kernel, s: _Sweep):
    if n >= 1:
        s.expect(len(comp.compositions_of(n)) == 2 ** (n - 1), lambda: f"|compositions_of({n})| != 2^{n - 1}")
    else:
        s.expect(comp.compositions_of(0) == [()], lambda: "compositions_of(0) != [()]")
    s.expect(len(comp.pseudo_compositions_of(n)) == (2 ** n if n else 1), lambda: f"|pseudo_compositions_of({n})|")
    s.expect(len(comp.peak_compositions_of(n)) == peak.expected_peak_dimension(n, "A"), lambda: f"peak A count at {n}")
    s.expect(len(comp.peak_pseudo_compositions_of(n)) == peak.expected_peak_dimension(n, "B"), lambda: f"peak B count at {n}")


def check_product_oracle(n, k: Kernel, s: _Sweep):
    for a, b in _pairs(n):
        lhs = oracle.expand_element(k.multiply(_m(a), _m(b)), n)
        rhs = oracle.expand_m(a, n) * oracle.expand_m(b, n)
        s.expect(lhs == rhs, lambda: f"M{_s(a)} * M{_s(b)}")


def check_expand_f(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        s.expect(oracle.expand_f(a, n) == oracle.expand_element(_f(a), n), lambda: f"F{_s(a)}")


def check_coassociativity(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        d = k.coproduct_b(_m(a))
        left = qsym.apply_factor(d, 0, k.coproduct_b)
        right = qsym.apply_factor(d, 1, k.coproduct_b)
        s.expect(left == right, lambda: f"M{_s(a)}")


def check_counit(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        x = _m(a)
        d = k.coproduct_b(x)
        left = qsym.multiply_factors(qsym.apply_factor(d, 0, lambda y: qsym.counit(y) * qsym.one()))
        right = qsym.multiply_factors(qsym.apply_factor(d, 1, lambda y: qsym.counit(y) * qsym.one()))
        s.expect(left == x and right == x, lambda: f"M{_s(a)}")


def check_multiplicativity(n, k: Kernel, s: _Sweep):
    for a, b in _pairs(n):
        lhs = k.coproduct_b(k.multiply(_m(a), _m(b)))
        rhs = k.coproduct_b(_m(a)) * k.coproduct_b(_m(b))
        s.expect(lhs == rhs, lambda: f"Delta(M{_s(a)} * M{_s(b)})")


def _m_tensor(k: Kernel, t):
    # the multiplication map, routed through the kernel's product
    total = qsym.zero()
    for (i1, i2), c in t.items():
        total = total + c * k.multiply(QSymElement({i1: 1}), QSymElement({i2: 1}))
    return total


def check_antipode_axiom(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        x = _m(a)
        d = k.coproduct_b(x)
        unit = qsym.counit(x) * qsym.one()
        left = _m_tensor(k, qsym.apply_factor(d, 0, k.antipode_b))
        right = _m_tensor(k, qsym.apply_factor(d, 1, k.antipode_b))
        s.expect(left == unit and right == unit, lambda: f"M{_s(a)}")


def check_antipode_closed_form(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        x = _m(a)
        s.expect(k.antipode_b(x) == k.antipode_recursive(x), lambda: f"S_B(M{_s(a)})")
        if comp.is_type_a(a):
            s.expect(k.antipode_a(x) == k.antipode_recursive(x), lambda: f"S_A(M{_s(a)})")


def check_antipode_involution(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        s.expect(k.antipode_b(k.antipode_b(_m(a))) == _m(a), lambda: f"S(S(M{_s(a)}))")


def check_f_shuffle(n, k: Kernel, s: _Sweep):
    for a, b in _pairs(n):
        expected = qsym.to_fundamental(k.multiply(_f(a), _f(b)))
        s.expect(k.multiply_f(_f(a), _f(b)) == expected, lambda: f"F{_s(a)} * F{_s(b)}")
        alt = k.multiply_f(_f(a), _f(b), representative=alternate_representative)
        s.expect(alt == expected, lambda: f"F{_s(a)} * F{_s(b)} (alternate representatives)")


def check_chow_comodule(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        d = k.coproduct_chow(_m(a))
        left = qsym.apply_factor(d, 0, k.coproduct_chow)
        right = qsym.apply_factor(d, 1, k.coproduct_a)
        s.expect(left == right, lambda: f"M{_s(a)}")


def check_isomorphism(n, k: Kernel, s: _Sweep):
    for i in range(n + 1):
        for alpha in comp.compositions_of(n - i):
            lhs = k.multiply(_m((i,)), _m(comp.join_first(0, alpha)))
            s.expect(lhs == _m(comp.join_first(i, alpha)), lambda: f"M[{i}] * M{_s(comp.join_first(0, alpha))}")


def _coproduct_oracle_check(mode):
    def check(n, k: Kernel, s: _Sweep):
        op = {"a": k.coproduct_a, "b": k.coproduct_b, "chow": k.coproduct_chow}[mode]
        indices = _type_a_indices(n) if mode == "a" else comp.pseudo_compositions_of(n)
        for a in indices:
            try:
                ok = oracle.coproduct_oracle(_m(a), n, mode) == op(_m(a))
            except oracle.OracleConsistencyError:
                ok = False
            s.expect(ok, lambda: f"M{_s(a)} (mode {mode})")

    return check


def check_k_set_form(n, k: Kernel, s: _Sweep):
    for a in comp.peak_pseudo_compositions_of(n):
        s.expect(peak.k_function_set_form(comp.descent_set(a), flavor="B") == peak.k_function(a, "B"), lambda: f"K_B{_s(a)}")
    for a in comp.peak_compositions_of(n):
        s.expect(peak.k_function_set_form(comp.descent_set(a), flavor="A") == peak.k_function(a, "A"), lambda: f"K_A{_s(a)}")


def check_k_embedding(n, k: Kernel, s: _Sweep):
    for alpha in comp.peak_compositions_of(n):
        s.expect(peak.k_function(comp.join_first(0, alpha), "B") == peak.k_function(alpha, "A"), lambda: f"K{_s(alpha)}")


def check_k_positivity(n, k: Kernel, s: _Sweep):
    for flavor in ("A", "B"):
        for a in peak.peak_indices(n, flavor):
            coeffs = [c for _, c in peak.k_in_f(a, flavor).items()]
            s.expect(all(c > 0 for c in coeffs), lambda: f"K_{flavor}{_s(a)} in F")


def check_k_rank(n, k: Kernel, s: _Sweep):
    for flavor in ("A", "B"):
        want = peak.expected_peak_dimension(n, flavor)
        s.expect(peak.k_basis_rank(n, flavor) == want, lambda: f"rank K_{flavor} at degree {n}")
        s.expect(peak.theta_image_rank(n, flavor) == want, lambda: f"rank of theta_{flavor} image at degree {n}")


def check_k_shuffle(n, k: Kernel, s: _Sweep):
    for flavor, family in (("A", comp.peak_compositions_of), ("B", comp.peak_pseudo_compositions_of)):
        for a, b in _pairs(n, family):
            lhs = k.multiply(peak.k_function(a, flavor), peak.k_function(b, flavor))
            s.expect(lhs == peak.k_shuffle_sum(a, b, flavor), lambda: f"K_{flavor}{_s(a)} * K_{flavor}{_s(b)}")


def check_theta_ring_hom(n, k: Kernel, s: _Sweep):
    for a, b in _pairs(n):
        lhs = k.theta_b(k.multiply(_f(a), _f(b)))
        rhs = k.multiply(k.theta_b(_f(a)), k.theta_b(_f(b)))
        s.expect(lhs == rhs, lambda: f"Theta_B(F{_s(a)} * F{_s(b)})")


def check_theta_coalgebra_hom(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        x = _m(a)
        lhs = qsym.apply_factor(qsym.apply_factor(k.coproduct_b(x), 0, k.theta_b), 1, k.theta_b)
        rhs = k.coproduct_b(k.theta_b(x))
        s.expect(lhs == rhs, lambda: f"M{_s(a)}")


def check_theta_restriction(n, k: Kernel, s: _Sweep):
    for a in _type_a_indices(n):
        s.expect(k.theta_b(_f(a)) == k.theta(_f(a)), lambda: f"F{_s(a)}")


def check_theta_antipode(n, k: Kernel, s: _Sweep):
    for a in comp.pseudo_compositions_of(n):
        x = _m(a)
        s.expect(k.theta_b(k.antipode_b(x)) == k.antipode_b(k.theta_b(x)), lambda: f"M{_s(a)}")


def check_statistics(n, k: Kernel, s: _Sweep):
    """hat(C(p)) is the peak composition, for every (signed) permutation of [n]."""
    from .permutations import permutations_of

    for p in permutations_of(n):
        s.expect(comp.hat(descent_composition(p)) == peak_composition(p), lambda: f"{p}")
    for p in signed_permutations_of(n):
        s.expect(comp.hat_b(descent_composition(p)) == peak_composition_b(p), lambda: f"{p}")


# registry: name -> (check, highest degree swept by default) ------------------

CHECKS: dict[str, Callable] = {
    "counting": check_counting,
    "statistics": check_statistics,
    "product_oracle": check_product_oracle,
    "expand_f_oracle": check_expand_f,
    "isomorphism": check_isomorphism,
    "coassociativity": check_coassociativity,
    "counit": check_counit,
    "multiplicativity": check_multiplicativity,
    "antipode_axiom": check_antipode_axiom,
    "antipode_closed_form": check_antipode_closed_form,
    "antipode_involution": check_antipode_involution,
    "f_shuffle_product": check_f_shuffle,
    "chow_comodule": check_chow_comodule,
    "coproduct_oracle_b": _coproduct_oracle_check("b"),
    "coproduct_oracle_chow": _coproduct_oracle_check("chow"),
    "coproduct_oracle_a": _coproduct_oracle_check("a"),
    "k_set_form": check_k_set_form,
    "k_type_a_embedding": check_k_embedding,
    "k_f_positivity": check_k_positivity,
    "k_rank": check_k_rank,
    "k_shuffle": check_k_shuffle,
    "theta_ring_hom": check_theta_ring_hom,
    "theta_coalgebra_hom": check_theta_coalgebra_hom,
    "theta_restriction": check_theta_restriction,
    "theta_antipode": check_theta_antipode,
}

# Every check above that is graded by degree; "worked_examples" is not.
ALL_CHECKS = ("worked_examples", *CHECKS)


def run_check(name: str, degrees: Iterable[int], kernel: Kernel = DEFAULT_KERNEL) -> CheckResult:
    degrees = list(degrees)
    result = CheckResult(name, degrees=degrees)
    start = time.perf_counter()
    if name == "worked_examples":
        from .worked_examples import check_worked_examples

        sweep = _Sweep()
        check_worked_examples(kernel, sweep)
        result.cases, result.counterexample = sweep.cases, sweep.counterexample
    else:
        try:
            fn = CHECKS[name]
        except KeyError:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(ALL_CHECKS)}") from None
        for n in degrees:
            sweep = _Sweep()
            fn(n, kernel, sweep)
            result.cases += sweep.cases
            if sweep.counterexample is not None:
                result.counterexample = f"degree {n}: {sweep.counterexample}"
                break
    result.status = "pass" if result.counterexample is None else "fail"
    result.seconds = time.perf_counter() - start
    return result


def verify_degree(n: int, checks: Iterable[str] | None = None, kernel: Kernel = DEFAULT_KERNEL) -> dict:
    """Run the selected graded checks at exactly degree ``n``."""
    names = [c for c in (checks or CHECKS) if c != "worked_examples"]
    results = [run_check(name, [n], kernel) for name in names]
    return {"degree": n, "checks": [r.to_json() for r in results]}


def verify(max_degree: int, checks: Iterable[str] | None = None, kernel: Kernel = DEFAULT_KERNEL) -> dict:
    """Run the selected checks over every degree ``0..max_degree``.

    The report has the shape ``{"degree": D, "checks": [{"name", "status",
    "counterexample", ...}]}``; ``"ok"`` is true iff every check passed.
    """
    names = list(checks or ALL_CHECKS)
    results = [run_check(name, range(max_degree + 1), kernel) for name in names]
    return {
        "degree": max_degree,
        "ok": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }
