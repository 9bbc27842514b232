"""Hopf algebras of type A and type B quasisymmetric functions and their peak subalgebras."""

from .qsym import (
    QSymElement,
    TensorElement,
    antipode_a,
    antipode_b,
    antipode_recursive,
    coproduct_a,
    coproduct_b,
    coproduct_chow,
    counit,
    fundamental,
    monomial,
    multiply,
    multiply_f,
    peak_element,
    to_fundamental,
    to_monomial,
)
from .peak import k_function, theta, theta_b
from .expression import parse_element

__version__ = "0.1.0"

__all__ = [
    "QSymElement",
    "TensorElement",
    "antipode_a",
    "antipode_b",
    "antipode_recursive",
    "coproduct_a",
    "coproduct_b",
    "coproduct_chow",
    "counit",
    "fundamental",
    "k_function",
    "monomial",
    "multiply",
    "multiply_f",
    "parse_element",
    "peak_element",
    "theta",
    "theta_b",
    "to_fundamental",
    "to_monomial",
]
