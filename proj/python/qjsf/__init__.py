"""Exact interpolation symmetric functions and big q-Jacobi polynomials.

Exact values cross the boundary as strings ("p/q" or "a+bi"); ``fraction``
turns a real one into a :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._qjsf import (
    InadmissibleParameters,
    Params,
    QjsfError,
    gram,
    h_norm,
    interp_eval,
    interp_expansion,
    node_vector,
    phi_eval,
    phi_expansion,
    phi_norm,
    rho,
    sigma,
    suite_names,
    verify,
)

__all__ = [
    "InadmissibleParameters",
    "Params",
    "QjsfError",
    "fraction",
    "gram",
    "h_norm",
    "interp_eval",
    "interp_expansion",
    "node_vector",
    "phi_eval",
    "phi_expansion",
    "phi_norm",
    "rho",
    "sigma",
    "suite_names",
    "verify",
]


def fraction(value: str) -> Fraction:
    if value.endswith("i"):
        raise ValueError(f"{value!r} is not real")
    return Fraction(value)
