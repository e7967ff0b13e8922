"""Two-variable zeta functions sum (n m^{d+1} f(n/m))^{-s} attached to a
polynomial f positive on [0, inf), with the Witten zeta functions of A2, B2
and G2 as presets.

Modules:
    polycore      exact polynomials, power series and rational functions
    constants     Bernoulli numbers, symbolic constants, numeric Gamma/zeta
    kernel        the integral F_f(a, s) and the entire kernel K_f(a, s)
    continuation  Mellin-Barnes continuation of zeta_f to the whole plane
    specials      exact values, poles, recurrences and certificates
    dzero         closed form of zeta_f'(0) for rational roots
    modular       Eisenstein lifts of the vanishing identities
    repcount      representation counts for A2, B2, G2 and the G2 asymptotic
    claims        the manifest of checked values
"""

from .constants import ComplexVal, ConstExpr
from .continuation import zeta_direct, zeta_local, zeta_mb
from .dzero import I_alpha, dzero
from .polycore import PositivePoly, parse_poly, reverse_poly
from .specials import F_A, F_B, F_G, pole_catalog, zeta_at_neg_int

__all__ = [
    "ComplexVal", "ConstExpr", "PositivePoly", "parse_poly", "reverse_poly",
    "zeta_mb", "zeta_direct", "zeta_local", "zeta_at_neg_int", "pole_catalog",
    "dzero", "I_alpha", "F_A", "F_B", "F_G",
]
