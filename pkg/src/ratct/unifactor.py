"""Univariate irreducible factorization over Q, delegated to sympy.

Only the finest shiftless decomposition needs this; the default pipeline is
factorization-free.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .arith import UPoly

_Z = sympy.Symbol("z")


def factor_squarefree_upoly(p: UPoly) -> list[UPoly]:
    """Monic irreducible factors of a squarefree univariate polynomial."""
    if p.deg < 1:
        return []
    expr = sum(sympy.Rational(c.numerator, c.denominator) * _Z**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, _Z))
    out = []
    for fac, mult in factors:
        assert mult == 1, "input was not squarefree"
        poly = sympy.Poly(fac, _Z)
        coeffs = [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]
        out.append(UPoly(coeffs, p.var).monic())
    out.sort(key=lambda q: (len(q.coeffs), tuple((c.numerator, c.denominator) for c in q.coeffs)))
    return out
