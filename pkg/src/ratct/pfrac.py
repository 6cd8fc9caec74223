"""Partial fraction decomposition in y over Q(x), denominators kept in Q[x].

Given a numerator a and pairwise coprime factors g_i with multiplicities e_i,
writes

    a / prod g_i^e_i  =  (1/u) * sum_{i,j} parts[i,j] / g_i^j,   1 <= j <= e_i,

with u in Q[x], deg_y(parts[i,j]) < deg_y(g_i), everything exact.  Solved as a
square linear system over Q[x] (one unknown y-coefficient per basis fraction),
which yields the common denominator u directly.
"""

from __future__ import annotations

from .arith import BPoly, UPoly, bp_gcd
from .errors import NotCoprime
from .linalg import solve_square


def partial_fractions_y(
    a: BPoly, factors: list[tuple[BPoly, int]]
) -> tuple[UPoly, dict[tuple[int, int], BPoly]]:
    """Decompose a over the given (factor, multiplicity) list.

    Returns (u, parts) with parts keyed by (factor index, power).  Requires the
    factors to be pairwise coprime (in y) and deg_y(a) < deg_y of the product.
    Zero numerator parts are omitted.
    """
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = bp_gcd(factors[i][0], factors[j][0])
            if g.deg_y > 0:
                raise NotCoprime(f"factors {i} and {j} share a y-dependent gcd")

    den = BPoly.const(1)
    for g, e in factors:
        den = den * g ** e
    dy = int(den.deg_y) if not den.is_zero() else 0
    if a.deg_y >= den.deg_y:
        raise ValueError("numerator must be y-proper for partial fractions")
    if a.is_zero():
        return UPoly.const(1, "x"), {}
    if len(factors) == 1 and factors[0][1] == 1:
        if a.is_zero():
            return UPoly.const(1, "x"), {}
        return UPoly.const(1, "x"), {(0, 1): a}

    # unknowns: for factor i, power j, y-coefficient t of the numerator
    unknowns: list[tuple[int, int, int]] = []
    cofactors: dict[tuple[int, int], BPoly] = {}
    for i, (g, e) in enumerate(factors):
        dg = int(g.deg_y)
        for j in range(1, e + 1):
            cof = den.exact_div(g ** j)
            cofactors[(i, j)] = cof
            for t in range(dg):
                unknowns.append((i, j, t))
    n = len(unknowns)
    assert n == dy, "partial fraction system is not square"

    # column for unknown (i, j, t): y-coefficients of y^t * cofactor
    matrix = [[UPoly.zero("x") for _ in range(n)] for _ in range(dy)]
    for col, (i, j, t) in enumerate(unknowns):
        cof = cofactors[(i, j)]
        for r, c in enumerate(cof.coeffs):
            if t + r < dy:
                matrix[t + r][col] = c
    rhs = [a.coeff_y(r) for r in range(dy)]
    solved = solve_square(matrix, rhs)
    if solved is None:
        raise NotCoprime("partial fraction system is singular; factors not coprime")
    nums, u = solved

    parts: dict[tuple[int, int], BPoly] = {}
    for col, (i, j, t) in enumerate(unknowns):
        c = nums[col]
        if c.is_zero():
            continue
        key = (i, j)
        base = parts.get(key, BPoly.zero())
        add = BPoly([UPoly.zero("x")] * t + [c])
        parts[key] = base + add
    return u, parts


def recombine(u: UPoly, parts: dict[tuple[int, int], BPoly], factors: list[tuple[BPoly, int]]):
    """Reassemble a partial fraction decomposition into a rational function."""
    from .arith import RatFunc

    total = RatFunc.zero()
    for (i, j), num in parts.items():
        total = total + RatFunc(num, factors[i][0] ** j)
    return total * RatFunc(BPoly.const(1), BPoly.from_upoly_x(u))
