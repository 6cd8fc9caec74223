"""Exact linear algebra for matrices over Q[x].

Internally matrices are converted to integer coefficient lists (one list per
entry, dense from degree 0) and eliminated fraction-free (Bareiss), so the hot
loops run on Python ints.  A modular evaluation probe certifies full column
rank cheaply; the exact elimination only runs when a kernel may exist.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from .arith import UPoly

IPoly = list  # list[int], dense from degree 0, no trailing zeros

_PRIME = (1 << 61) - 1
_PROBE_POINTS = (10007, 31337, 65537, 424243)


# -- integer polynomial helpers ------------------------------------------------


def _trim(p: IPoly) -> IPoly:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    del p[n:]
    return p


def _padd(a: IPoly, b: IPoly) -> IPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _psub(a: IPoly, b: IPoly) -> IPoly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _pmul(a: IPoly, b: IPoly) -> IPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _pdivexact(a: IPoly, b: IPoly) -> IPoly:
    """Exact division of integer polynomials (caller guarantees divisibility)."""
    if not a:
        return []
    rem = list(a)
    db = len(b) - 1
    lc = b[-1]
    quo = [0] * (len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            q, r = divmod(c, lc)
            assert r == 0, "inexact division in fraction-free elimination"
            quo[i - db] = q
            for j, cb in enumerate(b):
                rem[i - db + j] -= q * cb
    assert not any(rem), "inexact division in fraction-free elimination"
    return quo


def _pcontent(a: IPoly) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pprim(a: IPoly) -> IPoly:
    g = _pcontent(a)
    if g > 1:
        return [c // g for c in a]
    return list(a)


def _pgcd(a: IPoly, b: IPoly) -> IPoly:
    """Gcd of integer polynomials, primitive with positive leading coefficient."""
    if not a:
        return _sign_norm(_pprim(b))
    if not b:
        return _sign_norm(_pprim(a))
    ca, cb = _pcontent(a), _pcontent(b)
    a, b = _pprim(a), _pprim(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem_int(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [1]
            break
        a, b = b, _pprim(r)
    g = _sign_norm(list(b))
    c = math.gcd(ca, cb)
    if c > 1:
        g = [v * c for v in g]
    return g


def _prem_int(a: IPoly, b: IPoly) -> IPoly:
    rem = list(a)
    db = len(b) - 1
    lc = b[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        top = rem[i]
        for j in range(len(rem)):
            rem[j] *= lc
        if top:
            for j, cb in enumerate(b):
                rem[i - db + j] -= top * cb
    return _trim(rem)


def _sign_norm(a: IPoly) -> IPoly:
    if a and a[-1] < 0:
        return [-c for c in a]
    return a


def _plcm(a: IPoly, b: IPoly) -> IPoly:
    if not a or not b:
        return []
    return _pdivexact(_pmul(a, b), _pgcd(a, b))


class _FracPoly:
    """Quotient of integer polynomials, normalized (used in back substitution)."""

    __slots__ = ("num", "den")

    def __init__(self, num: IPoly, den: IPoly, normalize: bool = True):
        if normalize and num:
            g = _pgcd(num, den)
            if len(g) > 1 or g[0] != 1:
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
            if den[-1] < 0:
                num = [-c for c in num]
                den = [-c for c in den]
        if not num:
            den = [1]
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> _FracPoly:
        return _FracPoly([], [1], normalize=False)

    @staticmethod
    def one() -> _FracPoly:
        return _FracPoly([1], [1], normalize=False)

    def is_zero(self) -> bool:
        return not self.num

    def add(self, other: _FracPoly) -> _FracPoly:
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return _FracPoly(num, _pmul(self.den, other.den))

    def mul(self, other: _FracPoly) -> _FracPoly:
        return _FracPoly(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def div(self, other: _FracPoly) -> _FracPoly:
        return _FracPoly(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def neg(self) -> _FracPoly:
        return _FracPoly([-c for c in self.num], self.den, normalize=False)


# -- conversions -----------------------------------------------------------------


def _upoly_to_ints(p: UPoly) -> tuple[IPoly, int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs], den


def _row_to_ints(row: Sequence[UPoly]) -> list[IPoly]:
    den = 1
    for p in row:
        for c in p.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    out = [[int(c * den) for c in p.coeffs] for p in row]
    g = 0
    for p in out:
        for c in p:
            g = math.gcd(g, c)
    if g > 1:
        out = [[c // g for c in p] for p in out]
    return out


def _ints_to_upoly(p: IPoly) -> UPoly:
    return UPoly(p, "x")


# -- elimination -------------------------------------------------------------------


def _bareiss_echelon(rows: list[list[IPoly]]) -> tuple[list[list[IPoly]], list[int]]:
    """Fraction-free row echelon form; returns (rows, pivot column list)."""
    m = len(rows)
    if m == 0:
        return rows, []
    n = len(rows[0])
    piv_cols: list[int] = []
    prev = [1]
    r = 0
    for c in range(n):
        best = -1
        best_deg = None
        for i in range(r, m):
            e = rows[i][c]
            if e:
                d = len(e)
                if best_deg is None or d < best_deg:
                    best, best_deg = i, d
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            e = rows[i][c]
            new_row = []
            for j in range(n):
                if j < c:
                    new_row.append(rows[i][j])
                    continue
                t = _psub(_pmul(rows[i][j], piv), _pmul(rows[r][j], e))
                if prev != [1]:
                    t = _pdivexact(t, prev)
                new_row.append(t)
            rows[i] = new_row
        piv_cols.append(c)
        prev = piv
        r += 1
        if r == m:
            break
    return rows, piv_cols


def _back_substitute_kernel(
    rows: list[list[IPoly]], piv_cols: list[int], n: int, free_col: int
) -> list[IPoly]:
    v: list[Optional[_FracPoly]] = [None] * n
    v[free_col] = _FracPoly.one()
    for c in range(n):
        if c not in piv_cols and c != free_col:
            v[c] = _FracPoly.zero()
    for k in range(len(piv_cols) - 1, -1, -1):
        c = piv_cols[k]
        acc = _FracPoly.zero()
        for j in range(c + 1, n):
            e = rows[k][j]
            if e and not v[j].is_zero():
                acc = acc.add(_FracPoly(list(e), [1], normalize=False).mul(v[j]))
        v[c] = acc.neg().div(_FracPoly(list(rows[k][c]), [1], normalize=False))
    # clear denominators
    den = [1]
    for entry in v:
        den = _plcm(den, entry.den)
    out = [_pmul(entry.num, _pdivexact(den, entry.den)) for entry in v]
    # strip common polynomial and integer content
    g: IPoly = []
    for p in out:
        if p:
            g = _pgcd(g, p) if g else _sign_norm(_pprim(list(p)))
            if g == [1]:
                break
    if g and g != [1]:
        out = [_pdivexact(p, g) if p else p for p in out]
    content = 0
    for p in out:
        for c in p:
            content = math.gcd(content, c)
    if content > 1:
        out = [[c // content for c in p] for p in out]
    for p in reversed(out):
        if p:
            if p[-1] < 0:
                out = [[-c for c in q] for q in out]
            break
    return out


def poly_matrix_nullspace(matrix: Sequence[Sequence[UPoly]]) -> list[list[UPoly]]:
    """Basis of the K(x)-nullspace of a matrix over Q[x], as primitive Q[x] vectors.

    Each basis vector is integer-primitive with no common polynomial factor and
    its last nonzero entry has a positive leading coefficient.
    """
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [_row_to_ints(row) for row in matrix]
    rows = [r for r in rows if any(e for e in r)]
    if not rows:
        return [[UPoly.const(1 if i == j else 0, "x") for j in range(n)] for i in range(n)]
    rows, piv_cols = _bareiss_echelon(rows)
    basis = []
    for c in range(n):
        if c not in piv_cols:
            vec = _back_substitute_kernel(rows, piv_cols, n, c)
            basis.append([_ints_to_upoly(p) for p in vec])
    return basis


def nullspace_is_trivial(matrix: Sequence[Sequence[UPoly]]) -> bool:
    """True iff the K(x)-nullspace is {0}.  Fast modular probe, exact fallback."""
    m = len(matrix)
    if m == 0:
        return False
    n = len(matrix[0])
    if n > m:
        return False
    probe = _modular_rank_probe(matrix)
    if probe is not None and probe == n:
        return True
    rows = [_row_to_ints(row) for row in matrix]
    rows = [r for r in rows if any(e for e in r)]
    if len(rows) < n:
        return False
    _, piv_cols = _bareiss_echelon(rows)
    return len(piv_cols) == n


def _modular_rank_probe(matrix: Sequence[Sequence[UPoly]]) -> Optional[int]:
    """Rank of the matrix specialized at a point, mod a prime (<= true rank)."""
    p = _PRIME
    for x0 in _PROBE_POINTS:
        vals = []
        ok = True
        for row in matrix:
            vrow = []
            for entry in row:
                acc = 0
                for c in reversed(entry.coeffs):
                    dinv = pow(c.denominator % p, p - 2, p)
                    if c.denominator % p == 0:
                        ok = False
                        break
                    acc = (acc * x0 + c.numerator * dinv) % p
                if not ok:
                    break
                vrow.append(acc)
            if not ok:
                break
            vals.append(vrow)
        if not ok:
            continue
        return _rank_mod_p(vals, p)
    return None


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    rank = 0
    for c in range(n):
        piv = -1
        for i in range(rank, m):
            if rows[i][c] % p:
                piv = i
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        for i in range(rank + 1, m):
            f = rows[i][c] * inv % p
            if f:
                for j in range(c, n):
                    rows[i][j] = (rows[i][j] - f * rows[rank][j]) % p
        rank += 1
        if rank == m:
            break
    return rank


# -- square solve (used by partial fractions) ------------------------------------------


def solve_square(matrix: Sequence[Sequence[UPoly]], rhs: Sequence[UPoly]) -> Optional[tuple[list[UPoly], UPoly]]:
    """Solve A*v = b exactly over K(x) for square nonsingular A.

    Returns (numerators, common denominator) with v_i = num_i/den, den an
    integer-primitive polynomial with positive leading coefficient, or None
    if A is singular.
    """
    n = len(matrix)
    aug = []
    for i in range(n):
        aug.append(_row_to_ints(list(matrix[i]) + [rhs[i]]))
    rows, piv_cols = _bareiss_echelon(aug)
    if len(piv_cols) != n or any(c >= n for c in piv_cols):
        return None
    sol: list[Optional[_FracPoly]] = [None] * n
    for k in range(n - 1, -1, -1):
        c = piv_cols[k]
        acc = _FracPoly(list(rows[k][n]), [1], normalize=False)
        for j in range(c + 1, n):
            e = rows[k][j]
            if e and not sol[j].is_zero():
                acc = acc.add(_FracPoly(list(e), [1], normalize=False).mul(sol[j]).neg())
        sol[c] = acc.div(_FracPoly(list(rows[k][c]), [1], normalize=False))
    den = [1]
    for entry in sol:
        den = _plcm(den, entry.den)
    nums = [_pmul(entry.num, _pdivexact(den, entry.den)) for entry in sol]
    if den and den[-1] < 0:
        den = [-c for c in den]
        nums = [[-c for c in p] for p in nums]
    return [_ints_to_upoly(p) for p in nums], _ints_to_upoly(den)


# -- dense kernel over Q (bounded-degree probe) ------------------------------------------


def q_matrix_kernel_vector(rows: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """One nontrivial kernel vector of a matrix over Q, or None."""
    m = len(rows)
    if m == 0:
        return None
    n = len(rows[0])
    mat = [list(r) for r in rows]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if mat[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [e * inv for e in mat[r]]
        for i in range(m):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in piv_cols]
    if not free:
        return None
    fc = free[0]
    v = [Fraction(0)] * n
    v[fc] = Fraction(1)
    for k, c in enumerate(piv_cols):
        v[c] = -mat[k][fc]
    return v
