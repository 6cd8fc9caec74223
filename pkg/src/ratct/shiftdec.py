"""Shift-equivalence, dispersion sets and shiftless decomposition in y.

The decomposition groups the factors of a bivariate polynomial into classes
``base, shifts, mults`` with ``g = content * prod_i prod_j sigma_y^{nu_ij}(base_i)^{e_ij}``.
The coarsest grouping (factors sharing shift and multiplicity tuples stay
together) is computed purely with gcds; the finest grouping additionally
splits integer-linear content into irreducible shift classes, which needs
univariate factorization over Q.

Dispersion sets are found from integer differences of numerically isolated
roots at a good specialization of x; every candidate is confirmed by an exact
bivariate gcd, so the result is exact.  (A true dispersion element always
shows up as a root difference at any specialization preserving the leading
coefficients, so candidates form a superset.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .arith import BPoly, UPoly, bp_gcd


@dataclass(frozen=True)
class ShiftClass:
    base: BPoly
    shifts: tuple[int, ...]
    mults: tuple[int, ...]


@dataclass(frozen=True)
class ShiftlessDecomp:
    content: UPoly
    classes: tuple[ShiftClass, ...]

    def reconstruct(self) -> BPoly:
        out = BPoly.from_upoly_x(self.content)
        for cls in self.classes:
            for nu, e in zip(cls.shifts, cls.mults):
                out = out * cls.base.shift(0, nu) ** e
        return out


def bpoly_sort_key(b: BPoly):
    return (
        int(b.deg_y) if not b.is_zero() else -1,
        int(b.deg_x) if not b.is_zero() and b.deg_x >= 0 else -1,
        tuple(tuple((c.numerator, c.denominator) for c in u.coeffs) for u in b.coeffs),
    )


def upoly_sort_key(p: UPoly):
    return (len(p.coeffs), tuple((c.numerator, c.denominator) for c in p.coeffs))


# ---------------------------------------------------------------------------
# shift equivalence
# ---------------------------------------------------------------------------


def shift_equiv_y(f: BPoly, g: BPoly) -> int | None:
    """Return m with f = sigma_y^m(g), i.e. f(x, y) = g(x, y + m), if one exists."""
    if f.is_zero() or g.is_zero() or f.deg_y != g.deg_y:
        return None
    d = int(f.deg_y)
    if d == 0:
        return 0 if f == g else None
    if f.lc_y() != g.lc_y():
        return None
    # compare the y^(d-1) coefficients: g(y+m) has g_{d-1} + d*m*g_d there
    p = f.coeff_y(d - 1) - g.coeff_y(d - 1)
    q = g.lc_y().scale(d)
    if p.is_zero():
        m = 0
    else:
        if p.deg != q.deg:
            return None
        ratio = p.lc / q.lc
        if ratio.denominator != 1:
            return None
        m = int(ratio)
        if p != q.scale(m):
            return None
    return m if g.shift(0, m) == f else None


# ---------------------------------------------------------------------------
# dispersion sets
# ---------------------------------------------------------------------------


def _good_point(f: BPoly, g: BPoly) -> int:
    x0 = 1
    while True:
        if f.lc_y().eval(x0) != 0 and g.lc_y().eval(x0) != 0:
            return x0
        x0 += 1


def _roots_at(u: UPoly) -> list[mpmath.mpc]:
    """Numeric roots of the squarefree part of a univariate rational polynomial."""
    sq = u.exact_div(u.gcd(u.deriv()))
    if sq.deg < 1:
        return []
    with mpmath.workdps(60):
        coeffs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in reversed(sq.coeffs)]
        return [mpmath.mpc(r) for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)]


def dispersion_candidates(f: BPoly, g: BPoly) -> set[int]:
    """Superset of DS_y(f, g) from root differences at a good specialization."""
    x0 = _good_point(f, g)
    fr = _roots_at(f.eval_x(x0))
    gr = _roots_at(g.eval_x(x0))
    cands = {0}
    for a in fr:
        for b in gr:
            d = b - a
            if abs(d.imag) < 1e-6:
                n = int(mpmath.nint(d.real))
                if abs(d.real - n) < 1e-6:
                    cands.add(n)
    return cands


def dispersion_set_y(f: BPoly, g: BPoly) -> set[int]:
    """DS_y(f, g) = { l : deg_y(gcd(f, sigma_y^l(g))) > 0 }, exactly."""
    if f.is_zero() or g.is_zero() or f.deg_y < 1 or g.deg_y < 1:
        return set()
    out = set()
    for l in dispersion_candidates(f, g):
        if bp_gcd(f, g.shift(0, l)).deg_y > 0:
            out.add(l)
    return out


def auto_dispersion_positive(g: BPoly) -> list[int]:
    return sorted(l for l in dispersion_set_y(g, g) if l > 0)


def is_shift_free_y(b: BPoly) -> bool:
    """True iff gcd(b, sigma_y^l(b)) is in K[x] for every nonzero l."""
    if b.is_zero():
        return False
    if b.deg_y < 1:
        return True
    return all(l == 0 for l in dispersion_set_y(b, b))


# ---------------------------------------------------------------------------
# squarefree decomposition in y (Yun)
# ---------------------------------------------------------------------------


def yun_squarefree_y(G: BPoly) -> list[tuple[BPoly, int]]:
    """Squarefree decomposition of a monic y-primitive polynomial wrt y."""
    out: list[tuple[BPoly, int]] = []
    d = G.deriv_y()
    a = bp_gcd(G, d)
    b = G.exact_div(a).monic_lex()
    c = d.exact_div(a)
    e = 1
    while b.deg_y > 0:
        t = c - b.deriv_y()
        v = bp_gcd(b, t)
        if v.deg_y > 0:
            out.append((v, e))
            b = b.exact_div(v).monic_lex()
            c = t.exact_div(v)
        else:
            c = t
        e += 1
    return out


# ---------------------------------------------------------------------------
# shiftless decomposition
# ---------------------------------------------------------------------------


def shiftless_decomp(g: BPoly, mode: str = "coarsest") -> ShiftlessDecomp:
    """Shiftless decomposition of g wrt y; mode is 'coarsest' or 'finest'."""
    if g.is_zero():
        raise ValueError("shiftless decomposition of the zero polynomial")
    if mode not in ("coarsest", "finest"):
        raise ValueError(f"unknown mode {mode!r}")
    content, G = g.primitive_y()
    if G.deg_y < 1:
        return ShiftlessDecomp(content * G.coeff_y(0), ())

    sqf = yun_squarefree_y(G)
    W = BPoly.const(1)
    for v, _ in sqf:
        W = W * v
    W = W.monic_lex()

    disp = auto_dispersion_positive(W)

    # leftmost bases: factors of W with no W-factor a positive shift below them
    L = W
    for l in disp:
        d = bp_gcd(L, W.shift(0, l))
        if d.deg_y > 0:
            L = L.exact_div(d).monic_lex()

    # which leftmost factors occur at shift l
    tmap: dict[int, BPoly] = {}
    for l in [0] + disp:
        s = bp_gcd(W, L.shift(0, l))
        tmap[l] = bp_gcd(L, s.shift(0, -l))

    parts = [L]
    for l in disp:
        parts = _refine(parts, tmap[l])
    # multiplicity refinement per (shift, level)
    for l in [0] + disp:
        for v, _ in sqf:
            parts = _refine(parts, v.shift(0, -l))

    classes = []
    for part in parts:
        shifts = tuple(l for l in [0] + disp if part.divides(tmap[l]))
        mults = []
        for l in shifts:
            e_here = 0
            shifted = part.shift(0, l)
            for v, e in sqf:
                if shifted.divides(v):
                    e_here = e
                    break
            assert e_here > 0, "multiplicity refinement failed"
            mults.append(e_here)
        classes.append(ShiftClass(part.monic_lex(), shifts, tuple(mults)))

    if mode == "finest":
        classes = _finest_refine(classes)

    classes.sort(key=lambda c: bpoly_sort_key(c.base))
    result = ShiftlessDecomp(content, tuple(classes))
    assert result.reconstruct() == g, "shiftless decomposition failed to reconstruct"
    return result


def _refine(parts: list[BPoly], divisor: BPoly) -> list[BPoly]:
    if divisor.deg_y < 1:
        return parts
    out = []
    for p in parts:
        d = bp_gcd(p, divisor)
        if 0 < d.deg_y < p.deg_y:
            out.append(d)
            out.append(p.exact_div(d).monic_lex())
        else:
            out.append(p)
    return out


def _finest_refine(classes: list[ShiftClass]) -> list[ShiftClass]:
    """Split each base into irreducible shift classes where integer-linear
    structure makes that possible without bivariate factorization."""
    from .intlinear import il_decompose
    from .unifactor import factor_squarefree_upoly

    out = []
    for cls in classes:
        if cls.base.deg_y == 1:
            out.append(cls)
            continue
        p0, il_parts = il_decompose(cls.base)
        pieces: list[BPoly] = []
        for ilt, ptilde in il_parts:
            for q in factor_squarefree_upoly(ptilde):
                pieces.append(_compose_kernel(q, ilt.lam, ilt.mu))
        if p0.deg_y > 0:
            _, pp = p0.primitive_y()
            pieces.append(pp)
        if len(pieces) <= 1:
            out.append(cls)
            continue
        for piece in pieces:
            out.append(ShiftClass(piece.monic_lex(), cls.shifts, cls.mults))
    return out


def _compose_kernel(p: UPoly, lam: int, mu: int, nu: int = 0) -> BPoly:
    """p(lam*x + mu*y + nu) as a bivariate polynomial."""
    arg = BPoly.linear_form(lam, mu, nu)
    acc = BPoly.zero()
    for c in reversed(p.coeffs):
        acc = acc * arg + BPoly.const(c)
    return acc
