"""Exact arithmetic over Q: univariate/bivariate polynomials and rational functions.

Representation choices:

* ``Rat`` is ``fractions.Fraction`` (already normalized, positive denominator).
* ``UPoly`` is a dense univariate polynomial: an immutable coefficient tuple
  from degree 0 upward with no trailing zero, plus a variable tag.
* ``BPoly`` is recursive dense: a tuple of ``UPoly`` in x indexed by the power
  of y.  Terms are ordered by the pure lexicographic order with x < y, so the
  leading coefficient is the top x-coefficient of the top y-slice.
* ``RatFunc`` is a reduced quotient of two ``BPoly`` with monic denominator;
  normalization is canonical, so equality is structural.

The degree of the zero polynomial is -inf (``NEG_INF``), which makes degree
arithmetic in division and bound formulas work without special cases.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisorZero

Rat = Fraction

NEG_INF = -math.inf

Scalar = Union[int, Fraction]


def _normalize(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _taylor_shift(coeffs: Sequence[Fraction], k: Fraction) -> list[Fraction]:
    # p(t + k) by Horner: fold in coefficients from the top.
    out: list[Fraction] = []
    for c in reversed(coeffs):
        new = [Fraction(0)] * (len(out) + 1)
        for i, a in enumerate(out):
            new[i + 1] += a
            new[i] += a * k
        new[0] += c
        out = new
    return out


class UPoly:
    """Dense univariate polynomial over Q with a variable tag ('x', 'y' or 'z')."""

    __slots__ = ("var", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar], var: str = "x"):
        self.var = var
        self.coeffs = _normalize([Fraction(c) for c in coeffs])
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(var: str = "x") -> UPoly:
        return UPoly((), var)

    @staticmethod
    def const(c: Scalar, var: str = "x") -> UPoly:
        return UPoly((c,), var)

    @staticmethod
    def gen(var: str = "x") -> UPoly:
        return UPoly((0, 1), var)

    @staticmethod
    def monomial(c: Scalar, n: int, var: str = "x") -> UPoly:
        return UPoly((0,) * n + (c,), var)

    # -- queries -----------------------------------------------------------

    @property
    def deg(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs and self.var == other.var

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"UPoly({render_upoly(self)})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: UPoly) -> UPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out, self.var)

    def __sub__(self, other: UPoly) -> UPoly:
        out = list(self.coeffs)
        b = other.coeffs
        if len(out) < len(b):
            out.extend([Fraction(0)] * (len(b) - len(out)))
        for i, c in enumerate(b):
            out[i] -= c
        return UPoly(out, self.var)

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs], self.var)

    def __mul__(self, other: UPoly) -> UPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly.zero(self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return UPoly(out, self.var)

    def scale(self, c: Scalar) -> UPoly:
        c = Fraction(c)
        if not c:
            return UPoly.zero(self.var)
        return UPoly([a * c for a in self.coeffs], self.var)

    def __pow__(self, n: int) -> UPoly:
        result = UPoly.const(1, self.var)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- division, gcd -----------------------------------------------------

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        """Quotient and remainder over the field Q."""
        if other.is_zero():
            raise DivisorZero("division by zero polynomial")
        if self.deg < other.deg:
            return UPoly.zero(self.var), self
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        quo = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lc
            quo[i - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] -= q * cb
        return UPoly(quo, self.var), UPoly(rem, self.var)

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact univariate division")
        return q

    def gcd(self, other: UPoly) -> UPoly:
        """Monic greatest common divisor, via primitive PRS over Z."""
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        if self.is_const() or other.is_const():
            return UPoly.const(1, self.var)
        a = _int_primitive_list(self.coeffs)
        b = _int_primitive_list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        while True:
            r = _int_prem(a, b)
            if not r:
                break
            if len(r) == 1:
                return UPoly.const(1, self.var)
            a, b = b, _int_prim(r)
        return UPoly(b, self.var).monic()

    def lcm(self, other: UPoly) -> UPoly:
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.var)
        g = self.gcd(other)
        return (self.exact_div(g) * other).monic()

    # -- calculus, shifts, evaluation ---------------------------------------

    def deriv(self) -> UPoly:
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def shift(self, k: Scalar) -> UPoly:
        """p(t) -> p(t + k)."""
        k = Fraction(k)
        if not k or self.is_const():
            return self
        return UPoly(_taylor_shift(self.coeffs, k), self.var)

    def eval(self, t: Scalar) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose(self, inner: UPoly) -> UPoly:
        acc = UPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly.const(c, inner.var)
        return acc

    # -- normal forms --------------------------------------------------------

    def monic(self) -> UPoly:
        if self.is_zero() or self.lc == 1:
            return self
        return self.scale(1 / self.lc)

    def int_primitive(self) -> tuple[Fraction, UPoly]:
        """Write self = c * p with p integer-primitive and lc(p) > 0."""
        if self.is_zero():
            return Fraction(1), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), UPoly([v // g for v in ints], self.var)


def _int_primitive_list(coeffs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    return _int_prim(ints)


def _int_prim(ints: list[int]) -> list[int]:
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (len(a) >= len(b) >= 2)."""
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
    n = len(rem)
    while n > 0 and rem[n - 1] == 0:
        n -= 1
    return rem[:n]


class BPoly:
    """Bivariate polynomial over Q, dense in y over dense-in-x coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[UPoly]):
        cs = list(coeffs)
        n = len(cs)
        while n > 0 and cs[n - 1].is_zero():
            n -= 1
        self.coeffs = tuple(cs[:n])
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> BPoly:
        return BPoly(())

    @staticmethod
    def const(c: Scalar) -> BPoly:
        return BPoly((UPoly.const(c, "x"),))

    @staticmethod
    def from_upoly_x(p: UPoly) -> BPoly:
        return BPoly((UPoly(p.coeffs, "x"),))

    @staticmethod
    def from_upoly_y(p: UPoly) -> BPoly:
        return BPoly(tuple(UPoly.const(c, "x") for c in p.coeffs))

    @staticmethod
    def x() -> BPoly:
        return BPoly((UPoly.gen("x"),))

    @staticmethod
    def y() -> BPoly:
        return BPoly((UPoly.zero("x"), UPoly.const(1, "x")))

    @staticmethod
    def linear_form(lam: Scalar, mu: Scalar, nu: Scalar = 0) -> BPoly:
        """lam*x + mu*y + nu."""
        return BPoly((UPoly((nu, lam), "x"), UPoly.const(mu, "x")))

    # -- queries ---------------------------------------------------------------

    @property
    def deg_y(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def deg_x(self) -> float:
        if not self.coeffs:
            return NEG_INF
        return max(c.deg for c in self.coeffs)

    @property
    def deg_total(self) -> float:
        if not self.coeffs:
            return NEG_INF
        return max(j + c.deg for j, c in enumerate(self.coeffs) if not c.is_zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1 and (not self.coeffs or self.coeffs[0].is_const())

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def const_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return self.coeffs[0].coeff(0)

    def lc_y(self) -> UPoly:
        """Leading coefficient with respect to y (an element of Q[x])."""
        return self.coeffs[-1] if self.coeffs else UPoly.zero("x")

    def lc_lex(self) -> Fraction:
        """Leading coefficient for the pure lex order with x < y."""
        return self.lc_y().lc

    def coeff_y(self, j: int) -> UPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return UPoly.zero("x")

    def coeff(self, i: int, j: int) -> Fraction:
        """Coefficient of x^i y^j."""
        return self.coeff_y(j).coeff(i)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, BPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"BPoly({render_bpoly(self)})"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: BPoly) -> BPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BPoly(out)

    def __sub__(self, other: BPoly) -> BPoly:
        a, b = self.coeffs, other.coeffs
        out = list(a)
        if len(out) < len(b):
            out.extend([UPoly.zero("x")] * (len(b) - len(out)))
        for j, c in enumerate(b):
            out[j] = out[j] - c
        return BPoly(out)

    def __neg__(self) -> BPoly:
        return BPoly([-c for c in self.coeffs])

    def __mul__(self, other: BPoly) -> BPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BPoly.zero()
        out = [UPoly.zero("x") for _ in range(len(a) + len(b) - 1)]
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero():
                    out[i + j] = out[i + j] + ca * cb
        return BPoly(out)

    def mul_upoly_x(self, p: UPoly) -> BPoly:
        return BPoly([c * p for c in self.coeffs])

    def scale(self, c: Scalar) -> BPoly:
        c = Fraction(c)
        if not c:
            return BPoly.zero()
        return BPoly([u.scale(c) for u in self.coeffs])

    def __pow__(self, n: int) -> BPoly:
        result = BPoly.const(1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- shifts and evaluation ------------------------------------------------

    def shift(self, kx: int, ky: int) -> BPoly:
        """f(x, y) -> f(x + kx, y + ky)."""
        coeffs = self.coeffs
        if kx:
            coeffs = tuple(c.shift(kx) for c in coeffs)
        if ky and len(coeffs) > 1:
            ky_f = Fraction(ky)
            out = [UPoly.zero("x") for _ in range(len(coeffs))]
            for i, c in enumerate(coeffs):
                if c.is_zero():
                    continue
                binom = 1
                power = Fraction(1)
                for j in range(i, -1, -1):
                    out[j] = out[j] + c.scale(binom * power)
                    binom = binom * j // (i - j + 1)
                    power *= ky_f
            return BPoly(out)
        return BPoly(coeffs)

    def eval_x(self, t: Scalar) -> UPoly:
        """Evaluate x at t, giving an element of Q[y]."""
        return UPoly([c.eval(t) for c in self.coeffs], "y")

    def eval_y(self, t: Scalar) -> UPoly:
        t = Fraction(t)
        acc = UPoly.zero("x")
        for c in reversed(self.coeffs):
            acc = acc.scale(t) + c
        return acc

    def eval(self, tx: Scalar, ty: Scalar) -> Fraction:
        return self.eval_y(ty).eval(tx)

    def subs_linear(self, x_form: BPoly, y_form: BPoly) -> BPoly:
        """Substitute x -> x_form, y -> y_form (polynomials in the new variables)."""
        acc = BPoly.zero()
        for c in reversed(self.coeffs):
            inner = BPoly.zero()
            for a in reversed(c.coeffs):
                inner = inner * x_form + BPoly.const(a)
            acc = acc * y_form + inner
        return acc

    # -- division ---------------------------------------------------------------

    def pseudo_divrem_y(self, g: BPoly) -> tuple[BPoly, BPoly, int]:
        """Pseudo-division in y: lc_y(g)^e * self = q*g + r, deg_y(r) < deg_y(g),
        with e = deg_y(self) - deg_y(g) + 1."""
        if g.is_zero():
            raise DivisorZero("pseudo-division by zero")
        df, dg = self.deg_y, g.deg_y
        if df < dg:
            return BPoly.zero(), self, 0
        df, dg = int(df), int(dg)
        lc = g.lc_y()
        rem = list(self.coeffs)
        quo = [UPoly.zero("x") for _ in range(df - dg + 1)]
        for i in range(df, dg - 1, -1):
            top = rem[i]
            rem = [c * lc for c in rem]
            quo = [c * lc for c in quo]
            if top.is_zero():
                continue
            quo[i - dg] = quo[i - dg] + top
            for j, cg in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - top * cg
        return BPoly(quo), BPoly(rem), df - dg + 1

    def exact_div(self, g: BPoly) -> BPoly:
        """Exact division; raises ValueError if g does not divide self."""
        if g.is_zero():
            raise DivisorZero("division by zero polynomial")
        if self.is_zero():
            return self
        if g.is_const():
            return self.scale(1 / g.const_value())
        if g.deg_y == 0:
            u = g.coeffs[0]
            out = []
            for c in self.coeffs:
                q, r = c.divmod(u)
                if not r.is_zero():
                    raise ValueError("inexact bivariate division")
                out.append(q)
            return BPoly(out)
        dg = int(g.deg_y)
        df = int(self.deg_y)
        if df < dg:
            raise ValueError("inexact bivariate division")
        lc = g.lc_y()
        rem = list(self.coeffs)
        quo = [UPoly.zero("x") for _ in range(df - dg + 1)]
        for i in range(df, dg - 1, -1):
            top = rem[i]
            if top.is_zero():
                continue
            q, r = top.divmod(lc)
            if not r.is_zero():
                raise ValueError("inexact bivariate division")
            quo[i - dg] = q
            for j, cg in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - q * cg
        if any(not c.is_zero() for c in rem):
            raise ValueError("inexact bivariate division")
        return BPoly(quo)

    def divides(self, other: BPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # -- content, primitive part, normal forms -----------------------------------

    def content_x(self) -> UPoly:
        """Monic gcd over Q[x] of the y-coefficients."""
        g = UPoly.zero("x")
        for c in self.coeffs:
            g = g.gcd(c)
            if g.is_one():
                break
        return g

    def primitive_y(self) -> tuple[UPoly, BPoly]:
        """Split self = content * primitive, primitive y-primitive and monic (lex).

        The content carries the full lex leading coefficient of self.
        """
        if self.is_zero():
            return UPoly.zero("x"), self
        cont = self.content_x()
        pp = self.exact_div(BPoly.from_upoly_x(cont))
        c = pp.lc_lex()
        if c != 1:
            cont = cont.scale(c)
            pp = pp.scale(1 / c)
        return cont, pp

    def monic_lex(self) -> BPoly:
        c = self.lc_lex()
        if not c or c == 1:
            return self
        return self.scale(1 / c)

    def deriv_y(self) -> BPoly:
        return BPoly([c.scale(j) for j, c in enumerate(self.coeffs)][1:])

    def int_primitive(self) -> tuple[Fraction, BPoly]:
        """Write self = c * p with integer-primitive p whose lex lc is positive."""
        if self.is_zero():
            return Fraction(1), self
        den = 1
        for u in self.coeffs:
            for c in u.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
        g = 0
        for u in self.coeffs:
            for c in u.coeffs:
                g = math.gcd(g, int(c * den))
        if self.lc_lex() < 0:
            g = -g
        factor = Fraction(g, den)
        return factor, self.scale(1 / factor)


# ---------------------------------------------------------------------------
# bivariate gcd: content/primitive split plus primitive PRS in y
# ---------------------------------------------------------------------------


def bp_gcd(f: BPoly, g: BPoly) -> BPoly:
    """Monic (lex x < y) greatest common divisor; gcd(0, 0) = 0."""
    if f.is_zero() and g.is_zero():
        return BPoly.zero()
    if f.is_zero():
        return g.monic_lex()
    if g.is_zero():
        return f.monic_lex()
    cf, pf = f.primitive_y()
    cg, pg = g.primitive_y()
    cont = cf.gcd(cg)
    if pf.deg_y == 0 or pg.deg_y == 0:
        core = BPoly.const(1)
    else:
        core = _prs_gcd_primitive(pf, pg)
    return core.mul_upoly_x(cont).monic_lex()


def _prs_gcd_primitive(a: BPoly, b: BPoly) -> BPoly:
    """Primitive-PRS gcd of two y-primitive polynomials of positive y-degree."""
    if a.deg_y < b.deg_y:
        a, b = b, a
    while True:
        _, r, _ = a.pseudo_divrem_y(b)
        if r.is_zero():
            _, pp = b.primitive_y()
            return pp
        if r.deg_y == 0:
            return BPoly.const(1)
        _, r = r.primitive_y()
        a, b = b, r


def bp_lcm(f: BPoly, g: BPoly) -> BPoly:
    if f.is_zero() or g.is_zero():
        return BPoly.zero()
    return (f * g).exact_div(bp_gcd(f, g)).monic_lex()


class RatFunc:
    """Reduced quotient of two bivariate polynomials with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: BPoly, den: BPoly, *, _normalized: bool = False):
        if den.is_zero():
            raise DivisorZero("zero denominator")
        if not _normalized:
            if num.is_zero():
                num, den = BPoly.zero(), BPoly.const(1)
            else:
                g = bp_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                c = den.lc_lex()
                if c != 1:
                    num = num.scale(1 / c)
                    den = den.scale(1 / c)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def zero() -> RatFunc:
        return RatFunc(BPoly.zero(), BPoly.const(1), _normalized=True)

    @staticmethod
    def one() -> RatFunc:
        return RatFunc(BPoly.const(1), BPoly.const(1), _normalized=True)

    @staticmethod
    def const(c: Scalar) -> RatFunc:
        return RatFunc(BPoly.const(c), BPoly.const(1), _normalized=True)

    @staticmethod
    def from_bpoly(p: BPoly) -> RatFunc:
        return RatFunc(p, BPoly.const(1), _normalized=True)

    # -- queries -----------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def deg_x(self) -> float:
        return max(self.num.deg_x, self.den.deg_x)

    @property
    def deg_y(self) -> float:
        return max(self.num.deg_y, self.den.deg_y)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        from .parse import render

        return f"RatFunc({render(self)})"

    # -- field operations ----------------------------------------------------------

    def __add__(self, other: RatFunc) -> RatFunc:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        if other.is_zero():
            return self
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, _normalized=True)

    def __mul__(self, other: RatFunc) -> RatFunc:
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if other.is_zero():
            raise DivisorZero("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def scale(self, c: Scalar) -> RatFunc:
        if not Fraction(c):
            return RatFunc.zero()
        return RatFunc(self.num.scale(c), self.den, _normalized=True)

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            if self.is_zero():
                raise DivisorZero("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n, _normalized=True)

    def shift(self, kx: int, ky: int) -> RatFunc:
        num = self.num.shift(kx, ky)
        den = self.den.shift(kx, ky)
        c = den.lc_lex()
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        return RatFunc(num, den, _normalized=True)

    # -- structure ---------------------------------------------------------------------

    def y_proper_split(self) -> tuple[BPoly, UPoly, RatFunc]:
        """Split into (P, w, proper) with self = P/w + proper, P in Q[x][y],
        w in Q[x], and proper y-proper."""
        if self.num.deg_y < self.den.deg_y:
            return BPoly.zero(), UPoly.const(1, "x"), self
        q, r, e = self.num.pseudo_divrem_y(self.den)
        lce = self.den.lc_y() ** e
        proper = RatFunc(r, self.den.mul_upoly_x(lce))
        return q, lce, proper

    def den_content_split(self) -> tuple[BPoly, UPoly, BPoly]:
        """Return (a, u, b) with self = a/(u*b), b monic y-primitive, gcd(a, u*b) = 1."""
        u, b = self.den.primitive_y()
        return self.num, u, b


# rendering hooks (filled in by parse to avoid an import cycle at module load)


def render_upoly(p: UPoly) -> str:
    from .parse import render_upoly as _r

    return _r(p)


def render_bpoly(p: BPoly) -> str:
    from .parse import render_bpoly as _r

    return _r(p)
