"""Exact arithmetic in the differential fields Q and Q(t).

Elements are rational functions of t with Fraction coefficients, kept in
lowest terms with monic denominator.  Q is the same type with the
ConstantsOnly tag and the zero derivation.  On top of the field arithmetic
this module decides two questions exactly:

* does a given element have an antiderivative inside the field (Hermite
  reduction), and
* is it a Q-linear combination of logarithmic derivatives of irreducible
  polynomials, and if so with which rational residues.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an integer or Fraction, got %r" % (x,))


class BaseField(Enum):
    """Which differential field an element lives in."""

    CONSTANTS = "Q"
    RATIONAL = "Q(t)"

    def join(self, other: "BaseField") -> "BaseField":
        if self is BaseField.CONSTANTS and other is BaseField.CONSTANTS:
            return BaseField.CONSTANTS
        return BaseField.RATIONAL


class Poly:
    """Dense univariate polynomial in t over Q.

    coeffs is an ascending tuple of Fractions with no trailing zero; the
    zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division, other nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        lb = other.lead()
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            dr = len(rem) - 1
            q = rem[-1] / lb
            quo[dr - db] = q
            for j, b in enumerate(other.coeffs):
                rem[j + dr - db] -= q * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def derivative(self) -> "Poly":
        return Poly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> "Poly":
        if self.is_zero() or self.lead() == 1:
            return self
        inv = 1 / self.lead()
        return Poly(tuple(c * inv for c in self.coeffs))

    def shift(self, a) -> "Poly":
        """p(t + a), exact binomial expansion."""
        a = _as_fraction(a)
        if a == 0 or self.is_zero():
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            pw = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += c * math.comb(k, j) * pw
                pw *= a
        return Poly(out)

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "t" if mag == 1 else "%s*t" % mag
            else:
                body = "t^%d" % k if mag == 1 else "%s*t^%d" % (mag, k)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "Poly(%s)" % (str(self),)


def _int_primitive(cs: list[int]) -> list[int]:
    # primitive part with positive leading coefficient
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return cs
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def _poly_to_ints(p: Poly) -> list[int]:
    den = math.lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    return _int_primitive([int(c * den) for c in p.coeffs])


def _int_reduce(a: list[int], b: list[int]) -> list[int]:
    # remainder of a modulo b up to a unit, exact integer arithmetic
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[-1]
        r = [lb * x for x in r]
        for j, bc in enumerate(b):
            r[j + dr - db] -= c * bc
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the primitive polynomial remainder sequence."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    ra = _poly_to_ints(a)
    rb = _poly_to_ints(b)
    while rb:
        ra, rb = rb, _int_primitive(_int_reduce(ra, rb))
    return Poly(ra).monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    return a.exact_div(poly_gcd(a, b)) * b


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm.

    Returns [(f_1, m_1), ...] with the f_i monic, squarefree, pairwise
    coprime, deg f_i > 0 and prod f_i^(m_i) = monic(p).
    """
    p = p.monic()
    if p.degree() <= 0:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return [(p, 1)]
    out = []
    c = p.exact_div(g)
    d = p.derivative().exact_div(g) - c.derivative()
    i = 1
    while c.degree() > 0:
        a = poly_gcd(c, d)
        if a.degree() > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


class RatFunc:
    """Rational function num/den over Q, den monic, gcd(num, den) = 1.

    field tags the ambient differential field; it changes the derivation
    (zero on Q) and the antiderivative question, but not the value, so
    equality and hashing ignore it.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den=1, field: BaseField = BaseField.RATIONAL):
        if isinstance(num, (int, Fraction)):
            num = Poly((num,))
        if isinstance(den, (int, Fraction)):
            den = Poly((den,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lead()
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        if field is BaseField.CONSTANTS and (num.degree() > 0 or den.degree() > 0):
            raise ValueError("a constant-field element cannot involve t")
        self.num = num
        self.den = den
        self.field = field

    @classmethod
    def const(cls, c, field: BaseField = BaseField.RATIONAL) -> "RatFunc":
        return cls(Poly((c,)), 1, field)

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Poly.t())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0]

    def __eq__(self, other) -> bool:
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, self.field)

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.field.join(other.field),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.num, self.den * other.den, self.field.join(other.field)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(
            self.num * other.den, self.den * other.num, self.field.join(other.field)
        )

    def __rtruediv__(self, other):
        other = _coerce(other, self.field)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den**(-e), self.num**(-e), self.field)
        return RatFunc(self.num**e, self.den**e, self.field)

    def derive(self) -> "RatFunc":
        """Apply the field derivation: d/dt on Q(t), zero on Q."""
        if self.field is BaseField.CONSTANTS:
            return RatFunc(Poly(), 1, self.field)
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d, self.field)

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        dv = self.den(x)
        if dv == 0:
            raise ZeroDivisionError("pole at %s" % x)
        return self.num(x) / dv

    def __str__(self) -> str:
        if self.den == Poly((1,)):
            return str(self.num)
        scale = math.lcm(*(c.denominator for c in self.num.coeffs))
        num = self.num * scale
        den = self.den * scale
        num_s = str(num)
        if " + " in num_s or " - " in num_s:
            num_s = "(%s)" % num_s
        den_s = str(den)
        monomial = sum(1 for c in den.coeffs if c) == 1 and den.lead() == 1
        if not monomial:
            den_s = "(%s)" % den_s
        return "%s/%s" % (num_s, den_s)

    def __repr__(self) -> str:
        return "RatFunc(%s)" % (str(self),)


def _coerce(x, field: BaseField):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc(Poly((x,)), 1, field)
    if isinstance(x, Poly):
        return RatFunc(x, 1, field)
    return None


def rf_derive(f: RatFunc) -> RatFunc:
    return f.derive()


def _partial_fractions(num: Poly, moduli: list[Poly]) -> list[Poly]:
    """Split num / prod(moduli) into proper parts over pairwise coprime moduli.

    Returns n_i with deg n_i < deg m_i and sum n_i/m_i = num/prod(moduli);
    requires the input fraction proper.
    """
    if len(moduli) == 1:
        return [num.divmod(moduli[0])[1]]
    m0 = moduli[0]
    rest = Poly((1,))
    for m in moduli[1:]:
        rest = rest * m
    g, u, v = poly_xgcd(m0, rest)
    if g.degree() != 0:
        raise ArithmeticError("moduli are not coprime")
    # u*m0 + v*rest = 1  =>  num/(m0*rest) = num*v/m0 + num*u/rest
    n0 = (num * v).divmod(m0)[1]
    n_rest = (num * u).divmod(rest)[1]
    return [n0] + _partial_fractions(n_rest, moduli[1:])


def _hermite_tail(num: Poly, base: Poly, mult: int) -> tuple[list[RatFunc], Poly]:
    """Reduce num/base^mult to derivative terms plus tail/base.

    base is monic squarefree, deg num < mult*deg base.  Returns the list of
    extracted pieces g_k (their derivatives sum with tail/base to the input)
    and the tail numerator.
    """
    cur = num
    j = mult
    parts = []
    g, w, _ = poly_xgcd(base.derivative(), base)
    if g.degree() != 0:
        raise ArithmeticError("base is not squarefree")
    while j >= 2:
        # c*base' == cur (mod base);  cur/base^j = (-c/((j-1) base^(j-1)))' + ...
        c = (cur * w).divmod(base)[1]
        s = (cur - c * base.derivative()).exact_div(base)
        parts.append(RatFunc(c * Fraction(-1, j - 1), base**(j - 1)))
        cur = s + c.derivative() * Fraction(1, j - 1)
        j -= 1
    return parts, cur


def hermite_reduce(f: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Write f = g' + h with h proper and squarefree-denominator.

    The polynomial part of f integrates termwise into g, multiple poles are
    stripped by repeated integration by parts, and what survives in h has
    only simple poles.  f has an antiderivative in Q(t) iff h = 0.
    """
    zero = RatFunc(Poly(), 1, f.field)
    quo, rem = f.num.divmod(f.den)
    g = RatFunc(
        Poly([Fraction(0)] + [c / (k + 1) for k, c in enumerate(quo.coeffs)]),
        1,
        f.field,
    )
    h = zero
    if rem.is_zero():
        return g, h
    sqf = squarefree_decomposition(f.den)
    moduli = [base**mult for base, mult in sqf]
    pieces = _partial_fractions(rem, moduli)
    for piece, (base, mult) in zip(pieces, sqf):
        if piece.is_zero():
            continue
        parts, tail = _hermite_tail(piece, base, mult)
        for part in parts:
            g = g + part
        h = h + RatFunc(tail, base, f.field)
    return g, h


def antiderivative_in_field(a: RatFunc) -> RatFunc | None:
    """An element b of a's field with b' = a, or None if there is none."""
    if a.field is BaseField.CONSTANTS:
        # the derivation is zero, so only 0 is a derivative
        return RatFunc(Poly(), 1, a.field) if a.is_zero() else None
    g, h = hermite_reduce(a)
    return g if h.is_zero() else None


def _irreducible_factors(p: Poly) -> list[Poly]:
    """Monic irreducible factors of a squarefree polynomial over Q.

    The one delegated step: exact factorization over Q uses sympy.
    """
    import sympy

    sym_t = sympy.Symbol("t")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                     for c in reversed(p.coeffs)], sym_t, domain="QQ")
    out = []
    for fac, _mult in sp.factor_list()[1]:
        coeffs = [Fraction(int(r.p), int(r.q)) for r in reversed(fac.all_coeffs())]
        out.append(Poly(coeffs).monic())
    out.sort(key=lambda q: (q.degree(), q.coeffs))
    return out


def log_derivative_decompose(a: RatFunc) -> list[tuple[Poly, Fraction]] | None:
    """Write a as sum of c_i * p_i'/p_i with p_i monic irreducible, c_i in Q.

    Exists iff a is proper with squarefree denominator and every residue,
    computed modulo each irreducible factor p_i of the denominator, is a
    rational number.  a = 0 gives the empty decomposition; None means no
    such expression exists in the field.
    """
    if a.is_zero():
        return []
    if a.field is BaseField.CONSTANTS:
        return None
    if a.num.degree() >= a.den.degree():
        return None
    if poly_gcd(a.den, a.den.derivative()).degree() > 0:
        return None
    out = []
    for p in _irreducible_factors(a.den):
        cof = a.den.exact_div(p)
        g, w, _ = poly_xgcd(p.derivative() * cof, p)
        if g.degree() != 0:
            return None
        residue = (a.num * w).divmod(p)[1]
        if residue.degree() > 0:
            return None
        out.append((p, residue.lead()))
    # residues constant and poles simple force exactness; check anyway
    total = RatFunc(Poly(), 1, a.field)
    for p, c in out:
        total = total + RatFunc(p.derivative() * c, p)
    if total != a:
        return None
    return out


def smallest_exponential_index(a: RatFunc) -> tuple[int, RatFunc] | None:
    """Least n >= 1 with f'/f = n*a solvable for f in the field, plus one f.

    Writes a = sum c_i p_i'/p_i; n is the lcm of the residue denominators
    and f = prod p_i^(n c_i).  For a = 0 the answer is (1, 1).  None when a
    is not a combination of logarithmic derivatives with rational residues,
    in which case no multiple of a is one either.
    """
    dec = log_derivative_decompose(a)
    if dec is None:
        return None
    if not dec:
        return 1, RatFunc(Poly((1,)), 1, a.field)
    n = 1
    for _p, c in dec:
        n = math.lcm(n, c.denominator)
    num = Poly((1,))
    den = Poly((1,))
    for p, c in dec:
        e = c * n
        assert e.denominator == 1
        e = e.numerator
        if e > 0:
            num = num * p**e
        elif e < 0:
            den = den * p**(-e)
    return n, RatFunc(num, den, a.field)
