"""Small number fields Q[t]/(m(t)) and relative quadratic extensions.

NumberField handles absolute fields of degree 1..6 over Q with a monic
irreducible defining polynomial.  QuadExt(base, d) adjoins a square root
of d to any field domain following the same protocol; it is used for
Q(sqrt(-3)), for splitting fields of quadratics over a cubic field, and
for F_{p^2} on top of a prime field.
"""

from fractions import Fraction

from .rationals import QQ
from .poly import Poly


def _q_poly_irreducible(coeffs):
    """Irreducibility over Q of a polynomial given low-to-high, via sympy."""
    import sympy

    x = sympy.Symbol("x")
    f = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
            for i, c in enumerate(coeffs))
    fl = sympy.factor_list(f)[1]
    return len(fl) == 1 and fl[0][1] == 1


class NumberField:
    """Q[t]/(min_poly), min_poly monic irreducible of degree 1..6."""

    def __init__(self, min_poly, name="a", check=True):
        if not isinstance(min_poly, Poly):
            min_poly = Poly([Fraction(c) for c in min_poly], QQ)
        if min_poly.leading() != 1:
            min_poly = min_poly.monic()
        deg = min_poly.degree
        if not 1 <= deg <= 6:
            raise ValueError("number field degree must be in 1..6, got %d" % deg)
        if check and deg > 1 and not _q_poly_irreducible(min_poly.coeffs):
            raise ValueError("defining polynomial is reducible over Q")
        self.min_poly = min_poly
        self.degree = deg
        self.name = name
        self.characteristic = 0
        self.zero = NFElem(self, [Fraction(0)] * deg)
        self.one = NFElem(self, [Fraction(1)] + [Fraction(0)] * (deg - 1))
        # t^k reduced mod min_poly for k = deg .. 2*deg-2
        self._pow_table = []
        cur = [Fraction(0)] * deg
        if deg == 1:
            cur = [-min_poly.coeffs[0]]
        red = [-c for c in min_poly.coeffs[:deg]]  # t^deg
        self._pow_table.append(red)
        for _ in range(deg - 2):
            shifted = [Fraction(0)] + red[:]
            top = shifted.pop()
            red = [shifted[i] + top * self._pow_table[0][i] for i in range(deg)]
            self._pow_table.append(red)
        self._roots_cache = None

    def gen(self):
        if self.degree == 1:
            return self.zero + self._pow_table[0][0]
        cs = [Fraction(0)] * self.degree
        cs[1] = Fraction(1)
        return NFElem(self, cs)

    def coerce(self, x):
        if isinstance(x, NFElem) and x.parent is self:
            return x
        if isinstance(x, (int, Fraction)):
            cs = [Fraction(0)] * self.degree
            cs[0] = Fraction(x)
            return NFElem(self, cs)
        raise TypeError("cannot coerce %r into %r" % (x, self))

    def contains(self, x):
        return isinstance(x, NFElem) and x.parent is self

    def from_coeffs(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElem(self, cs[: self.degree])

    def complex_roots(self, ctx):
        """Roots of min_poly in C at context ctx, cached per precision."""
        key = ctx.mp.prec if hasattr(ctx, "mp") else ctx.prec
        if self._roots_cache is None or self._roots_cache[0] < key:
            cs = [ctx.mpf(c.numerator) / ctx.mpf(c.denominator)
                  for c in reversed(self.min_poly.coeffs)]
            roots = ctx.polyroots(cs, maxsteps=200, extraprec=120)
            self._roots_cache = (key, list(roots))
        return self._roots_cache[1]

    def embed(self, x, ctx, root_index=0):
        """Numeric image of x under t -> chosen complex root."""
        r = self.complex_roots(ctx)[root_index]
        acc = ctx.mpf(0)
        for c in reversed(x.coeffs):
            acc = acc * r + ctx.mpf(c.numerator) / ctx.mpf(c.denominator)
        return acc

    def __repr__(self):
        return "NumberField(%s, %r)" % ([str(c) for c in self.min_poly.coeffs], self.name)

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.min_poly.coeffs == other.min_poly.coeffs)

    def __hash__(self):
        return hash(("NF", tuple(self.min_poly.coeffs)))


class NFElem:
    """Element of a NumberField: coefficient vector of length degree."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def _co(self, other):
        if isinstance(other, NFElem):
            if other.parent == self.parent:
                return other
            raise TypeError("elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return self.parent.coerce(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("NFElem", tuple(self.coeffs)))

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.parent, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        deg = self.parent.degree
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        out = prod[:deg]
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                tbl = self.parent._pow_table[k - deg]
                for i in range(deg):
                    out[i] += c * tbl[i]
        return NFElem(self.parent, out)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via extended Euclid in Q[t]."""
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        m = self.parent.min_poly
        a = Poly(list(self.coeffs), QQ)
        # extended gcd of a and m over Q[t]
        r0, r1 = a, m
        s0, s1 = Poly([Fraction(1)], QQ), Poly([], QQ)
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError("non-invertible element (reducible modulus?)")
        inv_poly = s0 / r0.coeffs[0]
        inv_poly = inv_poly % m
        return self.parent.from_coeffs(inv_poly.coeffs)

    def __truediv__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.parent.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rational_part(self):
        """The constant coefficient, valid only if the element is rational."""
        if any(self.coeffs[1:]):
            raise ValueError("element %r is not rational" % (self,))
        return self.coeffs[0]

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __repr__(self):
        name = self.parent.name
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("%s*%s" % (c, name))
            else:
                terms.append("%s*%s^%d" % (c, name, i))
        return " + ".join(terms) if terms else "0"


class QuadExt:
    """Relative quadratic extension base(w), w^2 = d, d in the base field.

    No irreducibility check is made; if d is a square the ring has zero
    divisors and inversion may raise ZeroDivisionError.
    """

    def __init__(self, base, d, name="w"):
        self.base = base
        self.d = d if getattr(base, "contains", lambda v: False)(d) else base.coerce(d)
        self.name = name
        self.characteristic = getattr(base, "characteristic", 0)
        self.zero = QuadExtElem(self, base.zero, base.zero)
        self.one = QuadExtElem(self, base.one, base.zero)

    def gen(self):
        return QuadExtElem(self, self.base.zero, self.base.one)

    def coerce(self, x):
        if isinstance(x, QuadExtElem) and x.parent is self:
            return x
        bx = x if self.base.contains(x) else self.base.coerce(x)
        return QuadExtElem(self, bx, self.base.zero)

    def contains(self, x):
        return isinstance(x, QuadExtElem) and x.parent == self

    def embed(self, x, ctx, sqrt_branch=0, **kw):
        eb = lambda v: self.base.embed(v, ctx, **kw)
        s = ctx.sqrt(eb(self.d))
        if sqrt_branch:
            s = -s
        return eb(x.a) + eb(x.b) * s

    def __repr__(self):
        return "QuadExt(%r, %r)" % (self.base, self.d)

    def __eq__(self, other):
        return (isinstance(other, QuadExt) and self.base == other.base
                and self.d == other.d)

    def __hash__(self):
        return hash(("QuadExt", self.base, repr(self.d)))


class QuadExtElem:
    """a + b*w with a, b in the base field and w^2 = d."""

    __slots__ = ("parent", "a", "b")

    def __init__(self, parent, a, b):
        self.parent = parent
        self.a = a
        self.b = b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def _co(self, other):
        if isinstance(other, QuadExtElem):
            if other.parent == self.parent:
                return other
            raise TypeError("elements of different quadratic extensions")
        try:
            return self.parent.coerce(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("QuadExtElem", repr(self.a), repr(self.b)))

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtElem(self.parent, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(self.parent, -self.a, -self.b)

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.parent.d
        return QuadExtElem(
            self.parent,
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conj(self):
        return QuadExtElem(self.parent, self.a, -self.b)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.parent.d

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("non-invertible element of quadratic extension")
        ninv = self.parent.base.one / n
        return QuadExtElem(self.parent, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.parent.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def base_part(self):
        if self.b:
            raise ValueError("element %r is not in the base field" % (self,))
        return self.a

    def is_base(self):
        return not self.b

    def __repr__(self):
        return "(%r) + (%r)*%s" % (self.a, self.b, self.parent.name)
