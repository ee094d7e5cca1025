"""Dense univariate polynomials and rational functions over a field domain.

A domain is any object with attributes ``zero``, ``one`` and a method
``coerce`` turning ints (and whatever else it accepts) into field
elements; the elements themselves must support +, -, *, / and compare
equal/unequal.  ``rationals.QQ`` is the prototype; number fields, their
quadratic extensions, and prime fields follow the same protocol.
"""

from .rationals import QQ


class Poly:
    """Dense polynomial, coefficients stored low-to-high."""

    __slots__ = ("coeffs", "dom")

    def __init__(self, coeffs, dom=QQ):
        cs = [c if self._in_dom(c, dom) else dom.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs
        self.dom = dom

    @staticmethod
    def _in_dom(c, dom):
        contains = getattr(dom, "contains", None)
        return contains(c) if contains else False

    @classmethod
    def const(cls, c, dom=QQ):
        return cls([c], dom)

    @classmethod
    def x(cls, dom=QQ):
        return cls([dom.zero, dom.one], dom)

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.dom.zero

    def leading(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _coerce_other(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([self.dom.coerce(other)], self.dom)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._coerce_other(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        other = self._coerce_other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.dom)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.dom)

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.dom.coerce(other)
            return Poly([a * c for a in self.coeffs], self.dom)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.dom)
        z = self.dom.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.dom)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce_other(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.dom.zero] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dv, lc = other.degree, other.leading()
        while len(rem) - 1 >= dv and rem:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dv or not rem:
                break
            c = rem[-1] / lc
            k = len(rem) - 1 - dv
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
            rem.pop()
        return Poly(q, self.dom), Poly(rem, self.dom)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("inexact polynomial division")
            return q
        c = self.dom.coerce(other)
        return Poly([a / c for a in self.coeffs], self.dom)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([self.dom.one], self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.coeffs:
            return self
        return self / self.leading()

    def derivative(self):
        return Poly(
            [self.coeffs[i] * self.dom.coerce(i) for i in range(1, len(self.coeffs))],
            self.dom,
        )

    def evaluate(self, x):
        """Horner evaluation; x may be any value with compatible arithmetic."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.dom.zero
        return acc

    def compose(self, other):
        """self(other) for a polynomial argument."""
        acc = Poly([], self.dom)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c], self.dom)
        return acc

    def shift_scale(self, a, b):
        """self(a*x+b)."""
        return self.compose(Poly([b, a], self.dom))

    def gcd(self, other):
        a, b = self, self._coerce_other(other)
        while b:
            a, b = b, a % b
        if not a:
            return a
        return a.monic()

    def resultant(self, other):
        """Resultant via the Euclidean remainder sequence."""
        f, g = self, self._coerce_other(other)
        if not f or not g:
            return self.dom.zero
        one = self.dom.one
        acc = one
        # res(f,g) with deg f >= 1 recursively; res(f,c) = c^deg f
        while True:
            if f.degree < g.degree:
                if (f.degree * g.degree) % 2:
                    acc = -acc
                f, g = g, f
            if g.degree == 0:
                c = g.coeffs[0]
                return acc * c ** f.degree
            r = f % g
            if not r:
                return self.dom.zero
            # res(g,f) = lc(g)^(deg f - deg r) * res(g,r)
            acc = acc * g.leading() ** (f.degree - r.degree)
            if (f.degree * g.degree) % 2:
                acc = -acc
            f, g = g, r

    def discriminant(self):
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        res = self.resultant(self.derivative())
        disc = res / self.leading()
        if (n * (n - 1) // 2) % 2:
            disc = -disc
        return disc

    def is_squarefree(self):
        return self.gcd(self.derivative()).degree == 0

    def map_coeffs(self, fn, dom):
        return Poly([fn(c) for c in self.coeffs], dom)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append("%s" % (c,))
            elif i == 1:
                terms.append("(%s)*x" % (c,))
            else:
                terms.append("(%s)*x^%d" % (c, i))
        return "Poly(" + " + ".join(terms) + ")"


class RatFn:
    """Rational function num/den, stored with monic denominator and
    gcd(num, den) constant."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, dom=QQ):
        if not isinstance(num, Poly):
            num = Poly([num] if not isinstance(num, (list, tuple)) else num, dom)
        if den is None:
            den = Poly([num.dom.one], num.dom)
        elif not isinstance(den, Poly):
            den = Poly([den] if not isinstance(den, (list, tuple)) else den, num.dom)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g and g.degree > 0:
            num, den = num / g, den / g
        lc = den.leading()
        if lc != den.dom.one:
            num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @property
    def dom(self):
        return self.num.dom

    @classmethod
    def const(cls, c, dom=QQ):
        return cls(Poly([c], dom))

    @classmethod
    def x(cls, dom=QQ):
        return cls(Poly.x(dom))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_poly():
            raise ValueError("not a polynomial: %r" % (self,))
        return self.num

    def _coerce_other(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, Poly):
            return RatFn(other)
        return RatFn(Poly([self.dom.coerce(other)], self.dom))

    def __eq__(self, other):
        try:
            other = self._coerce_other(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.coeffs), tuple(self.den.coeffs)))

    def __add__(self, other):
        other = self._coerce_other(other)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce_other(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce_other(other) / self

    def __pow__(self, n):
        if n < 0:
            return (RatFn(self.den, self.num)) ** (-n)
        return RatFn(self.num ** n, self.den ** n)

    def derivative(self):
        return RatFn(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        if not dv:
            raise ZeroDivisionError("pole of rational function at %r" % (x,))
        return self.num.evaluate(x) / dv

    def __repr__(self):
        if self.is_poly():
            return "RatFn(%r)" % (self.num,)
        return "RatFn(%r / %r)" % (self.num, self.den)
