"""Prime fields F_p and the quadratic extension F_{p^2}.

F_p follows the same domain protocol as the other coefficient fields;
F_{p^2} is built with QuadExt on top of F_p using a quadratic
non-residue, via fp2_field below.
"""

from .numberfield import QuadExt


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond our p < 2^31 cap."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p for an odd prime p < 2^31."""

    def __init__(self, p):
        if p % 2 == 0 or p >= 2 ** 31 or not is_prime(p):
            raise ValueError("modulus must be an odd prime below 2^31: %r" % (p,))
        self.p = p
        self.characteristic = p
        self.zero = PrimeFieldElem(self, 0)
        self.one = PrimeFieldElem(self, 1)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElem) and x.field is self:
            return x
        if isinstance(x, int):
            return PrimeFieldElem(self, x % self.p)
        num = getattr(x, "numerator", None)
        if num is not None:
            den = x.denominator
            if den % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p=%d" % self.p)
            return PrimeFieldElem(self, num * pow(den, -1, self.p) % self.p)
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def contains(self, x):
        return isinstance(x, PrimeFieldElem) and x.field == self

    def embed(self, x, ctx):
        return ctx.mpf(x.value)

    def is_square(self, x):
        x = self.coerce(x)
        if not x.value:
            return True
        return pow(x.value, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x):
        """Tonelli-Shanks square root; raises on non-residues."""
        x = self.coerce(x)
        p = self.p
        a = x.value
        if a == 0:
            return self.zero
        if not self.is_square(x):
            raise ValueError("%d is not a square mod %d" % (a, p))
        if p % 4 == 3:
            return PrimeFieldElem(self, pow(a, (p + 1) // 4, p))
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, tt = 0, t
            while tt != 1:
                tt = tt * tt % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return PrimeFieldElem(self, r)

    def non_residue(self):
        n = 2
        while self.is_square(self.coerce(n)):
            n += 1
        return self.coerce(n)

    def __repr__(self):
        return "F_%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("Fp", self.p))


class PrimeFieldElem:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value % field.p

    def __bool__(self):
        return self.value != 0

    def _co(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.field == self.field:
                return other
            raise TypeError("elements of different prime fields")
        try:
            return self.field.coerce(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("FpElem", self.field.p, self.value))

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElem(self.field, -self.value)

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.field, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.field, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("inverse of zero mod %d" % self.field.p)
        return PrimeFieldElem(self.field, pow(self.value, -1, self.field.p))

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
        return PrimeFieldElem(self.field, pow(self.value, n, self.field.p))

    def __repr__(self):
        return "%d" % self.value


def fp2_field(p):
    """F_{p^2} as F_p(w), w^2 a non-residue."""
    fp = PrimeField(p)
    return QuadExt(fp, fp.non_residue(), name="u")


def fp2_is_square(fld, x):
    """Euler criterion in F_{p^2}: x^((p^2-1)/2) = 1."""
    if not x:
        return True
    p = fld.base.p
    y = x ** ((p * p - 1) // 2)
    return y == fld.one
