"""Rational numbers and the rational field as a coefficient domain.

Elements are ``fractions.Fraction``; this module adds parsing helpers and
the domain object that polynomial code uses to create zeros/ones and to
coerce mixed inputs.
"""

from fractions import Fraction


def parse_rational(s):
    """Parse "a/b", integer, or decimal strings into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(q):
    """Inverse of parse_rational, always in "a/b" or integer form."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class RationalField:
    """The field Q, as a domain for Poly/RatFn coefficients."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def contains(self, x):
        return isinstance(x, (int, Fraction))

    def embed(self, x, ctx):
        """Numeric embedding into C at mpmath context ctx."""
        return ctx.mpf(x.numerator) / ctx.mpf(x.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()
