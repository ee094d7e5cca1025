"""Factorization of rational polynomials and irreducibility tests.

factor_q delegates to sympy's factor_list (Zassenhaus/van Hoeij under
the hood); the result is re-expressed in our Poly type and re-verified
by multiplying back.  fp_irreducible gives an independent finite-field
irreducibility certificate used to cross-check the factors.
"""

from fractions import Fraction

import sympy

from .rationals import QQ
from .poly import Poly
from .primefield import PrimeField


_X = sympy.Symbol("x")


def poly_to_sympy(f):
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * _X ** i
        for i, c in enumerate(f.coeffs)
    ])


def sympy_to_poly(expr):
    p = sympy.Poly(sympy.expand(expr), _X)
    coeffs = [Fraction(c.p, c.q) for c in reversed(p.all_coeffs())]
    return Poly(coeffs, QQ)


def factor_q(f):
    """Factor a nonzero Poly over Q.

    Returns (content, [(irreducible monic Poly, multiplicity), ...]) with
    content * prod(factors^mult) == f.  Degree capped at 8.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > 8:
        raise ValueError("factor_q degree cap is 8, got %d" % f.degree)
    content, factors = sympy.factor_list(poly_to_sympy(f))
    out = []
    c = Fraction(sympy.Rational(content).p, sympy.Rational(content).q)
    for g, mult in factors:
        gp = sympy_to_poly(g)
        lc = gp.leading()
        c *= lc ** mult
        out.append((gp.monic(), mult))
    out.sort(key=lambda t: (t[0].degree, [str(u) for u in t[0].coeffs]))
    # paranoia: multiply back
    check = Poly([c], QQ)
    for g, mult in out:
        check = check * g ** mult
    if check != f:
        raise ArithmeticError("factorization failed to multiply back")
    return c, out


def is_irreducible_q(f):
    if f.degree < 1:
        return False
    _, factors = factor_q(f)
    return len(factors) == 1 and factors[0][1] == 1 and f.degree == factors[0][0].degree


def _poly_powmod(base, e, mod):
    result = Poly([mod.dom.one], mod.dom)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def fp_irreducible(f, p):
    """Irreducibility of f mod p over F_p (f with rational coefficients).

    Returns None if f degenerates mod p (degree drops or a denominator
    vanishes), True/False otherwise.  Uses the Rabin test: f of degree n
    is irreducible iff x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1
    for every prime q dividing n.
    """
    fp = PrimeField(p)
    try:
        g = f.map_coeffs(fp.coerce, fp)
    except ZeroDivisionError:
        return None
    n = f.degree
    if g.degree != n or n < 1:
        return None
    g = g.monic()
    x = Poly.x(fp)
    if _poly_powmod(x, p ** n, g) != x % g:
        return False
    nq = {q for q in (2, 3, 5, 7) if n % q == 0}
    for q in nq:
        h = _poly_powmod(x, p ** (n // q), g) - x % g
        if h.gcd(g).degree != 0:
            return False
    return True


def squarefree_part_q(n):
    """Squarefree part of a nonzero rational: the squarefree integer d
    with n = d * square."""
    n = Fraction(n)
    m = n.numerator * n.denominator
    sign = -1 if m < 0 else 1
    m = abs(m)
    d = 1
    i = 2
    while i * i <= m:
        if m % i == 0:
            e = 0
            while m % i == 0:
                m //= i
                e += 1
            if e % 2:
                d *= i
        i += 1
    return sign * d * m
