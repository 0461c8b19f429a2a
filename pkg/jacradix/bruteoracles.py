"""
Independent yes/no oracles used to cross-check the extractors.

These are deliberately built on sympy rather than on our own ideal
engine wherever sympy covers the case: the radical of an integer from
its prime factors, the radical of a principal ideal of Q[x] from the
squarefree part, and radical membership over Q by the Rabinowitsch
trick with a sympy Groebner basis. The bounded exponent search uses
sympy over Q and over the integers without variables; with variables
over Z it can only replay our own engine, and says so in its result.

Nothing here is used by extraction or verification.

"""
# This file is part of jacradix - Jacobson radical witness extraction
# Copyright (C) 2026  The jacradix developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from fractions import Fraction

import sympy

from . import jacerrors
from .polyring import BASE_QQ
from .idealengine import IdealHandle, freshVariable


class SearchResult(object):
    """
    Outcome of a bounded exponent search. exponent is the least n with
    f^n in the ideal, or None if there is none up to bound.
    independent is False when membership was decided by our own ideal
    engine, which makes the result a self-check rather than a cross-check.
    """
    def __init__(self, exponent, bound, independent=True):
        self.exponent = exponent
        self.bound = bound
        self.independent = independent

    @property
    def exceeded(self):
        return self.exponent is None

    def __bool__(self):
        return self.exponent is not None

    def __repr__(self):
        if self.exceeded:
            return "SearchResult(bound {} exceeded)".format(self.bound)
        return "SearchResult(exponent {})".format(self.exponent)


def radicalZ(n):
    """
    The positive generator of the radical of <n> in Z, the product of
    the distinct primes of n. radicalZ(0) is 0.
    """
    n = abs(int(n))
    if n == 0:
        return 0
    r = 1
    for p in sympy.primefactors(n):
        r *= p
    return r


def inZRadical(n, a):
    "True if a lies in the radical of <n> in Z"
    r = radicalZ(n)
    if r == 0:
        return a == 0
    return a % r == 0


def symbolsFor(ring):
    return [sympy.Symbol(v) for v in ring.varNames]


def toSympy(p, symbols):
    """
    A sympy expression equal to the Polynomial p, over the given
    symbols (one per ring variable)
    """
    expr = sympy.Integer(0)
    for (exp, c) in p.terms.items():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for (s, e) in zip(symbols, exp):
            if e:
                term = term * s ** e
        expr = expr + term
    return expr


def fromSympy(expr, ring, symbols):
    "Convert a sympy expression back into a Polynomial of ring"
    if not symbols:
        value = sympy.Rational(expr)
        return ring.const(Fraction(int(value.p), int(value.q)))
    poly = sympy.Poly(expr, *symbols, domain='QQ')
    terms = {}
    for (monom, coeff) in poly.terms():
        terms[tuple(monom)] = Fraction(int(coeff.p), int(coeff.q))
    return ring.fromTerms(terms)


def _checkUnivariateQ(p):
    ring = p.ring
    if ring.base != BASE_QQ or ring.nvars != 1:
        raise jacerrors.UnsupportedTowerError(
            "Squarefree part needs Q[x], got {}".format(ring.describe()))


def squarefreePart(p):
    """
    The monic squarefree part of p in Q[x]. The radical of <p> is
    generated by it. The zero polynomial is its own squarefree part.
    """
    _checkUnivariateQ(p)
    if p.isZero():
        return p
    symbols = symbolsFor(p.ring)
    poly = sympy.Poly(toSympy(p, symbols), *symbols, domain='QQ')
    sqf = poly.sqf_part().monic()
    return fromSympy(sqf.as_expr(), p.ring, symbols)


def inSquarefreeRadical(g, f):
    """
    True if f lies in the radical of <g> in Q[x], i.e. the squarefree
    part of g divides f
    """
    _checkUnivariateQ(g)
    f = g.ring.convert(f)
    if g.isZero():
        return f.isZero()
    symbols = symbolsFor(g.ring)
    s = sympy.Poly(toSympy(squarefreePart(g), symbols), *symbols, domain='QQ')
    pf = sympy.Poly(toSympy(f, symbols), *symbols, domain='QQ')
    return pf.rem(s).is_zero


def _allGenerators(ctx, generators):
    ring = ctx.ring
    gens = [ring.convert(g) for g in generators] + list(ctx.relations)
    return [g for g in gens if not g.isZero()]


def boundedSearch(ctx, generators, f, bound):
    """
    Try f^0, f^1, ..., f^bound for membership in <generators> plus
    the ctx relations.

    Membership is decided without our ideal engine wherever sympy
    covers the ring: a sympy Groebner basis over Q with variables, the
    integer gcd (sympy.igcd) over Z and Z/n without variables, and
    plain nonvanishing over Q. Sympy's Groebner bases over ZZ are
    computed over QQ, so for Z[x], Z/n[x] and their quotients the
    engine decides membership and the result has independent False.
    """
    ring = ctx.ring
    f = ring.convert(f)
    gens = _allGenerators(ctx, generators)
    independent = True

    if not gens:
        def isMember(p):
            return p.isZero()
    elif ring.nvars == 0 and ring.base == BASE_QQ:
        def isMember(p):
            return True
    elif ring.nvars == 0:
        d = 0
        for g in gens:
            d = int(sympy.igcd(d, g.constantValue()))

        def isMember(p):
            return p.constantValue() % d == 0
    elif ring.base == BASE_QQ:
        symbols = symbolsFor(ring)
        G = sympy.groebner([toSympy(g, symbols) for g in gens], *symbols,
            order='grevlex', domain='QQ')

        def isMember(p):
            return G.contains(toSympy(p, symbols))
    else:
        independent = False
        handle = IdealHandle(ctx, generators)

        def isMember(p):
            return bool(handle.membership(p))

    power = ring.one()
    for n in range(bound + 1):
        if isMember(power):
            return SearchResult(n, bound, independent)
        power = power * f
    return SearchResult(None, bound, independent)


def rabinowitschQ(ctx, generators, f):
    """
    Radical membership over Q: f is in the radical exactly when
    1 lies in <generators, relations, 1 - f*t> for a new variable t.
    """
    ring = ctx.ring
    if ring.base != BASE_QQ:
        raise jacerrors.UnsupportedTowerError(
            "Rabinowitsch oracle needs Q coefficients, got {}".format(ctx.describe()))
    f = ring.convert(f)
    tName = freshVariable(ring)
    symbols = symbolsFor(ring)
    t = sympy.Symbol(tName)
    exprs = [toSympy(g, symbols) for g in _allGenerators(ctx, generators)]
    exprs.append(1 - toSympy(f, symbols) * t)
    G = sympy.groebner(exprs, *(symbols + [t]), order='grevlex', domain='QQ')
    return G.contains(sympy.Integer(1))
