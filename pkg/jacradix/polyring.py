"""
Sparse multivariate polynomials over the integers or the rationals,
and ring contexts which add quotient relations.

A :class:`PolyRing` fixes the coefficient ring, an ordered list of
variable names and a monomial order. A :class:`Polynomial` is an
immutable mapping from exponent tuples to nonzero coefficients.
A :class:`RingCtx` is a ring together with a list of quotient
relations. Rings over Z/n are never a separate coefficient type: n is
simply folded into the relations. 

Arithmetic on Polynomial objects is free polynomial arithmetic. The
ctx methods (add, mul, ...) reduce their results to the ctx's normal
form.

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

import functools
import threading
from fractions import Fraction

from . import jacerrors
from . import exactarith

BASE_ZZ = 'ZZ'
BASE_QQ = 'QQ'

ORDER_DEGREVLEX = 'degrevlex'
ORDER_LEX = 'lex'
ORDER_BLOCK = 'block'


def expAdd(e1, e2):
    return tuple(a + b for (a, b) in zip(e1, e2))


def expSub(e1, e2):
    return tuple(a - b for (a, b) in zip(e1, e2))


def expDivides(e1, e2):
    "True if the monomial e1 divides e2"
    return all(a <= b for (a, b) in zip(e1, e2))


def expLcm(e1, e2):
    return tuple(max(a, b) for (a, b) in zip(e1, e2))


def degrevlexKey(exp):
    return (sum(exp), tuple(-x for x in reversed(exp)))


class PolyRing(object):
    """
    A polynomial ring over ZZ or QQ in an ordered list of variables,
    with a monomial order. 

    The order is one of ORDER_DEGREVLEX (the default), ORDER_LEX, or
    ORDER_BLOCK with a blockSize k, which compares the first k
    variables by degrevlex and breaks ties on the remaining ones by
    degrevlex. The block order eliminates the first k variables. 
    
    Rings compare equal when base, variables and order all agree. 

    """
    def __init__(self, base, varNames=(), order=ORDER_DEGREVLEX, blockSize=0):
        if base not in (BASE_ZZ, BASE_QQ):
            raise jacerrors.UnsupportedTowerError(
                "Unsupported coefficient ring '{}'".format(base))
        varNames = tuple(varNames)
        if len(set(varNames)) != len(varNames):
            raise ValueError("Repeated variable name in {}".format(varNames))
        if order not in (ORDER_DEGREVLEX, ORDER_LEX, ORDER_BLOCK):
            raise ValueError("Unknown monomial order '{}'".format(order))
        if order == ORDER_BLOCK:
            if not (0 <= blockSize <= len(varNames)):
                raise ValueError("Block size {} out of range".format(blockSize))
        else:
            blockSize = 0

        self.base = base
        self.varNames = varNames
        self.nvars = len(varNames)
        self.order = order
        self.blockSize = blockSize
        self.zeroExp = (0,) * self.nvars
        self.index = {name: i for (i, name) in enumerate(varNames)}

        if order == ORDER_DEGREVLEX:
            self.monomialKey = degrevlexKey
        elif order == ORDER_LEX:
            self.monomialKey = tuple
        else:
            k = blockSize
            self.monomialKey = lambda e: (degrevlexKey(e[:k]), degrevlexKey(e[k:]))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.base == other.base and
            self.varNames == other.varNames and self.order == other.order and
            self.blockSize == other.blockSize)

    def __hash__(self):
        return hash((self.base, self.varNames, self.order, self.blockSize))

    def __repr__(self):
        return "PolyRing({!r}, {!r}, {!r}, {})".format(self.base, self.varNames,
            self.order, self.blockSize)

    def isField(self):
        return self.base == BASE_QQ

    def coerceCoeff(self, c):
        """
        Return c as a coefficient of this ring. Integers in ZZ are int,
        rationals in QQ are Fraction.
        """
        if isinstance(c, bool):
            c = int(c)
        if self.base == BASE_ZZ:
            if isinstance(c, int):
                return c
            if isinstance(c, Fraction) and c.denominator == 1:
                return c.numerator
            raise jacerrors.RingMismatchError(
                "Coefficient {} is not an integer".format(c))
        if isinstance(c, (int, Fraction)):
            return Fraction(c)
        raise jacerrors.RingMismatchError("Bad coefficient {!r}".format(c))

    def fromTerms(self, terms):
        """
        Build a Polynomial from a dictionary of exponent tuple to
        coefficient. Zero coefficients are dropped.
        """
        clean = {}
        for (exp, c) in terms.items():
            exp = tuple(exp)
            if len(exp) != self.nvars:
                raise ValueError("Exponent {} has wrong length".format(exp))
            c = self.coerceCoeff(c)
            if c != 0:
                clean[exp] = c
        return Polynomial(self, clean)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.coerceCoeff(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {self.zeroExp: c})

    def var(self, name):
        i = self.varIndex(name)
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exp: self.coerceCoeff(1)})

    def varIndex(self, name):
        if name not in self.index:
            raise jacerrors.RingMismatchError(
                "Variable '{}' not in ring {}".format(name, self.describe()))
        return self.index[name]

    def hasVar(self, name):
        return name in self.index

    def extend(self, newVars):
        "Same base and order kind, with extra variables appended"
        return PolyRing(self.base, self.varNames + tuple(newVars))

    def subRing(self, keepVars):
        "The degrevlex ring in the given subset of variables, in this ring's order"
        keep = [v for v in self.varNames if v in keepVars]
        return PolyRing(self.base, keep)

    def eliminationRing(self, elimVars):
        """
        A ring in the same variables, reordered with elimVars first,
        under the block order which eliminates them.
        """
        elim = [v for v in self.varNames if v in elimVars]
        rest = [v for v in self.varNames if v not in elimVars]
        return PolyRing(self.base, elim + rest, ORDER_BLOCK, len(elim))

    def convert(self, p):
        """
        Map p (a Polynomial of another ring, or a scalar) into this ring,
        matching variables by name. Raises RingMismatchError if p uses a
        variable this ring does not have. 
        """
        if not isinstance(p, Polynomial):
            return self.const(p)
        if p.ring == self:
            return p
        positions = []
        for (j, name) in enumerate(p.ring.varNames):
            positions.append(self.index.get(name))
        terms = {}
        for (exp, c) in p.terms.items():
            newExp = [0] * self.nvars
            for (j, e) in enumerate(exp):
                if e != 0:
                    if positions[j] is None:
                        raise jacerrors.RingMismatchError(
                            "Variable '{}' not in ring {}".format(
                                p.ring.varNames[j], self.describe()))
                    newExp[positions[j]] = e
            terms[tuple(newExp)] = self.coerceCoeff(c)
        return Polynomial(self, terms)

    def describe(self):
        baseStr = "Z" if self.base == BASE_ZZ else "Q"
        if self.nvars > 0:
            baseStr += "[{}]".format(",".join(self.varNames))
        return baseStr


def formatCoeff(c):
    return exactarith.scalarText(c)


class Polynomial(object):
    """
    An immutable sparse polynomial. terms maps exponent tuples
    (one entry per ring variable) to nonzero coefficients.

    Supports +, -, * and ** with other polynomials of the same ring
    and with int/Fraction scalars. Mixing rings raises
    RingMismatchError; use :meth:`PolyRing.convert` first.
    
    """
    __slots__ = ('ring', 'terms', '_lead')

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lead = None

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise jacerrors.RingMismatchError(
                    "Ring mismatch: {} and {}".format(self.ring.describe(),
                        other.ring.describe()))
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for (exp, c) in other.terms.items():
            v = terms.get(exp, 0) + c
            if v == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = v
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for (e, c) in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        terms = {}
        for (e1, c1) in self.terms.items():
            for (e2, c2) in other.terms.items():
                exp = expAdd(e1, e2)
                v = terms.get(exp, 0) + c1 * c2
                if v == 0:
                    terms.pop(exp, None)
                else:
                    terms[exp] = v
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        return exactarith.power(self, n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return len(self.terms) > 0

    def mulTerm(self, exp, c):
        "Multiply by the single term c*x^exp"
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring,
            {expAdd(e, exp): v * c for (e, v) in self.terms.items()})

    def isZero(self):
        return len(self.terms) == 0

    def isConstant(self):
        return all(e == self.ring.zeroExp for e in self.terms)

    def constantValue(self):
        """
        The value of a constant polynomial. Raises ValueError if it is
        not constant.
        """
        if not self.isConstant():
            raise ValueError("{} is not a constant".format(self))
        return self.terms.get(self.ring.zeroExp, self.ring.coerceCoeff(0))

    def leadingExp(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("Zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.monomialKey)
        return self._lead

    def leadingCoeff(self):
        return self.terms[self.leadingExp()]

    def sortedTerms(self):
        "List of (exp, coeff), largest monomial first"
        return sorted(self.terms.items(), key=lambda t: self.ring.monomialKey(t[0]),
            reverse=True)

    def degreeIn(self, name):
        "Degree in the named variable, -1 for the zero polynomial"
        i = self.ring.varIndex(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def totalDegree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def usesVar(self, name):
        i = self.ring.varIndex(name)
        return any(e[i] > 0 for e in self.terms)

    def coefficientsIn(self, name):
        """
        Returns [a_0, ..., a_n] with p = sum(a_i * name^i). The a_i are
        polynomials of the same ring, free of the named variable.
        """
        i = self.ring.varIndex(name)
        n = max(self.degreeIn(name), 0)
        coeffTerms = [{} for _ in range(n + 1)]
        for (e, c) in self.terms.items():
            reduced = e[:i] + (0,) + e[i + 1:]
            coeffTerms[e[i]][reduced] = c
        return [Polynomial(self.ring, t) for t in coeffTerms]

    def coefficientOf(self, name, k):
        "The coefficient of name^k, as a polynomial free of name"
        i = self.ring.varIndex(name)
        terms = {}
        for (e, c) in self.terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1:]] = c
        return Polynomial(self.ring, terms)

    def substitute(self, name, value):
        """
        Replace the named variable by value (a polynomial of the same
        ring, or a scalar)
        """
        i = self.ring.varIndex(name)
        value = self.ring.convert(value) if not isinstance(value, Polynomial) else value
        if value.ring != self.ring:
            raise jacerrors.RingMismatchError("Substituted value is in another ring")
        powers = {0: self.ring.one()}
        result = self.ring.zero()
        byPower = {}
        for (e, c) in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            byPower.setdefault(e[i], {})[rest] = c
        for k in sorted(byPower):
            if k not in powers:
                powers[k] = value ** k
            result = result + Polynomial(self.ring, byPower[k]) * powers[k]
        return result

    def scale(self, c):
        return self * self.ring.const(c)

    def monic(self):
        "Divide by the leading coefficient (QQ only)"
        if not self.ring.isField():
            raise jacerrors.RingMismatchError("monic() needs a field")
        lc = self.leadingCoeff()
        return Polynomial(self.ring, {e: c / lc for (e, c) in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.varNames
        parts = []
        for (exp, c) in self.sortedTerms():
            factors = []
            for (name, e) in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("{}^{}".format(name, e))
            mono = "*".join(factors)
            neg = c < 0
            absC = -c if neg else c
            if mono == "":
                body = formatCoeff(absC)
            elif absC == 1:
                body = mono
            else:
                body = formatCoeff(absC) + "*" + mono
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Polynomial({}, '{}')".format(self.ring.describe(), self)


@functools.lru_cache(maxsize=256)
def completedRelations(ring, relations):
    """
    The completed IdealHandle of the tuple of relations in the free ctx
    of ring. Extraction builds the same quotient many times over, and
    all of them share one completion.
    """
    from . import idealengine
    return idealengine.IdealHandle(RingCtx(ring), list(relations)).complete()


class RingCtx(object):
    """
    A ring tower descriptor: a PolyRing plus quotient relations.
    The relations, when there are any, are completed to a basis on
    construction, so that :meth:`nf` is well defined and idempotent.

    If declaredModulus n is given, the base must be ZZ and n is put at
    the front of the relations; this is how Z/n is represented.

    Two ctxs are equal when the ring and the relation list agree.

    """
    def __init__(self, ring, relations=None, declaredModulus=None):
        self.ring = ring
        rels = []
        if declaredModulus is not None:
            if ring.base != BASE_ZZ:
                raise jacerrors.UnsupportedTowerError(
                    "A modulus needs the integers as base ring")
            if declaredModulus <= 1:
                raise ValueError("Modulus must be > 1, got {}".format(declaredModulus))
            rels.append(ring.const(declaredModulus))
        for r in (relations or []):
            r = ring.convert(r)
            if not r.isZero() and r not in rels:
                rels.append(r)
        self.relations = tuple(rels)
        self.declaredModulus = declaredModulus
        self._relationHandle = None
        self._lock = threading.Lock()
        if self.relations:
            self.relationHandle.complete()

    @property
    def relationHandle(self):
        """
        The completed ideal of the relations, over the free ctx
        """
        with self._lock:
            if self._relationHandle is None:
                self._relationHandle = completedRelations(self.ring, self.relations)
        return self._relationHandle

    def __eq__(self, other):
        return (isinstance(other, RingCtx) and self.ring == other.ring and
            self.relations == other.relations)

    def __hash__(self):
        return hash((self.ring, self.relations))

    def __repr__(self):
        return "RingCtx('{}')".format(self.describe())

    def isFree(self):
        return len(self.relations) == 0

    def free(self):
        "The same ring with no relations"
        return RingCtx(self.ring)

    def quotient(self, extra):
        "A ctx with the extra relations appended"
        return RingCtx(self.ring, self._userRelations() + list(extra),
            declaredModulus=self.declaredModulus)

    def _userRelations(self):
        "The relations, without the folded modulus"
        if self.declaredModulus is not None:
            return list(self.relations[1:])
        return list(self.relations)

    def withRing(self, ring):
        "Same relations, mapped into another ring (usually a reordering)"
        return RingCtx(ring, [ring.convert(r) for r in self._userRelations()],
            declaredModulus=self.declaredModulus)

    def convert(self, p):
        return self.ring.convert(p)

    def nf(self, p):
        """
        The canonical representative of p modulo the relations
        """
        p = self.ring.convert(p)
        if not self.relations:
            return p
        return self.relationHandle.normalForm(p).remainder

    def add(self, p, q):
        return self.nf(p + q)

    def sub(self, p, q):
        return self.nf(p - q)

    def mul(self, p, q):
        return self.nf(p * q)

    def neg(self, p):
        return self.nf(-p)

    def power(self, p, n):
        result = self.nf(self.ring.one())
        base = self.nf(p)
        while n > 0:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n > 0:
                base = self.mul(base, base)
        return result

    def equal(self, p, q):
        return self.nf(p - q).isZero()

    def describe(self):
        """
        A string in the ring grammar of :mod:`jacradix.exprparser`,
        e.g. "Z/12[x]/<x^2 - 1>"
        """
        ring = self.ring
        rels = list(self.relations)
        if self.declaredModulus is not None:
            s = "Z/" + exactarith.intToDecimal(self.declaredModulus)
            rels = rels[1:]
        else:
            s = "Z" if ring.base == BASE_ZZ else "Q"
        if ring.nvars > 0:
            s += "[{}]".format(",".join(ring.varNames))
        if rels:
            s += "/<{}>".format(", ".join(str(r) for r in rels))
        return s
