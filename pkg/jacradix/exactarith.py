"""
Exact scalar arithmetic and the small number-theoretic primitives
used everywhere else.

Integers are Python ints and rationals are :class:`fractions.Fraction`,
both exact. :class:`ModularInt` is only for scalar work mod n; rings
over Z/n are represented by folding n into the quotient relations
of a :class:`jacradix.polyring.RingCtx`. 

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
from fractions import Fraction

from . import jacerrors

# Digits per piece when converting between ints and decimal text. Well
# under the interpreter limit on int/str conversion.
DECIMAL_CHUNK = 1000


def gcdExt(x, y):
    """
    Extended Euclid. Returns (g, s, t) with g = gcd(x, y) >= 0 and
    g = s*x + t*y. The recurrence runs on absolute values and the
    signs of the cofactors are fixed up afterwards. 
    gcdExt(0, 0) is (0, 0, 0). 
    """
    if x == 0 and y == 0:
        return (0, 0, 0)

    (a, b) = (abs(x), abs(y))
    (s0, s1) = (1, 0)
    (t0, t1) = (0, 1)
    while b != 0:
        q = a // b
        (a, b) = (b, a - q * b)
        (s0, s1) = (s1, s0 - q * s1)
        (t0, t1) = (t1, t0 - q * t1)

    s = s0 if x >= 0 else -s0
    t = t0 if y >= 0 else -t0
    return (a, s, t)


def divisibility(d, x):
    """
    Return q with x = d*q. Zero divides only zero. Raises 
    NotDivisibleError otherwise.
    """
    if d == 0:
        if x == 0:
            return 0
        raise jacerrors.NotDivisibleError(d, x)
    (q, r) = divmod(x, d)
    if r != 0:
        raise jacerrors.NotDivisibleError(d, x)
    return q


def power(a, n):
    """
    Exact n-th power by repeated squaring. Works for int, Fraction,
    ModularInt, and anything else with a multiplicative identity
    reachable as a**0.
    """
    if n < 0:
        raise ValueError("Exponent must be non-negative, got {}".format(n))
    result = one(a)
    base = a
    while n > 0:
        if n & 1:
            result = result * base
        n >>= 1
        if n > 0:
            base = base * base
    return result


def one(a):
    """
    The multiplicative identity of the type of a
    """
    if isinstance(a, ModularInt):
        return ModularInt(1, a.modulus)
    elif isinstance(a, Fraction):
        return Fraction(1)
    elif isinstance(a, int):
        return 1
    else:
        # polynomials and other ring elements carry their ring
        return a.ring.one()


def modInverse(a):
    """
    Inverse of the ModularInt a. Raises NotInvertibleError carrying
    gcd(a, n) when there is none.
    """
    (g, s, t) = gcdExt(a.value, a.modulus)
    if g != 1:
        raise jacerrors.NotInvertibleError(g)
    return ModularInt(s, a.modulus)


def isIntegral(c):
    """
    True if the int or Fraction c is an integer
    """
    if isinstance(c, int):
        return True
    return Fraction(c).denominator == 1


@functools.lru_cache(maxsize=64)
def _powerOfTen(n):
    return 10 ** n


def _digitsOf(n, width):
    """
    Decimal digits of n >= 0, left padded with zeros to width. Splits
    around a power of ten until the pieces are short enough for str().
    """
    if n.bit_length() <= 3 * DECIMAL_CHUNK:
        return str(n).zfill(width)
    # bit_length * log10(2) never undercounts the digits
    half = (int(n.bit_length() * 0.30103) + 1) // 2
    (hi, lo) = divmod(n, _powerOfTen(half))
    return _digitsOf(hi, max(width - half, 0)) + _digitsOf(lo, half)


def intToDecimal(n):
    """
    The decimal text of the int n, with no limit on its length.
    str(n) refuses ints of more than a few thousand digits.
    """
    n = int(n)
    if n < 0:
        return "-" + _digitsOf(-n, 0)
    return _digitsOf(n, 0)


def decimalToInt(text):
    """
    Inverse of intToDecimal. Accepts an optional sign followed by
    ASCII digits; anything else raises ValueError.
    """
    text = text.strip()
    sign = 1
    if text[:1] in ('-', '+'):
        if text[0] == '-':
            sign = -1
        text = text[1:]
    if not text or not (text.isascii() and text.isdigit()):
        raise ValueError("Not a decimal integer: '{}'".format(text[:40]))
    return sign * _digitsToInt(text)


def _digitsToInt(digits):
    if len(digits) <= DECIMAL_CHUNK:
        return int(digits)
    half = len(digits) // 2
    return (_digitsToInt(digits[:-half]) * _powerOfTen(half) +
        _digitsToInt(digits[-half:]))


def scalarText(c):
    """
    Text for an int or Fraction coefficient: "n" or "n/d", in
    lowest terms. Other scalars fall back to str().
    """
    if isinstance(c, bool):
        return str(c)
    if isinstance(c, int):
        return intToDecimal(c)
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return intToDecimal(c.numerator)
        return "{}/{}".format(intToDecimal(c.numerator), intToDecimal(c.denominator))
    return str(c)


def safeFormat(template, *args):
    """
    template.format(*args), with int and Fraction arguments written
    through scalarText so that huge values do not raise. Other
    arguments are formatted as they are; polynomials already print
    their coefficients this way.
    """
    if not args:
        return template
    return template.format(*[scalarText(a) if isinstance(a, (int, Fraction)) else a
        for a in args])


class ModularInt(object):
    """
    An integer modulo n, with 0 <= value < modulus. Immutable. 
    """
    __slots__ = ('value', 'modulus')

    def __init__(self, value, modulus):
        if modulus <= 1:
            raise ValueError("Modulus must be > 1, got {}".format(modulus))
        object.__setattr__(self, 'modulus', modulus)
        object.__setattr__(self, 'value', value % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModularInt is immutable")

    def _other(self, other):
        if isinstance(other, ModularInt):
            if other.modulus != self.modulus:
                raise jacerrors.RingMismatchError(
                    "Moduli differ: {} and {}".format(self.modulus, other.modulus))
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModularInt(-self.value, self.modulus)

    def __pow__(self, n):
        return ModularInt(pow(self.value, n, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModularInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return "ModularInt({}, {})".format(self.value, self.modulus)

    def __str__(self):
        return "{} mod {}".format(self.value, self.modulus)
