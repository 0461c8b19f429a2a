"""
Tests of the exact scalar arithmetic
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

from jacradix import exactarith
from jacradix import jacerrors

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTEXACTARITH'


def checkBezout(x, y):
    "gcdExt(x, y) is a nonnegative common divisor with its Bezout identity"
    (g, s, t) = exactarith.gcdExt(x, y)
    if g < 0 or g != s * x + t * y:
        jrtestutils.report(TESTNAME, exactarith.safeFormat(
            "Bezout identity fails for {}, {}", x, y))
        return False
    if g != 0 and (x % g != 0 or y % g != 0):
        jrtestutils.report(TESTNAME, exactarith.safeFormat(
            "gcd {} does not divide {}, {}", g, x, y))
        return False
    return True


def testGcdExt():
    """
    Bezout identities on word sized and 256 bit operands of every
    sign, and the common gcd of x*d and y*d is a multiple of d
    """
    allOK = True
    rng = jrtestutils.makeRng(1)
    for i in range(300):
        x = jrtestutils.randInt(rng, -10**6, 10**6)
        y = jrtestutils.randInt(rng, -10**6, 10**6)
        allOK &= checkBezout(x, y)

    for i in range(200):
        x = jrtestutils.randBigInt(rng, 256)
        y = jrtestutils.randBigInt(rng, 256)
        allOK &= checkBezout(x, y)
        d = jrtestutils.randBigInt(rng, 64, signed=False) + 1
        (g, s, t) = exactarith.gcdExt(x * d, y * d)
        if g % d != 0:
            jrtestutils.report(TESTNAME, "gcd of multiples of d misses the factor d")
            allOK = False

    for (x, y) in [(0, 5), (-5, 0), (7, 7), (-7, 7), (1, -1)]:
        allOK &= checkBezout(x, y)
    if exactarith.gcdExt(0, 0) != (0, 0, 0):
        jrtestutils.report(TESTNAME, "gcdExt(0, 0) should be (0, 0, 0)")
        allOK = False
    (g, s, t) = exactarith.gcdExt(12, 18)
    if g != 6:
        jrtestutils.report(TESTNAME, "gcd(12, 18) gave {}".format(g))
        allOK = False
    return allOK


def testDivisibility():
    allOK = True
    if exactarith.divisibility(6, 12) != 2 or exactarith.divisibility(0, 0) != 0:
        jrtestutils.report(TESTNAME, "divisibility gave wrong quotient")
        allOK = False
    if exactarith.divisibility(-3, 12) != -4:
        jrtestutils.report(TESTNAME, "divisibility by a negative gave wrong quotient")
        allOK = False
    for (d, x) in [(5, 12), (0, 3)]:
        try:
            exactarith.divisibility(d, x)
            jrtestutils.report(TESTNAME, "{} | {} should have raised".format(d, x))
            allOK = False
        except jacerrors.NotDivisibleError:
            pass
    return allOK


def testPower():
    """
    power agrees with repeated multiplication for every n <= 16, on
    ints, Fractions and ModularInts
    """
    allOK = True
    rng = jrtestutils.makeRng(11)
    for i in range(20):
        bases = [
            jrtestutils.randInt(rng, -50, 50),
            Fraction(jrtestutils.randInt(rng, -20, 20), jrtestutils.randInt(rng, 1, 20)),
            exactarith.ModularInt(jrtestutils.randInt(rng, 0, 96), 97)
        ]
        for a in bases:
            product = exactarith.one(a)
            for n in range(17):
                if exactarith.power(a, n) != product:
                    jrtestutils.report(TESTNAME, "power({}, {}) is not the product".format(
                        a, n))
                    allOK = False
                product = product * a

    if exactarith.power(3, 5) != 243 or exactarith.power(Fraction(1, 2), 3) != Fraction(1, 8):
        jrtestutils.report(TESTNAME, "power gave wrong value")
        allOK = False
    if exactarith.power(0, 0) != 1:
        jrtestutils.report(TESTNAME, "power(0, 0) should be 1")
        allOK = False
    try:
        exactarith.power(2, -1)
        jrtestutils.report(TESTNAME, "A negative exponent should raise")
        allOK = False
    except ValueError:
        pass
    return allOK


def testModInverse():
    """
    For random moduli, a unit times its inverse is 1, and a non-unit
    raises with gcd(a, n) as its witness
    """
    allOK = True
    rng = jrtestutils.makeRng(12)
    for i in range(300):
        n = jrtestutils.randInt(rng, 2, 10**4)
        v = jrtestutils.randInt(rng, -10**5, 10**5)
        a = exactarith.ModularInt(v, n)
        (g, s, t) = exactarith.gcdExt(a.value, n)
        try:
            inv = exactarith.modInverse(a)
            if g != 1:
                jrtestutils.report(TESTNAME, "{} has an inverse but gcd {}".format(a, g))
                allOK = False
            elif a * inv != 1 or inv * a != 1 or not (0 <= inv.value < n):
                jrtestutils.report(TESTNAME, "{} is not the inverse of {}".format(inv, a))
                allOK = False
            elif exactarith.modInverse(inv) != a:
                jrtestutils.report(TESTNAME, "inverse of the inverse of {} differs".format(a))
                allOK = False
        except jacerrors.NotInvertibleError as e:
            if g == 1 or e.gcd != g:
                jrtestutils.report(TESTNAME, "{} refused with witness {}, gcd is {}".format(
                    a, e.gcd, g))
                allOK = False

    a = exactarith.ModularInt(7, 12)
    inv = exactarith.modInverse(a)
    if a * inv != 1 or inv.value != 7:
        jrtestutils.report(TESTNAME, "inverse of 7 mod 12 wrong: {}".format(inv))
        allOK = False
    try:
        exactarith.modInverse(exactarith.ModularInt(4, 12))
        jrtestutils.report(TESTNAME, "4 mod 12 should not be invertible")
        allOK = False
    except jacerrors.NotInvertibleError as e:
        if e.gcd != 4:
            jrtestutils.report(TESTNAME, "gcd witness should be 4, got {}".format(e.gcd))
            allOK = False
    return allOK


def testModularInt():
    allOK = True
    b = exactarith.ModularInt(5, 8)
    if (b + 4) != 1 or (b - 6) != 7 or (3 - b) != 6 or (-b) != 3 or b ** 2 != 1:
        jrtestutils.report(TESTNAME, "ModularInt arithmetic wrong")
        allOK = False
    try:
        b + exactarith.ModularInt(1, 9)
        jrtestutils.report(TESTNAME, "Mixed moduli should raise")
        allOK = False
    except jacerrors.RingMismatchError:
        pass
    return allOK


def testDecimalText():
    """
    Integers far past the interpreter's int/str digit limit go to
    decimal text and back, and Fractions print through the same path
    """
    allOK = True
    big = 10 ** 5000 + 1
    text = exactarith.intToDecimal(big)
    if len(text) != 5001 or text[0] != "1" or text[-1] != "1" or text.count("1") != 2:
        jrtestutils.report(TESTNAME, "10^5000 + 1 printed wrongly")
        allOK = False
    if exactarith.decimalToInt(text) != big:
        jrtestutils.report(TESTNAME, "10^5000 + 1 did not read back")
        allOK = False

    rng = jrtestutils.makeRng(13)
    for bits in [8, 1024, 16384, 65536]:
        n = jrtestutils.randBigInt(rng, bits)
        if exactarith.decimalToInt(exactarith.intToDecimal(n)) != n:
            jrtestutils.report(TESTNAME, "a {} bit integer did not read back".format(bits))
            allOK = False

    # zeros in the middle must survive the splitting
    padded = 7 * 10 ** 9000 + 3
    if exactarith.intToDecimal(padded) != "7" + "0" * 8999 + "3":
        jrtestutils.report(TESTNAME, "inner zeros of 7*10^9000 + 3 were lost")
        allOK = False

    q = Fraction(-big, 3)
    expected = "-" + text + "/3"
    if exactarith.scalarText(q) != expected:
        jrtestutils.report(TESTNAME, "Fraction text with a huge numerator is wrong")
        allOK = False
    if exactarith.intToDecimal(-12) != "-12" or exactarith.decimalToInt("+0") != 0:
        jrtestutils.report(TESTNAME, "small values converted wrongly")
        allOK = False
    for bad in ["", "-", "12a", "1 2", "١"]:
        try:
            exactarith.decimalToInt(bad)
            jrtestutils.report(TESTNAME, "'{}' should not read as an integer".format(bad))
            allOK = False
        except ValueError:
            pass
    return allOK


def run():
    """
    Run tests of gcdExt, divisibility, power, modInverse, ModularInt
    and decimal text
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True
    allOK &= testGcdExt()
    allOK &= testDivisibility()
    allOK &= testPower()
    allOK &= testModInverse()
    allOK &= testModularInt()
    allOK &= testDecimalText()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
