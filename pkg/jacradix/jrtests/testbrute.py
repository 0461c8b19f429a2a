"""
The independent cross-check oracles, and their agreement with the
ideal engine
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

from jacradix import jacerrors
from jacradix import bruteoracles
from jacradix import exprparser
from jacradix.idealengine import IdealHandle, radicalMembership

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTBRUTE'


def repeatedGcdRadical(n):
    """
    The radical of <n> by trial division, to check the sympy based
    oracle against
    """
    n = abs(n)
    if n == 0:
        return 0
    r = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            r *= p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        r *= n
    return r


def testRadicalZ():
    allOK = True
    for (n, r) in [(12, 6), (0, 0), (1, 1), (-18, 6), (97, 97), (2 ** 10, 2)]:
        got = bruteoracles.radicalZ(n)
        if got != r:
            jrtestutils.report(TESTNAME, "radicalZ({}) is {}".format(n, got))
            allOK = False

    rng = jrtestutils.makeRng(60)
    for i in range(200):
        n = jrtestutils.randInt(rng, -10 ** 6, 10 ** 6)
        if bruteoracles.radicalZ(n) != repeatedGcdRadical(n):
            jrtestutils.report(TESTNAME, "radicalZ({}) disagrees with trial division".format(
                n))
            allOK = False

    if not bruteoracles.inZRadical(12, 18) or bruteoracles.inZRadical(12, 4):
        jrtestutils.report(TESTNAME, "inZRadical wrong for 12")
        allOK = False
    if not bruteoracles.inZRadical(0, 0) or bruteoracles.inZRadical(0, 3):
        jrtestutils.report(TESTNAME, "inZRadical wrong for 0")
        allOK = False
    return allOK


def testSquarefree():
    allOK = True
    ctx = exprparser.parseRing("Q[x]")
    cases = [("x^3 - x^2", "x^2 - x"), ("2*x^2 + 4*x + 2", "x + 1"), ("5", "1"),
        ("0", "0"), ("(x^2 + 1)^3*(x - 2)", "x^3 - 2*x^2 + x - 2")]
    for (text, expected) in cases:
        p = exprparser.parsePolynomial(text, ctx)
        got = bruteoracles.squarefreePart(p)
        if got != exprparser.parsePolynomial(expected, ctx):
            jrtestutils.report(TESTNAME, "squarefree part of {} is {}".format(text, got))
            allOK = False

    g = exprparser.parsePolynomial("x^2*(x - 1)^3", ctx)
    for (text, expected) in [("x^2 - x", True), ("x", False), ("0", True)]:
        f = exprparser.parsePolynomial(text, ctx)
        if bruteoracles.inSquarefreeRadical(g, f) != expected:
            jrtestutils.report(TESTNAME, "inSquarefreeRadical wrong for {}".format(text))
            allOK = False

    try:
        bruteoracles.squarefreePart(exprparser.parsePolynomial("x", exprparser.parseRing("Z[x]")))
        jrtestutils.report(TESTNAME, "squarefree part over Z was computed")
        allOK = False
    except jacerrors.UnsupportedTowerError:
        pass
    return allOK


def testBoundedSearch():
    """
    Exponents found by plain search, and whether the membership tests
    behind them stayed outside our ideal engine
    """
    allOK = True
    cases = [
        ("Q[x]", "x^2", "x", 8, 2, True),
        ("Q[x]", "x^2", "x + 1", 5, None, True),
        ("Z", "12", "6", 8, 2, True),
        ("Z", "10, 15", "10", 8, 1, True),
        ("Z/12", "", "6", 8, 2, True),
        ("Z/12", "", "3", 8, None, True),
        ("Z/8[x]", "", "2*x", 8, 3, False),
        ("Z[x]", "4, x^2", "2*x", 8, 2, False),
        ("Q[x, y]", "x^2, y^2", "x + y", 8, 3, True),
        ("Q", "", "0", 4, 1, True),
        ("Q", "", "3", 4, None, True),
        ("Q", "5", "3", 4, 0, True)
    ]
    for (ringText, idealText, elemText, bound, expected, independent) in cases:
        (ctx, gens, f) = jrtestutils.parseQuery(ringText, idealText, elemText)
        res = bruteoracles.boundedSearch(ctx, gens, f, bound)
        if res.exponent != expected or res.exceeded != (expected is None):
            jrtestutils.report(TESTNAME, "search for {} modulo <{}> in {} gave {!r}".format(
                elemText, idealText, ringText, res))
            allOK = False
        if res.independent != independent:
            jrtestutils.report(TESTNAME, "search in {} should have independent {}".format(
                ringText, independent))
            allOK = False
    return allOK


def testRabinowitsch():
    """
    The sympy Rabinowitsch oracle agrees with our own radical test
    """
    allOK = True
    cases = [
        ("Q[x]", "x^3", "x", True),
        ("Q[x, y]", "x^2, y^3", "x*y + y", True),
        ("Q[x, y]", "x^2 - y", "x", False),
        ("Q[x]/<x^2>", "", "x", True),
        ("Q[x]", "x^2 - 1", "x - 1", False)
    ]
    for (ringText, idealText, elemText, expected) in cases:
        (ctx, gens, f) = jrtestutils.parseQuery(ringText, idealText, elemText)
        got = bruteoracles.rabinowitschQ(ctx, gens, f)
        ours = bool(radicalMembership(IdealHandle(ctx, gens), f))
        if got != expected or ours != expected:
            jrtestutils.report(TESTNAME, "{} modulo <{}> in {}: sympy {}, ours {}".format(
                elemText, idealText, ringText, got, ours))
            allOK = False

    try:
        (ctx, gens, f) = jrtestutils.parseQuery("Z[x]", "x", "x")
        bruteoracles.rabinowitschQ(ctx, gens, f)
        jrtestutils.report(TESTNAME, "Rabinowitsch over Z was run")
        allOK = False
    except jacerrors.UnsupportedTowerError:
        pass
    return allOK


def run():
    """
    Run the cross-check oracle tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testRadicalZ()
    allOK &= testSquarefree()
    allOK &= testBoundedSearch()
    allOK &= testRabinowitsch()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
