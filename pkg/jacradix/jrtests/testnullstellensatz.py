"""
The polynomial ring step: Emerton's lemma with its localised and
integral special cases, the Nullstellensatz extractor, and the
iterated pipeline.
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

import time

from jacradix import exprparser
from jacradix import cuitrace
from jacradix import bruteoracles
from jacradix import certio
from jacradix.certificates import Refuted
from jacradix.idealengine import IdealHandle
from jacradix.jacoracle import MembershipJacOracle
from jacradix.jacobson import ZExtractor, integerCtx, localizationCtx
from jacradix.jacobson import emertonExtract, localizedExtract, integralExtract
from jacradix.jacobson import extractInCtx, iteratedExtract

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTNULLSTELLENSATZ'

NUM_DECISIONS = 200
MAX_DEGREE = 8
MAX_SECONDS_UNIVARIATE = 1.0
NUM_BIVARIATE = 20
MAX_SECONDS_BIVARIATE = 10.0


def checkPositive(what, res, least=None):
    """
    res must be a verifying NilpotencyCert, with exponent least if
    that is given
    """
    if isinstance(res, Refuted):
        jrtestutils.report(TESTNAME, "{}: refuted at b={}".format(what, res.b))
        return False
    ok = jrtestutils.checkCert(TESTNAME, res, what)
    if least is not None and res.exponent != least:
        jrtestutils.report(TESTNAME, "{}: exponent {} is not {}".format(what,
            res.exponent, least))
        ok = False
    return ok


def checkRefuted(what, res):
    if not isinstance(res, Refuted):
        jrtestutils.report(TESTNAME, "{}: accepted with {!r}".format(what, res))
        return False
    if not res.isSound():
        jrtestutils.report(TESTNAME, "{}: unsound refutation".format(what))
        return False
    return True


def testEmerton():
    """
    2*(X - 3) modulo 5 in Z[X]/<2X - 1>, where X is 3
    """
    allOK = True
    controls = jrtestutils.quietControls()
    base = ZExtractor(controls)
    bCtx = exprparser.parseRing("Z[X]/<2*X - 1>")
    ring = bCtx.ring
    X = ring.var('X')
    J = IdealHandle(bCtx, [ring.const(5)])
    f = X - 3
    oracle = MembershipJacOracle(bCtx, J.generators, f)
    cert = emertonExtract(base, 2, bCtx, 2 * X - 1, 'X', J, f, oracle, controls)
    allOK &= checkPositive("Emerton for 2*(X - 3)", cert)
    if cert.element != 2 * f:
        jrtestutils.report(TESTNAME, "Emerton certificate is for {}".format(
            cert.element))
        allOK = False

    zero = emertonExtract(base, 0, bCtx, 2 * X - 1, 'X', J, f, oracle, controls)
    allOK &= checkPositive("Emerton with a = 0", zero, 1)
    return allOK


def testIntegral():
    """
    X is nilpotent modulo 2 in Z[X]/<X^2 - 2>
    """
    allOK = True
    controls = jrtestutils.quietControls()
    bCtx = exprparser.parseRing("Z[X]/<X^2 - 2>")
    ring = bCtx.ring
    X = ring.var('X')
    J = IdealHandle(bCtx, [ring.const(2)])
    oracle = MembershipJacOracle(bCtx, J.generators, X)
    cert = integralExtract(ZExtractor(controls), bCtx, X ** 2 - 2, 'X', J, X,
        oracle, controls)
    allOK &= checkPositive("integral extraction of X modulo 2", cert)
    return allOK


def testLocalized():
    """
    6 modulo 9 in Z[1/2]
    """
    allOK = True
    controls = jrtestutils.quietControls()
    (ctx, tName) = localizationCtx(integerCtx(), 2)
    ring = ctx.ring
    J = IdealHandle(ctx, [ring.const(9)])
    f = ring.const(6)
    oracle = MembershipJacOracle(ctx, J.generators, f)
    cert = localizedExtract(ZExtractor(controls), 2, tName, J, f, oracle, controls)
    allOK &= checkPositive("6 modulo 9 in Z[1/2]", cert)
    return allOK


def testSpotCases():
    """
    Hand checked instances over Z[x], Q[x] and Q[x, y]
    """
    allOK = True
    controls = jrtestutils.quietControls()
    positives = [
        ("Z[x]", "x", "x", 1),
        ("Q[x]", "x^2", "x", 2),
        ("Z[x]", "2*x - 1, 5", "x - 3", None),
        ("Q[x, y]", "x, y", "x + y", 1),
        ("Z[x]", "4, x^2", "2 + x", None)
    ]
    for (ringText, idealText, elemText, least) in positives:
        (ctx, gens, f) = jrtestutils.parseQuery(ringText, idealText, elemText)
        res = extractInCtx(ctx, gens, f, controls)
        what = "{} modulo <{}> in {}".format(elemText, idealText, ringText)
        allOK &= checkPositive(what, res, least)

    negatives = [
        ("Z[x]", "x", "2"),
        ("Z[x]", "x", "3"),
        ("Q[x]", "x^2 - 1", "x - 1"),
        ("Z[x]", "2*x - 1, 5", "x - 2")
    ]
    for (ringText, idealText, elemText) in negatives:
        (ctx, gens, f) = jrtestutils.parseQuery(ringText, idealText, elemText)
        res = extractInCtx(ctx, gens, f, controls)
        what = "{} modulo <{}> in {}".format(elemText, idealText, ringText)
        allOK &= checkRefuted(what, res)
    return allOK


def testIterated():
    allOK = True
    controls = jrtestutils.quietControls()
    res = iteratedExtract("Z", ['x'], ["2*x - 1", "5"], "x - 3", controls)
    allOK &= checkPositive("iterated over Z", res)
    res = iteratedExtract("Q", ['x', 'y'], ["x", "y"], "x + y", controls)
    allOK &= checkPositive("iterated over Q", res, 1)
    res = iteratedExtract("Z/4", ['x'], ["x^2"], "x + 2", controls)
    allOK &= checkPositive("iterated over Z/4", res)
    res = iteratedExtract("Z", ['x'], ["x"], "3", controls)
    allOK &= checkRefuted("iterated 3 modulo x", res)
    return allOK


def randomRationalCase(rng, ring):
    """
    g a product of powers of small linear and quadratic factors, of
    degree at most MAX_DEGREE, and f which half of the time is a
    multiple of the squarefree part of g
    """
    x = ring.var('x')
    g = ring.one()
    degree = 0
    while degree < 2 or (degree < MAX_DEGREE and rng.random() < 0.5):
        if rng.random() < 0.7:
            factor = x - jrtestutils.randInt(rng, -3, 3)
            size = 1
        else:
            factor = x ** 2 + jrtestutils.randInt(rng, 1, 3)
            size = 2
        k = jrtestutils.randInt(rng, 1, 3)
        if degree + k * size > MAX_DEGREE:
            break
        g = g * factor ** k
        degree += k * size
    if rng.random() < 0.5:
        f = bruteoracles.squarefreePart(g) * jrtestutils.randPoly(rng, ring, 1, 3)
    else:
        f = jrtestutils.randPoly(rng, ring, 3, 4)
    return (g, f)


def testRationalDecisions():
    """
    In Q[x], extraction for <g> succeeds exactly when the squarefree
    part of g divides f, each case within MAX_SECONDS_UNIVARIATE
    """
    allOK = True
    rng = jrtestutils.makeRng(50)
    ctx = exprparser.parseRing("Q[x]")
    ring = ctx.ring
    controls = jrtestutils.quietControls()
    for i in range(NUM_DECISIONS):
        (g, f) = randomRationalCase(rng, ring)
        start = time.perf_counter()
        res = extractInCtx(ctx, [g], f, controls)
        elapsed = time.perf_counter() - start
        expected = bruteoracles.inSquarefreeRadical(g, f)
        what = "{} modulo <{}>".format(f, g)
        if expected:
            allOK &= checkPositive(what, res)
        else:
            allOK &= checkRefuted(what, res)
        if elapsed > MAX_SECONDS_UNIVARIATE:
            jrtestutils.report(TESTNAME, "{} took {:.2f}s".format(what, elapsed))
            allOK = False
    return allOK


def randBivariate(rng, ring, maxDegree, height):
    "Random element of Q[x, y] of total degree <= maxDegree"
    (x, y) = (ring.var('x'), ring.var('y'))
    p = ring.zero()
    for i in range(maxDegree + 1):
        for j in range(maxDegree + 1 - i):
            if rng.random() < 0.6:
                p = p + jrtestutils.randInt(rng, -height, height) * x ** i * y ** j
    return p


def randomBivariateCase(rng, ring):
    """
    At most 2 generators of degree <= 2 and f of degree <= 2. Half of
    the time J = <s^2, t> and f a multiple of s, so f is in the radical.
    """
    if rng.random() < 0.5:
        s = randBivariate(rng, ring, 1, 3)
        t = randBivariate(rng, ring, 2, 3)
        gens = [s ** 2, t]
        f = jrtestutils.randInt(rng, 1, 3) * s
    else:
        gens = [randBivariate(rng, ring, 2, 3)
            for k in range(jrtestutils.randInt(rng, 1, 2))]
        f = randBivariate(rng, ring, 2, 3)
    gens = [g for g in gens if not g.isZero()]
    return (gens, f)


def testBivariateDecisions():
    """
    Random ideals of Q[x, y]: extraction succeeds exactly when the
    Rabinowitsch oracle puts f in the radical, and each case finishes
    within MAX_SECONDS_BIVARIATE
    """
    allOK = True
    rng = jrtestutils.makeRng(51)
    ctx = exprparser.parseRing("Q[x, y]")
    ring = ctx.ring
    controls = jrtestutils.quietControls()
    for i in range(NUM_BIVARIATE):
        (gens, f) = randomBivariateCase(rng, ring)
        what = "{} modulo <{}>".format(f, ", ".join(str(g) for g in gens))
        start = time.perf_counter()
        res = extractInCtx(ctx, gens, f, controls)
        elapsed = time.perf_counter() - start
        expected = bruteoracles.rabinowitschQ(ctx, gens, f)
        if expected:
            allOK &= checkPositive(what, res)
        else:
            allOK &= checkRefuted(what, res)
        if elapsed > MAX_SECONDS_BIVARIATE:
            jrtestutils.report(TESTNAME, "{} took {:.2f}s".format(what, elapsed))
            allOK = False
    return allOK


def testNilpotentSumOfVariables():
    """
    x + y in Q[x, y]/<x^2, y^2>, with every query traced so that each
    label and message is formatted, in under MAX_SECONDS_BIVARIATE
    """
    allOK = True
    controls = jrtestutils.quietControls()
    recorder = cuitrace.RecordingTrace()
    controls.setTracer(recorder)
    (ctx, gens, f) = jrtestutils.parseQuery("Q[x, y]/<x^2, y^2>", "", "x + y")
    start = time.perf_counter()
    res = extractInCtx(ctx, gens, f, controls)
    elapsed = time.perf_counter() - start
    allOK &= checkPositive("x + y in Q[x, y]/<x^2, y^2>", res)
    if not isinstance(res, Refuted) and ctx.nf(f ** res.exponent) != 0:
        jrtestutils.report(TESTNAME, "(x + y)^{} is not zero".format(res.exponent))
        allOK = False
    if not recorder.queries:
        jrtestutils.report(TESTNAME, "no queries were traced for x + y")
        allOK = False
    if elapsed > MAX_SECONDS_BIVARIATE:
        jrtestutils.report(TESTNAME, "x + y took {:.2f}s".format(elapsed))
        allOK = False
    return allOK


def testGrowingCoefficients():
    """
    Bivariate queries whose intermediate coefficients grow to
    thousands of digits. Both are decided, traced and written out as
    JSON within MAX_SECONDS_BIVARIATE.
    """
    allOK = True
    cases = [
        ("3*x^2 - 3*x*y - y + 3, -y - 3", "2*x*y - 2*y^2"),
        ("-3*x*y + y^2 - 3*x + 1, -3*y^2 - 2", "2*x^2 - 3*y^2 + 2*x - 1")
    ]
    for (idealText, elemText) in cases:
        (ctx, gens, f) = jrtestutils.parseQuery("Q[x, y]", idealText, elemText)
        what = "{} modulo <{}>".format(elemText, idealText)
        controls = jrtestutils.quietControls()
        recorder = cuitrace.RecordingTrace()
        controls.setTracer(recorder)
        start = time.perf_counter()
        res = extractInCtx(ctx, gens, f, controls)
        elapsed = time.perf_counter() - start
        if bruteoracles.rabinowitschQ(ctx, gens, f):
            allOK &= checkPositive(what, res)
        else:
            allOK &= checkRefuted(what, res)
        loaded = certio.certFromJson(certio.certToJson(res))
        if not certio.loadedVerify(loaded):
            jrtestutils.report(TESTNAME, "{}: written answer does not verify".format(
                what))
            allOK = False
        if len(recorder.text()) == 0:
            jrtestutils.report(TESTNAME, "{}: nothing traced".format(what))
            allOK = False
        if elapsed > MAX_SECONDS_BIVARIATE:
            jrtestutils.report(TESTNAME, "{} took {:.2f}s".format(what, elapsed))
            allOK = False
    return allOK


def run():
    """
    Run the Nullstellensatz tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testEmerton()
    allOK &= testIntegral()
    allOK &= testLocalized()
    allOK &= testSpotCases()
    allOK &= testIterated()
    allOK &= testRationalDecisions()
    allOK &= testBivariateDecisions()
    allOK &= testNilpotentSumOfVariables()
    allOK &= testGrowingCoefficients()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
