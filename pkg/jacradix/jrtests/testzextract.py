"""
The extractors for Z: decisions checked against the prime factor
radical, certificates replayed, and the zSplit decomposition.
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

from jacradix import bruteoracles
from jacradix import exprparser
from jacradix.certificates import Refuted
from jacradix.idealengine import IdealHandle
from jacradix.jacoracle import MembershipJacOracle
from jacradix.jacobson import zSplit, integerCtx, extractInCtx
from jacradix.jacobson import ZExtractor, ZKdim1Extractor

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTZEXTRACT'

NUM_DECISIONS = 500
MAX_SECONDS_Z = 0.01
NUM_KDIM1 = 100
MAX_GENERATOR = 10 ** 6


def leastExponent(g, a):
    "The least n with g dividing a^n, for a != 0 in the radical of g"
    n = 0
    while pow(a, n) % g != 0:
        n += 1
    return n


def randomCase(rng):
    """
    A random generator g, 1 <= |g| <= 10^6, and an a which half of the
    time is a multiple of the radical of g
    """
    g = jrtestutils.randInt(rng, 1, MAX_GENERATOR)
    if rng.random() < 0.5:
        g = -g
    if rng.random() < 0.5:
        a = bruteoracles.radicalZ(g) * jrtestutils.randInt(rng, -50, 50)
    else:
        a = jrtestutils.randInt(rng, -MAX_GENERATOR, MAX_GENERATOR)
    return (g, a)


def checkDecision(what, g, a, res):
    """
    Compare an extraction result with the radical of g, and replay
    whatever came back
    """
    expected = bruteoracles.inZRadical(g, a)
    if isinstance(res, Refuted):
        if expected:
            jrtestutils.report(TESTNAME, "{}: {} refuted modulo {}".format(what, a, g))
            return False
        if not res.isSound():
            jrtestutils.report(TESTNAME, "{}: unsound refutation of {} modulo {}".format(
                what, a, g))
            return False
        return True

    if not expected:
        jrtestutils.report(TESTNAME, "{}: {} accepted modulo {}".format(what, a, g))
        return False
    ok = jrtestutils.checkCert(TESTNAME, res, "{} certificate".format(what))
    n = res.exponent
    if pow(a, n) % g != 0:
        jrtestutils.report(TESTNAME, "{}: {} does not divide {}^{}".format(what, g, a, n))
        ok = False
    elif a != 0 and n != leastExponent(g, a):
        jrtestutils.report(TESTNAME, "{}: tightened exponent {} is not least".format(
            what, n))
        ok = False
    return ok


def testZSplit():
    """
    x = d*e, a nilpotent modulo d, a coprime to e
    """
    allOK = True
    rng = jrtestutils.makeRng(20)
    for i in range(100):
        x = jrtestutils.randInt(rng, 1, MAX_GENERATOR)
        if rng.random() < 0.5:
            x = -x
        a = jrtestutils.randInt(rng, 1, 10000)
        split = zSplit(x, a)
        if split.d * split.e != x:
            jrtestutils.report(TESTNAME, "zSplit({}, {}) gave {}".format(x, a, split))
            allOK = False
        if split.chain[-1] != 1:
            jrtestutils.report(TESTNAME, "zSplit chain does not end in 1")
            allOK = False
        allOK &= jrtestutils.checkCert(TESTNAME, split.nilCert, "zSplit nilpotency")
        allOK &= jrtestutils.checkCert(TESTNAME, split.coprimeCert, "zSplit coprimality")

    split = zSplit(12, 6)
    if (split.d, split.e, split.chain) != (12, 1, [6, 2, 1]):
        jrtestutils.report(TESTNAME, "zSplit(12, 6) gave {}".format(split))
        allOK = False
    return allOK


def testDecisions():
    """
    extractInCtx over Z agrees with the prime factor radical, each
    case within MAX_SECONDS_Z
    """
    allOK = True
    rng = jrtestutils.makeRng(21)
    ctx = integerCtx()
    controls = jrtestutils.quietControls()
    for i in range(NUM_DECISIONS):
        (g, a) = randomCase(rng)
        start = time.perf_counter()
        res = extractInCtx(ctx, [ctx.ring.const(g)], ctx.ring.const(a), controls)
        elapsed = time.perf_counter() - start
        allOK &= checkDecision("ZExtractor", g, a, res)
        if elapsed > MAX_SECONDS_Z:
            jrtestutils.report(TESTNAME, "{} modulo {} took {:.4f}s".format(a, g, elapsed))
            allOK = False
    return allOK


def testKdim1Extractor():
    """
    The Krull dimension route reaches the same decisions
    """
    allOK = True
    rng = jrtestutils.makeRng(22)
    ctx = integerCtx()
    ring = ctx.ring
    extractor = ZKdim1Extractor(jrtestutils.quietControls())
    for i in range(NUM_KDIM1):
        (g, a) = randomCase(rng)
        handle = IdealHandle(ctx, [ring.const(g)])
        oracle = MembershipJacOracle(ctx, [g], a)
        res = extractor.extract(handle, a, oracle)
        allOK &= checkDecision("ZKdim1Extractor", g, a, res)
    return allOK


def testUntightened():
    """
    Without tightening the certificate still verifies, and its exponent
    is no smaller than the least one
    """
    allOK = True
    rng = jrtestutils.makeRng(23)
    ctx = integerCtx()
    controls = jrtestutils.quietControls(tighten=False)
    for i in range(100):
        (g, a) = randomCase(rng)
        if a == 0 or not bruteoracles.inZRadical(g, a):
            continue
        res = extractInCtx(ctx, [ctx.ring.const(g)], ctx.ring.const(a), controls)
        if isinstance(res, Refuted):
            jrtestutils.report(TESTNAME, "untightened: {} refuted modulo {}".format(a, g))
            allOK = False
            continue
        allOK &= jrtestutils.checkCert(TESTNAME, res, "untightened certificate")
        if res.exponent < leastExponent(g, a):
            jrtestutils.report(TESTNAME, "untightened exponent below the least one")
            allOK = False
    return allOK


def testSpotCases():
    """
    A few hand checked instances
    """
    allOK = True
    controls = jrtestutils.quietControls()

    (ctx, gens, f) = jrtestutils.parseQuery("Z", "4", "2")
    res = extractInCtx(ctx, gens, f, controls)
    if isinstance(res, Refuted) or res.exponent != 2:
        jrtestutils.report(TESTNAME, "2 modulo 4 gave {!r}".format(res))
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "2 modulo 4")

    (ctx, gens, f) = jrtestutils.parseQuery("Z", "4", "3")
    res = extractInCtx(ctx, gens, f, controls)
    if not isinstance(res, Refuted) or not res.isSound():
        jrtestutils.report(TESTNAME, "3 modulo 4 gave {!r}".format(res))
        allOK = False

    # Z/12 with <4>: the ring is Z/4, where 2 is nilpotent and 3 a unit
    ctx = exprparser.parseRing("Z/12")
    ring = ctx.ring
    for (a, expected) in [(2, True), (6, True), (3, False), (5, False)]:
        res = extractInCtx(ctx, [ring.const(4)], ring.const(a), controls)
        if bool(res) != expected:
            jrtestutils.report(TESTNAME, "{} modulo 4 in Z/12 gave {!r}".format(a, res))
            allOK = False
        elif expected:
            allOK &= jrtestutils.checkCert(TESTNAME, res, "Z/12 certificate")
        elif not res.isSound():
            jrtestutils.report(TESTNAME, "unsound refutation in Z/12")
            allOK = False

        direct = ZExtractor(controls).extract(IdealHandle(ctx, [ring.const(4)]),
            ring.const(a), MembershipJacOracle(ctx, [4], a))
        if bool(direct) != expected:
            jrtestutils.report(TESTNAME, "ZExtractor in Z/12 disagrees for {}".format(a))
            allOK = False
        elif expected:
            allOK &= jrtestutils.checkCert(TESTNAME, direct, "ZExtractor in Z/12")
    return allOK


def run():
    """
    Run the Z extraction tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testZSplit()
    allOK &= testDecisions()
    allOK &= testKdim1Extractor()
    allOK &= testUntightened()
    allOK &= testSpotCases()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
