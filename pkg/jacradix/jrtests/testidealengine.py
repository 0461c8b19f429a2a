"""
Tests of the ideal engines: membership, contraction, radical
membership and unit tests
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

import sympy

from jacradix import idealengine
from jacradix import bruteoracles
from jacradix.idealengine import IdealHandle
from jacradix.polyring import PolyRing, RingCtx, BASE_ZZ, BASE_QQ

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTIDEALENGINE'


def randSmallPoly(rng, ring, maxDegree=3, height=5):
    "Random polynomial in x, y of total degree <= maxDegree"
    (x, y) = (ring.var('x'), ring.var('y'))
    p = ring.zero()
    for i in range(maxDegree + 1):
        for j in range(maxDegree + 1 - i):
            if rng.random() < 0.4:
                p = p + jrtestutils.randInt(rng, -height, height) * x ** i * y ** j
    return p


def testAgainstSympy():
    """
    Membership over Q[x,y] agrees with a sympy Groebner basis on tiny
    random instances
    """
    allOK = True
    rng = jrtestutils.makeRng(3)
    ring = PolyRing(BASE_QQ, ['x', 'y'])
    ctx = RingCtx(ring)
    symbols = bruteoracles.symbolsFor(ring)
    for i in range(100):
        gens = [randSmallPoly(rng, ring) for k in range(jrtestutils.randInt(rng, 1, 2))]
        gens = [g for g in gens if not g.isZero()]
        if not gens:
            continue
        handle = IdealHandle(ctx, gens)
        G = sympy.groebner([bruteoracles.toSympy(g, symbols) for g in gens],
            *symbols, order='grevlex', domain='QQ')

        member = ring.zero()
        for g in gens:
            member = member + randSmallPoly(rng, ring, 2, 3) * g
        for t in [member, randSmallPoly(rng, ring)]:
            res = handle.membership(t)
            expected = G.contains(bruteoracles.toSympy(t, symbols))
            if bool(res) != bool(expected):
                jrtestutils.report(TESTNAME, "Membership of {} in <{}> disagrees".format(
                    t, ", ".join(str(g) for g in gens)))
                allOK = False
            elif res:
                allOK &= jrtestutils.checkCert(TESTNAME, res, "membership")
            elif not res.trace.replays():
                jrtestutils.report(TESTNAME, "Normal form trace does not replay")
                allOK = False

        report = idealengine.groebnerSelfTest(handle)
        if not report.ok:
            jrtestutils.report(TESTNAME, str(report))
            allOK = False
    return allOK


def testIntegers():
    """
    Strong Groebner bases over Z[x]
    """
    allOK = True
    ring = PolyRing(BASE_ZZ, ['x'])
    ctx = RingCtx(ring)
    x = ring.var('x')

    handle = IdealHandle(ctx, [2 * x - 1, ring.const(5)])
    res = handle.membership(x - 3)
    if not res:
        jrtestutils.report(TESTNAME, "x - 3 should lie in <2x - 1, 5>")
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "x - 3 in <2x - 1, 5>")
    for t in [ring.one(), x, 2 * x]:
        res = handle.membership(t)
        if res:
            jrtestutils.report(TESTNAME, "{} should not lie in <2x - 1, 5>".format(t))
            allOK = False
        elif not (res.trace.replays() and res.trace.isIrreducible()):
            jrtestutils.report(TESTNAME, "Bad non-membership trace for {}".format(t))
            allOK = False

    handle = IdealHandle(ctx, [ring.const(4), 2 * x])
    if handle.membership(ring.const(2)) or not handle.membership(6 * x ** 2 + 8):
        jrtestutils.report(TESTNAME, "Membership in <4, 2x> is wrong")
        allOK = False
    report = idealengine.groebnerSelfTest(handle)
    if not report.ok:
        jrtestutils.report(TESTNAME, str(report))
        allOK = False

    rng = jrtestutils.makeRng(4)
    for i in range(50):
        gens = [jrtestutils.randPoly(rng, ring, 3, 5) for k in range(2)]
        gens = [g for g in gens if not g.isZero()]
        t = ring.zero()
        for g in gens:
            t = t + jrtestutils.randPoly(rng, ring, 2, 4) * g
        handle = IdealHandle(ctx, gens)
        res = handle.membership(t)
        if not res:
            jrtestutils.report(TESTNAME, "{} is a combination but not a member".format(t))
            allOK = False
        else:
            allOK &= jrtestutils.checkCert(TESTNAME, res, "Z[x] membership")
        report = idealengine.groebnerSelfTest(handle)
        if not report.ok:
            jrtestutils.report(TESTNAME, str(report))
            allOK = False

    zctx = RingCtx(PolyRing(BASE_ZZ))
    handle = IdealHandle(zctx, [zctx.ring.const(12), zctx.ring.const(18)])
    if handle.complete().basis != [zctx.ring.const(6)]:
        jrtestutils.report(TESTNAME, "<12, 18> in Z should be <6>")
        allOK = False
    return allOK


def testContraction():
    allOK = True
    ring = PolyRing(BASE_QQ, ['x', 'y'])
    ctx = RingCtx(ring)
    (x, y) = (ring.var('x'), ring.var('y'))
    handle = IdealHandle(ctx, [x - y, y ** 2 - 2])
    contracted = idealengine.contraction(handle, ['x'])
    for cert in contracted.originCerts:
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "contraction generator")
    sub = contracted.ctx.ring
    basis = contracted.complete().basis
    if basis != [sub.var('x') ** 2 - 2]:
        jrtestutils.report(TESTNAME, "Contraction gave {}".format(
            ", ".join(str(b) for b in basis)))
        allOK = False
    return allOK


def checkContracted(what, handle, contracted, eliminated):
    """
    Every generator of the contraction is free of the eliminated
    variables, lies in the source ideal, and has a verifying origin
    certificate whose target is that generator
    """
    allOK = True
    ring = handle.ctx.ring
    if len(contracted.originCerts) != len(contracted.generators):
        jrtestutils.report(TESTNAME, "{}: {} origin certificates for {} generators".format(
            what, len(contracted.originCerts), len(contracted.generators)))
        return False
    for (g, cert) in zip(contracted.generators, contracted.originCerts):
        lifted = ring.convert(g)
        if any(lifted.usesVar(v) for v in eliminated):
            jrtestutils.report(TESTNAME, "{}: {} is not in the subring".format(what, g))
            allOK = False
        if cert.target != lifted or not handle.membership(lifted):
            jrtestutils.report(TESTNAME, "{}: {} is not in the source ideal".format(what, g))
            allOK = False
        allOK &= jrtestutils.checkCert(TESTNAME, cert, what + " origin")
    return allOK


def testRandomContractionZ():
    """
    Z[x,y] to Z[x]: for <y - a(x), b(x)*y - c(x)> the contraction is
    generated by a*b - c, as y can be substituted away
    """
    allOK = True
    rng = jrtestutils.makeRng(5)
    ring = PolyRing(BASE_ZZ, ['x', 'y'])
    ctx = RingCtx(ring)
    y = ring.var('y')
    sub = ring.subRing(['x'])
    subCtx = RingCtx(sub)
    for i in range(25):
        a = jrtestutils.randPoly(rng, ring, 2, 3)
        b = jrtestutils.randPoly(rng, ring, 1, 3)
        c = jrtestutils.randPoly(rng, ring, 2, 3)
        gens = [g for g in [y - a, b * y - c] if not g.isZero()]
        handle = IdealHandle(ctx, gens)
        contracted = idealengine.contraction(handle, ['x'])
        what = "contraction of <{}>".format(", ".join(str(g) for g in gens))
        allOK &= checkContracted(what, handle, contracted, ['y'])

        eliminant = sub.convert(a * b - c)
        if not contracted.membership(eliminant):
            jrtestutils.report(TESTNAME, "{} misses {}".format(what, eliminant))
            allOK = False
        exact = IdealHandle(subCtx, [eliminant])
        for g in contracted.generators:
            if not exact.membership(g):
                jrtestutils.report(TESTNAME, "{}: {} is not a multiple of {}".format(
                    what, g, eliminant))
                allOK = False
    return allOK


def testRandomContractionQ():
    """
    Q[x,y,z] to Q[x], against the elimination ideal of a sympy lex
    Groebner basis: both generate the same ideal of Q[x]
    """
    allOK = True
    rng = jrtestutils.makeRng(6)
    ring = PolyRing(BASE_QQ, ['x', 'y', 'z'])
    ctx = RingCtx(ring)
    (y, z) = (ring.var('y'), ring.var('z'))
    (xs, ys, zs) = bruteoracles.symbolsFor(ring)
    sub = ring.subRing(['x'])
    for i in range(20):
        a = jrtestutils.randPoly(rng, ring, 2, 3)
        b = jrtestutils.randPoly(rng, ring, 2, 3)
        h = jrtestutils.randInt(rng, -3, 3) * y + jrtestutils.randInt(rng, -3, 3) * z
        h = h + jrtestutils.randPoly(rng, ring, 1, 3)
        gens = [g for g in [y - a, z * y - b, h] if not g.isZero()]
        handle = IdealHandle(ctx, gens)
        contracted = idealengine.contraction(handle, ['x'])
        what = "contraction of <{}>".format(", ".join(str(g) for g in gens))
        allOK &= checkContracted(what, handle, contracted, ['y', 'z'])

        G = sympy.groebner([bruteoracles.toSympy(g, [xs, ys, zs]) for g in gens],
            ys, zs, xs, order='lex', domain='QQ')
        eliminants = [e for e in G.exprs if not (e.free_symbols & {ys, zs})]
        for e in eliminants:
            p = bruteoracles.fromSympy(e, sub, [xs])
            if not contracted.membership(p):
                jrtestutils.report(TESTNAME, "{} misses the eliminant {}".format(what, p))
                allOK = False
        if eliminants:
            E = sympy.groebner(eliminants, xs, order='lex', domain='QQ')
        for g in contracted.generators:
            expr = bruteoracles.toSympy(g, [xs])
            inSympy = E.contains(expr) if eliminants else (expr == 0)
            if not inSympy:
                jrtestutils.report(TESTNAME, "{}: {} is outside the elimination ideal".format(
                    what, g))
                allOK = False
    return allOK


def testRadicalAndUnits():
    allOK = True
    ring = PolyRing(BASE_QQ, ['x'])
    ctx = RingCtx(ring)
    x = ring.var('x')

    res = idealengine.radicalMembership(IdealHandle(ctx, [x ** 3 - x ** 2]), x ** 2 - x)
    if not res or res.exponent != 2:
        jrtestutils.report(TESTNAME, "x^2 - x should have exponent 2, got {}".format(res))
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "radical membership")

    res = idealengine.radicalMembership(IdealHandle(ctx, [x ** 2 - 1]), x)
    if res:
        jrtestutils.report(TESTNAME, "x is not in the radical of <x^2 - 1>")
        allOK = False

    zctx = RingCtx(PolyRing(BASE_ZZ))
    res = idealengine.radicalMembership(IdealHandle(zctx, [zctx.ring.const(12)]), 6)
    if not res or res.exponent != 2:
        jrtestutils.report(TESTNAME, "6 in rad <12> should have exponent 2")
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "6 in rad <12>")

    z12 = RingCtx(PolyRing(BASE_ZZ), declaredModulus=12)
    res = idealengine.unitTest(z12, 5)
    if not res:
        jrtestutils.report(TESTNAME, "5 is a unit mod 12")
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "5 unit mod 12")
    if idealengine.unitTest(z12, 4):
        jrtestutils.report(TESTNAME, "4 is not a unit mod 12")
        allOK = False

    dual = RingCtx(ring, [x ** 2])
    res = idealengine.unitTest(dual, 1 + x)
    if not res or dual.nf(res.inverse) != 1 - x:
        jrtestutils.report(TESTNAME, "1 + x should have inverse 1 - x in Q[x]/<x^2>")
        allOK = False
    else:
        allOK &= jrtestutils.checkCert(TESTNAME, res, "1 + x unit")
    return allOK


def testQuotientNF():
    "Normal forms in Z[x]/<x^2 - 2> and Z/6[x]"
    allOK = True
    ring = PolyRing(BASE_ZZ, ['x'])
    x = ring.var('x')
    ctx = RingCtx(ring, [x ** 2 - 2])
    cases = [(x ** 3, 2 * x), (x ** 4 + x, x + 4), (x + 1, x + 1)]
    for (p, expected) in cases:
        nf = idealengine.quotientNF(ctx, p)
        if nf != expected:
            jrtestutils.report(TESTNAME, "normal form of {} is {}, expected {}".format(
                p, nf, expected))
            allOK = False

    mod6 = RingCtx(ring, declaredModulus=6)
    if not idealengine.quotientNF(mod6, 6 * x + 12).isZero():
        jrtestutils.report(TESTNAME, "6x + 12 is not zero modulo 6")
        allOK = False
    if idealengine.quotientNF(mod6, 7 * x) != idealengine.quotientNF(mod6, x):
        jrtestutils.report(TESTNAME, "7x and x differ modulo 6")
        allOK = False
    return allOK


def run():
    """
    Run the ideal engine tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testAgainstSympy()
    allOK &= testIntegers()
    allOK &= testContraction()
    allOK &= testRandomContractionZ()
    allOK &= testRandomContractionQ()
    allOK &= testRadicalAndUnits()
    allOK &= testQuotientNF()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
