"""
Randomised soundness tests of the certificate combinators, over Z,
a Z/8 fold, Q[x] and Z[x]
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

from jacradix import certificates
from jacradix import jacerrors
from jacradix import jacobson
from jacradix.certificates import NilpotencyCert, MembershipCert
from jacradix.certificates import TRANSPORT_FROM_QUOTIENT, TRANSPORT_INTO_QUOTIENT
from jacradix.idealengine import IdealHandle, unitTest
from jacradix.jacoracle import MembershipJacOracle
from jacradix.polyring import PolyRing, RingCtx, BASE_ZZ, BASE_QQ

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTCOMBINATORS'

NUM_TRIALS = 30
MIN_VERIFIED = 1000
EXPONENT_BOUND = 10


class Family(object):
    """
    A random source of (ctx, U, nil) instances, where nil() returns a
    random element of the nilradical of U in ctx
    """
    def __init__(self, name, rng):
        self.name = name
        self.rng = rng

    def instance(self):
        raise NotImplementedError()


class IntegerFamily(Family):
    def instance(self):
        rng = self.rng
        ctx = RingCtx(PolyRing(BASE_ZZ))
        ring = ctx.ring
        primes = [p for p in [2, 3, 5, 7] if rng.random() < 0.5] or [3]
        n = 1
        r = 1
        for p in primes:
            n *= p ** jrtestutils.randInt(rng, 1, 3)
            r *= p

        def nil():
            return ring.const(r * jrtestutils.randInt(rng, -20, 20))
        return (ctx, [ring.const(n)], nil)


class Mod8Family(Family):
    "Z/8[x]/<x^3> with U = [x^2]"
    def instance(self):
        rng = self.rng
        ring = PolyRing(BASE_ZZ, ['x'])
        x = ring.var('x')
        ctx = RingCtx(ring, [x ** 3], declaredModulus=8)

        def nil():
            a = jrtestutils.randPoly(rng, ring, 1, 3)
            b = jrtestutils.randPoly(rng, ring, 1, 3)
            return 2 * a + x * b
        return (ctx, [x ** 2], nil)


class RationalFamily(Family):
    "Q[x] with U = [s^2 t^3]"
    def instance(self):
        rng = self.rng
        ring = PolyRing(BASE_QQ, ['x'])
        x = ring.var('x')
        ctx = RingCtx(ring)
        s = x + jrtestutils.randInt(rng, -3, 3)
        t = x ** 2 + jrtestutils.randInt(rng, -3, 3) * x + jrtestutils.randInt(rng, -3, 3)

        def nil():
            return s * t * jrtestutils.randPoly(rng, ring, 1, 2)
        return (ctx, [s ** 2 * t ** 3], nil)


class IntegerPolyFamily(Family):
    "Z[x] with U = [4, x^2]"
    def instance(self):
        rng = self.rng
        ring = PolyRing(BASE_ZZ, ['x'])
        x = ring.var('x')
        ctx = RingCtx(ring)

        def nil():
            a = jrtestutils.randPoly(rng, ring, 1, 3)
            b = jrtestutils.randPoly(rng, ring, 1, 3)
            return 2 * a + x * b
        return (ctx, [ring.const(4), x ** 2], nil)


def findNil(ctx, generators, a, bound=EXPONENT_BOUND):
    """
    The NilpotencyCert for the least k <= bound with a^k in the ideal,
    or None
    """
    handle = IdealHandle(ctx, generators)
    power = ctx.ring.one()
    for k in range(bound + 1):
        res = handle.membership(power)
        if res:
            return NilpotencyCert(a, k, res)
        power = power * a
    return None


class CertTally(object):
    "Number of certificates verified so far by this module"
    verified = 0


def checkCounted(cert, what):
    ok = jrtestutils.checkCert(TESTNAME, cert, what)
    if ok:
        CertTally.verified += 1
    return ok


def reportMissing(family, what):
    jrtestutils.report(TESTNAME, "{}: no exponent found for {}".format(family.name, what))
    return False


def testCutNil(family):
    allOK = True
    for i in range(NUM_TRIALS):
        (ctx, U, nil) = family.instance()
        (x, y) = (nil(), nil())
        c1 = findNil(ctx, U, x * y)
        c2 = findNil(ctx, U + [y], x)
        if c1 is None or c2 is None:
            allOK = reportMissing(family, "cutNil inputs")
            continue
        cert = certificates.cutNil(c1, c2)
        allOK &= checkCounted(cert, family.name + " cutNil")
        if cert.exponent != (c2.exponent + 1) * c1.exponent:
            jrtestutils.report(TESTNAME, "cutNil exponent {} is not (m+1)*k".format(
                cert.exponent))
            allOK = False
    return allOK


def testNilpotentSum(family):
    allOK = True
    for i in range(NUM_TRIALS):
        (ctx, U, nil) = family.instance()
        c1 = findNil(ctx, U, nil())
        c2 = findNil(ctx, U, nil())
        if c1 is None or c2 is None:
            allOK = reportMissing(family, "nilpotentSum inputs")
            continue
        cert = certificates.nilpotentSum(c1, c2)
        allOK &= checkCounted(cert, family.name + " nilpotentSum")
        if c1.exponent > 0 and c2.exponent > 0:
            if cert.exponent != c1.exponent + c2.exponent - 1:
                jrtestutils.report(TESTNAME, "nilpotentSum exponent is not p + q - 1")
                allOK = False
    return allOK


def testUnitPlusNilpotent(family):
    allOK = True
    for i in range(NUM_TRIALS):
        (ctx, U, nil) = family.instance()
        qctx = ctx.quotient(U)
        u = unitTest(qctx, 1 + nil())
        m = findNil(qctx, [], nil())
        if not u or m is None:
            allOK = reportMissing(family, "unitPlusNilpotent inputs")
            continue
        cert = certificates.unitPlusNilpotent(u, m)
        allOK &= checkCounted(cert, family.name + " unitPlusNilpotent")
    return allOK


def testTransport(family):
    allOK = True
    for i in range(NUM_TRIALS):
        (ctx, U, nil) = family.instance()
        handle = IdealHandle(ctx, U)
        qctx = ctx.quotient(U)
        c = findNil(qctx, [], nil())
        if c is None:
            allOK = reportMissing(family, "transport input")
            continue
        outside = certificates.transport(TRANSPORT_FROM_QUOTIENT, c, handle)
        allOK &= checkCounted(outside, family.name + " from-quotient")
        inside = certificates.transport(TRANSPORT_INTO_QUOTIENT, outside, handle)
        allOK &= checkCounted(inside, family.name + " into-quotient")
        if inside.ctx != qctx or inside.generators:
            jrtestutils.report(TESTNAME, "into-quotient landed in the wrong place")
            allOK = False
    return allOK


def testJacOracles(family):
    """
    nilToJac and cutJac answer random queries with verifying
    certificates
    """
    allOK = True
    rng = family.rng
    for i in range(NUM_TRIALS):
        (ctx, U, nil) = family.instance()
        ring = ctx.ring
        (x, y) = (nil(), nil())
        cert = findNil(ctx, U, x)
        if cert is None:
            allOK = reportMissing(family, "nilToJac input")
            continue
        oracle = certificates.nilToJac(cert)

        def inner(z, ctx=ctx, U=U, x=x, y=y):
            return MembershipJacOracle(ctx, U + [1 - y * z], x)
        cut = certificates.cutJac(inner, x, y, ctx, U)

        for k in range(2):
            if ring.nvars > 0:
                b = jrtestutils.randPoly(rng, ring, 2, 4)
            else:
                b = ring.const(jrtestutils.randInt(rng, -50, 50))
            for o in (oracle, cut):
                res = o.query(b)
                if not res:
                    jrtestutils.report(TESTNAME, "{}: query refused at {}".format(
                        family.name, b))
                    allOK = False
                else:
                    allOK &= checkCounted(res,
                        family.name + " Jac oracle answer")
    return allOK


def testJacIdempotence():
    """
    a in Jac <U, v> and v in Jac <U> give a in Jac <U>
    """
    allOK = True
    family = Mod8Family("Z/8 fold", jrtestutils.makeRng(7))
    rng = family.rng
    for i in range(10):
        (ctx, U, nil) = family.instance()
        ring = ctx.ring
        v = ring.const(2)
        a = ring.var('x') + 2 * jrtestutils.randPoly(rng, ring, 1, 3)
        outer = MembershipJacOracle(ctx, U + [v], a)
        vOracle = MembershipJacOracle(ctx, U, v)
        inner = certificates.jacOfJacInner(outer, vOracle)
        oracle = certificates.jacIdempotence(inner, a, ctx, U)
        res = oracle.query(jrtestutils.randPoly(rng, ring, 2, 4))
        if not res or not isinstance(res, MembershipCert):
            jrtestutils.report(TESTNAME, "jacIdempotence query refused")
            allOK = False
        else:
            allOK &= checkCounted(res, "jacIdempotence answer")
    return allOK


def testCloseAndRehome():
    """
    closeCert, rehome and exponent tightening on small fixed cases
    """
    allOK = True
    ring = PolyRing(BASE_QQ, ['x'])
    x = ring.var('x')
    folded = RingCtx(ring, [x ** 2])

    # x^3 + x = 1*x + x*x^2
    cert = certificates.closeCert(folded, x ** 3 + x, [x], [ring.one()])
    allOK &= checkCounted(cert, "closeCert over a relation")
    try:
        certificates.closeCert(folded, x + 1, [x], [ring.one()])
        jrtestutils.report(TESTNAME, "closeCert accepted a residual of 1")
        allOK = False
    except jacerrors.CertificateError:
        pass

    free = RingCtx(ring)
    cert = MembershipCert(free, x ** 3, [x ** 2], [x])
    moved = certificates.rehome(cert, free, [x])
    allOK &= checkCounted(moved, "rehome onto <x>")
    if moved.generators != [x]:
        jrtestutils.report(TESTNAME, "rehome kept generators {}".format(
            moved.generators))
        allOK = False

    handle = IdealHandle(free, [x ** 3])
    loose = NilpotencyCert(x, 7, handle.membership(x ** 7))
    tight = jacobson.tightenNilpotency(loose)
    allOK &= checkCounted(tight, "tightened x^7")
    if tight.exponent != 3:
        jrtestutils.report(TESTNAME, "tightened exponent {}, expected 3".format(
            tight.exponent))
        allOK = False
    return allOK


def run():
    """
    Run the combinator tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True
    CertTally.verified = 0

    families = [
        IntegerFamily("Z", jrtestutils.makeRng(10)),
        Mod8Family("Z/8 fold", jrtestutils.makeRng(11)),
        RationalFamily("Q[x]", jrtestutils.makeRng(12)),
        IntegerPolyFamily("Z[x]", jrtestutils.makeRng(13))
    ]
    for family in families:
        allOK &= testCutNil(family)
        allOK &= testNilpotentSum(family)
        allOK &= testUnitPlusNilpotent(family)
        allOK &= testTransport(family)
        allOK &= testJacOracles(family)
    allOK &= testJacIdempotence()
    allOK &= testCloseAndRehome()
    if CertTally.verified < MIN_VERIFIED:
        jrtestutils.report(TESTNAME, "only {} certificates verified, expected {}".format(
            CertTally.verified, MIN_VERIFIED))
        allOK = False

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
