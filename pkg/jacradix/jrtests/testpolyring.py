"""
Tests of polynomial arithmetic and ring contexts
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

from jacradix import jacerrors
from jacradix.polyring import PolyRing, RingCtx, BASE_ZZ, BASE_QQ

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTPOLYRING'


def checkEqual(what, got, expected):
    if got != expected:
        jrtestutils.report(TESTNAME, "{}: got {}, expected {}".format(what,
            got, expected))
        return False
    return True


def randElement(rng, ring, maxDegree=2, height=6):
    """
    Random polynomial with every variable of degree <= maxDegree.
    Over Q the coefficients have denominators up to 4.
    """
    p = ring.zero()
    exps = [()]
    for v in ring.varNames:
        exps = [e + (k,) for e in exps for k in range(maxDegree + 1)]
    for exp in exps:
        if rng.random() < 0.5:
            continue
        c = jrtestutils.randInt(rng, -height, height)
        if ring.base == BASE_QQ:
            c = Fraction(c, jrtestutils.randInt(rng, 1, 4))
        term = ring.const(c)
        for (name, k) in zip(ring.varNames, exp):
            term = term * ring.var(name) ** k
        p = p + term
    return p


def sampleContexts():
    "(name, ctx) pairs covering Z, Q, Z/n, Z[x] and quotients over them"
    Z = PolyRing(BASE_ZZ)
    Q = PolyRing(BASE_QQ)
    Zx = PolyRing(BASE_ZZ, ['x'])
    Qxy = PolyRing(BASE_QQ, ['x', 'y'])
    x = Zx.var('x')
    (qx, qy) = (Qxy.var('x'), Qxy.var('y'))
    return [
        ("Z", RingCtx(Z)),
        ("Q", RingCtx(Q)),
        ("Z/12", RingCtx(Z, declaredModulus=12)),
        ("Z/9", RingCtx(Z, declaredModulus=9)),
        ("Z[x]", RingCtx(Zx)),
        ("Z[x]/<2x^2 - 3>", RingCtx(Zx, [2 * x ** 2 - 3])),
        ("Z/8[x]/<x^3 + 2x>", RingCtx(Zx, [x ** 3 + 2 * x], declaredModulus=8)),
        ("Q[x,y]/<x^2 - y, y^2>", RingCtx(Qxy, [qx ** 2 - qy, qy ** 2]))
    ]


def testRingAxioms():
    """
    Polynomial arithmetic, and the arithmetic of each sample ctx,
    satisfy the commutative ring axioms on random elements
    """
    allOK = True
    rng = jrtestutils.makeRng(21)
    for (name, ctx) in sampleContexts():
        ring = ctx.ring
        (zero, one) = (ring.zero(), ring.one())
        for i in range(25):
            (p, q, r) = [randElement(rng, ring) for k in range(3)]
            checks = [
                ("p + q = q + p", p + q, q + p),
                ("(p + q) + r = p + (q + r)", (p + q) + r, p + (q + r)),
                ("p*q = q*p", p * q, q * p),
                ("(p*q)*r = p*(q*r)", (p * q) * r, p * (q * r)),
                ("p*(q + r) = p*q + p*r", p * (q + r), p * q + p * r),
                ("p + 0 = p", p + zero, p),
                ("p*1 = p", p * one, p),
                ("p - p = 0", p - p, zero),
                ("p + (-p) = 0", p + (-p), zero),
                ("p^3 = p*p*p", p ** 3, p * p * p),
                ("ctx: (p + q)*r", ctx.mul(ctx.add(p, q), r),
                    ctx.add(ctx.mul(p, r), ctx.mul(q, r))),
                ("ctx: (p*q)*r", ctx.mul(ctx.mul(p, q), r), ctx.mul(p, ctx.mul(q, r))),
                ("ctx: p - q + q", ctx.add(ctx.sub(p, q), q), ctx.nf(p)),
                ("ctx: p + (-p)", ctx.add(p, ctx.neg(p)), zero),
                ("ctx: power", ctx.power(p, 4), ctx.nf(p ** 4))
            ]
            for (what, got, expected) in checks:
                if got != expected:
                    jrtestutils.report(TESTNAME, "{} fails in {} for p={}, q={}, r={}".format(
                        what, name, p, q, r))
                    allOK = False
    return allOK


def testNormalForms():
    """
    In each sample ctx nf is idempotent, ignores added multiples of
    the relations, and p - nf(p) lies in the relation ideal with a
    certificate that rebuilds p as cofactors times relations plus nf(p)
    """
    allOK = True
    rng = jrtestutils.makeRng(22)
    for (name, ctx) in sampleContexts():
        ring = ctx.ring
        rels = list(ctx.relations)
        for i in range(25):
            p = randElement(rng, ring, 3, 20)
            n = ctx.nf(p)
            if ctx.nf(n) != n:
                jrtestutils.report(TESTNAME, "nf is not idempotent on {} in {}".format(
                    p, name))
                allOK = False

            shifted = p
            for rel in rels:
                shifted = shifted + randElement(rng, ring, 1, 3) * rel
            if ctx.nf(shifted) != n:
                jrtestutils.report(TESTNAME,
                    "nf of {} changed by a multiple of the relations in {}".format(p, name))
                allOK = False

            if not rels:
                if n != p:
                    jrtestutils.report(TESTNAME, "nf changed {} in free {}".format(p, name))
                    allOK = False
                continue
            cert = ctx.relationHandle.membership(p - n)
            if not cert:
                jrtestutils.report(TESTNAME, "{} - nf is not in the relations of {}".format(
                    p, name))
                allOK = False
                continue
            rebuilt = n
            for (c, rel) in zip(cert.cofactors, cert.generators):
                rebuilt = rebuilt + c * rel
            if rebuilt != p or list(cert.generators) != rels:
                jrtestutils.report(TESTNAME, "cofactors do not rebuild {} in {}".format(
                    p, name))
                allOK = False
            allOK &= jrtestutils.checkCert(TESTNAME, cert, "p - nf(p) in " + name)
    return allOK


def run():
    """
    Run tests of Polynomial and RingCtx
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    R = PolyRing(BASE_ZZ, ['x', 'y'])
    x = R.var('x')
    y = R.var('y')

    p = (x + y) ** 2
    allOK &= checkEqual("square", p, x * x + 2 * x * y + y * y)
    allOK &= checkEqual("str", str(2 * x ** 2 * y - 3 * x + 1), "2*x^2*y - 3*x + 1")
    allOK &= checkEqual("zero str", str(x - x), "0")
    allOK &= checkEqual("degreeIn", p.degreeIn('x'), 2)
    allOK &= checkEqual("degree of zero", R.zero().degreeIn('x'), -1)
    allOK &= checkEqual("coefficientsIn", p.coefficientsIn('x'),
        [y * y, 2 * y, R.one()])
    allOK &= checkEqual("substitute", p.substitute('y', 1 - x), R.one())
    allOK &= checkEqual("constant", (3 + x - x).constantValue(), 3)
    allOK &= checkEqual("rsub", 1 - x, -(x - 1))

    Q = PolyRing(BASE_QQ, ['x'])
    qx = Q.var('x')
    allOK &= checkEqual("rational str", str(Fraction(1, 2) * qx - 1), "1/2*x - 1")
    allOK &= checkEqual("monic", (2 * qx + 1).monic(), qx + Fraction(1, 2))

    # convert matches variables by name
    Rx = PolyRing(BASE_ZZ, ['x'])
    allOK &= checkEqual("convert", R.convert(Rx.var('x') + 1), x + 1)
    try:
        Rx.convert(y)
        jrtestutils.report(TESTNAME, "Converting y into Z[x] should fail")
        allOK = False
    except jacerrors.RingMismatchError:
        pass
    try:
        x + qx
        jrtestutils.report(TESTNAME, "Adding across rings should fail")
        allOK = False
    except jacerrors.RingMismatchError:
        pass
    try:
        Rx.const(Fraction(1, 2))
        jrtestutils.report(TESTNAME, "1/2 is not an integer coefficient")
        allOK = False
    except jacerrors.RingMismatchError:
        pass

    # quotient contexts
    ctx = RingCtx(Rx, [Rx.var('x') ** 2 - 1])
    rx = Rx.var('x')
    allOK &= checkEqual("nf x^3", ctx.nf(rx ** 3), rx)
    allOK &= checkEqual("power", ctx.power(rx, 5), rx)
    allOK &= checkEqual("describe", ctx.describe(), "Z[x]/<x^2 - 1>")

    z12 = RingCtx(Rx, declaredModulus=12)
    allOK &= checkEqual("mod 12", z12.nf(13 * rx), rx)
    allOK &= checkEqual("mod 12 negative", z12.nf(-rx), 11 * rx)
    allOK &= checkEqual("describe Z/12", z12.describe(), "Z/12[x]")
    allOK &= checkEqual("quotient keeps modulus",
        z12.quotient([rx ** 2]).describe(), "Z/12[x]/<x^2>")
    if not z12.equal(rx * 12, 0):
        jrtestutils.report(TESTNAME, "12x should be 0 in Z/12[x]")
        allOK = False
    try:
        RingCtx(Q, declaredModulus=5)
        jrtestutils.report(TESTNAME, "Q/5 should be unsupported")
        allOK = False
    except jacerrors.UnsupportedTowerError:
        pass

    allOK &= checkEqual("ctx equality", RingCtx(Rx, [rx ** 2 - 1]), ctx)

    allOK &= testRingAxioms()
    allOK &= testNormalForms()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
