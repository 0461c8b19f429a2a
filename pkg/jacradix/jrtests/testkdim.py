"""
Krull dimension witnesses for Q, Z/n and Z, and the zero-dimensional
extractor built on them.
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

import math
from fractions import Fraction

from jacradix import bruteoracles
from jacradix import exprparser
from jacradix.certificates import Refuted
from jacradix.jacobson import kdim0WitnessField, kdim0WitnessZmod, kdim1WitnessZ
from jacradix.jacobson import extractInCtx

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTKDIM'

NUM_WITNESSES = 200


def testKdim1Z():
    """
    Random pairs over Z, with e0 = 1 whenever x0 is nonzero
    """
    allOK = True
    rng = jrtestutils.makeRng(30)
    for i in range(NUM_WITNESSES):
        x0 = jrtestutils.randInt(rng, -10000, 10000)
        x1 = jrtestutils.randInt(rng, -10000, 10000)
        if i % 10 == 0:
            x1 = 0
        cert = kdim1WitnessZ(x0, x1)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "kdim1 of ({}, {})".format(x0, x1))
        if x0 != 0 and cert.exponents[0] != 1:
            jrtestutils.report(TESTNAME, "e0 is {} for x0 = {}".format(
                cert.exponents[0], x0))
            allOK = False

    for (pair, expected) in [((12, 6), [1, 2]), ((0, 5), [1, 0]), ((5, 3), [1, 0])]:
        cert = kdim1WitnessZ(*pair)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "kdim1 of {}".format(pair))
        if cert.exponents != expected:
            jrtestutils.report(TESTNAME, "kdim1 of {} has exponents {}".format(pair,
                cert.exponents))
            allOK = False
    return allOK


def testKdim0Zmod():
    """
    Random (n, x), with e bounded by the bit length of n
    """
    allOK = True
    rng = jrtestutils.makeRng(31)
    for i in range(NUM_WITNESSES):
        n = jrtestutils.randInt(rng, 2, 100000)
        x = jrtestutils.randInt(rng, -100000, 100000)
        cert = kdim0WitnessZmod(n, x)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "kdim0 of {} mod {}".format(x, n))
        if cert.exponents[0] > n.bit_length():
            jrtestutils.report(TESTNAME, "e = {} for {} mod {}".format(cert.exponents[0],
                x, n))
            allOK = False

    cases = [(12, 2, 2, 2), (4, 2, 2, 0), (7, 3, 0, 5)]
    for (n, x, e, c) in cases:
        cert = kdim0WitnessZmod(n, x)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "kdim0 of {} mod {}".format(x, n))
        got = (cert.exponents[0], cert.body.cofactors[0].constantValue() % n)
        if got != (e, c):
            jrtestutils.report(TESTNAME, "kdim0 of {} mod {} gave (e, c) = {}".format(x,
                n, got))
            allOK = False

    # the ctx form reads the modulus from the relations
    ctx = exprparser.parseRing("Z/12")
    cert = kdim0WitnessZmod(ctx, 2)
    allOK &= jrtestutils.checkCert(TESTNAME, cert, "kdim0 in the Z/12 ctx")
    if cert.exponents != [2]:
        jrtestutils.report(TESTNAME, "kdim0 in the Z/12 ctx has exponents {}".format(
            cert.exponents))
        allOK = False
    return allOK


def testKdim0Field():
    allOK = True
    ctx = exprparser.parseRing("Q")
    for (x, e) in [(Fraction(3, 7), 0), (-5, 0), (0, 1)]:
        cert = kdim0WitnessField(ctx, x)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "field kdim0 of {}".format(x))
        if cert.exponents != [e]:
            jrtestutils.report(TESTNAME, "field kdim0 of {} has exponents {}".format(x,
                cert.exponents))
            allOK = False
    return allOK


def testZeroDimExtractor():
    """
    In Z/n, a lies in Jac <m> exactly when the radical of gcd(m, n)
    divides a
    """
    allOK = True
    rng = jrtestutils.makeRng(32)
    controls = jrtestutils.quietControls()
    for i in range(100):
        n = jrtestutils.randInt(rng, 2, 5000)
        m = jrtestutils.randInt(rng, 0, 5000)
        ctx = exprparser.parseRing("Z/{}".format(n))
        ring = ctx.ring
        g = math.gcd(m, n)
        if rng.random() < 0.5:
            a = bruteoracles.radicalZ(g) * jrtestutils.randInt(rng, -30, 30)
        else:
            a = jrtestutils.randInt(rng, -5000, 5000)
        res = extractInCtx(ctx, [ring.const(m)], ring.const(a), controls)
        expected = bruteoracles.inZRadical(g, a)
        if isinstance(res, Refuted):
            if expected or not res.isSound():
                jrtestutils.report(TESTNAME, "{} modulo {} in Z/{} gave {!r}".format(a,
                    m, n, res))
                allOK = False
        elif not expected:
            jrtestutils.report(TESTNAME, "{} accepted modulo {} in Z/{}".format(a, m, n))
            allOK = False
        else:
            allOK &= jrtestutils.checkCert(TESTNAME, res, "Z/{} certificate".format(n))

    ctx = exprparser.parseRing("Q")
    ring = ctx.ring
    res = extractInCtx(ctx, [], ring.const(5), controls)
    if not isinstance(res, Refuted) or not res.isSound():
        jrtestutils.report(TESTNAME, "5 in Jac 0 of Q gave {!r}".format(res))
        allOK = False
    for (gens, a, e) in [([], 0, 1), ([3], 5, 0)]:
        res = extractInCtx(ctx, [ring.const(g) for g in gens], ring.const(a), controls)
        if isinstance(res, Refuted) or res.exponent != e:
            jrtestutils.report(TESTNAME, "{} modulo {} in Q gave {!r}".format(a, gens,
                res))
            allOK = False
        else:
            allOK &= jrtestutils.checkCert(TESTNAME, res, "Q certificate")
    return allOK


def run():
    """
    Run the Krull dimension tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testKdim1Z()
    allOK &= testKdim0Zmod()
    allOK &= testKdim0Field()
    allOK &= testZeroDimExtractor()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
