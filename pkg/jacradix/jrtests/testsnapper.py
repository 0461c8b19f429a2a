"""
Units of A[X] split into a unit and nilpotents, and the one query
extraction of Jac 0 = Nil 0 in A[X] built on that.
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
from jacradix import exprparser
from jacradix import bruteoracles
from jacradix.idealengine import unitTest
from jacradix.jacoracle import MembershipJacOracle
from jacradix.jacobson import unitPolyDecompose, snapperExtract

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTSNAPPER'

NUM_TRIALS = 100


def testUnitPolyDecompose():
    allOK = True
    cases = [
        ("Z/4[X]", "1 + 2*X", [2]),
        ("Z/8[X]", "1 + 4*X", [2]),
        ("Z/4[X]", "3", []),
        ("Z/8[X]", "3 + 2*X + 4*X^2", [3, 2])
    ]
    for (ringText, unitText, exponents) in cases:
        ctx = exprparser.parseRing(ringText)
        u = exprparser.parsePolynomial(unitText, ctx)
        unit = unitTest(ctx, u)
        if not unit:
            jrtestutils.report(TESTNAME, "{} is not a unit of {}".format(u, ringText))
            allOK = False
            continue
        (a0, nils) = unitPolyDecompose(unit, 'X')
        what = "{} in {}".format(u, ringText)
        allOK &= jrtestutils.checkCert(TESTNAME, a0, "constant unit of " + what)
        for nil in nils:
            allOK &= jrtestutils.checkCert(TESTNAME, nil, "coefficient of " + what)
        baseCtx = a0.ctx
        constant = baseCtx.ring.convert(u.coefficientOf('X', 0))
        if not baseCtx.nf(a0.unit - constant).isZero():
            jrtestutils.report(TESTNAME, "constant term of {} came out as {}".format(what,
                a0.unit))
            allOK = False
        if [n.exponent for n in nils] != exponents:
            jrtestutils.report(TESTNAME, "coefficient exponents of {} are {}".format(what,
                [n.exponent for n in nils]))
            allOK = False
    return allOK


def testSpotCases():
    allOK = True
    ctx = exprparser.parseRing("Z/4[X]")
    controls = jrtestutils.quietControls()
    for (text, exponent) in [("2*X", 2), ("0", 1), ("2 + 2*X", 2)]:
        f = exprparser.parsePolynomial(text, ctx)
        cert = snapperExtract(f, MembershipJacOracle(ctx, [], f), 'X', controls)
        allOK &= jrtestutils.checkCert(TESTNAME, cert, "snapper for " + text)
        if cert.exponent != exponent:
            jrtestutils.report(TESTNAME, "snapper exponent {} for {}".format(
                cert.exponent, text))
            allOK = False

    # untightened, 2 + 2X is the sum of two exponent 2 coefficients
    f = exprparser.parsePolynomial("2 + 2*X", ctx)
    cert = snapperExtract(f, MembershipJacOracle(ctx, [], f), 'X',
        jrtestutils.quietControls(tighten=False))
    allOK &= jrtestutils.checkCert(TESTNAME, cert, "untightened snapper")
    if cert.exponent > 3:
        jrtestutils.report(TESTNAME, "untightened snapper exponent {}".format(
            cert.exponent))
        allOK = False

    f = exprparser.parsePolynomial("1 + 2*X", ctx)
    try:
        snapperExtract(f, MembershipJacOracle(ctx, [], f), 'X', controls)
        jrtestutils.report(TESTNAME, "1 + 2X was extracted in Z/4[X]")
        allOK = False
    except jacerrors.QueryRefutedError as e:
        if not e.refuted.isSound():
            jrtestutils.report(TESTNAME, "unsound refutation of 1 + 2X")
            allOK = False
    return allOK


def testGeneratorsFreeOfVar():
    """
    Generators of the oracle are moved into the relations, and the
    result is carried back to them
    """
    allOK = True
    (ctx, gens, f) = jrtestutils.parseQuery("Z[X]", "4", "2 + 2*X")
    oracle = MembershipJacOracle(ctx, gens, f)
    cert = snapperExtract(f, oracle, 'X', jrtestutils.quietControls())
    allOK &= jrtestutils.checkCert(TESTNAME, cert, "snapper modulo 4")
    if cert.generators != gens or cert.ctx != ctx:
        jrtestutils.report(TESTNAME, "snapper modulo 4 landed in the wrong place")
        allOK = False

    (ctx, gens, f) = jrtestutils.parseQuery("Z[X]", "X", "X")
    try:
        snapperExtract(f, MembershipJacOracle(ctx, gens, f), 'X')
        jrtestutils.report(TESTNAME, "generator using X was accepted")
        allOK = False
    except jacerrors.UnsupportedTowerError:
        pass
    return allOK


def leastZeroPower(f, n, bound):
    """
    Least m <= bound with every coefficient of f^m divisible by n, by
    plain integer arithmetic, or None
    """
    power = f.ring.one()
    for m in range(bound + 1):
        if all(c.constantValue() % n == 0 for c in power.coefficientsIn('X')):
            return m
        power = power * f
    return None


def testExponentBound():
    """
    Random nilpotents of Z/n[X] for n = 4, 8, 9, 27. Untightened, the
    exponent is at most sum(e_i - 1) + 1 over the least exponents e_i
    of the coefficients, and f to that exponent has every coefficient
    divisible by n
    """
    allOK = True
    rng = jrtestutils.makeRng(40)
    controls = jrtestutils.quietControls(tighten=False)
    for (n, p) in [(4, 2), (8, 2), (9, 3), (27, 3)]:
        ctx = exprparser.parseRing("Z/{}[X]".format(n))
        scalars = exprparser.parseRing("Z/{}".format(n))
        ring = ctx.ring
        for i in range(NUM_TRIALS):
            f = ctx.nf(p * jrtestutils.randPoly(rng, ring, 3, n))
            cert = snapperExtract(f, MembershipJacOracle(ctx, [], f), 'X', controls)
            what = "snapper for {} in Z/{}[X]".format(f, n)
            allOK &= jrtestutils.checkCert(TESTNAME, cert, what)
            if f.isZero():
                continue

            bound = 1
            for c in f.coefficientsIn('X'):
                if not c.isZero():
                    c = scalars.ring.const(c.constantValue())
                    search = bruteoracles.boundedSearch(scalars, [], c, n)
                    bound += search.exponent - 1
            if cert.exponent > bound:
                jrtestutils.report(TESTNAME, "{}: exponent {} above {}".format(what,
                    cert.exponent, bound))
                allOK = False
            least = leastZeroPower(f, n, cert.exponent)
            if least is None:
                jrtestutils.report(TESTNAME, "{}: f^{} is not zero".format(what,
                    cert.exponent))
                allOK = False
    return allOK


def run():
    """
    Run the snapper tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testUnitPolyDecompose()
    allOK &= testSpotCases()
    allOK &= testGeneratorsFreeOfVar()
    allOK &= testExponentBound()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
