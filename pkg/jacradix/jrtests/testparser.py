"""
Tests of the ring and polynomial text syntax
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

from jacradix import exprparser
from jacradix import jacerrors
from jacradix.polyring import PolyRing, BASE_QQ

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTPARSER'


def expectParseError(text, offset, ctx=None):
    """
    Check that parsing text (as a ring, or as a polynomial of ctx)
    fails at the given byte offset
    """
    try:
        if ctx is None:
            exprparser.parseRing(text)
        else:
            exprparser.parsePolynomial(text, ctx)
    except jacerrors.ParseError as e:
        if e.offset != offset:
            jrtestutils.report(TESTNAME, "'{}' failed at offset {}, expected {}".format(
                text, e.offset, offset))
            return False
        return True
    jrtestutils.report(TESTNAME, "'{}' should not parse".format(text))
    return False


def run():
    """
    Run tests of parseRing, parsePolynomial and parseIdeal
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    ctx = exprparser.parseRing("Z[x]")
    if ctx.ring.varNames != ('x',) or ctx.relations:
        jrtestutils.report(TESTNAME, "Z[x] parsed wrongly: {}".format(ctx))
        allOK = False

    ctx = exprparser.parseRing("Z/12")
    if ctx.declaredModulus != 12 or ctx.relations != (ctx.ring.const(12),):
        jrtestutils.report(TESTNAME, "Z/12 should fold 12 into the relations")
        allOK = False

    ctx = exprparser.parseRing("Q[x,y]/<x^2>")
    x = ctx.ring.var('x')
    if ctx.ring.base != BASE_QQ or ctx.relations != (x ** 2,):
        jrtestutils.report(TESTNAME, "Q[x,y]/<x^2> parsed wrongly")
        allOK = False

    ctx = exprparser.parseRing("Z/4[x][y]/<x*y - 1>")
    if ctx.describe() != "Z/4[x,y]/<x*y - 1>":
        jrtestutils.report(TESTNAME, "Stacked variable blocks: {}".format(ctx.describe()))
        allOK = False

    # polynomials print and parse back to themselves
    rng = jrtestutils.makeRng(2)
    for ringText in ["Z[x,y]", "Q[x,y]"]:
        ctx = exprparser.parseRing(ringText)
        ring = ctx.ring
        for i in range(50):
            p = ring.zero()
            for j in range(4):
                c = jrtestutils.randInt(rng, -20, 20)
                if ring.base == BASE_QQ:
                    c = Fraction(c, jrtestutils.randInt(rng, 1, 7))
                ex = jrtestutils.randInt(rng, 0, 3)
                ey = jrtestutils.randInt(rng, 0, 3)
                p = p + c * ring.var('x') ** ex * ring.var('y') ** ey
            back = exprparser.parsePolynomial(str(p), ctx)
            if back != p:
                jrtestutils.report(TESTNAME, "Round trip of {} gave {}".format(p, back))
                allOK = False

    ctx = exprparser.parseRing("Z[x]")
    x = ctx.ring.var('x')
    p = exprparser.parsePolynomial("-(x - 3)^2 + 4/2*x", ctx)
    if p != -(x - 3) ** 2 + 2 * x:
        jrtestutils.report(TESTNAME, "Expression parsed wrongly: {}".format(p))
        allOK = False

    gens = exprparser.parseIdeal("<2*x - 1, 5>", ctx)
    if gens != [2 * x - 1, ctx.ring.const(5)]:
        jrtestutils.report(TESTNAME, "Bracketed ideal parsed wrongly")
        allOK = False
    if exprparser.parseIdeal("", ctx) != [] or len(exprparser.parseIdeal("x, 4", ctx)) != 2:
        jrtestutils.report(TESTNAME, "Plain ideal lists parsed wrongly")
        allOK = False

    # errors with their byte offsets
    allOK &= expectParseError("R[x]", 0)
    allOK &= expectParseError("Z/1", 2)
    allOK &= expectParseError("Z[x", 3)
    allOK &= expectParseError("Z[x,x]", 4)
    allOK &= expectParseError("Q/5", 1)
    allOK &= expectParseError("x + y", 4, ctx)
    allOK &= expectParseError("x/2", 1, ctx)
    allOK &= expectParseError("x ^ y", 4, ctx)
    allOK &= expectParseError("x $ 1", 2, ctx)
    allOK &= expectParseError("(x + 1", 6, ctx)
    allOK &= expectParseError("é + x", 0, ctx)
    allOK &= expectParseError("x + é", 4, ctx)
    allOK &= expectParseError("x\u00a0$", 3, ctx)

    try:
        exprparser.parseRing("Q/<x>")
        jrtestutils.report(TESTNAME, "Q/<x> has no variable x")
        allOK = False
    except jacerrors.ParseError:
        pass

    ring = PolyRing(BASE_QQ, ['x'])
    q = exprparser.parsePolynomial("x/2 + 1/3", ring)
    if str(q) != "1/2*x + 1/3":
        jrtestutils.report(TESTNAME, "Rational division gave {}".format(q))
        allOK = False

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
