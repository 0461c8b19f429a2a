"""
Tests of multiplication matrices, characteristic polynomials and
integral dependence
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

import numpy

from jacradix import integrality
from jacradix import jacerrors
from jacradix.idealengine import IdealHandle
from jacradix.polyring import PolyRing, RingCtx, BASE_ZZ

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTINTEGRALITY'


def run():
    """
    Run the integrality tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    chi = integrality.charPoly(numpy.array([[2, 1], [1, 3]], dtype=object))
    if chi != [1, -5, 5]:
        jrtestutils.report(TESTNAME, "2x2 characteristic polynomial wrong: {}".format(chi))
        allOK = False
    upper = numpy.array([[1, 2, 3], [0, 4, 5], [0, 0, 6]], dtype=object)
    chi = integrality.charPoly(upper)
    if chi != [1, -11, 34, -24]:
        jrtestutils.report(TESTNAME, "3x3 characteristic polynomial wrong: {}".format(chi))
        allOK = False

    ring = PolyRing(BASE_ZZ, ['y', 'X'])
    (y, X) = (ring.var('y'), ring.var('X'))

    try:
        integrality.mulMatrix(X, y + 1, 'X')
        jrtestutils.report(TESTNAME, "Degree 0 relation should be rejected")
        allOK = False
    except jacerrors.DegenerateRelationError:
        pass

    g = 2 * X ** 2 - y
    M = integrality.mulMatrix(X + y, g, 'X')
    gHandle = IdealHandle(RingCtx(ring), [g])
    for r in M.residuals():
        if not gHandle.membership(r):
            jrtestutils.report(TESTNAME, "Residual {} is not a multiple of g".format(r))
            allOK = False

    ctx = RingCtx(ring, [g])
    cert = integrality.integralDependence(ctx, X, g, 'X')
    allOK &= jrtestutils.checkCert(TESTNAME, cert, "X over Z[y] with 2X^2 = y")
    if cert.localizer != 2:
        jrtestutils.report(TESTNAME, "Localizer should be 2, got {}".format(cert.localizer))
        allOK = False

    rng = jrtestutils.makeRng(5)
    for i in range(20):
        n = jrtestutils.randInt(rng, 1, 2)
        lead = jrtestutils.randPoly(rng, ring, 1, 3, 'y')
        if lead.isZero():
            lead = ring.const(3)
        g = lead * X ** n
        for k in range(n):
            g = g + jrtestutils.randPoly(rng, ring, 1, 3, 'y') * X ** k
        f = jrtestutils.randPoly(rng, ring, 2, 3, 'X') + jrtestutils.randInt(rng, -2, 2) * y
        ctx = RingCtx(ring, [g])
        cert = integrality.integralDependence(ctx, f, g, 'X')
        allOK &= jrtestutils.checkCert(TESTNAME, cert,
            "integral dependence of {} modulo {}".format(f, g))

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
