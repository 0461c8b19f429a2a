"""
Utilities shared by the test modules, and the testAll() driver.
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

from jacradix import certificates
from jacradix import exprparser
from jacradix import cuitrace
from jacradix.controls import ExtractionControls

DEFAULT_SEED = 20260417


def report(testName, message):
    """
    Report a test result
    """
    fullMessage = "%s: %s" % (testName, message)
    print(fullMessage)


def reportStart(testName):
    """
    Report the beginning of a given test
    """
    print("####################")
    print("Starting test:", testName)


def makeRng(offset=0):
    "A numpy Generator with a fixed seed, so failures can be reproduced"
    return numpy.random.default_rng(DEFAULT_SEED + offset)


def randInt(rng, low, high):
    "Random python int in [low, high]"
    return int(rng.integers(low, high + 1))


def randBigInt(rng, bits, signed=True):
    """
    Random python int of up to the given number of bits (a multiple
    of 8), built from numpy random bytes. With signed, negative half
    the time.
    """
    value = int.from_bytes(rng.bytes(bits // 8), "big")
    if signed and rng.random() < 0.5:
        value = -value
    return value


def randPoly(rng, ring, maxDegree, height, varName=None, monicDegree=None):
    """
    Random univariate polynomial in varName (default the first
    variable) with coefficients in [-height, height]. With
    monicDegree, the result is monic of exactly that degree.
    """
    if varName is None:
        varName = ring.varNames[0]
    x = ring.var(varName)
    if monicDegree is not None:
        p = x ** monicDegree
        top = monicDegree
    else:
        p = ring.zero()
        top = maxDegree + 1
    for k in range(top):
        p = p + randInt(rng, -height, height) * x ** k
    return p


def checkCert(testName, cert, what):
    """
    Verify any certificate. Reports and returns False on a Mismatch
    """
    result = certificates.verify(cert)
    if not result:
        report(testName, "{} did not verify: {!r}".format(what, result))
        return False
    return True


def parseQuery(ringText, idealText, elemText):
    "Parse (ctx, generators, element) from text"
    ctx = exprparser.parseRing(ringText)
    gens = exprparser.parseIdeal(idealText, ctx)
    f = exprparser.parsePolynomial(elemText, ctx)
    return (ctx, gens, f)


def quietControls(tighten=True):
    "Controls with a silent tracer, whatever the environment says"
    controls = ExtractionControls()
    controls.setTracer(cuitrace.SilentTrace())
    controls.setTighten(tighten)
    return controls


def testAll():
    """
    Runs all the tests - called from the testjacradix entry point

    Returns number of tests that fail
    """
    failureCount = 0

    from . import testexactarith
    ok = testexactarith.run()
    if not ok:
        failureCount += 1

    from . import testpolyring
    ok = testpolyring.run()
    if not ok:
        failureCount += 1

    from . import testparser
    ok = testparser.run()
    if not ok:
        failureCount += 1

    from . import testidealengine
    ok = testidealengine.run()
    if not ok:
        failureCount += 1

    from . import testintegrality
    ok = testintegrality.run()
    if not ok:
        failureCount += 1

    from . import testcombinators
    ok = testcombinators.run()
    if not ok:
        failureCount += 1

    from . import testzextract
    ok = testzextract.run()
    if not ok:
        failureCount += 1

    from . import testkdim
    ok = testkdim.run()
    if not ok:
        failureCount += 1

    from . import testsnapper
    ok = testsnapper.run()
    if not ok:
        failureCount += 1

    from . import testnullstellensatz
    ok = testnullstellensatz.run()
    if not ok:
        failureCount += 1

    from . import testcertio
    ok = testcertio.run()
    if not ok:
        failureCount += 1

    from . import testbrute
    ok = testbrute.run()
    if not ok:
        failureCount += 1

    from . import testcmdline
    ok = testcmdline.run()
    if not ok:
        failureCount += 1

    # After all tests
    print()
    print()
    report("ALL TESTS", "Completed, with %d failure(s)" % failureCount)

    return failureCount
