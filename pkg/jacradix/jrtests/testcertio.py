"""
Certificates written as JSON and read back still replay, and files
that have been tampered with do not.
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

import os
import json
import tempfile

from jacradix import jacerrors
from jacradix import exactarith
from jacradix import certio
from jacradix import exprparser
from jacradix.idealengine import IdealHandle, unitTest, radicalMembership
from jacradix.jacoracle import MembershipJacOracle
from jacradix.jacobson import extractInCtx, kdim1WitnessZ, kdim0WitnessZmod
from jacradix.integrality import integralDependence

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTCERTIO'

KEY_ORDER = ['kind', 'ring', 'element', 'exponent', 'generators', 'cofactors',
    'relation_cofactors', 'sub_certs']


def sampleCerts():
    """
    One certificate of each kind, as (description, cert)
    """
    controls = jrtestutils.quietControls()
    samples = []

    (ctx, gens, f) = jrtestutils.parseQuery("Z[x]", "2*x - 1, 5", "x - 3")
    samples.append(("extraction over Z[x]", extractInCtx(ctx, gens, f, controls)))
    samples.append(("membership", IdealHandle(ctx, gens).membership(5 * f)))

    (ctx, gens, f) = jrtestutils.parseQuery("Z/12[x]/<x^2>", "4", "2 + x")
    samples.append(("extraction in a quotient", extractInCtx(ctx, gens, f, controls)))
    samples.append(("unit", unitTest(ctx, 1 + 2 * ctx.ring.var('x'))))

    (ctx, gens, f) = jrtestutils.parseQuery("Q[x, y]", "x^2, y^3", "x*y + y")
    samples.append(("radical", radicalMembership(IdealHandle(ctx, gens), f)))

    samples.append(("kdim over Z", kdim1WitnessZ(12, 6)))
    samples.append(("kdim of Z/12", kdim0WitnessZmod(12, 2)))

    bCtx = exprparser.parseRing("Z[X]/<2*X - 1>")
    X = bCtx.ring.var('X')
    samples.append(("integrality", integralDependence(bCtx, X, 2 * X - 1, 'X')))

    (ctx, gens, f) = jrtestutils.parseQuery("Z[x]", "x", "2")
    samples.append(("refutation", extractInCtx(ctx, gens, f, controls)))

    oracle = MembershipJacOracle(ctx, gens, ctx.ring.zero())
    bundle = certio.CertBundle([oracle.query(2), oracle.query(ctx.ring.var('x'))],
        label="jac")
    samples.append(("bundle", bundle))
    return samples


def testReadBack():
    allOK = True
    for (what, cert) in sampleCerts():
        if not certio.loadedVerify(cert):
            jrtestutils.report(TESTNAME, "{}: the original does not verify".format(what))
            allOK = False
            continue
        text = certio.certToJson(cert)
        loaded = certio.certFromJson(text)
        if loaded.kind != cert.kind:
            jrtestutils.report(TESTNAME, "{}: read back as {}".format(what, loaded.kind))
            allOK = False
        result = certio.loadedVerify(loaded)
        if not result:
            jrtestutils.report(TESTNAME, "{}: read back did not verify: {!r}".format(what,
                result))
            allOK = False
        if certio.certToJson(loaded) != text:
            jrtestutils.report(TESTNAME, "{}: second write differs".format(what))
            allOK = False
    return allOK


def testKeyOrder():
    """
    The common keys come in a fixed order
    """
    allOK = True
    for (what, cert) in sampleCerts():
        d = certio.certToDict(cert)
        keys = [k for k in d if k in KEY_ORDER]
        expected = [k for k in KEY_ORDER if k in d]
        if keys != expected:
            jrtestutils.report(TESTNAME, "{}: keys in order {}".format(what, list(d)))
            allOK = False
        if list(d)[0] != 'kind' or list(d)[-1] != 'sub_certs':
            jrtestutils.report(TESTNAME, "{}: kind and sub_certs misplaced".format(what))
            allOK = False
    return allOK


def testTampered():
    """
    Changing a cofactor or the exponent breaks the replay
    """
    allOK = True
    (ctx, gens, f) = jrtestutils.parseQuery("Z", "12", "6")
    cert = extractInCtx(ctx, gens, f, jrtestutils.quietControls())
    d = certio.certToDict(cert)

    bad = dict(d)
    bad['cofactors'] = [str(int(c) + 1) for c in d['cofactors']]
    if certio.loadedVerify(certio.certFromDict(bad)):
        jrtestutils.report(TESTNAME, "changed cofactor still verifies")
        allOK = False

    bad = dict(d)
    bad['exponent'] = str(int(d['exponent']) + 1)
    if certio.loadedVerify(certio.certFromDict(bad)):
        jrtestutils.report(TESTNAME, "changed exponent still verifies")
        allOK = False

    (ctx, gens, f) = jrtestutils.parseQuery("Z[x]", "x", "2")
    refuted = MembershipJacOracle(ctx, gens, f).query(ctx.ring.const(2))
    d = certio.certToDict(refuted)
    d['trace'] = dict(d['trace'], remainder="0")
    if certio.loadedVerify(certio.certFromDict(d)):
        jrtestutils.report(TESTNAME, "refutation with a zero remainder verifies")
        allOK = False
    return allOK


def testMalformed():
    allOK = True
    try:
        certio.certFromJson("{ not json")
        jrtestutils.report(TESTNAME, "bad JSON was read")
        allOK = False
    except jacerrors.ParseError:
        pass

    for d in [{'kind': 'membership'}, {'kind': 'sorcery', 'ring': 'Z'},
            {'kind': 'nilpotency', 'ring': 'Z', 'element': '2', 'exponent': 'two',
            'generators': [], 'cofactors': [], 'relation_cofactors': []}]:
        try:
            certio.certFromDict(d)
            jrtestutils.report(TESTNAME, "malformed {} was read".format(d))
            allOK = False
        except jacerrors.CertificateError:
            pass

    try:
        certio.certFromDict({'kind': 'membership', 'ring': 'Z', 'element': '2 +',
            'generators': [], 'cofactors': [], 'relation_cofactors': []})
        jrtestutils.report(TESTNAME, "bad polynomial text was read")
        allOK = False
    except jacerrors.ParseError:
        pass
    return allOK


def testFiles():
    allOK = True
    (ctx, gens, f) = jrtestutils.parseQuery("Q[x]", "x^3", "x")
    cert = extractInCtx(ctx, gens, f, jrtestutils.quietControls())
    with tempfile.TemporaryDirectory() as tmpdir:
        filename = os.path.join(tmpdir, "cert.json")
        certio.writeCert(cert, filename)
        with open(filename) as fh:
            d = json.load(fh)
        if d['kind'] != 'nilpotency' or d['exponent'] != '3':
            jrtestutils.report(TESTNAME, "written file has {}".format(d))
            allOK = False
        loaded = certio.readCert(filename)
        allOK &= jrtestutils.checkCert(TESTNAME, loaded, "certificate read from file")
    return allOK


def testHugeCoefficients():
    """
    Integers of over 5000 digits, past the interpreter's int/str
    limit, survive writing, reading and replaying
    """
    allOK = True
    controls = jrtestutils.quietControls()
    n = 10 ** 5000 + 1
    nText = exactarith.intToDecimal(n)

    (ctx, gens, f) = jrtestutils.parseQuery("Z", nText, exactarith.intToDecimal(2 * n))
    if gens != [ctx.ring.const(n)] or f != 2 * n:
        jrtestutils.report(TESTNAME, "10^5000 + 1 was not parsed exactly")
        return False
    cases = [
        ("membership of 2n in <n>", IdealHandle(ctx, gens).membership(f)),
        ("2n in Jac <n>", extractInCtx(ctx, gens, f, controls)),
        ("2 in Jac <n>", extractInCtx(ctx, gens, ctx.ring.const(2), controls))
    ]
    (qctx, qgens, qf) = jrtestutils.parseQuery("Q[x]", nText + "*x^2 - x", "x^3")
    cases.append(("x^3 modulo n*x^2 - x", extractInCtx(qctx, qgens, qf, controls)))

    for (what, cert) in cases:
        text = certio.certToJson(cert)
        loaded = certio.certFromJson(text)
        result = certio.loadedVerify(loaded)
        if not result:
            jrtestutils.report(TESTNAME, "{}: read back did not verify: {!r}".format(what,
                result))
            allOK = False
        if nText not in text and what != "x^3 modulo n*x^2 - x":
            jrtestutils.report(TESTNAME, "{}: n is not written in full".format(what))
            allOK = False
        if certio.certToJson(loaded) != text:
            jrtestutils.report(TESTNAME, "{}: second write differs".format(what))
            allOK = False

    if cases[1][1].kind != 'nilpotency' or cases[1][1].exponent != 1:
        jrtestutils.report(TESTNAME, "2n should be in Jac <n> with exponent 1")
        allOK = False
    if cases[2][1].kind != 'refuted':
        jrtestutils.report(TESTNAME, "2 should not be in Jac <n>")
        allOK = False
    return allOK


def forgedRefutation(**changes):
    "A refutation record claiming 2 is not in Jac <4> over Z, with changes"
    d = {'kind': 'refuted', 'ring': 'Z', 'element': '2', 'generators': ['4'],
        'b': '1', 'trace': {'input': '1', 'remainder': '1', 'quotients': [],
        'basis': [], 'rows': []}, 'sub_certs': []}
    trace = changes.pop('trace', {})
    d.update(changes)
    d['trace'] = dict(d['trace'], **trace)
    return d


def testForgedRefutations():
    """
    2 is in Jac <4> over Z, so no refutation record of it may verify,
    however consistent its own trace is. A genuine refutation keeps
    verifying, and stops when its ideal is changed.
    """
    allOK = True
    forgeries = [
        ("a trace of 7 instead of 1",
            forgedRefutation(trace={'input': '7', 'remainder': '7'})),
        ("an empty basis", forgedRefutation()),
        ("the basis <8>",
            forgedRefutation(trace={'quotients': ['0'], 'basis': ['8'],
                'rows': [['2', '0']]})),
        ("the basis <8> without rows",
            forgedRefutation(trace={'quotients': ['0'], 'basis': ['8'], 'rows': []})),
        ("the basis <3> with a false row",
            forgedRefutation(trace={'quotients': ['0'], 'basis': ['3'],
                'rows': [['1', '0']]}))
    ]
    for (what, d) in forgeries:
        refuted = certio.certFromDict(d)
        if certio.loadedVerify(refuted) or refuted.isSound():
            jrtestutils.report(TESTNAME, "refutation with {} verifies".format(what))
            allOK = False

    (ctx, gens, f) = jrtestutils.parseQuery("Z[x]", "x", "2")
    refuted = MembershipJacOracle(ctx, gens, f).query(ctx.ring.const(2))
    d = certio.certToDict(refuted)
    if d['kind'] != 'refuted' or not d['trace']['rows'] or not certio.loadedVerify(certio.certFromDict(d)):
        jrtestutils.report(TESTNAME, "genuine refutation of 2 modulo x does not verify")
        allOK = False
    for (key, value) in [('generators', ['x^2']), ('element', '3'), ('b', '0')]:
        bad = dict(d)
        bad[key] = value
        if certio.loadedVerify(certio.certFromDict(bad)):
            jrtestutils.report(TESTNAME, "refutation verifies with {} = {}".format(
                key, value))
            allOK = False
    return allOK


def run():
    """
    Run the certificate file tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testReadBack()
    allOK &= testKeyOrder()
    allOK &= testTampered()
    allOK &= testMalformed()
    allOK &= testFiles()
    allOK &= testHugeCoefficients()
    allOK &= testForgedRefutations()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
