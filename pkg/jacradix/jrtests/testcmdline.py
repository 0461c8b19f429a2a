"""
The jacradix command line: answers, exit codes, certificate files
and batch mode
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

import io
import os
import json
import tempfile
import contextlib

from jacradix import batch
from jacradix import cuitrace
from jacradix import jacerrors
from jacradix.cmdline import jacradixcmd

from jacradix.jrtests import jrtestutils

TESTNAME = 'TESTCMDLINE'


def runMain(argv):
    """
    Run the command line main routine, returning (exitCode, lines)
    """
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        exitCode = jacradixcmd.main(argv)
    return (exitCode, out.getvalue().splitlines())


def checkRun(argv, exitCode, firstLine=None, lastLine=None):
    """
    Run argv and compare the exit code, and optionally the first or
    last line printed
    """
    (code, lines) = runMain(argv)
    ok = (code == exitCode)
    if firstLine is not None:
        ok = ok and len(lines) > 0 and lines[0] == firstLine
    if lastLine is not None:
        ok = ok and len(lines) > 0 and lines[-1] == lastLine
    if not ok:
        jrtestutils.report(TESTNAME, "{} gave exit code {} and {}".format(argv, code,
            lines))
    return ok


def testQueries():
    allOK = True
    allOK &= checkRun(["member", "--ring", "Z/12[x]", "--ideal", "x^2",
        "--elem", "13*x^3"], batch.EXIT_YES, "member: yes")
    allOK &= checkRun(["member", "--ring", "Z", "--ideal", "4", "--elem", "2"],
        batch.EXIT_NO, "member: no, remainder 2")
    allOK &= checkRun(["radical", "--ring", "Q[x]", "--ideal", "x^3", "--elem", "x"],
        batch.EXIT_YES, "radical: yes, exponent 3")
    allOK &= checkRun(["jac", "--ring", "Z", "--ideal", "4", "--elem", "2",
        "--b", "1, 3"], batch.EXIT_YES, "jac: yes, 2 queries answered")
    allOK &= checkRun(["jac", "--ring", "Z", "--ideal", "5", "--elem", "2",
        "--b", "3"], batch.EXIT_NO, "jac: no, witness b=3")
    allOK &= checkRun(["extract", "--ring", "Z", "--ideal", "4", "--elem", "2"],
        batch.EXIT_YES, "member: yes, exponent 2")
    allOK &= checkRun(["kdim", "--ring", "Z", "--elem", "12, 6"], batch.EXIT_YES,
        "kdim: yes, exponents 1, 2")
    allOK &= checkRun(["kdim", "--ring", "Z/12", "--elem", "2"], batch.EXIT_YES,
        "kdim: yes, exponents 2")

    (code, lines) = runMain(["extract", "--ring", "Z[x]", "--ideal", "x",
        "--elem", "2"])
    if code != batch.EXIT_NO or not lines or not lines[0].startswith("member: no, witness b="):
        jrtestutils.report(TESTNAME, "refuted extraction gave {} and {}".format(code,
            lines))
        allOK = False

    (code, lines) = runMain(["extract", "--ring", "Z", "--ideal", "4", "--elem", "2",
        "--trace"])
    if (code != batch.EXIT_YES or len(lines) < 2 or
            not any(line.startswith("Query:") for line in lines) or
            lines[-1] != "member: yes, exponent 2"):
        jrtestutils.report(TESTNAME, "traced extraction gave {}".format(lines))
        allOK = False
    return allOK


def testErrors():
    """
    Bad input gives exit code 2 and a guardrail abort exit code 3
    """
    allOK = True
    (code, lines) = runMain(["member", "--ring", "R[x]", "--elem", "x"])
    if code != batch.EXIT_USAGE or not lines or not lines[0].startswith("error:"):
        jrtestutils.report(TESTNAME, "bad ring gave {} and {}".format(code, lines))
        allOK = False
    (code, lines) = runMain(["member", "--ring", "Z[x]", "--elem", "x +"])
    if code != batch.EXIT_USAGE:
        jrtestutils.report(TESTNAME, "bad element gave {}".format(code))
        allOK = False
    (code, lines) = runMain(["kdim", "--ring", "Z", "--elem", "2"])
    if code != batch.EXIT_USAGE:
        jrtestutils.report(TESTNAME, "kdim of one integer gave {}".format(code))
        allOK = False
    (code, lines) = runMain(["--ceiling", "1", "extract", "--ring", "Q[x]",
        "--ideal", "x^3", "--elem", "x"])
    if code != batch.EXIT_CEILING or not lines or not lines[0].startswith("aborted:"):
        jrtestutils.report(TESTNAME, "ceiling gave {} and {}".format(code, lines))
        allOK = False
    return allOK


def testCertFiles():
    """
    --cert writes a file that verify accepts, and a tampered copy is
    rejected
    """
    allOK = True
    with tempfile.TemporaryDirectory() as tmpdir:
        certFile = os.path.join(tmpdir, "x.json")
        allOK &= checkRun(["extract", "--ring", "Q[x]", "--ideal", "x^3", "--elem", "x",
            "--cert", certFile], batch.EXIT_YES, "member: yes, exponent 3",
            "certificate written to {}".format(certFile))
        allOK &= checkRun(["verify", certFile], batch.EXIT_YES,
            "verify: Ok (nilpotency)")

        with open(certFile) as f:
            d = json.load(f)
        d['cofactors'][0] = "({}) + 1".format(d['cofactors'][0])
        badFile = os.path.join(tmpdir, "bad.json")
        with open(badFile, 'w') as f:
            json.dump(d, f)
        (code, lines) = runMain(["verify", badFile])
        if code != batch.EXIT_NO:
            jrtestutils.report(TESTNAME, "tampered certificate gave {} and {}".format(
                code, lines))
            allOK = False

        refutedFile = os.path.join(tmpdir, "refuted.json")
        runMain(["extract", "--ring", "Z[x]", "--ideal", "x", "--elem", "2",
            "--cert", refutedFile])
        allOK &= checkRun(["verify", refutedFile], batch.EXIT_YES,
            "verify: Ok (refuted)")

        bundleFile = os.path.join(tmpdir, "bundle.json")
        runMain(["jac", "--ring", "Z", "--ideal", "4", "--elem", "2", "--b", "1, 3",
            "--cert", bundleFile])
        allOK &= checkRun(["verify", bundleFile], batch.EXIT_YES, "verify: Ok (bundle)")

        (code, lines) = runMain(["verify", os.path.join(tmpdir, "missing.json")])
        if code != batch.EXIT_USAGE:
            jrtestutils.report(TESTNAME, "missing file gave {}".format(code))
            allOK = False
    return allOK


def testBrute():
    allOK = True
    allOK &= checkRun(["brute", "radical-z", "12"], batch.EXIT_YES, "radical: 6")
    allOK &= checkRun(["brute", "squarefree", "--elem", "x^3 - x^2"], batch.EXIT_YES,
        "squarefree: x^2 - x")
    allOK &= checkRun(["brute", "search", "--ring", "Q[x]", "--ideal", "x^2",
        "--elem", "x", "--bound", "8"], batch.EXIT_YES, "search: yes, exponent 2")
    allOK &= checkRun(["brute", "search", "--ring", "Q[x]", "--ideal", "x^2",
        "--elem", "x + 1", "--bound", "3"], batch.EXIT_CEILING, "search: bound 3 exceeded")
    allOK &= checkRun(["brute", "rabinowitsch", "--ring", "Q[x, y]", "--ideal",
        "x^2, y^3", "--elem", "x*y"], batch.EXIT_YES, "rabinowitsch: yes")
    allOK &= checkRun(["brute", "search", "--ring", "Z[x]", "--ideal", "4, x^2",
        "--elem", "2*x", "--bound", "8"], batch.EXIT_YES,
        "search: yes, exponent 2 (decided by the jacradix engine)")
    allOK &= checkRun(["brute", "rabinowitsch", "--ring", "Q[x]", "--ideal",
        "x^2 - 1", "--elem", "x"], batch.EXIT_NO, "rabinowitsch: no")
    return allOK


def testBatch():
    """
    A batch file run on two workers prints every outcome in input
    order, writes the certificates and returns the worst exit code
    """
    allOK = True
    queries = [
        {'command': 'extract', 'ring': 'Z', 'ideal': '4', 'elem': '2'},
        {'command': 'member', 'ring': 'Z', 'ideal': '4', 'elem': '2'},
        {'command': 'kdim', 'ring': 'Z', 'elem': '12, 6'},
        {'command': 'radical', 'ring': 'Q[x]', 'ideal': 'x^2', 'elem': 'x'},
        {'command': 'extract', 'ring': 'Q[x]', 'ideal': 'x^2', 'elem': 'x', 'trace': True}
    ]
    with tempfile.TemporaryDirectory() as tmpdir:
        batchFile = os.path.join(tmpdir, "queries.json")
        with open(batchFile, 'w') as f:
            json.dump(queries, f)
        certDir = os.path.join(tmpdir, "certs")
        (code, lines) = runMain(["batch", batchFile, "--workers", "2",
            "--certdir", certDir])
        if code != batch.EXIT_NO:
            jrtestutils.report(TESTNAME, "batch exit code {}".format(code))
            allOK = False

        headers = [line for line in lines if line.startswith("[")]
        expected = ["[{}] {} {}".format(i, q['command'], q['ring']) for (i, q) in
            enumerate(queries)]
        if headers != expected:
            jrtestutils.report(TESTNAME, "batch headers {}".format(headers))
            allOK = False

        for i in [0, 2, 3, 4]:
            certFile = os.path.join(certDir, "query_{}.json".format(i))
            if not os.path.exists(certFile):
                jrtestutils.report(TESTNAME, "no certificate for query {}".format(i))
                allOK = False
            else:
                allOK &= checkRun(["verify", certFile], batch.EXIT_YES)
        if os.path.exists(os.path.join(certDir, "query_1.json")):
            jrtestutils.report(TESTNAME, "certificate written for a non-member")
            allOK = False

    outcomes = batch.runBatch([batch.Query.fromDict(q) for q in queries],
        jrtestutils.quietControls())
    codes = [o.exitCode for o in outcomes]
    if codes != [0, 1, 0, 0, 0]:
        jrtestutils.report(TESTNAME, "runBatch exit codes {}".format(codes))
        allOK = False
    return allOK


class FailingTrace(cuitrace.SilentTrace):
    "A tracer that fails on the first oracle query it is shown"
    def displayQuery(self, oracle, b, result):
        raise jacerrors.VerificationError("tracer gave up at b={}".format(b))


def testQueryErrors():
    """
    A jacradix error from deep inside a query becomes an error outcome,
    and the rest of a batch still runs
    """
    allOK = True
    controls = jrtestutils.quietControls()
    controls.setTracer(FailingTrace())
    query = batch.Query('jac', 'Z', '4', '2')
    outcome = batch.evaluateQuery(query, controls)
    if outcome.exitCode != batch.EXIT_USAGE or not outcome.lines[0].startswith("error:"):
        jrtestutils.report(TESTNAME, "failing tracer gave {!r}".format(outcome))
        allOK = False

    queries = [query, batch.Query('member', 'Z', '4', '8'), batch.Query('jac', 'Z',
        '4', '2', b='1, 3')]
    controls.setNumWorkers(2)
    codes = [o.exitCode for o in batch.runBatch(queries, controls)]
    if codes != [batch.EXIT_USAGE, batch.EXIT_YES, batch.EXIT_USAGE]:
        jrtestutils.report(TESTNAME, "batch with a failing tracer gave {}".format(codes))
        allOK = False
    return allOK


def testBatchTraces():
    """
    A batch on several workers sends its trace lines to the shared
    tracer one query at a time, in input order, exactly as running
    the queries one after another would
    """
    allOK = True
    queries = [
        batch.Query('extract', 'Z', '12', '6'),
        batch.Query('extract', 'Q[x]', 'x^2', 'x'),
        batch.Query('jac', 'Z/8[x]', '', '2', b='1, x, 3'),
        batch.Query('extract', 'Z[x]', 'x', '2'),
        batch.Query('extract', 'Z/12[x]/<x^2>', '4', '2 + x'),
        batch.Query('member', 'Q[x, y]', 'x^2, y', 'x^3')
    ]
    expected = []
    for query in queries:
        recorder = cuitrace.RecordingTrace()
        controls = jrtestutils.quietControls()
        controls.setTracer(recorder)
        batch.evaluateQuery(query, controls)
        expected.extend(recorder.lines)
    if len(expected) == 0:
        jrtestutils.report(TESTNAME, "the queries traced nothing")
        allOK = False

    for numWorkers in [1, 3]:
        shared = cuitrace.RecordingTrace()
        controls = jrtestutils.quietControls()
        controls.setTracer(shared)
        controls.setNumWorkers(numWorkers)
        outcomes = batch.runBatch(queries, controls)
        if shared.lines != expected:
            jrtestutils.report(TESTNAME,
                "{} workers traced {} lines, not the {} expected in order".format(
                numWorkers, len(shared.lines), len(expected)))
            allOK = False
        if shared.queries:
            jrtestutils.report(TESTNAME, "workers wrote to the shared tracer directly")
            allOK = False
        if any(o.exitCode == batch.EXIT_USAGE for o in outcomes):
            jrtestutils.report(TESTNAME, "batch outcomes {}".format(outcomes))
            allOK = False
    return allOK


def run():
    """
    Run the command line tests
    """
    jrtestutils.reportStart(TESTNAME)
    allOK = True

    allOK &= testQueries()
    allOK &= testErrors()
    allOK &= testCertFiles()
    allOK &= testBrute()
    allOK &= testBatch()
    allOK &= testQueryErrors()
    allOK &= testBatchTraces()

    if allOK:
        jrtestutils.report(TESTNAME, "Passed")

    return allOK
