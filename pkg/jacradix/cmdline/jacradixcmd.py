"""
The jacradix command line program. 

Each query subcommand prints a one line answer, and with --cert writes
the certificate (or refutation record) as JSON. Exit codes are
0 for a positive answer or a verified certificate, 1 for a negative
answer with its witness, 2 for bad input and 3 when a guardrail
(exponent ceiling or search bound) stops the computation.
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
import sys
import argparse

from jacradix import jacerrors
from jacradix import exprparser
from jacradix import certio
from jacradix import bruteoracles
from jacradix import batch
from jacradix.controls import ExtractionControls


def addQueryArgs(p, needIdeal=True):
    p.add_argument("--ring", required=True,
        help="Ring descriptor, e.g. 'Z', 'Z/12[x]', 'Q[x,y]/<x^2>'")
    if needIdeal:
        p.add_argument("--ideal", default="",
            help="Comma separated ideal generators (default is the zero ideal)")
    p.add_argument("--elem", required=True, help="The element to test")
    p.add_argument("--cert", help="Write the certificate to this JSON file")
    p.add_argument("--trace", default=False, action="store_true",
        help="Print every oracle query made on the way")


def getCmdargs(argv=None):
    """
    Get commandline arguments
    """
    p = argparse.ArgumentParser(prog="jacradix",
        description="Certified Jacobson radical and nilradical membership")
    p.add_argument("--ceiling", type=int,
        help="Abort when any exponent exceeds this (default from controls)")
    p.add_argument("--notighten", default=False, action="store_true",
        help="Keep the constructive exponents instead of shrinking them")
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    sp = sub.add_parser("member", help="Ideal membership of elem")
    addQueryArgs(sp)
    sp = sub.add_parser("radical", help="Nilradical membership of elem")
    addQueryArgs(sp)
    sp = sub.add_parser("jac", help="Query the Jacobson radical definition")
    addQueryArgs(sp)
    sp.add_argument("--b", help="Comma separated values of b to query (default 1)")
    sp = sub.add_parser("extract", help="Nilpotency certificate for elem in Jac")
    addQueryArgs(sp)
    sp = sub.add_parser("kdim", help="Krull dimension witness for a sequence")
    addQueryArgs(sp, needIdeal=False)

    sp = sub.add_parser("verify", help="Replay a certificate file")
    sp.add_argument("certfile", help="JSON certificate to check")

    sp = sub.add_parser("batch", help="Run a JSON list of queries")
    sp.add_argument("batchfile", help="JSON file holding a list of queries")
    sp.add_argument("--workers", type=int, default=None,
        help="Number of worker threads (default from controls)")
    sp.add_argument("--certdir",
        help="Directory to write query_N.json certificates into")

    sp = sub.add_parser("brute", help="Independent cross-check oracles")
    bsub = sp.add_subparsers(dest="brutecommand", metavar="oracle")
    bsub.required = True
    bp = bsub.add_parser("radical-z", help="Radical of <n> in Z")
    bp.add_argument("n", type=int)
    bp = bsub.add_parser("squarefree", help="Squarefree part in Q[x]")
    bp.add_argument("--ring", default="Q[x]")
    bp.add_argument("--elem", required=True)
    bp = bsub.add_parser("search", help="Least n <= bound with elem^n in ideal")
    bp.add_argument("--ring", required=True)
    bp.add_argument("--ideal", default="")
    bp.add_argument("--elem", required=True)
    bp.add_argument("--bound", type=int, default=16)
    bp = bsub.add_parser("rabinowitsch", help="Radical membership over Q")
    bp.add_argument("--ring", required=True)
    bp.add_argument("--ideal", default="")
    bp.add_argument("--elem", required=True)

    cmdargs = p.parse_args(argv)
    return cmdargs


def makeControls(cmdargs):
    controls = ExtractionControls()
    if cmdargs.ceiling is not None:
        controls.setExponentCeiling(cmdargs.ceiling)
    if cmdargs.notighten:
        controls.setTighten(False)
    return controls


def printOutcome(outcome, certFile=None):
    for line in outcome.lines:
        print(line)
    if certFile is not None and outcome.cert is not None:
        certio.writeCert(outcome.cert, certFile)
        print("certificate written to {}".format(certFile))


def runVerify(certfile):
    try:
        cert = certio.readCert(certfile)
    except OSError as e:
        print("error: {}".format(e))
        return batch.EXIT_USAGE
    except (jacerrors.JacRadixError, ValueError) as e:
        print("error: {}".format(e))
        return batch.EXIT_USAGE
    result = certio.loadedVerify(cert)
    if result:
        print("verify: Ok ({})".format(cert.kind))
        return batch.EXIT_YES
    print("verify: {!r}".format(result))
    return batch.EXIT_NO


def runBrute(cmdargs):
    which = cmdargs.brutecommand
    if which == "radical-z":
        print("radical: {}".format(bruteoracles.radicalZ(cmdargs.n)))
        return batch.EXIT_YES

    ctx = exprparser.parseRing(cmdargs.ring)
    f = exprparser.parsePolynomial(cmdargs.elem, ctx)
    if which == "squarefree":
        print("squarefree: {}".format(bruteoracles.squarefreePart(f)))
        return batch.EXIT_YES

    gens = exprparser.parseIdeal(cmdargs.ideal, ctx)
    if which == "search":
        res = bruteoracles.boundedSearch(ctx, gens, f, cmdargs.bound)
        if res.exceeded:
            print("search: bound {} exceeded".format(cmdargs.bound))
            return batch.EXIT_CEILING
        note = "" if res.independent else " (decided by the jacradix engine)"
        print("search: yes, exponent {}{}".format(res.exponent, note))
        return batch.EXIT_YES

    if bruteoracles.rabinowitschQ(ctx, gens, f):
        print("rabinowitsch: yes")
        return batch.EXIT_YES
    print("rabinowitsch: no")
    return batch.EXIT_NO


def runBatchFile(cmdargs, controls):
    if cmdargs.workers is not None:
        controls.setNumWorkers(cmdargs.workers)
    queries = batch.readBatchFile(cmdargs.batchfile)
    outcomes = batch.runBatch(queries, controls)
    if cmdargs.certdir is not None:
        os.makedirs(cmdargs.certdir, exist_ok=True)

    worst = batch.EXIT_YES
    for (i, (query, outcome)) in enumerate(zip(queries, outcomes)):
        print("[{}] {} {}".format(i, query.command, query.ring))
        certFile = None
        if cmdargs.certdir is not None:
            certFile = os.path.join(cmdargs.certdir, "query_{}.json".format(i))
        printOutcome(outcome, certFile)
        worst = max(worst, outcome.exitCode)
    return worst


def main(argv=None):
    """
    Main routine for calling from command line. Returns the exit code.
    """
    cmdargs = getCmdargs(argv)
    try:
        controls = makeControls(cmdargs)
        if cmdargs.command == "verify":
            return runVerify(cmdargs.certfile)
        if cmdargs.command == "brute":
            return runBrute(cmdargs)
        if cmdargs.command == "batch":
            return runBatchFile(cmdargs, controls)

        query = batch.Query(cmdargs.command, cmdargs.ring,
            getattr(cmdargs, 'ideal', ""), cmdargs.elem, getattr(cmdargs, 'b', None),
            cmdargs.trace)
        outcome = batch.evaluateQuery(query, controls)
        printOutcome(outcome, cmdargs.cert)
        return outcome.exitCode
    except (jacerrors.ParseError, jacerrors.UnsupportedTowerError,
            jacerrors.RingMismatchError, ValueError, OSError) as e:
        print("error: {}".format(e))
        return batch.EXIT_USAGE
    except jacerrors.ExponentCeilingError as e:
        print("aborted: {}".format(e))
        return batch.EXIT_CEILING
    except jacerrors.JacRadixError as e:
        print("error: {}".format(e))
        return batch.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
