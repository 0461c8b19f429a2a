"""
Evaluation of single queries, and of lists of them on a pool of
threads.

A query is one command (member, radical, jac, extract or kdim) on a
ring, an ideal and an element, all in their text forms. The
command line runs one query at a time through :func:`evaluateQuery`,
and ``jacradix batch`` hands a JSON list of them to :func:`runBatch`.

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

import copy
import json
import queue
from concurrent import futures

from . import jacerrors
from . import exprparser
from . import cuitrace
from .idealengine import IdealHandle, radicalMembership
from .certificates import Refuted
from .jacoracle import MembershipJacOracle
from .jacobson import extractInCtx, kdim0WitnessField, kdim0WitnessZmod
from .jacobson import kdim1WitnessZ
from .certio import CertBundle
from .controls import ExtractionControls
from .polyring import BASE_QQ

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_CEILING = 3

CMD_MEMBER = 'member'
CMD_RADICAL = 'radical'
CMD_JAC = 'jac'
CMD_EXTRACT = 'extract'
CMD_KDIM = 'kdim'
QUERY_COMMANDS = (CMD_MEMBER, CMD_RADICAL, CMD_JAC, CMD_EXTRACT, CMD_KDIM)


class Query(object):
    """
    One command on text inputs. For jac, b is a comma separated list
    of the b values to query (default "1"). For kdim, elem is a comma
    separated sequence of elements.
    """
    def __init__(self, command, ring, ideal="", elem="0", b=None, trace=False):
        if command not in QUERY_COMMANDS:
            raise ValueError("Unknown query command '{}'".format(command))
        self.command = command
        self.ring = ring
        self.ideal = ideal
        self.elem = elem
        self.b = b
        self.trace = trace

    @classmethod
    def fromDict(cls, d):
        "As found in a batch file"
        return cls(d['command'], d['ring'], d.get('ideal', ""), d.get('elem', "0"),
            d.get('b'), d.get('trace', False))

    def __repr__(self):
        return "Query({} {} / {} : {})".format(self.command, self.ring,
            self.ideal, self.elem)


class Outcome(object):
    """
    What a query produced: the exit code, the lines to print, and the
    certificate (or Refuted record) if there is one
    """
    def __init__(self, exitCode, lines, cert=None):
        self.exitCode = exitCode
        self.lines = lines
        self.cert = cert
        self.traceLines = []

    def __repr__(self):
        return "Outcome({}, {!r})".format(self.exitCode, self.lines)


def _member(ctx, gens, f, controls):
    res = IdealHandle(ctx, gens).membership(f)
    if res:
        return Outcome(EXIT_YES, ["member: yes"], res)
    return Outcome(EXIT_NO, ["member: no, remainder {}".format(res.trace.remainder)])


def _radical(ctx, gens, f, controls):
    res = radicalMembership(IdealHandle(ctx, gens), f, tighten=controls.tighten,
        prefix=controls.freshVariable)
    if res:
        return Outcome(EXIT_YES, ["radical: yes, exponent {}".format(res.exponent)],
            res)
    return Outcome(EXIT_NO, ["radical: no, remainder {}".format(res.trace.remainder)])


def _jac(ctx, gens, f, controls, bText):
    bValues = exprparser.parseIdeal(bText if bText is not None else "1", ctx)
    oracle = MembershipJacOracle(ctx, gens, f, tracer=controls.tracer, label="Jac")
    answers = []
    for b in bValues:
        res = oracle.query(b)
        if not res:
            return Outcome(EXIT_NO, ["jac: no, witness b={}".format(res.b)], res)
        answers.append(res)
    lines = ["jac: yes, {} queries answered".format(len(answers))]
    if len(answers) == 1:
        return Outcome(EXIT_YES, lines, answers[0])
    return Outcome(EXIT_YES, lines, CertBundle(answers, label="jac"))


def _extract(ctx, gens, f, controls):
    res = extractInCtx(ctx, gens, f, controls)
    if isinstance(res, Refuted):
        return Outcome(EXIT_NO, ["member: no, witness b={}".format(res.b)], res)
    return Outcome(EXIT_YES, ["member: yes, exponent {}".format(res.exponent)], res)


def _kdim(ctx, elements):
    ring = ctx.ring
    if ring.nvars != 0:
        raise jacerrors.UnsupportedTowerError(
            "Krull dimension witnesses need a ring without variables, not {}".format(
                ctx.describe()))
    if ring.base == BASE_QQ:
        kind = 0
    elif ctx.relations:
        kind = 0
    else:
        kind = 1
    if len(elements) != kind + 1:
        raise jacerrors.UnsupportedTowerError(
            "{} needs a sequence of {} element(s)".format(ctx.describe(), kind + 1))
    if kind == 1:
        cert = kdim1WitnessZ(elements[0], elements[1])
    elif ring.base == BASE_QQ:
        cert = kdim0WitnessField(ctx, elements[0])
    else:
        cert = kdim0WitnessZmod(ctx, elements[0])
    exps = ", ".join(str(e) for e in cert.exponents)
    return Outcome(EXIT_YES, ["kdim: yes, exponents {}".format(exps)], cert)


def evaluateQuery(query, controls=None):
    """
    Run one Query. Guardrail aborts, input problems and any other
    jacradix error (or ValueError) are turned into an Outcome with the
    matching exit code and the message on its lines, so that one bad
    query in a batch does not stop the others.
    """
    if controls is None:
        controls = ExtractionControls()
    recorder = None
    if query.trace:
        controls = copy.copy(controls)
        recorder = cuitrace.RecordingTrace()
        controls.setTracer(recorder)

    try:
        ctx = exprparser.parseRing(query.ring)
        if query.command == CMD_KDIM:
            outcome = _kdim(ctx, exprparser.parseIdeal(query.elem, ctx))
        else:
            gens = exprparser.parseIdeal(query.ideal, ctx)
            f = exprparser.parsePolynomial(query.elem, ctx)
            if query.command == CMD_MEMBER:
                outcome = _member(ctx, gens, f, controls)
            elif query.command == CMD_RADICAL:
                outcome = _radical(ctx, gens, f, controls)
            elif query.command == CMD_JAC:
                outcome = _jac(ctx, gens, f, controls, query.b)
            else:
                outcome = _extract(ctx, gens, f, controls)
    except jacerrors.ExponentCeilingError as e:
        outcome = Outcome(EXIT_CEILING, ["aborted: {}".format(e)])
    except (jacerrors.JacRadixError, ValueError) as e:
        outcome = Outcome(EXIT_USAGE, ["error: {}".format(e)])

    if recorder is not None:
        outcome.lines = recorder.lines + outcome.lines
    return outcome


class WorkerErrorRecord(object):
    "An exception raised in a batch worker, with the index of its query"
    def __init__(self, exception, queryNdx):
        self.exception = exception
        self.queryNdx = queryNdx


def batchWorker(indexedQueries, controls, outqueue, exceptionQue):
    """
    Evaluate a sublist of (index, Query) pairs, putting (index, Outcome)
    on the outqueue. Threads do not share the tracer of controls: each
    query writes to its own RecordingTrace, and runBatch passes the
    lines on in input order.
    """
    silent = isinstance(controls.tracer, cuitrace.SilentTrace)
    for (i, query) in indexedQueries:
        try:
            queryControls = controls
            recorder = None
            if not silent and not query.trace:
                queryControls = copy.copy(controls)
                recorder = cuitrace.RecordingTrace()
                queryControls.setTracer(recorder)
            outcome = evaluateQuery(query, queryControls)
            if recorder is not None:
                outcome.traceLines = recorder.lines
            outqueue.put((i, outcome))
        except Exception as e:
            exceptionQue.put(WorkerErrorRecord(e, i))
            return


def runBatch(queries, controls=None):
    """
    Evaluate a list of Query objects on controls.numWorkers threads.
    Returns the list of Outcomes in input order. Whatever the queries
    sent to a trace is written to controls.tracer afterwards, one
    query after another in input order. An unexpected exception in
    any worker is re-raised here.
    """
    if controls is None:
        controls = ExtractionControls()
    numWorkers = max(1, min(controls.numWorkers, len(queries)))
    indexed = list(enumerate(queries))
    allSublists = [indexed[i::numWorkers] for i in range(numWorkers)]

    outqueue = queue.Queue()
    exceptionQue = queue.Queue()
    threadPool = futures.ThreadPoolExecutor(max_workers=numWorkers)
    workerList = [threadPool.submit(batchWorker, sublist, controls, outqueue,
        exceptionQue) for sublist in allSublists]
    futures.wait(workerList)
    threadPool.shutdown()

    if not exceptionQue.empty():
        workerErr = exceptionQue.get()
        raise workerErr.exception

    outcomes = [None] * len(queries)
    while not outqueue.empty():
        (i, outcome) = outqueue.get()
        outcomes[i] = outcome
    for outcome in outcomes:
        controls.tracer.displayLines(outcome.traceLines)
    return outcomes


def readBatchFile(filename):
    """
    Read a JSON list of query objects, each with keys command, ring,
    and optionally ideal, elem, b and trace
    """
    with open(filename, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise jacerrors.ParseError("Bad JSON: {}".format(e.msg), e.pos)
    if not isinstance(data, list):
        raise jacerrors.ParseError("Batch file must hold a JSON list", 0)
    try:
        return [Query.fromDict(d) for d in data]
    except (KeyError, TypeError, ValueError) as e:
        raise jacerrors.ParseError("Bad query in batch file: {}".format(e), 0)
