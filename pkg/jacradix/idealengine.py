"""
Ideal membership with cofactor tracking.

An :class:`IdealHandle` holds the user's generators in a
:class:`jacradix.polyring.RingCtx`, and lazily completes a basis of
the ideal they generate together with the ctx's relations. Every
basis element carries a transform row expressing it as an explicit
combination of the generators followed by the relations, so that any
membership found by reduction can be turned back into a certificate
against the original generators. 

Which engine is used depends only on the ring:

    * EuclidZ                  - no variables, integer coefficients
    * EuclidUnivariateField    - at most one variable over the rationals
    * BuchbergerField          - several variables over the rationals
    * StrongGroebnerZ          - variables over the integers

The two Euclid engines run the extended Euclidean recurrence. The
other two run the same pair-completion loop; over the integers it
adds gcd-polynomials next to S-polynomials and reduces coefficients
with nonnegative remainders, which gives canonical normal forms. 

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

import heapq
import threading
from fractions import Fraction

from . import jacerrors
from . import exactarith
from . import certificates
from .polyring import BASE_ZZ, RingCtx
from .polyring import expAdd, expSub, expDivides, expLcm

ENGINE_EUCLIDZ = 'EuclidZ'
ENGINE_EUCLIDFIELD = 'EuclidUnivariateField'
ENGINE_BUCHBERGERFIELD = 'BuchbergerField'
ENGINE_STRONGGROEBNERZ = 'StrongGroebnerZ'

DEFAULT_FRESHVAR = 'T_'


def chooseEngine(ring):
    """
    Pick the engine for a PolyRing
    """
    if ring.base == BASE_ZZ:
        if ring.nvars == 0:
            return ENGINE_EUCLIDZ
        return ENGINE_STRONGGROEBNERZ
    if ring.nvars <= 1:
        return ENGINE_EUCLIDFIELD
    return ENGINE_BUCHBERGERFIELD


class NormalFormTrace(object):
    """
    Record of a reduction: input = sum(quotients[k] * basis[k]) + remainder,
    with the remainder irreducible against the basis.

    rows, when known, gives each basis element as a combination of the
    sources of the ideal (generators followed by relations), which is
    what ties the basis to a particular ideal.
    """
    def __init__(self, inputPoly, remainder, quotients, basis, rows=None):
        self.input = inputPoly
        self.remainder = remainder
        self.quotients = quotients
        self.basis = basis
        self.rows = rows

    def replays(self):
        "Check the defining identity by plain arithmetic"
        total = self.remainder
        for (q, b) in zip(self.quotients, self.basis):
            total = total + q * b
        return total == self.input

    def isIrreducible(self):
        """
        True if no term of the remainder is reducible by a basis
        leading term. Over ZZ, reducible means the monomial is divisible
        and the coefficient lies outside [0, lc).
        """
        ring = self.remainder.ring
        for (exp, c) in self.remainder.terms.items():
            for b in self.basis:
                lm = b.leadingExp()
                lc = b.leadingCoeff()
                if expDivides(lm, exp):
                    if ring.base != BASE_ZZ:
                        return False
                    if not (0 <= c < lc):
                        return False
        return True

    def basisProblem(self, sources):
        """
        Check that the basis is a Groebner basis of exactly the ideal
        generated by sources: every row replays to its basis element,
        every source reduces to zero, and every pair of basis elements
        reduces to zero. Returns None when all of that holds, otherwise
        a description of the first failure.
        """
        ring = self.remainder.ring
        if self.rows is None or len(self.rows) != len(self.basis):
            return "no membership row for each basis element"
        for (k, (b, row)) in enumerate(zip(self.basis, self.rows)):
            if b.isZero():
                return "basis element {} is zero".format(k)
            if len(row) != len(sources):
                return "row {} has {} entries for {} sources".format(k, len(row),
                    len(sources))
            total = ring.zero()
            for (c, s) in zip(row, sources):
                total = total + c * s
            if total != b:
                return "row {} does not give basis element {}".format(k, b)
        for (k, s) in enumerate(sources):
            (_, rem) = reduceFully(ring, s, self.basis)
            if not rem.isZero():
                return "source {} is not generated by the basis".format(k)
        if not isGroebnerBasis(ring, self.basis):
            return "basis fails the pair criterion"
        return None

    def __str__(self):
        return "remainder {}".format(self.remainder)


class NotMember(object):
    "Negative membership answer; trace holds the nonzero remainder"
    def __init__(self, trace):
        self.trace = trace

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotMember({})".format(self.trace.remainder)


class NotInRadical(NotMember):
    "Negative radical membership answer"
    def __repr__(self):
        return "NotInRadical({})".format(self.trace.remainder)


class NotUnit(NotMember):
    "Negative unit answer"
    def __repr__(self):
        return "NotUnit({})".format(self.trace.remainder)


def reduceFully(ring, p, basis):
    """
    Fully reduce p against the list of basis polynomials. 
    Returns (quotients, remainder) with p = sum(q*b) + remainder.

    Over ZZ the divisor chosen for a term is the one with the smallest
    leading coefficient among those whose leading monomial divides
    the term (lowest index on ties), and the coefficient is replaced by
    its nonnegative remainder. Over QQ basis elements are monic and
    terms are cancelled outright.
    """
    isZZ = (ring.base == BASE_ZZ)
    key = ring.monomialKey
    leads = [(b.leadingExp(), b.leadingCoeff()) for b in basis]
    qTerms = [{} for _ in basis]
    work = dict(p.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        best = None
        for (idx, (lm, lc)) in enumerate(leads):
            if expDivides(lm, m):
                if best is None or lc < leads[best][1]:
                    best = idx
                if not isZZ:
                    break
        if best is None:
            rem[m] = c
            del work[m]
            continue

        (lm, lc) = leads[best]
        if isZZ:
            r = c % lc
            q = (c - r) // lc
        else:
            q = c / lc
            r = 0
        if q != 0:
            shift = expSub(m, lm)
            qt = qTerms[best]
            v = qt.get(shift, 0) + q
            if v == 0:
                qt.pop(shift, None)
            else:
                qt[shift] = v
            for (e, bc) in basis[best].terms.items():
                e2 = expAdd(e, shift)
                v = work.get(e2, 0) - q * bc
                if v == 0:
                    work.pop(e2, None)
                else:
                    work[e2] = v
        if r != 0:
            rem[m] = r
            del work[m]

    quotients = [ring.fromTerms(qt) for qt in qTerms]
    return (quotients, ring.fromTerms(rem))


def combineRows(ring, rows, multipliers, width):
    """
    sum(multipliers[k] * rows[k]), as a single row of the given width
    """
    result = [ring.zero()] * width
    for (q, row) in zip(multipliers, rows):
        if q.isZero():
            continue
        for i in range(width):
            if not row[i].isZero():
                result[i] = result[i] + q * row[i]
    return result


def pairCombinations(ring, fi, fj):
    """
    The combinations of fi and fj that a Groebner basis must reduce to
    zero, as tuples (ui, si, uj, sj) standing for
    si*x^ui*fi + sj*x^uj*fj. Over ZZ that is the gcd-polynomial (when
    neither leading coefficient divides the other) and the
    S-polynomial. Over QQ it is the S-polynomial, skipped when the
    leading monomials are coprime.
    """
    (lmi, lmj) = (fi.leadingExp(), fj.leadingExp())
    (lci, lcj) = (fi.leadingCoeff(), fj.leadingCoeff())
    lcm = expLcm(lmi, lmj)
    (ui, uj) = (expSub(lcm, lmi), expSub(lcm, lmj))
    result = []
    if ring.base == BASE_ZZ:
        (g, s, t) = exactarith.gcdExt(lci, lcj)
        if g != lci and g != lcj:
            result.append((ui, s, uj, t))
        c = lci * lcj // g
        result.append((ui, c // lci, uj, -(c // lcj)))
    elif expAdd(lmi, lmj) != lcm:
        result.append((ui, Fraction(1) / lci, uj, -Fraction(1) / lcj))
    return result


def isGroebnerBasis(ring, basis):
    "True if every pair combination of basis reduces to zero against it"
    for j in range(len(basis)):
        for i in range(j):
            for (ui, si, uj, sj) in pairCombinations(ring, basis[i], basis[j]):
                poly = basis[i].mulTerm(ui, si) + basis[j].mulTerm(uj, sj)
                (_, rem) = reduceFully(ring, poly, basis)
                if not rem.isZero():
                    return False
    return True


class IdealHandle(object):
    """
    The ideal generated by generators plus ctx.relations, in the ring
    of ctx. Completion is lazy and guarded by a lock; a completed handle
    is immutable.

    After completion:
        * **basis**   list of basis polynomials
        * **rows**    for each basis element, its transform row over 
          sources = generators + ctx.relations
        * **engine**  the engine name

    """
    def __init__(self, ctx, generators):
        self.ctx = ctx
        ring = ctx.ring
        self.generators = [ring.convert(g) for g in generators]
        self.sources = self.generators + list(ctx.relations)
        self.engine = chooseEngine(ring)
        self.basis = None
        self.rows = None
        self.originCerts = None
        self._seedCount = 0
        self._lock = threading.Lock()

    def __repr__(self):
        return "IdealHandle({}, [{}])".format(self.ctx.describe(),
            ", ".join(str(g) for g in self.generators))

    def complete(self):
        """
        Complete the basis if that has not been done already. Returns self.
        """
        with self._lock:
            if self.basis is None:
                if self.engine == ENGINE_EUCLIDZ:
                    self._completeEuclidZ()
                elif self.engine == ENGINE_EUCLIDFIELD:
                    self._completeEuclidField()
                else:
                    self._completeBuchberger()
        return self

    def _unitRow(self, i):
        ring = self.ctx.ring
        row = [ring.zero()] * len(self.sources)
        row[i] = ring.one()
        return row

    def _completeEuclidZ(self):
        ring = self.ctx.ring
        width = len(self.sources)
        g = 0
        row = [ring.zero()] * width
        for (i, src) in enumerate(self.sources):
            x = src.constantValue()
            if x == 0:
                continue
            (gNew, s, t) = exactarith.gcdExt(g, x)
            row = [ring.const(s) * r for r in row]
            row[i] = row[i] + ring.const(t)
            g = gNew
        if g == 0:
            (self.basis, self.rows) = ([], [])
        else:
            (self.basis, self.rows) = ([ring.const(g)], [row])

    def _completeEuclidField(self):
        """
        Extended Euclid on univariate polynomials over QQ, folding one
        generator at a time into the running gcd.
        """
        ring = self.ctx.ring
        width = len(self.sources)
        g = ring.zero()
        gRow = [ring.zero()] * width
        for (i, src) in enumerate(self.sources):
            if src.isZero():
                continue
            (a, aRow) = (g, gRow)
            (b, bRow) = (src, self._unitRow(i))
            while not b.isZero():
                ((q,), r) = reduceFully(ring, a, [b.monic()])
                q = q * ring.const(1 / b.leadingCoeff())
                rRow = [x - q * y for (x, y) in zip(aRow, bRow)]
                (a, aRow, b, bRow) = (b, bRow, r, rRow)
            g = a
            gRow = aRow
        if g.isZero():
            (self.basis, self.rows) = ([], [])
        else:
            inv = ring.const(1 / g.leadingCoeff())
            (self.basis, self.rows) = ([g * inv], [[inv * r for r in gRow]])

    def _normalise(self, poly, row):
        ring = self.ctx.ring
        lc = poly.leadingCoeff()
        if ring.base == BASE_ZZ:
            if lc < 0:
                return (-poly, [-r for r in row])
            return (poly, row)
        inv = ring.const(1 / lc)
        return (poly * inv, [inv * r for r in row])

    def _isUnit(self, poly):
        if not poly.isConstant():
            return False
        if self.ctx.ring.base == BASE_ZZ:
            return abs(poly.constantValue()) == 1
        return True

    def _pairPolys(self, basis, rows, i, j):
        """
        The pair combinations of basis elements i and j, each with its row
        """
        ring = self.ctx.ring
        (fi, fj) = (basis[i], basis[j])
        result = []
        for (ui, si, uj, sj) in pairCombinations(ring, fi, fj):
            poly = fi.mulTerm(ui, si) + fj.mulTerm(uj, sj)
            row = [r1.mulTerm(ui, si) + r2.mulTerm(uj, sj)
                for (r1, r2) in zip(rows[i], rows[j])]
            result.append((poly, row))
        return result

    def _completeBuchberger(self):
        """
        Pair completion, shared by BuchbergerField and StrongGroebnerZ.
        Pairs are processed smallest lcm first, ties in creation order,
        so the result is deterministic. 
        """
        ring = self.ctx.ring
        width = len(self.sources)
        nGens = len(self.generators)
        basis = []
        rows = []
        pairs = []
        state = {'seq': 0, 'unit': None}

        def addElement(poly, row, isSeed):
            (poly, row) = self._normalise(poly, row)
            if self._isUnit(poly):
                state['unit'] = (poly, row)
                return
            idx = len(basis)
            for j in range(idx):
                if isSeed and j < self._seedCount:
                    continue
                lcm = expLcm(basis[j].leadingExp(), poly.leadingExp())
                heapq.heappush(pairs, (ring.monomialKey(lcm), state['seq'], j, idx))
                state['seq'] += 1
            basis.append(poly)
            rows.append(row)

        def reduceAndAdd(poly, row):
            (quotients, rem) = reduceFully(ring, poly, basis)
            if rem.isZero():
                return
            sub = combineRows(ring, rows, quotients, width)
            newRow = [r - s for (r, s) in zip(row, sub)]
            addElement(rem, newRow, False)

        # The relations' own completed basis is a valid starting point
        if self.ctx.relations:
            relHandle = self.ctx.relationHandle.complete()
            for (b, relRow) in zip(relHandle.basis, relHandle.rows):
                row = [ring.zero()] * nGens + list(relRow)
                addElement(b, row, True)
                self._seedCount = len(basis)
                if state['unit'] is not None:
                    break

        for i in range(nGens):
            if state['unit'] is not None:
                break
            if not self.generators[i].isZero():
                reduceAndAdd(self.generators[i], self._unitRow(i))

        while pairs and state['unit'] is None:
            (key, seq, i, j) = heapq.heappop(pairs)
            for (poly, row) in self._pairPolys(basis, rows, i, j):
                reduceAndAdd(poly, row)
                if state['unit'] is not None:
                    break

        if state['unit'] is not None:
            (unit, row) = state['unit']
            if unit.constantValue() != 1:
                (unit, row) = (-unit, [-r for r in row])
            (self.basis, self.rows) = ([unit], [row])
            return

        (basis, rows) = self._minimise(basis, rows)
        (self.basis, self.rows) = self._interreduce(basis, rows)

    def _interreduce(self, basis, rows):
        """
        Over QQ, reduce every element of a minimal basis by the others,
        giving the reduced basis. Leading terms do not change, so the
        result is still a basis of the same ideal, and its coefficients
        (and those of the rows) stay smaller in later reductions.
        """
        ring = self.ctx.ring
        if ring.base == BASE_ZZ or len(basis) < 2:
            return (basis, rows)
        width = len(self.sources)
        basis = list(basis)
        rows = list(rows)
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            otherRows = rows[:i] + rows[i + 1:]
            (quotients, rem) = reduceFully(ring, basis[i], others)
            if rem == basis[i]:
                continue
            sub = combineRows(ring, otherRows, quotients, width)
            basis[i] = rem
            rows[i] = [r - s for (r, s) in zip(rows[i], sub)]
        return (basis, rows)

    def _minimise(self, basis, rows):
        """
        Drop every element whose leading term is divisible by that of
        another element (over ZZ the leading coefficient must divide
        as well). Of two identical leading terms the earlier one stays.
        """
        isZZ = (self.ctx.ring.base == BASE_ZZ)
        keep = []
        for i in range(len(basis)):
            (lmi, lci) = (basis[i].leadingExp(), basis[i].leadingCoeff())
            redundant = False
            for j in range(len(basis)):
                if j == i:
                    continue
                (lmj, lcj) = (basis[j].leadingExp(), basis[j].leadingCoeff())
                if expDivides(lmj, lmi) and (not isZZ or lci % lcj == 0):
                    if lmj == lmi and lcj == lci and j > i:
                        continue
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        return ([basis[i] for i in keep], [rows[i] for i in keep])

    def normalForm(self, p):
        """
        Reduce p against the completed basis. Returns a NormalFormTrace.
        """
        self.complete()
        ring = self.ctx.ring
        p = ring.convert(p)
        (quotients, rem) = reduceFully(ring, p, self.basis)
        return NormalFormTrace(p, rem, quotients, self.basis, self.rows)

    def containsUnit(self):
        self.complete()
        return len(self.basis) == 1 and self.basis[0] == 1

    def membership(self, t):
        """
        Returns a :class:`jacradix.certificates.MembershipCert` for t
        against the generators (with relation cofactors for the ctx
        relations), or NotMember carrying the normal form trace.
        """
        trace = self.normalForm(t)
        if not trace.remainder.isZero():
            return NotMember(trace)
        ring = self.ctx.ring
        row = combineRows(ring, self.rows, trace.quotients, len(self.sources))
        nGens = len(self.generators)
        return certificates.MembershipCert(self.ctx, trace.input, self.generators,
            row[:nGens], row[nGens:])


def complete(ctx, generators):
    """
    Build and complete an IdealHandle
    """
    return IdealHandle(ctx, generators).complete()


def membership(handle, t):
    return handle.membership(t)


def quotientNF(ctx, p):
    """
    Canonical representative of p in the quotient ring ctx
    """
    return ctx.nf(p)


def contraction(handle, keepVars):
    """
    The intersection of the ideal with the subring in keepVars.
    
    Computed from a basis under the block order which eliminates the
    other variables: the basis elements free of them generate the 
    contraction. Returns an IdealHandle over the free subring ctx, whose
    originCerts attribute holds, for each generator, a MembershipCert
    back into the original generators (and relations). 
    """
    ring = handle.ctx.ring
    for v in keepVars:
        ring.varIndex(v)
    elim = [v for v in ring.varNames if v not in keepVars]
    subRing = ring.subRing(keepVars)
    nGens = len(handle.generators)

    elimRing = ring.eliminationRing(elim)
    elimHandle = IdealHandle(RingCtx(elimRing),
        [elimRing.convert(s) for s in handle.sources]).complete()

    contracted = []
    certs = []
    for (b, row) in zip(elimHandle.basis, elimHandle.rows):
        if any(b.usesVar(v) for v in elim):
            continue
        target = ring.convert(b)
        cofs = [ring.convert(c) for c in row]
        cert = certificates.MembershipCert(handle.ctx, target, handle.generators,
            cofs[:nGens], cofs[nGens:])
        contracted.append(subRing.convert(b))
        certs.append(cert)

    result = IdealHandle(RingCtx(subRing), contracted)
    result.originCerts = certs
    return result


def freshVariable(ring, prefix=DEFAULT_FRESHVAR):
    "A variable name not already used in ring"
    name = prefix
    i = 0
    while ring.hasVar(name):
        i += 1
        name = "{}{}".format(prefix, i)
    return name


def radicalMembership(handle, a, tighten=True, prefix=DEFAULT_FRESHVAR):
    """
    Rabinowitsch test of a in the radical of the ideal. Adjoins a fresh
    variable T and tests 1 in <I, 1 - a*T>. On success the combination
    is turned into an explicit power a^D in I by substituting T = 1/a
    and clearing denominators with a^D, where D bounds the T-degree of
    the cofactors. With tighten, the smallest exponent k <= D with a^k
    in I is reported instead. 

    Returns a NilpotencyCert or NotInRadical.
    """
    ctx = handle.ctx
    ring = ctx.ring
    a = ring.convert(a)
    if a.isZero():
        body = certificates.MembershipCert(ctx, ring.zero(), handle.generators,
            [ring.zero()] * len(handle.generators))
        return certificates.NilpotencyCert(a, 1, body)

    tName = freshVariable(ring, prefix)
    bigRing = ring.extend([tName])
    bigCtx = RingCtx(bigRing, [bigRing.convert(r) for r in ctx.relations])
    aBig = bigRing.convert(a)
    gens = [bigRing.convert(g) for g in handle.generators]
    gens.append(bigRing.one() - aBig * bigRing.var(tName))
    res = IdealHandle(bigCtx, gens).membership(bigRing.one())
    if not res:
        return NotInRadical(res.trace)

    cofs = res.cofactors[:-1] + res.relationCofactors
    D = max([max(c.degreeIn(tName), 0) for c in cofs] + [0])
    aPowers = [ring.one()]
    for k in range(D):
        aPowers.append(aPowers[-1] * a)

    def clear(c):
        total = ring.zero()
        for (k, ck) in enumerate(c.coefficientsIn(tName)):
            if not ck.isZero():
                total = total + ring.convert(ck) * aPowers[D - k]
        return total

    nGens = len(handle.generators)
    newCofs = [clear(c) for c in res.cofactors[:nGens]]
    newRel = [clear(c) for c in res.relationCofactors]
    body = certificates.MembershipCert(ctx, aPowers[D], handle.generators,
        newCofs, newRel)
    cert = certificates.NilpotencyCert(a, D, body)

    if tighten:
        for k in range(D):
            smaller = handle.membership(aPowers[k])
            if smaller:
                cert = certificates.NilpotencyCert(a, k, smaller)
                break
    return cert


def unitTest(ctx, u):
    """
    Decide whether u is a unit of ctx. Returns a UnitCert whose body
    is the membership of 1 in <u> plus relations, or NotUnit.
    """
    ring = ctx.ring
    u = ring.convert(u)
    res = IdealHandle(ctx, [u]).membership(ring.one())
    if not res:
        return NotUnit(res.trace)
    return certificates.UnitCert(u, res.cofactors[0], res)


class GroebnerReport(object):
    """
    Result of :func:`groebnerSelfTest`. ok is True when every transform
    row replays and every pair reduces to zero; failures lists the
    problems found otherwise.
    """
    def __init__(self, engine, basisSize):
        self.engine = engine
        self.basisSize = basisSize
        self.rowsChecked = 0
        self.pairsChecked = 0
        self.failures = []

    @property
    def ok(self):
        return len(self.failures) == 0

    def __str__(self):
        status = "ok" if self.ok else "{} failure(s)".format(len(self.failures))
        return "{}: basis of {}, {} rows and {} pairs checked, {}".format(
            self.engine, self.basisSize, self.rowsChecked, self.pairsChecked,
            status)


def groebnerSelfTest(handle):
    """
    Replay every transform row of a completed handle, and check that
    all S-polynomials (and gcd-polynomials over ZZ) of the basis reduce
    to zero.
    """
    handle.complete()
    ring = handle.ctx.ring
    report = GroebnerReport(handle.engine, len(handle.basis))
    for (k, (b, row)) in enumerate(zip(handle.basis, handle.rows)):
        total = ring.zero()
        for (c, s) in zip(row, handle.sources):
            total = total + c * s
        report.rowsChecked += 1
        if total != b:
            report.failures.append("row {} does not replay".format(k))

    basis = handle.basis
    rows = handle.rows
    for j in range(len(basis)):
        for i in range(j):
            for (poly, row) in handle._pairPolys(basis, rows, i, j):
                (q, rem) = reduceFully(ring, poly, basis)
                report.pairsChecked += 1
                if not rem.isZero():
                    report.failures.append(
                        "pair ({}, {}) leaves remainder {}".format(i, j, rem))
    return report
