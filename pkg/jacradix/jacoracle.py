"""
Oracles for membership in the Jacobson radical. 

A :class:`JacOracle` for an element a modulo generators U stands for
the statement a in Jac U: for every b it can produce a certificate of
1 in <U, 1 - a*b>. The extraction algorithms only ever ask finitely
many such queries. Answers are MembershipCerts against exactly
U + [1 - a*b]; a query that cannot be answered returns a
:class:`jacradix.certificates.Refuted`.

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

import threading

from . import jacerrors
from . import cuitrace
from . import idealengine
from .idealengine import NormalFormTrace
from .certificates import MembershipCert, Refuted, Reexpressor


class JacOracle(object):
    """
    Abstract base class. Sub-classes implement answer(b).

    label may be a string or a function of no arguments returning one;
    it is only called when something reads the label, as formatting
    large polynomials is not free. Answers are remembered per b, so
    asking the same query twice costs one answer.
    """
    def __init__(self, ctx, generators, element, tracer=None, label=None):
        ring = ctx.ring
        self.ctx = ctx
        self.generators = [ring.convert(g) for g in generators]
        self.element = ring.convert(element)
        if tracer is None:
            tracer = cuitrace.SilentTrace()
        self.tracer = tracer
        self._label = label
        self._answers = {}
        self._answersLock = threading.Lock()

    @property
    def label(self):
        if self._label is None:
            self._label = "{}({})".format(self.__class__.__name__, self.element)
        elif callable(self._label):
            self._label = self._label()
        return self._label

    def adjoined(self, b):
        "The adjoined generator 1 - element*b"
        return self.ctx.ring.one() - self.element * b

    def query(self, b):
        """
        Return a MembershipCert of 1 against generators + [1 - element*b],
        or a Refuted
        """
        b = self.ctx.ring.convert(b)
        with self._answersLock:
            result = self._answers.get(b)
        if result is None:
            result = self.answer(b)
            with self._answersLock:
                self._answers[b] = result
        self.tracer.displayQuery(self, b, result)
        return result

    def demand(self, b):
        """
        As query, but a refusal raises QueryRefutedError
        """
        result = self.query(b)
        if isinstance(result, Refuted):
            raise jacerrors.QueryRefutedError(result)
        return result

    def answer(self, b):
        raise NotImplementedError()


class MembershipJacOracle(JacOracle):
    """
    Answers each query by deciding 1 in <U, 1 - a*b> with the ideal
    engine. A failure is a sound refutation of a in Jac U.
    """
    def answer(self, b):
        gens = self.generators + [self.adjoined(b)]
        res = idealengine.IdealHandle(self.ctx, gens).membership(self.ctx.ring.one())
        if res:
            return res
        return Refuted(b, res.trace, self.element, self.generators, self.ctx,
            lambda: self.label)


class NilJacOracle(JacOracle):
    """
    Answers from a NilpotencyCert a^m in <V>:
        1 = b^m a^m + (1 - a*b) * sum_{i<m} (a*b)^i
    """
    def __init__(self, cert, tracer=None, label=None):
        super().__init__(cert.ctx, cert.generators, cert.element, tracer, label)
        self.cert = cert

    def answer(self, b):
        ring = self.ctx.ring
        body = self.cert.body
        m = self.cert.exponent
        ab = self.element * b
        geometric = ring.zero()
        term = ring.one()
        for i in range(m):
            geometric = geometric + term
            term = term * ab
        bm = b ** m
        cofs = [bm * c for c in body.cofactors] + [geometric]
        rels = [bm * r for r in body.relationCofactors]
        return MembershipCert(self.ctx, ring.one(),
            self.generators + [self.adjoined(b)], cofs, rels)


class CutJacOracle(JacOracle):
    """
    Oracle for x*y modulo U, built from inner: z -> oracle for x modulo
    U + [1 - y*z]. Query w asks inner(x*w) at b = y*w; the two adjoined
    generators are both 1 - x*y*w.
    """
    def __init__(self, inner, x, y, ctx, generators, tracer=None, label=None):
        ring = ctx.ring
        (x, y) = (ring.convert(x), ring.convert(y))
        super().__init__(ctx, generators, x * y, tracer, label)
        self.inner = inner
        self.x = x
        self.y = y

    def _recastRefuted(self, result, w):
        """
        The inner refusal is against U + [1 - x*y*w] twice; the ideal is
        the same with one copy, so merging the two row entries gives a
        refusal of x*y modulo U at w. Anything of another shape is
        passed on as it is.
        """
        nU = len(self.generators)
        adj = self.adjoined(w)
        gens = result.generators
        trace = result.trace
        if (result.ctx != self.ctx or len(gens) != nU + 1 or
                gens[:nU] != self.generators or gens[nU] != adj or
                trace.rows is None):
            return result
        rows = [row[:nU] + [row[nU] + row[nU + 1]] + row[nU + 2:] for row in trace.rows]
        merged = NormalFormTrace(trace.input, trace.remainder, trace.quotients,
            trace.basis, rows)
        return Refuted(w, merged, self.element, self.generators, self.ctx,
            lambda: "{} via z={}, b={}".format(self.label, self.x * w, self.y * w))

    def answer(self, w):
        z = self.x * w
        b = self.y * w
        result = self.inner(z).query(b)
        if isinstance(result, Refuted):
            return self._recastRefuted(result, w)

        nU = len(self.generators)
        adj = self.adjoined(w)
        gens = result.generators
        if (result.ctx != self.ctx or len(gens) != nU + 2 or
                gens[:nU] != self.generators or gens[nU] != adj or gens[nU + 1] != adj):
            raise jacerrors.CertificateError(
                "inner oracle answered against the wrong generators")
        cofs = result.cofactors[:nU] + [result.cofactors[nU] + result.cofactors[nU + 1]]
        return MembershipCert(self.ctx, result.target, self.generators + [adj],
            cofs, result.relationCofactors)


class RebasedJacOracle(JacOracle):
    """
    Oracle for element e modulo generators in ctx, built from an oracle
    for f modulo other generators (in a compatible ctx). Query b asks the
    source at multiplier*b, and the source's answer is recast:

        1 - f*m*b = (1 - e*b) + b*(e - f*m)

    so e - f*m must lie in the new ideal, as must every source generator
    and relation. This covers moving relations into generators and back,
    multiplying the element by m, and changing it by an ideal member.
    """
    def __init__(self, source, ctx, generators, element, multiplier=1,
            tracer=None, label=None):
        super().__init__(ctx, generators, element, tracer, label)
        self.source = source
        self.multiplier = ctx.ring.convert(multiplier)
        self.reexpressor = Reexpressor(ctx, self.generators)
        self._delta = None

    def _deltaExpression(self):
        if self._delta is None:
            ring = self.ctx.ring
            delta = self.element - ring.convert(self.source.element) * self.multiplier
            self._delta = self.reexpressor.express(delta)
        return self._delta

    def answer(self, b):
        ring = self.ctx.ring
        srcRing = self.source.ctx.ring
        result = self.source.query(srcRing.convert(self.multiplier * b))
        if isinstance(result, Refuted):
            return result

        kappa = result.cofactors[-1]
        srcAdj = result.generators[-1]
        rest = MembershipCert(result.ctx, result.target - kappa * srcAdj,
            result.generators[:-1], result.cofactors[:-1], result.relationCofactors)
        rec = self.reexpressor.recast(rest)

        kappa = ring.convert(kappa)
        (gc, rc) = self._deltaExpression()
        kb = kappa * b
        cofs = [c + kb * d for (c, d) in zip(rec.cofactors, gc)] + [kappa]
        rels = [c + kb * d for (c, d) in zip(rec.relationCofactors, rc)]
        return MembershipCert(self.ctx, ring.one(),
            self.generators + [self.adjoined(b)], cofs, rels)


class JacOfJacOracle(JacOracle):
    """
    Oracle for 1 modulo U + [1 - a*z], given outer (a modulo U + [v])
    and vOracle (v modulo U). With 1 = sum(alpha*u) + lam*v + mu*(1 - a*z) + R
    from outer at z, the element lam*v is in Jac U, and vOracle at lam*b
    gives 1 in <U, 1 - lam*v*b>, where 1 - lam*v*b equals (1 - b) plus
    b times members of <U, 1 - a*z>.
    """
    def __init__(self, outer, vOracle, z, tracer=None, label=None):
        ctx = outer.ctx
        ring = ctx.ring
        z = ring.convert(z)
        U = outer.generators[:-1]
        super().__init__(ctx, U + [ring.one() - outer.element * z], ring.one(),
            tracer, label)
        self.outer = outer
        self.vOracle = vOracle
        self.z = z

    def answer(self, b):
        ring = self.ctx.ring
        o = self.outer.query(self.z)
        if isinstance(o, Refuted):
            return o
        nU = len(self.generators) - 1
        alpha = o.cofactors[:nU]
        lam = o.cofactors[nU]
        mu = o.cofactors[nU + 1]
        sigma = o.relationCofactors

        q = self.vOracle.query(lam * b)
        if isinstance(q, Refuted):
            return q
        beta = q.cofactors[:nU]
        kappa = q.cofactors[nU]
        tau = q.relationCofactors

        kb = kappa * b
        cofs = [bt + kb * al for (bt, al) in zip(beta, alpha)]
        cofs.append(kb * mu)
        cofs.append(kappa)
        rels = [t + kb * s for (t, s) in zip(tau, sigma)]
        return MembershipCert(self.ctx, ring.one(),
            self.generators + [self.adjoined(b)], cofs, rels)
