"""
The certificate data model, the verifier and the certificate 
combinators.

Every certificate can be checked by :func:`verify`, which replays its
defining identity by plain polynomial arithmetic and never consults a
basis or an engine. A MembershipCert therefore stores explicit
cofactors for the ctx's relations as well as for its generators.

The combinators build new certificates from old ones:

    * :func:`cutNil`            x*y nilpotent, x nilpotent modulo y => x nilpotent
    * :func:`cutJac`            the same for Jacobson radical oracles
    * :func:`nilToJac`          a nilpotency certificate answers every Jac query
    * :func:`nilpotentSum`      sum of two nilpotent elements
    * :func:`transport`         move certificates into and out of a quotient
    * :func:`unitPlusNilpotent` unit plus nilpotent is a unit
    * :func:`jacIdempotence`    Jac of Jac is Jac

Oracles themselves live in :mod:`jacradix.jacoracle`.

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

from math import comb

from . import jacerrors

TRANSPORT_FROM_QUOTIENT = 'from-quotient'
TRANSPORT_INTO_QUOTIENT = 'into-quotient'


class Ok(object):
    "Successful verification"
    def __bool__(self):
        return True

    def __repr__(self):
        return "Ok"


class Mismatch(object):
    "Failed verification. diff is the nonzero difference polynomial"
    def __init__(self, diff, reason=None):
        self.diff = diff
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        if self.reason is not None:
            return "Mismatch({}: {})".format(self.reason, self.diff)
        return "Mismatch({})".format(self.diff)


class MembershipCert(object):
    """
    target = sum(cofactors[i] * generators[i]) 
             + sum(relationCofactors[j] * ctx.relations[j])

    as an identity of free polynomials in ctx.ring.
    """
    kind = 'membership'

    def __init__(self, ctx, target, generators, cofactors, relationCofactors=None):
        ring = ctx.ring
        self.ctx = ctx
        self.target = ring.convert(target)
        self.generators = [ring.convert(g) for g in generators]
        self.cofactors = [ring.convert(c) for c in cofactors]
        if relationCofactors is None:
            relationCofactors = [ring.zero()] * len(ctx.relations)
        self.relationCofactors = [ring.convert(c) for c in relationCofactors]
        if len(self.cofactors) != len(self.generators):
            raise jacerrors.CertificateError(
                "{} cofactors for {} generators".format(len(self.cofactors),
                    len(self.generators)))
        if len(self.relationCofactors) != len(ctx.relations):
            raise jacerrors.CertificateError(
                "{} relation cofactors for {} relations".format(
                    len(self.relationCofactors), len(ctx.relations)))

    @property
    def ring(self):
        return self.ctx.ring

    def combination(self):
        total = self.ring.zero()
        for (c, g) in zip(self.cofactors, self.generators):
            if not c.isZero():
                total = total + c * g
        for (c, r) in zip(self.relationCofactors, self.ctx.relations):
            if not c.isZero():
                total = total + c * r
        return total

    def verify(self):
        diff = self.target - self.combination()
        if diff.isZero():
            return Ok()
        return Mismatch(diff)

    def scaled(self, factor):
        "The certificate for factor*target"
        factor = self.ring.convert(factor)
        return MembershipCert(self.ctx, self.target * factor, self.generators,
            [c * factor for c in self.cofactors],
            [c * factor for c in self.relationCofactors])

    def __repr__(self):
        return "MembershipCert({} in <{}> of {})".format(self.target,
            ", ".join(str(g) for g in self.generators), self.ctx.describe())


class NilpotencyCert(object):
    """
    element^exponent lies in the ideal of body.generators (plus the
    relations), with body the MembershipCert of that power.
    """
    kind = 'nilpotency'

    def __init__(self, element, exponent, body):
        if exponent < 0:
            raise jacerrors.CertificateError("Negative exponent {}".format(exponent))
        self.element = body.ring.convert(element)
        self.exponent = exponent
        self.body = body

    @property
    def ctx(self):
        return self.body.ctx

    @property
    def generators(self):
        return self.body.generators

    def verify(self):
        expected = self.element ** self.exponent
        if self.body.target != expected:
            return Mismatch(self.body.target - expected, "target is not element^exponent")
        return self.body.verify()

    def __repr__(self):
        return "NilpotencyCert(({})^{} in <{}> of {})".format(self.element,
            self.exponent, ", ".join(str(g) for g in self.generators),
            self.ctx.describe())


class UnitCert(object):
    """
    unit*inverse = 1 in the ctx. The body is the MembershipCert of 1
    against the single generator unit, with cofactor inverse.
    """
    kind = 'unit'

    def __init__(self, unit, inverse, body):
        self.unit = body.ring.convert(unit)
        self.inverse = body.ring.convert(inverse)
        self.body = body

    @property
    def ctx(self):
        return self.body.ctx

    def verify(self):
        ring = self.body.ring
        if self.body.generators != [self.unit]:
            return Mismatch(ring.zero(), "body generator is not the unit")
        if self.body.cofactors[0] != self.inverse:
            return Mismatch(self.body.cofactors[0] - self.inverse,
                "body cofactor is not the inverse")
        if self.body.target != ring.one():
            return Mismatch(self.body.target - 1, "body target is not 1")
        return self.body.verify()

    def __repr__(self):
        return "UnitCert(({}) * ({}) = 1 in {})".format(self.unit, self.inverse,
            self.ctx.describe())


class IntegralityCert(object):
    """
    a^l * f^n + sum(coefficients[i] * f^i) = 0 in the ctx, i.e. the body
    shows that polynomial lies in the relation ideal. n >= 1.
    """
    kind = 'integrality'

    def __init__(self, element, localizer, l, coefficients, body):
        ring = body.ring
        self.element = ring.convert(element)
        self.localizer = ring.convert(localizer)
        self.l = l
        self.coefficients = [ring.convert(c) for c in coefficients]
        self.body = body

    @property
    def ctx(self):
        return self.body.ctx

    @property
    def degree(self):
        return len(self.coefficients)

    def dependence(self):
        "The polynomial a^l f^n + ... + c_0"
        f = self.element
        total = self.localizer ** self.l * f ** self.degree
        fPower = self.body.ring.one()
        for c in self.coefficients:
            total = total + c * fPower
            fPower = fPower * f
        return total

    def verify(self):
        ring = self.body.ring
        if self.degree < 1:
            return Mismatch(ring.zero(), "degree must be at least 1")
        if self.body.generators:
            return Mismatch(ring.zero(), "body must have no generators")
        if self.body.target != self.dependence():
            return Mismatch(self.body.target - self.dependence(),
                "body target is not the dependence")
        return self.body.verify()


def staircase(elements, exponents):
    """
    The generator list x_0^(e_0+1), x_0^e_0 x_1^(e_1+1), ...
    and the target x_0^e_0 ... x_n^e_n of a Krull dimension witness
    """
    ring = elements[0].ring
    prefix = ring.one()
    gens = []
    for (x, e) in zip(elements, exponents):
        gens.append(prefix * x ** (e + 1))
        prefix = prefix * x ** e
    return (gens, prefix)


class KdimCert(object):
    """
    Krull dimension witness for the sequence elements: the body shows
    x_0^e_0 ... x_n^e_n lies in the staircase ideal.
    """
    kind = 'kdim'

    def __init__(self, elements, exponents, body):
        ring = body.ring
        self.elements = [ring.convert(x) for x in elements]
        self.exponents = list(exponents)
        self.body = body

    @property
    def ctx(self):
        return self.body.ctx

    def verify(self):
        ring = self.body.ring
        if len(self.elements) != len(self.exponents) or not self.elements:
            return Mismatch(ring.zero(), "elements and exponents do not match")
        (gens, target) = staircase(self.elements, self.exponents)
        if self.body.generators != gens:
            return Mismatch(ring.zero(), "body generators are not the staircase")
        if self.body.target != target:
            return Mismatch(self.body.target - target, "body target is wrong")
        return self.body.verify()


class Refuted(object):
    """
    A failed oracle query: 1 is not in <generators, 1 - element*b>, as
    witnessed by the nonzero, irreducible remainder in trace. By the
    definition of the Jacobson radical this refutes element in Jac.
    """
    kind = 'refuted'

    def __init__(self, b, trace, element, generators, ctx, label=None):
        self.b = b
        self.trace = trace
        self.element = element
        self.generators = list(generators)
        self.ctx = ctx
        self._label = label

    @property
    def label(self):
        "The label, if any. A function of no arguments is called on first use."
        if callable(self._label):
            self._label = self._label()
        return self._label

    def __bool__(self):
        return False

    def sources(self):
        "generators, then 1 - element*b, then the ctx relations"
        ring = self.ctx.ring
        adjoined = ring.one() - ring.convert(self.element) * ring.convert(self.b)
        return ([ring.convert(g) for g in self.generators] + [adjoined] +
            list(self.ctx.relations))

    def soundnessProblem(self):
        """
        None if the record proves 1 is not in <generators, 1 - element*b>:
        the trace reduces 1 to a nonzero irreducible remainder against a
        Groebner basis of exactly that ideal. Otherwise a description
        of what fails.
        """
        trace = self.trace
        if trace.input != 1:
            return "trace reduces {}, not 1".format(trace.input)
        if trace.remainder.isZero():
            return "remainder is zero"
        if not trace.replays():
            return "trace does not replay"
        if not trace.isIrreducible():
            return "remainder is reducible by the basis"
        return trace.basisProblem(self.sources())

    def isSound(self):
        return self.soundnessProblem() is None

    def __repr__(self):
        return "Refuted(b={}, {})".format(self.b, self.trace)


def verify(cert):
    """
    Replay any certificate. Returns Ok or Mismatch.
    """
    return cert.verify()


def verifyOrRaise(cert):
    result = cert.verify()
    if not result:
        raise jacerrors.VerificationError(repr(result))
    return result


def closeCert(ctx, target, generators, cofactors):
    """
    Build a MembershipCert whose relation cofactors are found by
    membership of the residual target - sum(c*g) in the relation ideal
    of ctx. Raises CertificateError if the residual is not there.
    """
    ring = ctx.ring
    target = ring.convert(target)
    generators = [ring.convert(g) for g in generators]
    cofactors = [ring.convert(c) for c in cofactors]
    residual = target
    for (c, g) in zip(cofactors, generators):
        residual = residual - c * g
    if residual.isZero():
        return MembershipCert(ctx, target, generators, cofactors)
    if not ctx.relations:
        raise jacerrors.CertificateError(
            "Residual {} is nonzero and there are no relations".format(residual))
    res = ctx.relationHandle.membership(residual)
    if not res:
        raise jacerrors.CertificateError(
            "Residual {} is not in the relations of {}".format(residual,
                ctx.describe()))
    return MembershipCert(ctx, target, generators, cofactors, res.cofactors)


class Reexpressor(object):
    """
    Rewrites certificates against a new generator list in a new ctx. 

    Every generator and relation of an incoming certificate is 
    expressed over the new generators and relations: by exact match
    where possible, otherwise by ideal-engine membership. Expressions
    are cached, so one Reexpressor can recast many certificates.
    """
    def __init__(self, ctx, generators):
        ring = ctx.ring
        self.ctx = ctx
        self.generators = [ring.convert(g) for g in generators]
        self._cache = {}
        self._handle = None

    def express(self, poly):
        """
        Returns (genCofactors, relCofactors) with 
        poly = sum(genCof*gen) + sum(relCof*rel)
        """
        ring = self.ctx.ring
        poly = ring.convert(poly)
        if poly in self._cache:
            return self._cache[poly]
        nGens = len(self.generators)
        nRels = len(self.ctx.relations)
        genCofs = [ring.zero()] * nGens
        relCofs = [ring.zero()] * nRels
        if poly.isZero():
            pass
        elif poly in self.generators:
            genCofs[self.generators.index(poly)] = ring.one()
        elif poly in self.ctx.relations:
            relCofs[self.ctx.relations.index(poly)] = ring.one()
        else:
            if self._handle is None:
                from . import idealengine
                self._handle = idealengine.IdealHandle(self.ctx, self.generators)
            res = self._handle.membership(poly)
            if not res:
                raise jacerrors.CertificateError(
                    "{} is not in <{}> of {}".format(poly,
                        ", ".join(str(g) for g in self.generators),
                        self.ctx.describe()))
            (genCofs, relCofs) = (res.cofactors, res.relationCofactors)
        self._cache[poly] = (genCofs, relCofs)
        return (genCofs, relCofs)

    def recast(self, cert):
        """
        The same target as the MembershipCert cert, against this
        object's generators and ctx
        """
        ring = self.ctx.ring
        genCofs = [ring.zero()] * len(self.generators)
        relCofs = [ring.zero()] * len(self.ctx.relations)
        sources = list(zip(cert.cofactors, cert.generators))
        sources.extend(zip(cert.relationCofactors, cert.ctx.relations))
        for (c, g) in sources:
            if c.isZero():
                continue
            c = ring.convert(c)
            (gc, rc) = self.express(g)
            for i in range(len(gc)):
                if not gc[i].isZero():
                    genCofs[i] = genCofs[i] + c * gc[i]
            for j in range(len(rc)):
                if not rc[j].isZero():
                    relCofs[j] = relCofs[j] + c * rc[j]
        return MembershipCert(self.ctx, cert.target, self.generators, genCofs, relCofs)

    def recastCert(self, cert):
        "recast for membership or nilpotency certificates"
        if isinstance(cert, NilpotencyCert):
            return NilpotencyCert(cert.element, cert.exponent, self.recast(cert.body))
        return self.recast(cert)


def rehome(cert, ctx, generators=None):
    """
    Move a membership or nilpotency certificate into ctx, keeping its
    generators unless new ones are given. The new ctx's ideal of
    generators and relations must contain the old one.
    """
    if generators is None:
        generators = cert.generators
    return Reexpressor(ctx, generators).recastCert(cert)


def transport(direction, cert, handle):
    """
    Move a certificate across the quotient by the ideal of handle. 

    from-quotient: cert lives in handle.ctx.quotient(handle.generators);
    the result lives in handle.ctx with handle's generators appended to
    the cert's generators. 

    into-quotient: cert lives in handle.ctx and its generators include
    handle's generators; the result lives in the quotient and no longer
    lists them.
    """
    if direction == TRANSPORT_FROM_QUOTIENT:
        gens = list(cert.generators) + list(handle.generators)
        return Reexpressor(handle.ctx, gens).recastCert(cert)
    elif direction == TRANSPORT_INTO_QUOTIENT:
        quotientCtx = handle.ctx.quotient(handle.generators)
        gens = [g for g in cert.generators if g not in handle.generators]
        return Reexpressor(quotientCtx, gens).recastCert(cert)
    raise ValueError("Unknown transport direction '{}'".format(direction))


def _checkSameIdeal(c1, c2):
    if c1.ctx != c2.ctx:
        raise jacerrors.CertificateError("Certificates live in different ctxs")
    if c1.generators != c2.generators:
        raise jacerrors.CertificateError("Certificates use different generators")


def cutNil(c1, c2):
    """
    From c1: (x*y)^k in <U> and c2: x^m in <U, y>, build x^((m+1)*k) in <U>.

    Write x^m = w + gamma*y with w in <U>. Then x^(m+1) = x*w + gamma*x*y,
    and in the binomial expansion of (x*w + gamma*x*y)^k every term but
    the last contains w, while the last is gamma^k (xy)^k, covered by c1.
    """
    ctx = c1.ctx
    ring = ctx.ring
    U = c1.generators
    nU = len(U)
    if c2.ctx != ctx:
        raise jacerrors.CertificateError("cutNil certificates live in different ctxs")
    if len(c2.generators) != nU + 1 or c2.generators[:nU] != U:
        raise jacerrors.CertificateError("second certificate must be against U + [y]")
    x = c2.element
    y = c2.generators[nU]
    if c1.element != x * y:
        raise jacerrors.CertificateError("first certificate is not for x*y")

    k = c1.exponent
    m = c2.exponent
    gamma = c2.body.cofactors[nU]
    wCofs = c2.body.cofactors[:nU]
    wRels = c2.body.relationCofactors
    w = c2.body.combination() - gamma * y
    xw = x * w
    gxy = gamma * x * y

    # P = sum_{j<k} C(k,j) x (xw)^(k-j-1) (gamma x y)^j
    P = ring.zero()
    gxyPower = ring.one()
    xwPowers = [ring.one()]
    for i in range(1, k):
        xwPowers.append(xwPowers[-1] * xw)
    for j in range(k):
        P = P + comb(k, j) * x * xwPowers[k - j - 1] * gxyPower
        gxyPower = gxyPower * gxy
    gammaK = gamma ** k

    cofs = [P * wc + gammaK * c for (wc, c) in zip(wCofs, c1.body.cofactors)]
    rels = [P * wr + gammaK * r for (wr, r) in zip(wRels, c1.body.relationCofactors)]
    exponent = (m + 1) * k
    body = MembershipCert(ctx, x ** exponent, U, cofs, rels)
    return NilpotencyCert(x, exponent, body)


def nilpotentSum(c1, c2):
    """
    From a^p and b^q in <U>, build (a+b)^(p+q-1) in <U> by the binomial
    theorem: each term a^j b^(N-j) has j >= p or N-j >= q. 
    If either exponent is 0 then 1 is in <U> and the exponent is 0. 
    """
    _checkSameIdeal(c1, c2)
    ctx = c1.ctx
    ring = ctx.ring
    (a, b) = (c1.element, c2.element)
    (p, q) = (c1.exponent, c2.exponent)
    if p == 0:
        return NilpotencyCert(a + b, 0, c1.body)
    if q == 0:
        return NilpotencyCert(a + b, 0, c2.body)

    N = p + q - 1
    aPow = [ring.one()]
    bPow = [ring.one()]
    for i in range(N):
        aPow.append(aPow[-1] * a)
        bPow.append(bPow[-1] * b)
    multA = ring.zero()
    multB = ring.zero()
    for j in range(N + 1):
        if j >= p:
            multA = multA + comb(N, j) * aPow[j - p] * bPow[N - j]
        else:
            multB = multB + comb(N, j) * aPow[j] * bPow[N - j - q]

    cofs = [multA * x + multB * y for (x, y) in zip(c1.body.cofactors,
        c2.body.cofactors)]
    rels = [multA * x + multB * y for (x, y) in zip(c1.body.relationCofactors,
        c2.body.relationCofactors)]
    body = MembershipCert(ctx, (a + b) ** N, c1.generators, cofs, rels)
    return NilpotencyCert(a + b, N, body)


def unitPlusNilpotent(u, m):
    """
    u is a UnitCert, m a NilpotencyCert for x modulo the relations alone
    (no generators). Returns the UnitCert for u + x, with inverse
    v' = v * sum_{i<e} (-x v)^i. 

    With u*v = 1 - R (R the relation part of u's body) and 
    x^e = S (the relation part of m's body):
        1 = v'(u + x) + (-1)^e v^e S + R * sum_{i<e} (-x v)^i
    """
    ctx = u.ctx
    ring = ctx.ring
    if m.ctx != ctx:
        raise jacerrors.CertificateError("unit and nilpotent live in different ctxs")
    if m.generators:
        raise jacerrors.CertificateError(
            "nilpotency certificate must be against the relations alone")
    x = m.element
    v = u.inverse
    e = m.exponent

    geometric = ring.zero()
    term = ring.one()
    for i in range(e):
        geometric = geometric + term
        term = term * (-x * v)
    newInverse = v * geometric
    sign = -1 if e % 2 else 1
    vE = v ** e

    rels = [sign * vE * s + geometric * r for (s, r) in
        zip(m.body.relationCofactors, u.body.relationCofactors)]
    newUnit = u.unit + x
    body = MembershipCert(ctx, ring.one(), [newUnit], [newInverse], rels)
    return UnitCert(newUnit, newInverse, body)


def nilToJac(cert, tracer=None):
    """
    The JacOracle for cert.element modulo cert's ideal, answering every
    query from the nilpotency certificate alone.
    """
    from . import jacoracle
    return jacoracle.NilJacOracle(cert, tracer=tracer)


def cutJac(inner, x, y, ctx, generators, tracer=None):
    """
    From inner: z -> JacOracle for x modulo U + [1 - y*z], the JacOracle
    for x*y modulo U. Query w is answered by inner(x*w).query(y*w); both
    adjoined generators equal 1 - x*y*w, and their cofactors merge.
    """
    from . import jacoracle
    return jacoracle.CutJacOracle(inner, x, y, ctx, generators, tracer=tracer)


def jacIdempotence(inner, a, ctx, generators, tracer=None):
    """
    From inner: z -> JacOracle for 1 modulo U + [1 - a*z], the JacOracle
    for a modulo U. This is :func:`cutJac` with x = 1, y = a.
    """
    return cutJac(inner, ctx.ring.one(), a, ctx, generators, tracer=tracer)


def jacOfJacInner(outer, vOracle, tracer=None):
    """
    The inner family for :func:`jacIdempotence` when a is in Jac <U, v>
    (outer, with generators U + [v]) and v is in Jac <U> (vOracle).
    """
    from . import jacoracle

    def inner(z):
        return jacoracle.JacOfJacOracle(outer, vOracle, z, tracer=tracer)
    return inner
