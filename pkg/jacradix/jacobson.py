"""
The extraction algorithms. Each one turns an element a together with a
:class:`jacradix.jacoracle.JacOracle` for a (the computational meaning
of a in Jac I) into a :class:`jacradix.certificates.NilpotencyCert`
for a^n in I, asking the oracle only finitely many queries. 

Extractors for a ring tower are objects with an extract() method, see
:class:`JacobsonExtractor`. The towers supported are

    * Z, by :class:`ZExtractor` (or :class:`ZKdim1Extractor`)
    * zero-dimensional rings (Q, Z/n) by :class:`ZeroDimExtractor`
    * A[X], for any supported A, by :class:`NullstellensatzExtractor`

and :func:`iteratedExtract` stacks them for a multivariate ring. When
every oracle is synthesised by the ideal engine, as it is there, a
refused query is a sound proof that a is not in Jac I, so the whole 
thing is a decision procedure which explains both of its answers.

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

from . import jacerrors
from . import exactarith
from . import exprparser
from .polyring import PolyRing, RingCtx, BASE_ZZ, BASE_QQ
from .idealengine import IdealHandle, contraction, freshVariable
from .certificates import MembershipCert, NilpotencyCert, UnitCert, KdimCert
from .certificates import staircase, closeCert, rehome, transport, cutNil
from .certificates import nilpotentSum, unitPlusNilpotent, cutJac
from .certificates import TRANSPORT_FROM_QUOTIENT
from .jacoracle import MembershipJacOracle, NilJacOracle, RebasedJacOracle
from .controls import ExtractionControls
from .integrality import integralDependence


def integerCtx():
    "The ctx of Z with no variables and no relations"
    return RingCtx(PolyRing(BASE_ZZ))


def zeroCert(ctx, generators, a):
    "The exponent 1 certificate for a == 0"
    ring = ctx.ring
    body = MembershipCert(ctx, ring.zero(), generators,
        [ring.zero()] * len(generators))
    return NilpotencyCert(a, 1, body)


def negateNil(cert):
    "From a^k in I, (-a)^k in I"
    k = cert.exponent
    sign = -1 if k % 2 else 1
    return NilpotencyCert(-cert.element, k, cert.body.scaled(sign))


def tightenNilpotency(cert):
    """
    Replace cert by the certificate for the least k <= cert.exponent
    with element^k in the same ideal. Membership of a^k is monotone in
    k, so this is a binary search.
    """
    handle = IdealHandle(cert.ctx, cert.generators)
    a = cert.element
    best = cert
    (lo, hi) = (0, cert.exponent)
    while lo < hi:
        mid = (lo + hi) // 2
        res = handle.membership(a ** mid)
        if res:
            best = NilpotencyCert(a, mid, res)
            hi = mid
        else:
            lo = mid + 1
    return best


def finishCert(cert, controls):
    """
    Apply the exponent ceiling and, if asked for, tightening
    """
    if cert.exponent > controls.exponentCeiling:
        msg = "Exponent {} exceeds the ceiling of {}".format(cert.exponent,
            controls.exponentCeiling)
        raise jacerrors.ExponentCeilingError(msg)
    if controls.tighten and cert.exponent > 0:
        cert = tightenNilpotency(cert)
    return cert


def alignOracle(oracle, ctx, generators, a, tracer=None):
    """
    oracle itself if it already answers for a modulo generators in ctx,
    otherwise a RebasedJacOracle that does
    """
    if (oracle.ctx == ctx and oracle.generators == list(generators) and
            oracle.element == a):
        return oracle
    return RebasedJacOracle(oracle, ctx, generators, a, tracer=tracer,
        label=lambda: oracle.label)


def coefficientCtx(ctx, var):
    """
    The ctx of the coefficient ring of var: the other variables, with
    the relations (which must not use var) in the same order.
    """
    ring = ctx.ring
    for r in ctx.relations:
        if r.usesVar(var):
            raise jacerrors.UnsupportedTowerError(
                "Relation {} uses the variable {}".format(r, var))
    sub = ring.subRing([v for v in ring.varNames if v != var])
    return RingCtx(sub, [sub.convert(r) for r in ctx.relations])


def restrictToBase(cert, baseCtx, var):
    """
    Evaluate a MembershipCert at var = 0 and move it into baseCtx. This
    is exact when the target, generators and relations are free of var.
    """
    ring = baseCtx.ring

    def atZero(p):
        return ring.convert(p.substitute(var, 0))
    return MembershipCert(baseCtx, atZero(cert.target),
        [atZero(g) for g in cert.generators], [atZero(c) for c in cert.cofactors],
        [atZero(c) for c in cert.relationCofactors])


class ZSplit(object):
    """
    Result of :func:`zSplit`: x = d*e, the gcd chain, a^(len(chain)-1)
    in <d> as nilCert and 1 in <a, e> as coprimeCert (both over Z).
    """
    def __init__(self, d, e, chain, nilCert, coprimeCert):
        self.d = d
        self.e = e
        self.chain = chain
        self.nilCert = nilCert
        self.coprimeCert = coprimeCert

    def __repr__(self):
        return "ZSplit(d={}, e={}, chain={})".format(self.d, self.e, self.chain)


def zSplit(x, a):
    """
    Split the nonzero integer x as d*e with a nilpotent modulo d and
    a coprime to e. The chain is d_1 = gcd(x, a), d_2 = gcd(x/d_1, a), 
    and so on until some d_n = 1; then d = d_1*...*d_(n-1), which
    divides a^(n-1).
    """
    if x == 0:
        raise ValueError("zSplit needs a nonzero integer")
    ctx = integerCtx()
    ring = ctx.ring
    chain = []
    rest = abs(x)
    d = 1
    while True:
        di = exactarith.gcdExt(rest, a)[0]
        chain.append(di)
        if di == 1:
            break
        d *= di
        rest //= di
    e = x // d

    n = len(chain) - 1
    aN = a ** n
    q = exactarith.divisibility(d, aN)
    nilBody = MembershipCert(ctx, aN, [d], [q])
    nilCert = NilpotencyCert(a, n, nilBody)

    (g, s, t) = exactarith.gcdExt(a, e)
    if g != 1:
        raise jacerrors.CertificateError(
            exactarith.safeFormat("gcd({}, {}) is {}", a, e, g))
    coprimeCert = MembershipCert(ctx, ring.one(), [a, e], [s, t])
    return ZSplit(d, e, chain, nilCert, coprimeCert)


class JacobsonExtractor(object):
    """
    Abstract base class for extractors. 

    extract(handle, a, oracle) returns a NilpotencyCert for a modulo
    the ideal of handle, or the Refuted record of the query the oracle
    could not answer. Sub-classes implement run(), which may raise
    QueryRefutedError; extractOrRaise() is the raising form, used when
    one extractor is built on another.
    """
    tower = None

    def __init__(self, controls=None):
        if controls is None:
            controls = ExtractionControls()
        self.controls = controls

    @property
    def tracer(self):
        return self.controls.tracer

    def extract(self, handle, a, oracle):
        try:
            cert = self.extractOrRaise(handle, a, oracle)
        except jacerrors.QueryRefutedError as e:
            return e.refuted
        return cert

    def extractOrRaise(self, handle, a, oracle):
        ctx = handle.ctx
        a = ctx.ring.convert(a)
        oracle = alignOracle(oracle, ctx, handle.generators, a, self.tracer)
        cert = self.run(handle, a, oracle)
        return finishCert(cert, self.controls)

    def run(self, handle, a, oracle):
        raise NotImplementedError()

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.tower)


def _freeOracle(handle, a, oracle, tracer):
    """
    Move the relations of handle's ctx into the generators. Returns
    (freeCtx, generators, oracle)
    """
    ctx = handle.ctx
    U = handle.generators + list(ctx.relations)
    if not ctx.relations:
        return (ctx, U, oracle)
    freeCtx = ctx.free()
    return (freeCtx, U, RebasedJacOracle(oracle, freeCtx, U, a, tracer=tracer,
        label=lambda: oracle.label))


def _checkIntegers(ctx):
    ring = ctx.ring
    if ring.base != BASE_ZZ or ring.nvars != 0:
        raise jacerrors.UnsupportedTowerError(
            "Extractor for Z used on {}".format(ctx.describe()))


class ZExtractor(JacobsonExtractor):
    """
    Z is Jacobson. For a >= 1, the query b = -1 gives a nonzero element
    i1 = 1 - (1 + a)*c of I. Splitting i1 = d*e with a nilpotent modulo
    d and 1 = s*a + t*e, the query b = s gives i2 = 1 - (1 - a*s)*c'
    in I, and

        d = d*i2 + c'*t*i1

    so a^(n-1) in <d> lies in I. Negative a is extracted as -a with 
    every query b sent as -b.
    """
    tower = "Z"

    def run(self, handle, a, oracle):
        ctx = handle.ctx
        _checkIntegers(ctx)
        if a.isZero():
            return zeroCert(ctx, handle.generators, a)

        (freeCtx, U, freeOracle) = _freeOracle(handle, a, oracle, self.tracer)
        if a.constantValue() > 0:
            cert = self.positive(freeCtx, U, a, freeOracle)
        else:
            flipped = RebasedJacOracle(freeOracle, freeCtx, U, -a, multiplier=-1,
                tracer=self.tracer, label=lambda: "sign flip of " + freeOracle.label)
            flippedCert = self.positive(freeCtx, U, -a, flipped)
            cert = negateNil(flippedCert)

        if ctx.relations:
            cert = rehome(cert, ctx, handle.generators)
        return cert

    def positive(self, ctx, U, a, oracle):
        ring = ctx.ring
        value = a.constantValue()
        nU = len(U)

        first = oracle.demand(-1)
        alpha = first.cofactors[:nU]
        c1 = first.cofactors[nU]
        i1 = (1 - c1 * (1 + a)).constantValue()

        split = zSplit(i1, value)
        exponent = split.nilCert.exponent
        q = split.nilCert.body.cofactors[0]
        (s, t) = split.coprimeCert.cofactors

        second = oracle.demand(s)
        beta = second.cofactors[:nU]
        c2 = second.cofactors[nU]

        d = ring.const(split.d)
        t = ring.convert(t)
        q = ring.convert(q)
        cofs = [q * c2 * t * al + q * d * be for (al, be) in zip(alpha, beta)]
        body = MembershipCert(ctx, a ** exponent, U, cofs)
        return NilpotencyCert(a, exponent, body)


class ZKdim1Extractor(JacobsonExtractor):
    """
    Z is Jacobson because it has Krull dimension 1: a single query gives
    a nonzero element r of I, Z/<r> is zero-dimensional, and the
    zero-dimensional extractor there is carried back across the
    quotient.
    """
    tower = "Z"

    def run(self, handle, a, oracle):
        ctx = handle.ctx
        _checkIntegers(ctx)
        if a.isZero():
            return zeroCert(ctx, handle.generators, a)

        (freeCtx, U, freeOracle) = _freeOracle(handle, a, oracle, self.tracer)
        ring = freeCtx.ring
        nU = len(U)
        b = -1 if a.constantValue() > 0 else 1
        ans = freeOracle.demand(b)
        alpha = ans.cofactors[:nU]
        kappa = ans.cofactors[nU]
        r = (1 - kappa * (1 - a * b)).constantValue()
        m = abs(r)
        sign = 1 if r > 0 else -1

        if m == 1:
            body = MembershipCert(freeCtx, ring.one(), U, [sign * al for al in alpha])
            cert = NilpotencyCert(a, 0, body)
        else:
            quotientCtx = RingCtx(ring, declaredModulus=m)
            quotientOracle = RebasedJacOracle(freeOracle, quotientCtx, U, a,
                tracer=self.tracer, label=lambda: exactarith.safeFormat("{} mod {}",
                    freeOracle.label, m))
            zeroDim = ZeroDimExtractor(kdim0WitnessZmod, self.controls)
            inner = zeroDim.extractOrRaise(IdealHandle(quotientCtx, U), a,
                quotientOracle)
            moved = transport(TRANSPORT_FROM_QUOTIENT, inner,
                IdealHandle(freeCtx, [m]))
            rCof = moved.body.cofactors[nU]
            cofs = [c + rCof * sign * al for (c, al) in
                zip(moved.body.cofactors[:nU], alpha)]
            body = MembershipCert(freeCtx, moved.body.target, U, cofs)
            cert = NilpotencyCert(a, moved.exponent, body)

        if ctx.relations:
            cert = rehome(cert, ctx, handle.generators)
        return cert


def kdim0WitnessField(ctx, x):
    """
    Krull dimension 0 of Q (or of the zero ring Q/<1>): for x != 0,
    1 = (1/x)*x; for x == 0, x = 0*x^2.
    """
    ring = ctx.ring
    if ring.base != BASE_QQ or ring.nvars != 0:
        raise jacerrors.UnsupportedTowerError(
            "{} is not a field".format(ctx.describe()))
    x = ring.convert(x)
    if not x.isZero():
        e = 0
        body = MembershipCert(ctx, ring.one(), [x], [1 / x.constantValue()])
    elif ctx.relations:
        e = 0
        body = closeCert(ctx, ring.one(), [ring.zero()], [ring.zero()])
    else:
        e = 1
        body = MembershipCert(ctx, ring.zero(), [ring.zero()], [ring.zero()])
    return KdimCert([x], [e], body)


def _modulusOf(ctx):
    "The n with Z/n equal to ctx"
    ring = ctx.ring
    if ring.base != BASE_ZZ or ring.nvars != 0:
        raise jacerrors.UnsupportedTowerError(
            "{} is not a ring Z/n".format(ctx.describe()))
    basis = ctx.relationHandle.complete().basis
    if not basis:
        raise jacerrors.UnsupportedTowerError("Z is not zero-dimensional")
    return abs(basis[0].constantValue())


def kdim0WitnessZmod(n, x):
    """
    Krull dimension 0 of Z/n. n is the modulus, or a ctx over Z with no
    variables and a nonzero relation ideal. Finds the smallest e with
    c*x^(e+1) = x^e (mod n) solvable, i.e. gcd(x^(e+1), n) dividing x^e,
    and solves it. The search stops by e = bit length of n.
    """
    if isinstance(n, RingCtx):
        ctx = n
        n = _modulusOf(ctx)
    else:
        ctx = RingCtx(PolyRing(BASE_ZZ), declaredModulus=n)
    ring = ctx.ring
    x = ring.convert(x)
    value = x.constantValue()

    e = 0
    while True:
        A = pow(value, e, n)
        B = pow(value, e + 1, n)
        g = exactarith.gcdExt(B, n)[0]
        if A % g == 0:
            break
        e += 1

    m = n // g
    if m == 1:
        c = 0
    else:
        inv = exactarith.modInverse(exactarith.ModularInt(B // g, m))
        c = ((A // g) * inv.value) % m
    (gens, target) = staircase([x], [e])
    body = closeCert(ctx, target, gens, [c])
    return KdimCert([x], [e], body)


def kdim1WitnessZ(x0, x1):
    """
    Krull dimension of Z is at most 1. For x0 != 0, with exponents
    (1, e1): zSplit(x0, x1) gives x1^e1 = q*d and 1 = s*x1 + t*e, so

        x0*x1^e1 = (q*t)*x0^2 + s*(x0*x1^(e1+1))

    For x0 == 0 the exponents (1, 0) give the target 0.
    """
    ctx = integerCtx()
    ring = ctx.ring
    (x0, x1) = (ring.convert(x0), ring.convert(x1))
    v0 = x0.constantValue()
    if v0 == 0:
        exponents = [1, 0]
        (gens, target) = staircase([x0, x1], exponents)
        body = MembershipCert(ctx, target, gens, [ring.zero()] * 2)
        return KdimCert([x0, x1], exponents, body)

    split = zSplit(v0, x1.constantValue())
    e1 = split.nilCert.exponent
    q = split.nilCert.body.cofactors[0]
    (s, t) = split.coprimeCert.cofactors
    exponents = [1, e1]
    (gens, target) = staircase([x0, x1], exponents)
    body = MembershipCert(ctx, target, gens, [q * t, s])
    return KdimCert([x0, x1], exponents, body)


class ZeroDimExtractor(JacobsonExtractor):
    """
    Zero-dimensional rings are Jacobson. kdim0(ctx, x) gives a KdimCert
    x^e = c*x^(e+1) + (relations). Querying the oracle at b = c gives
    1 = i + beta*(1 - a*c), and a^e*(1 - a*c) lies in the relations,
    so a^e = a^e*i modulo the relations.
    """
    tower = "zero-dimensional"

    def __init__(self, kdim0, controls=None):
        super().__init__(controls)
        self.kdim0 = kdim0

    def run(self, handle, a, oracle):
        ctx = handle.ctx
        ring = ctx.ring
        gens = handle.generators
        nU = len(gens)
        if a.isZero():
            return zeroCert(ctx, gens, a)

        kd = self.kdim0(ctx, a)
        e = kd.exponents[0]
        c = kd.body.cofactors[0]
        kappa = kd.body.relationCofactors
        ae = a ** e

        if ctx.nf(ae).isZero():
            body = closeCert(ctx, ae, gens, [ring.zero()] * nU)
            return NilpotencyCert(a, e, body)

        ans = oracle.demand(c)
        alpha = ans.cofactors[:nU]
        beta = ans.cofactors[nU]
        cofs = [ae * al for al in alpha]
        rels = [beta * k + ae * r for (k, r) in zip(kappa, ans.relationCofactors)]
        body = MembershipCert(ctx, ae, gens, cofs, rels)
        return NilpotencyCert(a, e, body)


def unitPolyDecompose(unit, var):
    """
    A unit u = a_0 + a_1 X + ... + a_n X^n of A[X] has a_0 a unit of A 
    and a_1, ..., a_n nilpotent. The leading coefficient a_n satisfies 
    a_n^(m+1) = 0 with m the X-degree of the inverse, so the exponent
    is searched for by membership up to that bound; then u - a_n X^n
    is again a unit (by :func:`unitPlusNilpotent`) and the next
    coefficient is treated the same way.

    The ctx relations must not use var. Returns (a0Cert, nils) where
    a0Cert is a UnitCert in the coefficient ctx and nils[i] is the
    NilpotencyCert, modulo the relations only, of a_(i+1).
    """
    ctx = unit.ctx
    ring = ctx.ring
    baseCtx = coefficientCtx(ctx, var)
    X = ring.var(var)
    relations = IdealHandle(ctx, [])

    found = {}
    current = unit
    while current.unit.degreeIn(var) > 0:
        n = current.unit.degreeIn(var)
        lead = current.unit.coefficientOf(var, n)
        bound = max(current.inverse.degreeIn(var), 0) + 1
        nil = None
        for k in range(bound + 1):
            res = relations.membership(lead ** k)
            if res:
                nil = NilpotencyCert(lead, k, res)
                break
        if nil is None:
            raise jacerrors.CertificateError(
                "Leading coefficient {} of the unit {} is not nilpotent".format(
                    lead, current.unit))
        found[n] = nil

        k = nil.exponent
        sign = -1 if k % 2 else 1
        term = -lead * X ** n
        termNil = NilpotencyCert(term, k, nil.body.scaled(sign * X ** (n * k)))
        current = unitPlusNilpotent(current, termNil)

    nils = []
    for i in range(1, unit.unit.degreeIn(var) + 1):
        if i in found:
            nil = found[i]
            body = restrictToBase(nil.body, baseCtx, var)
            nils.append(NilpotencyCert(baseCtx.ring.convert(nil.element),
                nil.exponent, body))
        else:
            nils.append(zeroCert(baseCtx, [], baseCtx.ring.zero()))

    body = restrictToBase(current.body, baseCtx, var)
    a0 = UnitCert(body.generators[0], body.cofactors[0], body)
    return (a0, nils)


def assembleFromCoefficients(ctx, var, f, coefficientNils):
    """
    A NilpotencyCert for f (no generators, relations of ctx) from
    nilpotency certificates of its coefficients in var, which live in
    the coefficient ctx. The terms f_i X^i are added up with
    :func:`nilpotentSum`.
    """
    ring = ctx.ring
    X = ring.var(var)
    total = None
    for (i, fi) in enumerate(f.coefficientsIn(var)):
        if fi.isZero():
            continue
        nil = rehome(coefficientNils[i], ctx, [])
        k = nil.exponent
        term = NilpotencyCert(fi * X ** i, k, nil.body.scaled(X ** (i * k)))
        if total is None:
            total = term
        else:
            total = nilpotentSum(total, term)
    if total is None:
        total = zeroCert(ctx, [], ring.zero())
    return total


def _moveGeneratorsToRelations(oracle, f, var, tracer):
    """
    The ctx with the oracle's generators made relations, and the oracle
    for f there. The whole ideal must be free of var.
    """
    ctx = oracle.ctx
    for g in oracle.generators:
        if g.usesVar(var):
            raise jacerrors.UnsupportedTowerError(
                "Generator {} uses the variable {}".format(g, var))
    if not oracle.generators:
        return (ctx, alignOracle(oracle, ctx, [], f, tracer))
    quotientCtx = ctx.quotient(oracle.generators)
    return (quotientCtx, RebasedJacOracle(oracle, quotientCtx, [], f, tracer=tracer,
        label=lambda: oracle.label))


def snapperExtract(f, oracle, var, controls=None):
    """
    Jac 0 is Nil 0 in A[X]. One query, at b = X, shows 1 - f*X is a
    unit; its coefficients other than the constant one, which are the
    negated coefficients of f, are then nilpotent by
    :func:`unitPolyDecompose`. 

    The oracle's ideal (generators and relations) must not use var.
    Returns the NilpotencyCert for f modulo the oracle's generators.
    Raises QueryRefutedError.
    """
    if controls is None:
        controls = ExtractionControls()
    ctx = oracle.ctx
    ring = ctx.ring
    f = ring.convert(f)
    if f.isZero():
        return zeroCert(ctx, oracle.generators, f)

    (workCtx, workOracle) = _moveGeneratorsToRelations(oracle, f, var,
        controls.tracer)
    X = ring.var(var)
    ans = workOracle.demand(X)
    u = ans.generators[0]
    unit = UnitCert(u, ans.cofactors[0], ans)
    (a0, nils) = unitPolyDecompose(unit, var)

    coefficientNils = [negateNil(nils[i]) for i in range(f.degreeIn(var) + 1)]
    cert = assembleFromCoefficients(workCtx, var, f, coefficientNils)
    if workCtx != ctx:
        cert = rehome(cert, ctx, oracle.generators)
    return finishCert(cert, controls)


def invertInSubring(tInv, dep, aCtx):
    """
    u in A is a unit t^(-1) of B, and t satisfies the dependence
    a^l t^m + c_(m-1) t^(m-1) + ... + c_0 = 0 over A. Multiplying by
    u^m and using u*t = 1 gives 

        a^l = u*s + E,   s = -(c_(m-1) + c_(m-2) u + ... + c_0 u^(m-1))

    with E in A mapping to 0 in B, so in the relations of aCtx when
    those are the kernel of A -> B. Returns (l, s, cert) with cert the
    MembershipCert of a^l against [u] in aCtx.
    """
    ring = aCtx.ring
    u = ring.convert(tInv.unit)
    a = ring.convert(dep.localizer)
    m = dep.degree
    coefficients = [ring.convert(c) for c in dep.coefficients]
    s = ring.zero()
    uPower = ring.one()
    for i in range(m - 1, -1, -1):
        s = s - coefficients[i] * uPower
        uPower = uPower * u
    cert = closeCert(aCtx, a ** dep.l, [u], [s])
    return (dep.l, s, cert)


def quitteOracle(a, aPrime, bInverses, integrality, aCtx, tracer=None):
    """
    a * ((Jac_B 0) meet A) lies in Jac_A 0, when B_a is integral over
    A_a. With a' in Jac_B 0 given by bInverses (z -> UnitCert of 
    1 - a'*z in B) and integrality (t -> IntegralityCert of t over A
    with localizer a), the returned oracle is for a*a' modulo 0 in aCtx:
    a is nilpotent modulo 1 - a'*z by :func:`invertInSubring`, and
    :func:`jacradix.certificates.cutJac` does the rest.
    """
    ring = aCtx.ring
    a = ring.convert(a)
    aPrime = ring.convert(aPrime)

    def inner(z):
        tInv = bInverses(z)
        dep = integrality(tInv.inverse)
        if ring.convert(dep.localizer) != a:
            raise jacerrors.CertificateError(
                "Integrality localizer {} is not {}".format(dep.localizer, a))
        (M, s, body) = invertInSubring(tInv, dep, aCtx)
        nil = NilpotencyCert(a, M, body)
        return NilJacOracle(nil, tracer=tracer,
            label=lambda: "nilpotent {} mod {}".format(a, body.generators[0]))

    return cutJac(inner, a, aPrime, aCtx, [], tracer=tracer)


def emertonExtract(base, a, bCtx, presentation, var, J, f, oracle, controls=None):
    """
    a * Jac_B J lies in Nil_B J, for B = bCtx presented over the ring A 
    of the other variables by the relation presentation, of positive
    degree in var with leading coefficient a. base extracts for A (and
    its quotients). oracle is for f modulo J. Returns the
    NilpotencyCert for a*f modulo J.

    Over B' = B/J, f satisfies a^l f^n + c_(n-1) f^(n-1) + ... + c_0 = 0.
    Put g_0 = a^l, g_k = f*g_(k-1) + c_(n-k), so g_n = 0 in B', and let
    B_k = B'/<g_k, ..., g_(n-1)>. Then a*f is nilpotent in B_0, where
    a^l = 0, and step k goes from B_(k-1) = B_k/<g_(k-1)> to B_k: there
    c_(n-k) = -f*g_(k-1) lies in Jac 0, so a*c_(n-k) is nilpotent in the
    image A_k of A (Quitte and the base extractor), which makes
    a*f*g_(k-1) nilpotent, and :func:`cutNil` finishes. 

    Raises QueryRefutedError.
    """
    if controls is None:
        controls = base.controls
    tracer = controls.tracer
    ring = bCtx.ring
    a = ring.convert(a)
    f = ring.convert(f)
    presentation = ring.convert(presentation)
    gensJ = J.generators
    oracle = alignOracle(oracle, bCtx, gensJ, f, tracer)
    af = a * f
    if a.isZero():
        return zeroCert(bCtx, gensJ, af)

    degree = presentation.degreeIn(var)
    if degree < 1 or presentation.coefficientOf(var, degree) != a:
        raise jacerrors.CertificateError(
            "{} does not have leading coefficient {} in {}".format(presentation,
                a, var))
    keepVars = [v for v in ring.varNames if v != var]

    bPrime = bCtx.quotient(gensJ)
    dep = integralDependence(bPrime, f, presentation, var)
    n = dep.degree
    l = dep.l
    c = dep.coefficients
    g = [bPrime.nf(a ** l)]
    for k in range(1, n + 1):
        g.append(bPrime.nf(f * g[-1] + c[n - k]))

    ctxs = {n: bPrime}
    for k in range(n - 1, -1, -1):
        ctxs[k] = ctxs[k + 1].quotient([g[k]])

    tracer.displayInfo("Emerton: a={}, f={}, dependence of degree {} in {}",
        a, f, n, bPrime.describe())
    cert = NilpotencyCert(af, l, closeCert(ctxs[0], af ** l, [], []))

    for k in range(1, n + 1):
        bk = ctxs[k]
        coeff = c[n - k]
        y = g[k - 1]
        vOracle = RebasedJacOracle(oracle, bk, [], coeff, multiplier=-y,
            tracer=tracer,
            label=lambda i=n - k: "coefficient {} of {}".format(i, oracle.label))

        aHandle = contraction(IdealHandle(bk.free(), list(bk.relations)), keepVars)
        aCtx = RingCtx(aHandle.ctx.ring, aHandle.generators)

        def bInverses(z, bk=bk, vOracle=vOracle):
            ans = vOracle.demand(bk.ring.convert(z))
            return UnitCert(ans.generators[0], ans.cofactors[0], ans)

        def integrality(t, bk=bk):
            return integralDependence(bk, t, presentation, var)

        qOracle = quitteOracle(a, coeff, bInverses, integrality, aCtx, tracer)
        aCoeff = aCtx.ring.convert(a * coeff)
        baseCert = base.extractOrRaise(IdealHandle(aCtx, []), aCoeff, qOracle)
        e = baseCert.exponent

        xy = af * y
        c1 = NilpotencyCert(xy, e, closeCert(bk, xy ** e, [], []))
        c2 = transport(TRANSPORT_FROM_QUOTIENT, cert, IdealHandle(bk, [y]))
        cert = finishCert(cutNil(c1, c2), controls)

    return rehome(cert, bCtx, gensJ)


def localizationCtx(aCtx, a, prefix=None):
    """
    The presentation A[T]/<a*T - 1> of A_a. Returns (ctx, T).
    """
    ring = aCtx.ring
    if prefix is None:
        prefix = ExtractionControls().freshVariable
    tName = freshVariable(ring, prefix)
    bigRing = ring.extend([tName])
    a = bigRing.convert(a)
    rels = [bigRing.convert(r) for r in aCtx.relations]
    rels.append(a * bigRing.var(tName) - 1)
    return (RingCtx(bigRing, rels), tName)


def localizedExtract(base, a, var, J, f, oracle, controls=None):
    """
    The localisation A_a, presented as A[T]/<a*T - 1> with T = var, is
    Jacobson. :func:`emertonExtract` with that presentation gives 
    (a*f)^N in J, and f^N = T^N (a*f)^N + f^N (1 - (a*T)^N) removes the
    factor a. Raises QueryRefutedError.
    """
    ctx = J.ctx
    ring = ctx.ring
    a = ring.convert(a)
    f = ring.convert(f)
    T = ring.var(var)
    presentation = a * T - 1
    cert = emertonExtract(base, a, ctx, presentation, var, J, f, oracle, controls)
    N = cert.exponent

    TN = T ** N
    cofs = [TN * c for c in cert.body.cofactors]
    fN = f ** N
    if presentation in ctx.relations:
        rels = [TN * r for r in cert.body.relationCofactors]
        geometric = ring.zero()
        aTPower = ring.one()
        for i in range(N):
            geometric = geometric + aTPower
            aTPower = aTPower * (a * T)
        idx = ctx.relations.index(presentation)
        rels[idx] = rels[idx] - fN * geometric
        body = MembershipCert(ctx, fN, J.generators, cofs, rels)
    else:
        body = closeCert(ctx, fN, J.generators, cofs)
    return NilpotencyCert(f, N, body)


def integralExtract(base, bCtx, presentation, var, J, f, oracle, controls=None):
    """
    An integral extension B = A[X]/<presentation, ...> of a Jacobson
    ring, with presentation monic in var, is Jacobson: this is
    :func:`emertonExtract` with a = 1. Raises QueryRefutedError.
    """
    ring = bCtx.ring
    presentation = ring.convert(presentation)
    n = presentation.degreeIn(var)
    if n < 1 or presentation.coefficientOf(var, n) != 1:
        raise jacerrors.CertificateError(
            "{} is not monic in {}".format(presentation, var))
    cert = emertonExtract(base, ring.one(), bCtx, presentation, var, J, f,
        oracle, controls)
    return NilpotencyCert(ring.convert(f), cert.exponent, cert.body)


class NullstellensatzExtractor(JacobsonExtractor):
    """
    If A is Jacobson then so is A[X], X = var, with base the extractor
    for A. 

    The query b = X gives g in J with 1 in <g, 1 - f*X>. With 
    g = a_0 + ... + a_n X^n and C_k = A[X]/<J, a_(k+1), ..., a_n>, f is
    nilpotent in C_(-1) because 1 - f*X is a unit there. In C_k,
    X is integral over A after inverting a_k, so :func:`emertonExtract`
    makes a_k*f nilpotent, and :func:`cutNil` with f nilpotent in
    C_(k-1) = C_k/<a_k> makes f nilpotent in C_k. C_n is A[X]/J.

    Relations of the ctx that use var are treated as part of J, the
    others as relations of A.
    """
    def __init__(self, base, var, controls=None):
        super().__init__(controls)
        self.base = base
        self.var = var
        self.tower = "{}[{}]".format(base.tower, var)

    def run(self, handle, f, oracle):
        ctx = handle.ctx
        ring = ctx.ring
        var = self.var
        tracer = self.tracer
        if not ring.hasVar(var):
            raise jacerrors.UnsupportedTowerError(
                "{} has no variable {}".format(ctx.describe(), var))
        if f.isZero():
            return zeroCert(ctx, handle.generators, f)

        baseRels = [r for r in ctx.relations if not r.usesVar(var)]
        varRels = [r for r in ctx.relations if r.usesVar(var)]
        work = RingCtx(ring, baseRels)
        G = handle.generators + varRels
        oracle = alignOracle(oracle, work, G, f, tracer)

        X = ring.var(var)
        ans = oracle.demand(X)
        nG = len(G)
        g = ring.zero()
        for (h, gen) in zip(ans.cofactors[:nG], G):
            g = g + h * gen
        # only its class modulo the relations of A matters
        g = work.nf(g)
        coeffs = g.coefficientsIn(var)
        n = len(coeffs) - 1
        tracer.displayInfo("Nullstellensatz in {}: g = {}", var, g)

        C = {n: work.quotient(G)}
        for k in range(n - 1, -2, -1):
            C[k] = C[k + 1].quotient([coeffs[k + 1]])

        D = work.quotient(coeffs)
        u = 1 - f * X
        unit = UnitCert(u, ans.cofactors[nG], closeCert(D, 1, [u], [ans.cofactors[nG]]))
        (a0, nils) = unitPolyDecompose(unit, var)
        coefficientNils = [negateNil(nils[i]) for i in range(f.degreeIn(var) + 1)]
        cert = assembleFromCoefficients(D, var, f, coefficientNils)
        cert = rehome(cert, C[-1], [])

        for k in range(n + 1):
            ck = C[k]
            ak = coeffs[k]
            if ak.isZero():
                c1 = zeroCert(ck, [], ak * f)
            elif k == 0:
                c1 = NilpotencyCert(ak * f, 1, closeCert(ck, ak * f, [], []))
            else:
                truncated = ring.zero()
                for i in range(k + 1):
                    truncated = truncated + coeffs[i] * X ** i
                kOracle = RebasedJacOracle(oracle, ck, [], f, tracer=tracer,
                    label=lambda o=oracle: o.label)
                c1 = emertonExtract(self.base, ak, ck, truncated, var,
                    IdealHandle(ck, []), f, kOracle, self.controls)
            c2 = transport(TRANSPORT_FROM_QUOTIENT, cert, IdealHandle(ck, [ak]))
            cert = finishCert(cutNil(c1, c2), self.controls)

        return rehome(cert, ctx, handle.generators)


def groundExtractor(ctx, controls=None):
    """
    The extractor for the coefficient ring of ctx: Q, Z/n (when some 
    relation is a nonzero integer) or Z.
    """
    ring = ctx.ring
    if ring.base == BASE_QQ:
        return ZeroDimExtractor(kdim0WitnessField, controls)
    if any(r.isConstant() for r in ctx.relations):
        return ZeroDimExtractor(kdim0WitnessZmod, controls)
    return ZExtractor(controls)


def buildExtractor(ctx, controls=None):
    """
    The extractor for the whole tower of ctx: the ground extractor, then
    one Nullstellensatz step per variable, in order.
    """
    extractor = groundExtractor(ctx, controls)
    for var in ctx.ring.varNames:
        extractor = NullstellensatzExtractor(extractor, var, controls)
    return extractor


def extractInCtx(ctx, generators, f, controls=None, oracle=None):
    """
    Decide f in Jac <generators> in ctx. Returns a NilpotencyCert for
    f modulo the generators, or the Refuted record of the failing 
    query. Unless oracle is given, it is synthesised by the ideal
    engine, and then a Refuted proves f is not in Jac. 
    """
    if controls is None:
        controls = ExtractionControls()
    handle = IdealHandle(ctx, generators)
    f = ctx.ring.convert(f)
    if oracle is None:
        oracle = MembershipJacOracle(ctx, handle.generators, f,
            tracer=controls.tracer, label="Jac")
    extractor = buildExtractor(ctx, controls)
    return extractor.extract(handle, f, oracle)


def iteratedExtract(ground, varNames, generators, f, controls=None):
    """
    As :func:`extractInCtx`, for the ring ground[varNames]. ground is a
    ctx with no variables (Z, Q or Z/n) or its text form.
    """
    if isinstance(ground, str):
        ground = exprparser.parseRing(ground)
    if ground.ring.nvars != 0:
        raise jacerrors.UnsupportedTowerError(
            "Ground ring {} has variables".format(ground.describe()))
    ctx = ground.withRing(ground.ring.extend(varNames))

    def toPoly(p):
        if isinstance(p, str):
            return exprparser.parsePolynomial(p, ctx)
        return ctx.ring.convert(p)
    return extractInCtx(ctx, [toPoly(g) for g in generators], toPoly(f), controls)
