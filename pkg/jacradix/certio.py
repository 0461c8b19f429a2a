"""
Reading and writing certificates as JSON.

Every certificate kind maps to a dictionary whose keys always come in
the same order::

    kind, ring, [order, block_size,] element, exponent, generators,
    cofactors, relation_cofactors, <kind specific keys>, sub_certs

The ring is the text form of the RingCtx (see
:mod:`jacradix.exprparser`), polynomials are strings in that ring and
all integers are decimal strings. Reading parses everything back, so
a loaded certificate replays with :func:`loadedVerify` using nothing
but arithmetic.

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

import json

from . import jacerrors
from . import exactarith
from . import exprparser
from .polyring import PolyRing, ORDER_DEGREVLEX
from .idealengine import NormalFormTrace
from .certificates import MembershipCert, NilpotencyCert, UnitCert
from .certificates import IntegralityCert, KdimCert, Refuted, Ok, Mismatch
from .certificates import staircase

KIND_BUNDLE = 'bundle'


class CertBundle(object):
    """
    A list of certificates written as one file, e.g. the answers of
    several oracle queries. It verifies when every member does.
    """
    kind = KIND_BUNDLE

    def __init__(self, certs, label=None):
        self.certs = list(certs)
        self.label = label

    def verify(self):
        for cert in self.certs:
            result = loadedVerify(cert)
            if not result:
                return result
        return Ok()

    def __repr__(self):
        return "CertBundle({} certificates)".format(len(self.certs))


def polyList(polys):
    return [str(p) for p in polys]


def _ringHeader(kind, ctx):
    d = {'kind': kind, 'ring': ctx.describe()}
    ring = ctx.ring
    if ring.order != ORDER_DEGREVLEX:
        d['order'] = ring.order
        d['block_size'] = str(ring.blockSize)
    return d


def _bodyFields(d, body):
    d['generators'] = polyList(body.generators)
    d['cofactors'] = polyList(body.cofactors)
    d['relation_cofactors'] = polyList(body.relationCofactors)


def certToDict(cert):
    """
    The JSON ready dictionary for any certificate, Refuted record or
    CertBundle
    """
    kind = cert.kind
    if kind == KIND_BUNDLE:
        d = {'kind': kind}
        if cert.label is not None:
            d['label'] = cert.label
        d['sub_certs'] = [certToDict(c) for c in cert.certs]
        return d

    d = _ringHeader(kind, cert.ctx)
    if kind == 'membership':
        d['element'] = str(cert.target)
        _bodyFields(d, cert)
    elif kind == 'nilpotency':
        d['element'] = str(cert.element)
        d['exponent'] = exactarith.intToDecimal(cert.exponent)
        _bodyFields(d, cert.body)
    elif kind == 'unit':
        d['element'] = str(cert.unit)
        _bodyFields(d, cert.body)
        d['inverse'] = str(cert.inverse)
    elif kind == 'integrality':
        d['element'] = str(cert.element)
        d['exponent'] = exactarith.intToDecimal(cert.l)
        _bodyFields(d, cert.body)
        d['localizer'] = str(cert.localizer)
        d['coefficients'] = polyList(cert.coefficients)
    elif kind == 'kdim':
        d['elements'] = polyList(cert.elements)
        d['exponents'] = [exactarith.intToDecimal(e) for e in cert.exponents]
        _bodyFields(d, cert.body)
    elif kind == 'refuted':
        d['element'] = str(cert.element)
        d['generators'] = polyList(cert.generators)
        d['b'] = str(cert.b)
        trace = cert.trace
        d['trace'] = {
            'input': str(trace.input),
            'remainder': str(trace.remainder),
            'quotients': polyList(trace.quotients),
            'basis': polyList(trace.basis),
            'rows': [polyList(row) for row in (trace.rows or [])]
        }
        if cert.label is not None:
            d['label'] = cert.label
    else:
        raise jacerrors.CertificateError("Unknown certificate kind '{}'".format(kind))
    d['sub_certs'] = []
    return d


def _ctxFromDict(d):
    ctx = exprparser.parseRing(d['ring'])
    if 'order' in d:
        ring = ctx.ring
        ring = PolyRing(ring.base, ring.varNames, d['order'], int(d['block_size']))
        ctx = ctx.withRing(ring)
    return ctx


def certFromDict(d):
    """
    Rebuild a certificate from certToDict output. Malformed input
    raises ParseError (bad polynomial text) or CertificateError.
    """
    try:
        kind = d['kind']
        if kind == KIND_BUNDLE:
            return CertBundle([certFromDict(s) for s in d['sub_certs']],
                d.get('label'))

        ctx = _ctxFromDict(d)

        def poly(text):
            return exprparser.parsePolynomial(text, ctx)

        def polys(key):
            return [poly(t) for t in d[key]]

        if kind == 'refuted':
            t = d['trace']
            rows = [[poly(c) for c in row] for row in t.get('rows', [])]
            trace = NormalFormTrace(poly(t['input']), poly(t['remainder']),
                [poly(q) for q in t['quotients']], [poly(b) for b in t['basis']],
                rows)
            return Refuted(poly(d['b']), trace, poly(d['element']),
                polys('generators'), ctx, d.get('label'))

        gens = polys('generators')
        cofs = polys('cofactors')
        rels = polys('relation_cofactors')
        if kind == 'membership':
            return MembershipCert(ctx, poly(d['element']), gens, cofs, rels)
        if kind == 'nilpotency':
            element = poly(d['element'])
            exponent = exactarith.decimalToInt(d['exponent'])
            body = MembershipCert(ctx, element ** exponent, gens, cofs, rels)
            return NilpotencyCert(element, exponent, body)
        if kind == 'unit':
            body = MembershipCert(ctx, ctx.ring.one(), gens, cofs, rels)
            return UnitCert(poly(d['element']), poly(d['inverse']), body)
        if kind == 'integrality':
            element = poly(d['element'])
            localizer = poly(d['localizer'])
            l = exactarith.decimalToInt(d['exponent'])
            coefficients = polys('coefficients')
            shape = IntegralityCert(element, localizer, l, coefficients,
                MembershipCert(ctx, ctx.ring.zero(), [], []))
            body = MembershipCert(ctx, shape.dependence(), gens, cofs, rels)
            return IntegralityCert(element, localizer, l, coefficients, body)
        if kind == 'kdim':
            elements = polys('elements')
            exponents = [exactarith.decimalToInt(e) for e in d['exponents']]
            (_, target) = staircase(elements, exponents)
            body = MembershipCert(ctx, target, gens, cofs, rels)
            return KdimCert(elements, exponents, body)
    except (KeyError, TypeError, ValueError) as e:
        raise jacerrors.CertificateError("Malformed certificate: {}".format(e))
    raise jacerrors.CertificateError("Unknown certificate kind '{}'".format(kind))


def certToJson(cert):
    return json.dumps(certToDict(cert), indent=2, ensure_ascii=False)


def certFromJson(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise jacerrors.ParseError("Bad JSON: {}".format(e.msg), e.pos)
    return certFromDict(d)


def writeCert(cert, filename):
    with open(filename, 'w', encoding='utf-8') as f:
        f.write(certToJson(cert))
        f.write('\n')


def readCert(filename):
    with open(filename, encoding='utf-8') as f:
        return certFromJson(f.read())


def loadedVerify(cert):
    """
    Replay anything certFromDict can return. A Refuted record is Ok
    when it is a sound refutation, see
    :meth:`jacradix.certificates.Refuted.soundnessProblem`.
    """
    if isinstance(cert, Refuted):
        problem = cert.soundnessProblem()
        if problem is None:
            return Ok()
        return Mismatch(cert.trace.remainder, "refutation: " + problem)
    return cert.verify()
