"""
Text syntax for rings, polynomials and ideals.

A ring is written as a base, ``Z``, ``Q`` or ``Z/n``, then zero or more
variable blocks ``[x,y]``, then optionally a quotient ``/ <g1, g2>``::

    Z/12[x]
    Q[x,y]/<x^2, y^3 - x>

Polynomials use ``+ - * ^``, parentheses and integer literals; ``/`` may
only divide by a nonzero constant, which makes ``p/q`` a rational
literal. Over Z the result must still have integer coefficients. The
output of str() on a polynomial parses back to the same polynomial.

Errors raise :class:`jacradix.jacerrors.ParseError` with the byte
offset of the offending token.

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

import re
from fractions import Fraction

from . import jacerrors
from . import exactarith
from .polyring import PolyRing, RingCtx, BASE_ZZ, BASE_QQ

TOKEN_INT = 'int'
TOKEN_IDENT = 'ident'
TOKEN_OP = 'op'
TOKEN_END = 'end'

OPERATORS = "+-*/^()[],<>"

tokenPattern = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.DOTALL)


class Token(object):
    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset

    def __repr__(self):
        return "Token({}, {!r}, {})".format(self.kind, self.text, self.offset)


def tokenize(text):
    """
    List of Tokens, ending with a TOKEN_END. Offsets are in bytes of
    the UTF-8 encoding.
    """
    tokens = []
    pos = 0
    while True:
        m = tokenPattern.match(text, pos)
        if m is None or m.end() == m.start() or (m.lastindex is None):
            break
        i = m.start(m.lastindex)
        offset = len(text[:i].encode('utf-8'))
        if m.group(1) is not None:
            tokens.append(Token(TOKEN_INT, m.group(1), offset))
        elif m.group(2) is not None:
            tokens.append(Token(TOKEN_IDENT, m.group(2), offset))
        else:
            ch = m.group(3)
            if ch not in OPERATORS:
                raise jacerrors.ParseError("Unexpected character '{}'".format(ch),
                    offset)
            tokens.append(Token(TOKEN_OP, ch, offset))
        pos = m.end()
    tokens.append(Token(TOKEN_END, '', len(text.encode('utf-8'))))
    return tokens


class Parser(object):
    """
    Recursive descent over a token list. The ring is needed for
    polynomials, and is set by parseRingSpec() or given up front.

        expr  := term (('+' | '-') term)*
        term  := unary (('*' | '/') unary)*
        unary := ('+' | '-') unary | power
        power := atom ('^' INT)?
        atom  := INT | IDENT | '(' expr ')'

    """
    def __init__(self, text, ring=None):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        if tok.kind != TOKEN_END:
            self.pos += 1
        return tok

    def isOp(self, op):
        tok = self.peek()
        return tok.kind == TOKEN_OP and tok.text == op

    def expectOp(self, op):
        tok = self.peek()
        if not self.isOp(op):
            raise jacerrors.ParseError("Expected '{}'".format(op), tok.offset)
        return self.advance()

    def expectEnd(self):
        tok = self.peek()
        if tok.kind != TOKEN_END:
            raise jacerrors.ParseError("Unexpected '{}'".format(tok.text),
                tok.offset)

    def parseRingSpec(self):
        tok = self.advance()
        if tok.kind != TOKEN_IDENT or tok.text not in ('Z', 'Q'):
            raise jacerrors.ParseError("Ring must start with Z or Q", tok.offset)
        base = BASE_ZZ if tok.text == 'Z' else BASE_QQ

        modulus = None
        if self.isOp('/') and self.tokens[self.pos + 1].kind == TOKEN_INT:
            slash = self.advance()
            if base != BASE_ZZ:
                raise jacerrors.ParseError("Only Z can take a modulus", slash.offset)
            numTok = self.advance()
            modulus = exactarith.decimalToInt(numTok.text)
            if modulus <= 1:
                raise jacerrors.ParseError("Modulus must be > 1", numTok.offset)

        varNames = []
        while self.isOp('['):
            self.advance()
            while True:
                tok = self.advance()
                if tok.kind != TOKEN_IDENT:
                    raise jacerrors.ParseError("Expected a variable name", tok.offset)
                if tok.text in varNames or tok.text in ('Z', 'Q'):
                    raise jacerrors.ParseError(
                        "Bad or repeated variable '{}'".format(tok.text), tok.offset)
                varNames.append(tok.text)
                if self.isOp(','):
                    self.advance()
                    continue
                self.expectOp(']')
                break
        self.ring = PolyRing(base, varNames)

        relations = []
        if self.isOp('/'):
            self.advance()
            relations = self.parseBracketedList()
        self.expectEnd()
        return RingCtx(self.ring, relations, declaredModulus=modulus)

    def parseBracketedList(self):
        self.expectOp('<')
        items = []
        if self.isOp('>'):
            self.advance()
            return items
        while True:
            items.append(self.parseExpr())
            if self.isOp(','):
                self.advance()
                continue
            self.expectOp('>')
            return items

    def parseIdealList(self):
        "Comma separated polynomials, optionally inside < >"
        if self.isOp('<'):
            items = self.parseBracketedList()
        elif self.peek().kind == TOKEN_END:
            items = []
        else:
            items = [self.parseExpr()]
            while self.isOp(','):
                self.advance()
                items.append(self.parseExpr())
        self.expectEnd()
        return items

    def parseExpr(self):
        value = self.parseTerm()
        while self.isOp('+') or self.isOp('-'):
            op = self.advance().text
            rhs = self.parseTerm()
            value = value + rhs if op == '+' else value - rhs
        return value

    def parseTerm(self):
        value = self.parseUnary()
        while self.isOp('*') or self.isOp('/'):
            tok = self.advance()
            rhs = self.parseUnary()
            if tok.text == '*':
                value = value * rhs
            else:
                value = self.divide(value, rhs, tok.offset)
        return value

    def divide(self, value, divisor, offset):
        if not divisor.isConstant() or divisor.isZero():
            raise jacerrors.ParseError("Can only divide by a nonzero constant",
                offset)
        c = Fraction(divisor.constantValue())
        terms = {}
        for (exp, coeff) in value.terms.items():
            q = Fraction(coeff) / c
            if self.ring.base == BASE_ZZ:
                if q.denominator != 1:
                    raise jacerrors.ParseError(
                        "Division leaves a non-integer coefficient over Z", offset)
                q = q.numerator
            terms[exp] = q
        return self.ring.fromTerms(terms)

    def parseUnary(self):
        if self.isOp('-'):
            self.advance()
            return -self.parseUnary()
        if self.isOp('+'):
            self.advance()
            return self.parseUnary()
        return self.parsePower()

    def parsePower(self):
        value = self.parseAtom()
        if self.isOp('^'):
            self.advance()
            tok = self.advance()
            if tok.kind != TOKEN_INT:
                raise jacerrors.ParseError("Exponent must be a natural number",
                    tok.offset)
            value = value ** int(tok.text)
        return value

    def parseAtom(self):
        tok = self.advance()
        if tok.kind == TOKEN_INT:
            return self.ring.const(exactarith.decimalToInt(tok.text))
        if tok.kind == TOKEN_IDENT:
            if not self.ring.hasVar(tok.text):
                raise jacerrors.ParseError("Unknown variable '{}'".format(tok.text),
                    tok.offset)
            return self.ring.var(tok.text)
        if tok.kind == TOKEN_OP and tok.text == '(':
            value = self.parseExpr()
            self.expectOp(')')
            return value
        if tok.kind == TOKEN_END:
            raise jacerrors.ParseError("Unexpected end of input", tok.offset)
        raise jacerrors.ParseError("Unexpected '{}'".format(tok.text), tok.offset)


def parseRing(text):
    """
    Parse a ring descriptor into a RingCtx
    """
    return Parser(text).parseRingSpec()


def parsePolynomial(text, ctx):
    """
    Parse text as a polynomial in the ring of ctx (a RingCtx or PolyRing)
    """
    ring = ctx.ring if isinstance(ctx, RingCtx) else ctx
    parser = Parser(text, ring)
    value = parser.parseExpr()
    parser.expectEnd()
    return value


def parseIdeal(text, ctx):
    """
    Parse a list of generators such as "x, y^2" or "<x, y^2>"
    """
    ring = ctx.ring if isinstance(ctx, RingCtx) else ctx
    return Parser(text, ring).parseIdealList()
