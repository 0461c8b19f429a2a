"""
All exceptions used within jacradix. 

Negative answers to decision questions (not a member, not a unit, not
in the radical) are ordinary return values, not exceptions. The classes
here are for malformed input, unsupported rings and guardrails. 

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


class JacRadixError(Exception):
    """
    Base class for jacradix exceptions
    """


class RingMismatchError(JacRadixError):
    "Operands belong to different rings or ring contexts"


class UnsupportedTowerError(JacRadixError):
    "Ring descriptor is outside the supported Z, Q and Z/n towers"


class NotInvertibleError(JacRadixError):
    """
    Element is not invertible modulo n. The gcd attribute is a
    nontrivial common divisor proving it.
    """
    def __init__(self, gcd, msg=None):
        if msg is None:
            msg = "Not invertible, gcd witness is {}".format(gcd)
        super().__init__(msg)
        self.gcd = gcd


class NotDivisibleError(JacRadixError):
    "Exact integer division failed"
    def __init__(self, divisor, dividend):
        msg = "{} does not divide {}".format(divisor, dividend)
        super().__init__(msg)
        self.divisor = divisor
        self.dividend = dividend


class DegenerateRelationError(JacRadixError):
    "Presentation polynomial has degree 0 in the given variable"


class CertificateError(JacRadixError):
    "A certificate could not be built from the given inputs"


class VerificationError(JacRadixError):
    "Certificate failed to replay"


class QueryRefutedError(JacRadixError):
    """
    An oracle query could not be answered. The refuted attribute
    holds the :class:`jacradix.certificates.Refuted` record, whose
    normal form trace is a sound refutation. 
    """
    def __init__(self, refuted):
        msg = "Query refuted at b = {}".format(refuted.b)
        super().__init__(msg)
        self.refuted = refuted


class ExponentCeilingError(JacRadixError):
    "An exponent grew beyond the configured ceiling"


class ParseError(JacRadixError):
    """
    Syntax error in a ring or polynomial string. The offset
    attribute is the byte offset of the problem.
    """
    def __init__(self, message, offset):
        super().__init__("{} (at byte offset {})".format(message, offset))
        self.message = message
        self.offset = offset
