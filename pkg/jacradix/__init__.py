"""
Jacobson radical witness extraction

A Python package which, given an element a and a finitely generated
ideal I of a polynomial ring over the integers, the rationals or the
integers modulo n, either produces an explicit nilpotency certificate
(an exponent n together with a linear combination proving a^n is in I)
or a concrete refutation of the claim that a lies in the Jacobson
radical of I.

Everything produced is a certificate which can be checked by plain
polynomial arithmetic, independently of the code which found it. 
The main starting points are:
    - :func:`jacradix.jacobson.iteratedExtract` for the full pipeline
    - :mod:`jacradix.idealengine` for membership, contraction and
      normal forms
    - :mod:`jacradix.certificates` for the certificate data model,
      the verifier and the combinators

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

JACRADIX_VERSION = '1.0.0'
__version__ = JACRADIX_VERSION
