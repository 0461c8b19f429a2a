"""
Integral dependence of an element of A[X]/<g> over A, after
localisation at the leading coefficient a of g.

:func:`mulMatrix` writes multiplication by a^l*f on the basis
1, X, ..., X^(n-1) as a matrix over A, clearing the divisions by a
that pseudo-division needs into the power l. :func:`charPoly` is the
division-free (Berkowitz) characteristic polynomial, so it works over
any coefficient ring. The determinant trick then gives 

    chi(a^l f) = 0  in A[X]/<g>

exactly, with no further power of a, and :func:`integralDependence`
packages that as an :class:`jacradix.certificates.IntegralityCert`.

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

import numpy

from . import jacerrors
from .certificates import IntegralityCert, closeCert


class MulMatrix(object):
    """
    Multiplication by a^denominatorPower * f on basis, as a numpy
    object array of polynomials. Column j holds the coordinates of 
    a^l * f * basis[j], so matrix[i, j] is the coefficient of X^i.
    """
    def __init__(self, matrix, basis, denominatorPower, f, g, var, a):
        self.matrix = matrix
        self.basis = basis
        self.denominatorPower = denominatorPower
        self.f = f
        self.g = g
        self.var = var
        self.a = a

    @property
    def size(self):
        return len(self.basis)

    def residuals(self):
        """
        For each j, a^l f basis[j] - sum_i matrix[i,j] basis[i]. These
        all lie in <g>.
        """
        ring = self.f.ring
        scale = self.a ** self.denominatorPower * self.f
        result = []
        for j in range(self.size):
            total = scale * self.basis[j]
            for i in range(self.size):
                total = total - self.matrix[i, j] * self.basis[i]
            result.append(total)
        return result

    def __repr__(self):
        return "MulMatrix(n={}, l={}, f={}, g={})".format(self.size,
            self.denominatorPower, self.f, self.g)


def pseudoReduce(h, g, var):
    """
    Reduce h below the var-degree n of g. Returns (k, r) with
    a^k h = r + q g for the leading coefficient a of g. A step does not
    count towards k when a is 1.
    """
    ring = h.ring
    n = g.degreeIn(var)
    a = g.coefficientOf(var, n)
    X = ring.var(var)
    k = 0
    r = h
    d = r.degreeIn(var)
    while d >= n:
        c = r.coefficientOf(var, d)
        shift = X ** (d - n)
        if a == 1:
            r = r - c * shift * g
        else:
            r = a * r - c * shift * g
            k += 1
        d = r.degreeIn(var)
    return (k, r)


def mulMatrix(f, g, var, a=None):
    """
    The MulMatrix of f in ring/<g>, where g has degree n >= 1 in var with
    leading coefficient a. Raises DegenerateRelationError when n == 0.
    """
    ring = f.ring
    g = ring.convert(g)
    n = g.degreeIn(var)
    if n < 1:
        raise jacerrors.DegenerateRelationError(
            "Relation {} has degree {} in {}".format(g, n, var))
    lead = g.coefficientOf(var, n)
    if a is not None and ring.convert(a) != lead:
        raise jacerrors.CertificateError(
            "{} is not the leading coefficient of {}".format(a, g))
    a = lead

    (fPower, r) = pseudoReduce(f, g, var)
    X = ring.var(var)
    basis = [X ** i for i in range(n)]
    columns = [pseudoReduce(r * basis[j], g, var) for j in range(n)]
    colPower = max(k for (k, c) in columns)

    matrix = numpy.empty((n, n), dtype=object)
    for (j, (k, c)) in enumerate(columns):
        c = a ** (colPower - k) * c
        coeffs = c.coefficientsIn(var)
        for i in range(n):
            matrix[i, j] = coeffs[i] if i < len(coeffs) else ring.zero()
    return MulMatrix(matrix, basis, fPower + colPower, f, g, var, a)


def charPoly(M):
    """
    Coefficients [1, c_1, ..., c_n] of det(T*Id - M), highest degree
    first, by Berkowitz's algorithm. M is a MulMatrix or a square numpy
    object array; no division is used.
    """
    if isinstance(M, MulMatrix):
        A = M.matrix
    else:
        A = numpy.asarray(M, dtype=object)
    n = A.shape[0]
    if n == 0:
        return [1]

    vect = [1, -A[0, 0]]
    for r in range(1, n):
        R = A[r, :r]
        S = A[:r, r]
        sub = A[:r, :r]

        # 1, -a_rr, -R.S, -R.sub.S, ... , -R.sub^(r-1).S
        toeplitz = [1, -A[r, r]]
        v = list(S)
        for k in range(r):
            toeplitz.append(-_dot(R, v))
            v = [_dot(sub[i, :], v) for i in range(r)]

        newVect = []
        for i in range(r + 2):
            total = 0
            for j in range(min(i, r) + 1):
                total = total + toeplitz[i - j] * vect[j]
            newVect.append(total)
        vect = newVect
    return vect


def _dot(row, col):
    total = 0
    for (x, y) in zip(row, col):
        total = total + x * y
    return total


def integralDependence(ctx, f, g, var):
    """
    An IntegralityCert for f over the ring of the other variables, using
    the relation g of ctx. With M the multiplication matrix of f
    (power l) and chi = T^n + p_1 T^(n-1) + ... + p_n its characteristic
    polynomial:

        a^(l*n) f^n + sum_j p_(n-j) a^(l*j) f^j  is in <g>

    The body holds the relation cofactors of that polynomial.
    """
    ring = ctx.ring
    f = ring.convert(f)
    g = ring.convert(g)
    M = mulMatrix(f, g, var)
    chi = charPoly(M)
    n = M.size
    l = M.denominatorPower
    a = M.a

    aL = a ** l
    coefficients = []
    aPower = ring.one()
    for j in range(n):
        coefficients.append(ring.convert(chi[n - j]) * aPower)
        aPower = aPower * aL

    dependence = aPower * f ** n
    fPower = ring.one()
    for c in coefficients:
        dependence = dependence + c * fPower
        fPower = fPower * f
    body = closeCert(ctx, dependence, [], [])
    return IntegralityCert(f, a, l * n, coefficients, body)
