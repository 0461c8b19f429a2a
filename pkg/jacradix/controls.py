"""
Controls for the extraction algorithms. 

Defaults for every control can be set with environment variables;
see the documentation page on environment variables.

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

import os

from . import cuitrace

DEFAULT_EXPONENTCEILING = int(os.getenv('JACRADIX_DFLT_EXPONENTCEILING',
    default=2**16))
DEFAULT_TIGHTEN = (os.getenv('JACRADIX_DFLT_TIGHTEN', default='1') == '1')
DEFAULT_TRACE = (os.getenv('JACRADIX_DFLT_TRACE', default='0') == '1')
DEFAULT_NUMWORKERS = int(os.getenv('JACRADIX_DFLT_NUMWORKERS', default=1))
DEFAULT_FRESHVAR = os.getenv('JACRADIX_DFLT_FRESHVAR', default='T_')


class ExtractionControls(object):
    """
    Controls for the operation of the extractors, for use with 
    :func:`jacradix.jacobson.iteratedExtract` and the extractor classes.

    This object starts with default values for all controls, and 
    has methods for setting each of them to something else. 

    Attributes are:
        * **exponentCeiling** Any exponent above this aborts with ExponentCeilingError
        * **tighten**         Shrink exponents by membership search after each step
        * **tracer**          Trace object (see :mod:`jacradix.cuitrace`)
        * **numWorkers**      Number of threads used by batch mode
        * **freshVariable**   Name prefix for adjoined variables

    """
    def __init__(self):
        self.exponentCeiling = DEFAULT_EXPONENTCEILING
        self.tighten = DEFAULT_TIGHTEN
        if DEFAULT_TRACE:
            self.tracer = cuitrace.CUITrace()
        else:
            self.tracer = cuitrace.SilentTrace()
        self.numWorkers = DEFAULT_NUMWORKERS
        self.freshVariable = DEFAULT_FRESHVAR
        self.checkValues()

    def checkValues(self):
        """
        Raise ValueError if the current combination is invalid
        """
        if self.exponentCeiling < 1:
            msg = "exponentCeiling must be >= 1, not {}".format(self.exponentCeiling)
            raise ValueError(msg)
        if self.numWorkers < 1:
            msg = "numWorkers must be >= 1, not {}".format(self.numWorkers)
            raise ValueError(msg)

    def setExponentCeiling(self, exponentCeiling):
        """
        Set the largest exponent any step may produce. The default is
        2**16, which desk-scale problems never come near. 
        """
        self.exponentCeiling = exponentCeiling
        self.checkValues()

    def setTighten(self, tighten):
        """
        If True (the default), after each combinator step the
        exponent is replaced by the smallest one whose power is still
        a member, found by membership tests. This keeps exponents from
        multiplying up through nested cut steps. Certificates are
        equally valid either way.
        """
        self.tighten = tighten

    def setTracer(self, tracer):
        "Set the trace object"
        self.tracer = tracer

    def setNumWorkers(self, numWorkers):
        "Number of threads for batch mode"
        self.numWorkers = numWorkers
        self.checkValues()

    def setFreshVariable(self, freshVariable):
        "Name prefix for variables adjoined by the Rabinowitsch trick"
        self.freshVariable = freshVariable
