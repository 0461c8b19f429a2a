"""
Trace and message output for the terminal. 

Trace objects are how the extraction code reports what it is doing.
Every oracle query goes through displayQuery, so a CUITrace prints
the queries in the order they are made, which is the skeleton of the
proof being run. 

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

import sys
import threading

from . import exactarith


class CUITrace(object):
    """
    Writes messages and queries to a stream (stdout by default).

    displayInfo takes a template and its arguments separately and only
    formats them when there is somewhere to write, so that messages
    about huge polynomials cost nothing under a SilentTrace.
    """
    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stdout
        self.lock = threading.Lock()

    def _write(self, text):
        with self.lock:
            self.stream.write(text)

    def setLabelText(self, text):
        self._write('\n%s\n' % text)

    def displayWarning(self, text):
        self._write("Warning: %s\n" % text)

    def displayError(self, text):
        self._write("Error: %s\n" % text)

    def displayInfo(self, text, *args):
        self._write("Info: %s\n" % exactarith.safeFormat(text, *args))

    def displayQuery(self, oracle, b, result):
        self._write(queryLine(oracle, b, result) + "\n")

    def displayLines(self, lines):
        "Write lines recorded elsewhere, as one block"
        self._write("".join(line + "\n" for line in lines))


def queryLine(oracle, b, result):
    "One line describing a query made of oracle at b"
    status = "answered" if result else "refuted"
    return "Query: %s b=%s -> %s" % (oracle.label, b, status)


class SilentTrace(object):
    """
    Discards everything
    """
    def setLabelText(self, text):
        pass

    def displayWarning(self, text):
        pass

    def displayError(self, text):
        pass

    def displayInfo(self, text, *args):
        pass

    def displayQuery(self, oracle, b, result):
        pass

    def displayLines(self, lines):
        pass


class RecordingTrace(object):
    """
    Keeps every line in the lines list instead of printing it. Batch
    mode gives each query one of these and prints them in input order.
    """
    def __init__(self):
        self.lines = []
        self.queries = []

    def setLabelText(self, text):
        self.lines.append(text)

    def displayWarning(self, text):
        self.lines.append("Warning: %s" % text)

    def displayError(self, text):
        self.lines.append("Error: %s" % text)

    def displayInfo(self, text, *args):
        self.lines.append("Info: %s" % exactarith.safeFormat(text, *args))

    def displayQuery(self, oracle, b, result):
        self.queries.append((oracle.label, b, bool(result)))
        self.lines.append(queryLine(oracle, b, result))

    def displayLines(self, lines):
        self.lines.extend(lines)

    def text(self):
        return "".join(line + "\n" for line in self.lines)
