"""
Contains the tests used to check the jacradix install.

Run them all with the testjacradix command, which calls
:func:`jacradix.jrtests.jrtestutils.testAll`.
"""
