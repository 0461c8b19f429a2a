"""
Sub-module for command line entry points

The main() functions here are turned into console scripts by the
entry points in pyproject.toml, so that the same code runs whether
jacradix is installed with pip or conda.
"""
