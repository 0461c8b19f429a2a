#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# jacradix documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))
# for version info
import jacradix          # noqa: E402

autodoc_mock_imports = ['numpy', 'sympy']

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'jacradix'
copyright = '2026, The jacradix developers'

# The short X.Y version.
version = jacradix.JACRADIX_VERSION
# The full version, including alpha/beta/rc tags.
release = jacradix.JACRADIX_VERSION

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = []

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'classic'

# Add any paths that contain custom static files (such as style sheets) here,
# relative to this directory.
html_static_path = ['_static']

# Output file base name for HTML help builder.
htmlhelp_basename = 'jacradixdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    ('index', 'jacradix.tex', 'jacradix Documentation',
    'The jacradix developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'jacradix', 'jacradix Documentation',
    ['The jacradix developers'], 1)
]

# Group members by type (functions, classes, ...)
autodoc_member_order = 'groupwise'
