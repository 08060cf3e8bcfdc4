# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'steklov-models'
copyright = '2026, steklov-models contributors'
author = 'steklov-models contributors'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'myst_parser',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'alabaster'
html_static_path = ['_static']

napoleon_google_docstring = True
napoleon_use_rtype = False
autodoc_member_order = 'bysource'
toc_object_entries_show_parents = 'all'
