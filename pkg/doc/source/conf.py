# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath('../../'))


# -- Project information -----------------------------------------------------

project = 'confsel'
copyright = '2020, confsel developers'
author = 'confsel developers'
version = '0.1.0'

master_doc = 'index'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.napoleon',
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'autoapi.extension'
]
autodoc_typehints = 'none'
autodoc_inherit_docstrings = False
autoapi_dirs = ['../../confsel']
autoapi_generate_api_docs = False

templates_path = ['_templates']
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
add_function_parentheses = False
autodoc_default_options = {
    'member-order': 'bysource',
    'no-undoc-members': True
}
html_static_path = ['_static']
