# -*- coding: utf-8 -*-
#
# groupscope documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# autodoc imports the package from the repository root
sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.githubpages',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'groupscope'
copyright = u'2025, groupscope developers'
author = u'groupscope developers'

version = u'0.0.1'
release = u'0.0.1'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# The <Purpose> blocks of the module docstrings are plain text
autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'groupscopedoc'

# -- Options for LaTeX and manual page output -----------------------------

latex_documents = [
    (master_doc, 'groupscope.tex', u'groupscope Documentation',
     u'groupscope developers', 'manual'),
]

man_pages = [
    (master_doc, 'groupscope', u'groupscope Documentation',
     [author], 1)
]
