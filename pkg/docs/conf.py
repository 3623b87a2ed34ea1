# -*- coding: utf-8 -*-
#
# qsdesign documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from qsdesign.version import __version__  # noqa: E402

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage',
              'sphinx.ext.viewcode', 'sphinx.ext.todo']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'qsdesign'
copyright = u'2024, qsdesign developers'

# The full version, including alpha/beta/rc tags.
release = __version__
# The short X.Y version.
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'alabaster'
html_static_path = []
html_show_sourcelink = False
htmlhelp_basename = 'qsdesigndoc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index', 'qsdesign.tex', u'qsdesign Documentation',
     u'qsdesign developers', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'qsdesign', u'qsdesign Documentation',
     [u'qsdesign developers'], 1)
]

autodoc_member_order = 'bysource'
todo_include_todos = True
