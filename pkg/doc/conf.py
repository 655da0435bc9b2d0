# -*- coding: utf-8 -*-
#
# altperm-tools documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import codecs
import os
import os.path
import re

_dirname = os.path.dirname(__file__)

# -- General configuration -----------------------------------------------------

extensions = []

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'altperm-tools'
copyright = u'2026, The altperm-tools authors, Licensed under GPLv2+'


def version_readout():
    fn = os.path.join(_dirname, '../plugins/altpermcore/__init__.py')
    with codecs.open(fn, "r", "utf-8") as f:
        for line in f.readlines():
            match = re.match(r"VERSION = '(.*)'", line)
            if match:
                return match.group(1)

# The short X.Y version.
version = '%s' % version_readout()
# The full version, including alpha/beta/rc tags.
release = '%s-1' % version

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'altperm-toolsdoc'

# -- Options for manual page output --------------------------------------------

AUTHORS = [u'See AUTHORS in your altperm-tools distribution']

man_pages = [
    ('index', 'altperm', u'Generating functions of restricted alternating permutations',
     AUTHORS, 1),
    ('seq', 'altperm-seq', u'altperm seq command', AUTHORS, 1),
    ('verify', 'altperm-verify', u'altperm verify command', AUTHORS, 1),
    ('suite', 'altperm-suite', u'altperm suite command', AUTHORS, 1),
    ('oracle', 'altperm-oracle', u'altperm oracle command', AUTHORS, 1),
    ('stats', 'altperm-stats', u'altperm stats command', AUTHORS, 1),
    ('cf', 'altperm-cf', u'altperm cf command', AUTHORS, 1),
    ('conf', 'altperm.conf', u'altperm configuration file', AUTHORS, 5),
]

rst_prolog = """
.. default-domain:: py
"""
