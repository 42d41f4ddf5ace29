#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Sphinx configuration for the mfrag documentation.

import os
import sys

# the package lives under src/ next to docs/
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(project_root, "src"))

import mfrag  # noqa: E402

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode"]
autodoc_member_order = "bysource"

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "mfrag"
copyright = "2026, The mfrag developers"
version = mfrag.__version__
release = mfrag.__version__

exclude_patterns = ["_build"]
pygments_style = "sphinx"

#  HTML output
html_theme = "default"
html_static_path = ["_static"]
htmlhelp_basename = "mfragdoc"

#  Other builders
latex_documents = [
    ("index", "mfrag.tex", "mfrag Documentation", "The mfrag developers", "manual"),
]
man_pages = [("index", "mfrag", "mfrag Documentation", ["The mfrag developers"], 1)]
texinfo_documents = [
    (
        "index",
        "mfrag",
        "mfrag Documentation",
        "The mfrag developers",
        "mfrag",
        "Exact structure analysis of small matroids",
        "Documentation",
    ),
]
