# Sphinx configuration for the medians API docs.
import os
import sys
from datetime import datetime

sys.path.insert(0, os.path.abspath("../src"))
from medians.__version__ import __version__ as pkg_version

project = "python-medians"
copyright = f"2024-{datetime.now().year}, Cameron Lane"
author = "Cameron Lane"

# short X.Y version; release carries the pre-release tag
version = ".".join(pkg_version.split(".")[:2])
release = pkg_version

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
]
autodoc_member_order = "bysource"

master_doc = "index"
source_suffix = ".rst"
exclude_patterns = ["_build"]

html_theme = "alabaster"
htmlhelp_basename = "python-mediansdoc"

man_pages = [(master_doc, "python-medians", "python-medians Documentation", [author], 1)]
