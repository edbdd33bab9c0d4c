import pathlib
import sys

from sphinx_astropy.conf.v2 import *

sys.path.insert(0, pathlib.Path(__file__).parents[2].resolve().as_posix())

import cdadt

project = "cdadt"
copyright = "2026, the cdadt developers"
author = "the cdadt developers"
version = cdadt.__version__
release = version

intersphinx_mapping["click"] = ("https://click.palletsprojects.com/en/8.1.x/", None)
intersphinx_mapping["networkx"] = ("https://networkx.org/documentation/stable/", None)

extensions.append("sphinx.ext.doctest")
extensions.append("sphinxcontrib.programoutput")
