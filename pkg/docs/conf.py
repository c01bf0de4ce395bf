# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/stable/config

# -- Path setup --------------------------------------------------------------

from __future__ import annotations

import inspect
import os
import sys

import entlab
from entlab.serialization import Serializable

sys.path.insert(0, os.path.abspath(".."))

MODULES = [
    "matcore",
    "states",
    "entropy",
    "extremal",
    "measures",
    "sweep",
    "cli",
]


def create_class_file(cls):
    name = cls.__name__
    excluded = ["yaml_tag", "entropyFields"]
    methods = [
        method
        for method in sorted(cls.__dict__.keys())
        if not (method.startswith("_") or method in excluded)
    ]
    with open(f"api/{name}.rst", "w") as f:
        f.writelines(
            [
                f"{name}\n",
                "=" * len(name) + "\n\n",
                ".. currentmodule:: entlab\n",
                f".. autoclass:: {name}\n",
                "    :member-order: alphabetical\n\n",
                "    .. rubric:: Methods\n\n",
            ]
            + [f"    .. automethod:: {method}\n" for method in methods]
        )


def create_module_file(name):
    with open(f"api/{name}.rst", "w") as f:
        f.write(f"{name}\n" + "=" * len(name) + "\n\n")
        f.write(f".. automodule:: entlab.{name}\n    :members:\n")


os.makedirs("api", exist_ok=True)
with open("api/index.rst", "w") as f:
    f.write("Modules\n=======\n\n.. toctree::\n    :titlesonly:\n\n")
    for module in MODULES:
        f.write(f"    {module}\n")
        create_module_file(module)
    f.write("\n\nClasses\n=======\n\n.. toctree::\n    :titlesonly:\n\n")
    for item in entlab.__dict__.values():
        if inspect.isclass(item) and issubclass(item, Serializable):
            f.write(f"    {item.__name__}\n")
            create_class_file(item)
    f.write("\n.. testsetup::\n\n    from entlab import *")

# -- Project information -----------------------------------------------------

version = os.getenv("ENTLAB_VERSION", entlab.__version__)
project = f"entlab {version}"
release = ""

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autosummary",
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx_copybutton",
]

autosummary_generate = False
napoleon_google_docstring = False
napoleon_use_param = True
napoleon_use_ivar = True

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "default"

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_static_path = ["_static"]
html_sidebars = {
    "**": ["about.html", "globaltoc.html", "searchbox.html"],
}
html_use_smartypants = True
html_last_updated_fmt = "%b %d, %Y"
html_split_index = False
htmlhelp_basename = "entlabdoc"

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, "entlab.tex", "entlab Documentation", "entlab", "manual"),
]

# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, "entlab", "entlab Documentation", [], 1)]

# -- Extension configuration -------------------------------------------------

autodoc_typehints = "description"
autodoc_typehints_description_target = "documented_params"
autodoc_typehints_format = "short"

intersphinx_mapping = {
    "numpy": ("https://numpy.org/doc/stable", None),
    "scipy": ("https://docs.scipy.org/doc/scipy", None),
}

# Copy button configuration
copybutton_prompt_text = r">>> |\.\.\. "
copybutton_prompt_is_regexp = True
