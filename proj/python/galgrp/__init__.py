"""Product-kernel constructions and fundamental groups of Galois closures."""

try:
    from ._galgrp import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _galgrp import *  # noqa: F401,F403

__version__ = "0.1.0"
