"""Exact inversion-number and bounded-composition counts.

Everything exact: results are plain python ints (arbitrary precision) or
lists of them, computed by the C++ core.
"""

from mahonia._core import *  # noqa: F401,F403
from mahonia._core import ResourceGuardError  # noqa: F401

__version__ = "0.1.0"
