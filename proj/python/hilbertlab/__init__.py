"""Discrete and ergodic Hilbert transforms with exact level-set checks."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
