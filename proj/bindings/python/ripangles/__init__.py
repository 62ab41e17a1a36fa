"""Achievable angles between compressed sparse vectors under RIP-style
norm/distance constraints, with the downstream restricted-isometry calculus.

Everything is implemented in the C++ core; this package re-exports it.
"""

from ._ripangles import *  # noqa: F401,F403
from ._ripangles import __version__  # noqa: F401
