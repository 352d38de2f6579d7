"""Key-rate comparison toolkit for a two-way weak-coherent QKD scheme vs BB84."""

from tomqkd._tomqkd import *  # noqa: F401,F403
from tomqkd._tomqkd import __version__  # noqa: F401
