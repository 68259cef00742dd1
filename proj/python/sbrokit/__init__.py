"""Matroid covering numbers, exchange properties and circuit covers.

Element sets are lists of 0-based element indices.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
