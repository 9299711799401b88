"""Knot group presentations, twist-spun quotients, and coset enumeration."""

from ._twistspin import *  # noqa: F401,F403
from ._twistspin import __doc__  # noqa: F401
