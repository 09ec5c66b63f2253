"""Exact b-colouring statistics (b-chromatic number, minimum/maximum-mean b-colourings)."""

from ._bchroma import *  # noqa: F401,F403
from ._bchroma import __version__  # noqa: F401
