"""Two-node electron/nuclear spin processor: cross-node coupling channel simulator."""

from wqc._core import *  # noqa: F401,F403
from wqc._core import __version__  # noqa: F401
