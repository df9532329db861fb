"""Pure-dephasing qubit correlators."""

from ._dephasing import *  # noqa: F401,F403
from ._dephasing import __doc__  # noqa: F401
