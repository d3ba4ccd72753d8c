from ._core import *  # noqa: F401,F403
from ._core import Group, PreconditionError, ResourceCapError, InternalError

__version__ = "0.1.0"


def table(family, n):
    return Group(family, n)
