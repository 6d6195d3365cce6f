"""Hecke algebra arithmetic and central elements."""

from .algebra import *  # noqa: F401,F403
from .grbasis import *  # noqa: F401,F403
from .evaluation import *  # noqa: F401,F403
