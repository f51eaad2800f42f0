"""Hodge numbers and Riemann-Roch data of Calabi-Yau quotients of hyperkahler 4-folds."""

from ._hkquot import *  # noqa: F401,F403
from ._hkquot import DomainError, __doc__  # noqa: F401

__version__ = "0.1.0"
