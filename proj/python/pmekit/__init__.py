"""Planar maximally entangled states: construction, verification, protocols."""

from ._core import *  # noqa: F401,F403
from ._core import DEFAULT_TOL, PureState, verify_pme  # noqa: F401

__version__ = "0.1.0"
