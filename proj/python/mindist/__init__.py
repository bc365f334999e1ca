"""Rate versus minimum distance bounds and an invertible approximation for binary codes."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, ParseError, QuadraticParams  # noqa: F401

__version__ = "0.1.0"
