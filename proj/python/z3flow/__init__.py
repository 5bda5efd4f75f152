"""Exact mod-3 orientations, Z3-connectivity and graph reductions."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CapabilityError,
    DomainError,
    LookupError,
    ModelError,
    Multigraph,
    ParseError,
)

__version__ = "0.1.0"
