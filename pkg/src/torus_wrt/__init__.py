"""torus-wrt package."""

from .wrt import InvariantResult, classify, invariant  # noqa: F401

__version__ = "0.1.0"
