"""Exact holonomy computations for subalgebras of g2* inside so(4,3) over Q(sqrt 2)."""

from .scalar import SQRT2, Scalar, parse_scalar

__version__ = "0.1.0"

__all__ = ["Scalar", "SQRT2", "parse_scalar", "__version__"]
