"""Exact computations for fusion categories with A_n fusion rules."""

from anfield.cyclotomic import CyclotomicNumber, LaurentPoly, root_of_unity

__version__ = "0.1.0"

__all__ = ["CyclotomicNumber", "LaurentPoly", "root_of_unity", "__version__"]
