"""Extended codes of BCH codes of length q+1: construction, spectra and checks."""

from .field import (FieldContext, FieldElement, TowerContext, build_field, build_tower,
                    trace_to_base, unit_circle)
from .poly import Poly, cyclotomic_coset, minimal_polynomial, poly_divmod, poly_gcd
from .codes import LinearCode, from_generator, trace_code
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FieldContext", "FieldElement", "LinearCode", "Poly", "TowerContext",
    "build_field", "build_tower", "cyclotomic_coset", "from_generator",
    "minimal_polynomial", "poly_divmod", "poly_gcd", "trace_code", "trace_to_base",
    "unit_circle",
]
