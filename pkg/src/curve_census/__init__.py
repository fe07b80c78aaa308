"""Exhaustive point-count census of genus-5 hyperelliptic and trigonal
curves over F_3."""

from .field import FieldCtx, FieldElem, FieldError, build_field

__version__ = "0.1.0"

__all__ = ["FieldCtx", "FieldElem", "FieldError", "build_field", "__version__"]
