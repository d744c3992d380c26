"""Folded algebraic-geometric codes, a linear-algebraic list decoder, and
Carlitz-module / Chebotarev experiments over small finite fields."""

from .galois import FieldElement, FieldSpec, embed, field_new, primitive_element

__all__ = ["FieldElement", "FieldSpec", "embed", "field_new", "primitive_element"]
__version__ = "0.1.0"
