"""Exact computations with the rank-1 Nichols algebra and its Yetter-Drinfeld
modules: classification, fusion rules, duality, and loop-operator spectra."""

from .cyclo import CycField, CycNum, cyclotomic_field

__all__ = ["CycField", "CycNum", "cyclotomic_field"]
__version__ = "0.1.0"
