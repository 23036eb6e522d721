"""Exact tools for descent obstructions of covers: elliptic curves over Q,
Velu isogenies, local-global divisibility, finite group cohomology and
dessins d'enfants."""

from .curves import CurvePoint, RationalCurve, divide_point_global
from .localglobal import divide_point_local_finite, divide_point_local_real, sha0_witness_check

__version__ = "0.1.0"
