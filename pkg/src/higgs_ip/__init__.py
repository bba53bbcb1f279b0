"""Exact computation of the intersection Poincaré polynomial of the moduli
space of rank-2 Higgs bundles with trivial determinant on a genus-g curve."""

from .engine import QuantityReport, compute, ip_m_closed, ip_m_pipeline, verify_genus
from .polyring import Polynomial, RationalFunction, SplitSeries
from .spaces import Genus

__all__ = [
    "Genus",
    "Polynomial",
    "QuantityReport",
    "RationalFunction",
    "SplitSeries",
    "compute",
    "ip_m_closed",
    "ip_m_pipeline",
    "verify_genus",
]
