"""Chromatic quasisymmetric functions of natural unit interval orders."""

from .dyck import DyckPath, UnitIntervalPoset, bounce_data
from .expansions import SymExpansion, e_expansion, is_e_positive, schur_expansion
from .partitions import Partition, inverse_kostka
from .ptableaux import b_poly, enumerate_ptableaux
from .qpoly import QPoly

__all__ = [
    "DyckPath",
    "UnitIntervalPoset",
    "bounce_data",
    "SymExpansion",
    "e_expansion",
    "is_e_positive",
    "schur_expansion",
    "Partition",
    "inverse_kostka",
    "b_poly",
    "enumerate_ptableaux",
    "QPoly",
]
