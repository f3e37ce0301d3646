"""Diagonal coinvariants and the q,t-Catalan numbers: tables, point diagrams and the map phi."""

from .catalan_diagrams import (
    StaircasePartition,
    census,
    construct_k0,
    embed,
    is_catalan,
    iter_lambda,
    theta,
    theta_inverse,
)
from .constructions import basis_certificate, building_block, construct_D_nu, construct_f_nu
from .diagrams import PointDiagram, make_diagram, parse_diagram
from .dyck import CatalanTable, DyckPath, build_table, corollary_b_formula, enumerate_dyck, specialize_qq, stats
from .partitions import Partition, count_partitions, count_partitions_bounded
from .phi import expand_to_staircase, phi, phi_determinant, phi_permutation, phi_sum
from .rho import RhoPoly, leading

__version__ = "0.1.0"

__all__ = [
    "CatalanTable",
    "DyckPath",
    "Partition",
    "PointDiagram",
    "RhoPoly",
    "StaircasePartition",
    "basis_certificate",
    "build_table",
    "building_block",
    "census",
    "construct_D_nu",
    "construct_f_nu",
    "construct_k0",
    "corollary_b_formula",
    "count_partitions",
    "count_partitions_bounded",
    "embed",
    "enumerate_dyck",
    "expand_to_staircase",
    "is_catalan",
    "iter_lambda",
    "leading",
    "make_diagram",
    "parse_diagram",
    "phi",
    "phi_determinant",
    "phi_permutation",
    "phi_sum",
    "specialize_qq",
    "stats",
    "theta",
    "theta_inverse",
]
