"""Semidirect sums of matroids.

Matroids are exact rank tables over small labeled ground sets.  The package
builds semidirect sums by matroid union, principal sums and Higgs lifts,
tests transversality, and ships an executable property suite
(:mod:`semidirect.verify`).
"""

from .constructions import (
    HiggsSpec,
    PrincipalSumSpec,
    add_loops,
    direct_sum,
    extension_on_flat,
    free,
    free_coextension,
    free_extension,
    free_product,
    higgs_lift,
    higgs_semidirect,
    intersection,
    loops_on,
    make_loops,
    principal_extension,
    principal_sum,
    principal_sum_by_higgs,
    principal_sum_by_union,
    truncation,
    uniform,
    union,
)
from .core import MAX_N, GroundSet, Matroid, RegionClass, classify_region, equals, is_quotient, region_table, weak_leq
from .exceptions import *  # noqa: F401,F403
from .linearalg import FpMatrix, block_triangular, column_matroid, generic_union
from .report import CheckReport
from .transversal import SetSystem, is_fundamental_transversal, is_transversal, presentation_search, transversal_matroid

__version__ = "0.1.0"
