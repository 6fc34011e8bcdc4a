"""Finite posets, their Scott topologies and compact-saturated families.

Exhaustive checks of when the family Q(P) of compact saturated sets
determines P up to isomorphism, plus bounded witness checks on a small zoo
of infinite examples.
"""

from ._accel import backend_name
from .analysis import (PropertyReport, SP, check_KL_equivalence, decomposition_condition, has_property_KL,
                       is_co_sober, is_KD, is_Q_determined, is_weakly_well_filtered, is_well_filtered, kirr)
from .canon import are_isomorphic, canonical_code, canonical_form
from .domain import fin, is_domain, is_quasicontinuous, way_below
from .enumerate import class_counts, enumerate_posets
from .errors import CycleError, ParseError, PreconditionError, ResourceLimitError, WitnessError
from .experiments import hypothesis_report, implication_matrix, q_uniqueness_scan
from .poset import FinitePoset, export_dot, load_poset, parse_poset
from .topology import QFamily, compute_Q, is_compact, is_saturated, q_as_poset, scott_opens

__version__ = "0.1.0"
