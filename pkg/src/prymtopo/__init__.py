"""Topological invariants of the Prym-Teichmueller curves W_D(6) in genus four."""
from .arith import Discriminant, Rat, kronecker, parse_discriminant, sigma1
from .classnum import ReducedForm, h_neg, list_reduced_forms
from .cusps import Prototype, count_cusps, list_prototypes
from .euler import ChiBreakdown, F_correction, chi_breakdown, zeta_m1
from .orbifold import e2, e3, e3_raw, e5, e6
from .topology import InvariantRecord, check_bounds, genus_zero_classification, invariants, sweep

__version__ = "0.1.0"
