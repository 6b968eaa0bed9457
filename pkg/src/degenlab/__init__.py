"""Degeneration, extension and Auslander-Reiten orders of Cohen-Macaulay modules."""

from .partitions import Partition, box_move, dominance_hasse, dominates, partitions_of, predecessors
from .hasse import HasseDiagram
from .cyclic import (
    CyclicModule,
    ExtWitness,
    deg_leq,
    ext_step_witness,
    fitting_exponents,
    padded_dominates,
    stable_reduce,
)
from .poly import GaussRational, Poly, parse_poly
from .mf import MFPair, knorrer_double, specialize, unit_reduce, verify_mf
from .an import ANModule, ANRing, KappaClass, cover_moves, hasse_for_class, kappa, transport
from .ar import ARSequence, Bounds, ar_sequences, decompose_ses, delta, extended_closure, verify_theorem44
from .expr import format_module, parse_module

__version__ = "0.1.0"
