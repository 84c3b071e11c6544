"""Observability along oblique segments for Schrodinger, beam and plate equations."""

from ._core import BACKEND
from .exact import ASet, LatticePoint, Rational, circle_member, enumerate_aset, rat_parse, rat_str
from .gram import GramMatrix, ObservabilityEstimate, build_gram, extremal_eigs, observability_constants, observability_sweep
from .obstruction import (
    KernelReport,
    ObservationGraph,
    build_graph,
    find_cycles,
    kernel_oracle,
    maximal_paths,
    prop49_classify,
    search_cycles,
    theorem48_verdict,
)
from .segments import PlateSegmentSpec, SegmentSpec
from .solutions import SolutionSpec, evaluate, restrict_to_segment, segment_energy
from .spectra import ExponentSet, beam_exponents, gap, plate_exponents, schrodinger_exponents, separation_certificate, tail_gap

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ASet", "LatticePoint", "Rational", "circle_member", "enumerate_aset", "rat_parse", "rat_str",
    "GramMatrix", "ObservabilityEstimate", "build_gram", "extremal_eigs", "observability_constants",
    "observability_sweep", "KernelReport", "ObservationGraph", "build_graph", "find_cycles", "kernel_oracle",
    "maximal_paths", "prop49_classify", "search_cycles", "theorem48_verdict", "PlateSegmentSpec", "SegmentSpec",
    "SolutionSpec", "evaluate", "restrict_to_segment", "segment_energy", "ExponentSet", "beam_exponents", "gap",
    "plate_exponents", "schrodinger_exponents", "separation_certificate", "tail_gap",
]
