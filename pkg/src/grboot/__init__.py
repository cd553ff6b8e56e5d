"""Clique bootstrap percolation toolkit.

A non-edge joins the graph whenever adding it would complete a copy of
K_r; rounds are synchronous.  The package provides the process engine,
the recursively built anchored gadgets that delay a chosen pair by exactly
t rounds, exhaustive edge-density analysis over gadget subsets, witness
sets certifying every closure edge, and reproducible Monte Carlo
estimation of the critical probability for percolation by time t on
random graphs.
"""

from .anchored import (
    AnchoredGraph,
    SizeCapError,
    anchored_edges,
    anchored_vertices,
    build_anchored,
    density_slope,
    gadget_edges,
    ratio_correction,
    threshold,
    threshold_exponent,
)
from .density import (
    DensityReport,
    cascade_overlap_report,
    epsilon_lower,
    epsilon_upper,
    min_density,
    min_density_branch_bound,
    min_ratio_over,
    witness_set_minratio,
)
from .engine import (
    BootstrapTrace,
    edge_addition_time,
    percolation_time_k3,
    run,
    step,
    validate_trace,
)
from .graph import INFINITE, Graph, bits, edge, vertex_mask
from .montecarlo import (
    BracketError,
    EstimateResult,
    SweepRow,
    TrialConfig,
    estimate,
    pc_bisect,
    sample_gnp,
    sweep,
    sweep_to_csv,
    wilson_interval,
)
from .rng import SplitMix64, mix64, stream_for
from .witness import (
    OrderPolicy,
    WitnessSet,
    check_witness_bound,
    run_with_witnesses,
    shrink_witness,
    witness_sufficient,
)

__version__ = "0.1.0"

__all__ = [
    "AnchoredGraph",
    "BootstrapTrace",
    "BracketError",
    "DensityReport",
    "EstimateResult",
    "Graph",
    "INFINITE",
    "OrderPolicy",
    "SizeCapError",
    "SplitMix64",
    "SweepRow",
    "TrialConfig",
    "WitnessSet",
    "anchored_edges",
    "anchored_vertices",
    "bits",
    "build_anchored",
    "cascade_overlap_report",
    "check_witness_bound",
    "density_slope",
    "edge",
    "edge_addition_time",
    "epsilon_lower",
    "epsilon_upper",
    "estimate",
    "gadget_edges",
    "min_density",
    "min_density_branch_bound",
    "min_ratio_over",
    "mix64",
    "pc_bisect",
    "percolation_time_k3",
    "ratio_correction",
    "run",
    "run_with_witnesses",
    "sample_gnp",
    "shrink_witness",
    "step",
    "stream_for",
    "sweep",
    "sweep_to_csv",
    "threshold",
    "threshold_exponent",
    "validate_trace",
    "vertex_mask",
    "wilson_interval",
    "witness_set_minratio",
    "witness_sufficient",
]
