"""Shortcut constructions: sampling, greedy, pivots and flow-based chain covers."""

from certilab.algos.chains import (
    ChainExtraction,
    chain_cover_flow,
    chain_cover_shortcut,
    important_chain_extension,
    important_chains,
    max_uncovered_on_path,
    treap_chain_extract,
)
from certilab.algos.greedy import best_candidate, brr_greedy, hop_matrix, potential, potential_reduction
from certilab.algos.pipeline import DEFAULT_DIAMETER_FACTOR, diam_dominating_pipeline
from certilab.algos.pivots import depth_bound, fineman, jls, sampling_probability
from certilab.algos.result import AlgoResult, ChainCover
from certilab.algos.sampling import KPMode, kp_sample, uy_sample

__all__ = [
    "AlgoResult",
    "ChainCover",
    "ChainExtraction",
    "DEFAULT_DIAMETER_FACTOR",
    "KPMode",
    "best_candidate",
    "brr_greedy",
    "chain_cover_flow",
    "chain_cover_shortcut",
    "depth_bound",
    "diam_dominating_pipeline",
    "fineman",
    "hop_matrix",
    "important_chain_extension",
    "important_chains",
    "jls",
    "kp_sample",
    "max_uncovered_on_path",
    "potential",
    "potential_reduction",
    "sampling_probability",
    "treap_chain_extract",
    "uy_sample",
]
