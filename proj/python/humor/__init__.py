"""Incremental ambiguity decoding with retraction detection.

The heavy lifting lives in the C++ extension ``humor._core``; this package
adds small conveniences for working with JSON-lines traces.
"""

import json

from humor._core import (
    AssociationMap,
    BigramModel,
    DecoderState,
    ExclusionList,
    Lexicon,
    NullifyReport,
    OovError,
    ParseError,
    SpinNetwork,
    commit_index,
    context_signature,
    energy,
    enlarge,
    exact_viterbi,
    fixture,
    forced_deletion,
    glauber_sweep,
    laughter_from_retraction,
    merge_repetitions,
    nullify,
    parse_texts,
    run_text,
    run_two_channels,
    sample_emotions,
    simonov,
    sweep_tau,
)

__all__ = [
    "AssociationMap",
    "BigramModel",
    "DecoderState",
    "ExclusionList",
    "Lexicon",
    "NullifyReport",
    "OovError",
    "ParseError",
    "SpinNetwork",
    "commit_index",
    "context_signature",
    "energy",
    "enlarge",
    "exact_viterbi",
    "fixture",
    "forced_deletion",
    "glauber_sweep",
    "laughter_from_retraction",
    "merge_repetitions",
    "nullify",
    "parse_texts",
    "run_events",
    "run_text",
    "run_two_channels",
    "sample_emotions",
    "simonov",
    "sweep_tau",
]


def run_events(model, lexicon, text, **kwargs):
    """Like run_text, but returns events as dictionaries."""
    return [json.loads(line) for line in run_text(model, lexicon, text, **kwargs)]
