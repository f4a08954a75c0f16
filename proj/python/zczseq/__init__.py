"""Sequence sets with zero-correlation zones or low cross-correlation.

Thin wrapper around the compiled extension; see the individual functions'
docstrings and the project README for the construction-rule vocabulary.
"""

from zczseq._core import (
    HypothesisError,
    ParseError,
    Sequence,
    SequenceSet,
    SetClaim,
    ShiftSequence,
    associate,
    builtin_perfect,
    catalog_rows,
    catalog_witness,
    chu_perfect,
    cross_correlation,
    energy,
    hadamard12_set,
    interleave,
    is_complete_orthogonal,
    is_perfect,
    left_shift,
    load_setfile,
    max_correlation,
    measure_zcz,
    paley_set,
    parse_setfile,
    prop1_correlation,
    save_setfile,
    search_shift_sequence,
    sets_shift_equivalent,
    shift_equivalent,
    sylvester_set,
    t1_canonical_shift,
    t1_case2_condition,
    t1_r0,
    t5_N0,
    t5_condition_holds,
    theorem1_build,
    theorem2_build,
    theorem3_build,
    theorem4_build,
    theorem5_build,
    verify,
    write_setfile,
    zcz_bound,
)

__all__ = [
    "HypothesisError",
    "ParseError",
    "Sequence",
    "SequenceSet",
    "SetClaim",
    "ShiftSequence",
    "associate",
    "builtin_perfect",
    "catalog_rows",
    "catalog_witness",
    "chu_perfect",
    "cross_correlation",
    "energy",
    "hadamard12_set",
    "interleave",
    "is_complete_orthogonal",
    "is_perfect",
    "left_shift",
    "load_setfile",
    "max_correlation",
    "measure_zcz",
    "paley_set",
    "parse_setfile",
    "prop1_correlation",
    "save_setfile",
    "search_shift_sequence",
    "sets_shift_equivalent",
    "shift_equivalent",
    "sylvester_set",
    "t1_canonical_shift",
    "t1_case2_condition",
    "t1_r0",
    "t5_N0",
    "t5_condition_holds",
    "theorem1_build",
    "theorem2_build",
    "theorem3_build",
    "theorem4_build",
    "theorem5_build",
    "verify",
    "write_setfile",
    "zcz_bound",
]

__version__ = "0.1.0"
