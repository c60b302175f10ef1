"""Elementary transformations of rank-2 bundles near a (-1)-curve.

Combinatorics of admissible splitting-type sequences, their numerical
invariants, exhaustive audits at small parameters, and a symbolic
transition-matrix model with a truncated Cech-cohomology oracle.
"""

from bundleseq.seqcore import (
    AdmissibleSequence,
    DomainError,
    InvariantReport,
    MalformedInput,
    SplittingPair,
    c2_defect,
    invariants_report,
    is_split_sequence,
    lemma11_box,
    normalize_sequence,
    parse_sequence,
    split_sequence,
    validate_sequence,
    w_invariant,
    z_invariant,
)

__version__ = "0.1.0"
SCHEMA_VERSION = "1"

__all__ = [
    "AdmissibleSequence",
    "DomainError",
    "InvariantReport",
    "MalformedInput",
    "SplittingPair",
    "c2_defect",
    "invariants_report",
    "is_split_sequence",
    "lemma11_box",
    "normalize_sequence",
    "parse_sequence",
    "split_sequence",
    "validate_sequence",
    "w_invariant",
    "z_invariant",
]
