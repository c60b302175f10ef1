"""Symbolic realization of bundles on the formal neighborhood of D."""

from bundleseq.formal.bundle import (
    BalancedError,
    BundleInvariants,
    CanonicalExtension,
    InstabilityError,
    WindowError,
    associated_sequence_of_bundle,
    canonical_window,
    cech_w,
    elementary_transform,
    gauge,
    invariants_of_bundle,
    line_bundle_w,
    make_canonical,
    parse_p_json,
    restrict_to_infinitesimal,
    splitting_type_on_D,
)
from bundleseq.formal.matrix import SingularTransition, TransitionMatrix, TruncationExceeded
from bundleseq.formal.series import TruncatedBivariate

__all__ = [
    "BalancedError",
    "BundleInvariants",
    "CanonicalExtension",
    "InstabilityError",
    "SingularTransition",
    "TransitionMatrix",
    "TruncatedBivariate",
    "TruncationExceeded",
    "WindowError",
    "associated_sequence_of_bundle",
    "canonical_window",
    "cech_w",
    "elementary_transform",
    "gauge",
    "invariants_of_bundle",
    "line_bundle_w",
    "make_canonical",
    "parse_p_json",
    "restrict_to_infinitesimal",
    "splitting_type_on_D",
]
