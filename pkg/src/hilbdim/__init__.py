"""Exact invariants and Hilbert-scheme component dimensions for embedded
3-fold scrolls and fibrations.

The package computes, entirely in exact integer/rational arithmetic:

* intersection numbers of the four families (scrolls over the plane and the
  quadric surface, quadric and cubic Del Pezzo fibrations over the line),
  both from printed closed forms and from an independent intersection-ring
  oracle;
* chi(N) of the normal bundle by Hirzebruch-Riemann-Roch and the matching
  closed-form component dimensions;
* Eagon-Northcott resolutions and Hilbert polynomials of the determinantal
  models, matched against the families.
"""

__version__ = "0.1.0"

from .chow_ring import (
    BundleP1,
    ChernRecord,
    CycleClass,
    ScrollP2,
    ScrollQ,
    canonical_class,
    divisor_class,
    evaluate,
    invariants_from_ring,
    make_ring,
    mul,
    tangent_chern,
    threefold_canonical,
)
from .determinantal import (
    DegreeMatrix,
    FamilyMatchReport,
    HilbertPoly,
    chi_poly,
    degree_genus,
    en_resolution,
    hilbert_function,
    hilbert_polynomial,
    match_family,
)
from .families import (
    Family,
    FamilyDescriptor,
    InvariantSet,
    consistency_report,
    del_pezzo3,
    h1L,
    hqf,
    invariant_set,
    invariant_set_unchecked,
    scroll_p2,
    scroll_q,
    violations,
)
from .hilbert_dim import (
    NormalChernNumbers,
    SplittingInputs,
    UnobstructedReport,
    check_unobstructed,
    chi_from_invariants,
    chi_normal,
    chi_normal_alpha_form,
    dim_closed_form,
    normal_chern,
    verify_tables,
)
from .p1_bundles import (
    A1Bound,
    SplitBundle,
    check_fibration_bound,
    check_scroll_p2_splitting,
    check_scroll_q_splitting,
    cohomology,
    derive_eb,
    dual,
    infer_a1_lower,
    sym,
    tensor,
    twist,
)

__all__ = [
    "__version__",
    "A1Bound",
    "BundleP1",
    "ChernRecord",
    "CycleClass",
    "DegreeMatrix",
    "Family",
    "FamilyDescriptor",
    "FamilyMatchReport",
    "HilbertPoly",
    "InvariantSet",
    "NormalChernNumbers",
    "ScrollP2",
    "ScrollQ",
    "SplitBundle",
    "SplittingInputs",
    "UnobstructedReport",
    "canonical_class",
    "check_fibration_bound",
    "check_scroll_p2_splitting",
    "check_scroll_q_splitting",
    "check_unobstructed",
    "chi_from_invariants",
    "chi_normal",
    "chi_normal_alpha_form",
    "chi_poly",
    "cohomology",
    "consistency_report",
    "degree_genus",
    "del_pezzo3",
    "derive_eb",
    "dim_closed_form",
    "divisor_class",
    "dual",
    "en_resolution",
    "evaluate",
    "h1L",
    "hilbert_function",
    "hilbert_polynomial",
    "hqf",
    "infer_a1_lower",
    "invariant_set",
    "invariant_set_unchecked",
    "invariants_from_ring",
    "make_ring",
    "match_family",
    "mul",
    "normal_chern",
    "scroll_p2",
    "scroll_q",
    "sym",
    "tangent_chern",
    "tensor",
    "threefold_canonical",
    "twist",
    "verify_tables",
    "violations",
]
