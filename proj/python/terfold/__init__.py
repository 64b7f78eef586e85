"""Triangular folding curves (terdragons), their plane coverings and
exact-lattice checks.  Thin wrapper over the C++ core."""

from ._terfold import (
    AmbiguousWindow,
    BadChain,
    BadResidue,
    InconsistentInput,
    NoStarPoint,
    NotFolding,
    NotSimple,
    OutOfRegion,
    Patch,
    RegionTooSmall,
    TCurve,
    TooShort,
    WindowTooSmall,
    bar,
    build_patch,
    classify,
    classify_window,
    delta_seq,
    extract_lambda,
    frontier,
    gen_curve,
    gen_t,
    frontier_laws,
    liso_search,
    lisop_self,
    load_patch,
    residue_check,
    verify_suite,
)

__all__ = [
    "AmbiguousWindow",
    "BadChain",
    "BadResidue",
    "InconsistentInput",
    "NoStarPoint",
    "NotFolding",
    "NotSimple",
    "OutOfRegion",
    "Patch",
    "RegionTooSmall",
    "TCurve",
    "TooShort",
    "WindowTooSmall",
    "bar",
    "build_patch",
    "classify",
    "classify_window",
    "delta_seq",
    "extract_lambda",
    "frontier",
    "gen_curve",
    "gen_t",
    "frontier_laws",
    "liso_search",
    "lisop_self",
    "load_patch",
    "residue_check",
    "verify_suite",
]

__version__ = "0.1.0"
