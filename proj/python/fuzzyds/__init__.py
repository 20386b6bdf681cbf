"""Belief and plausibility of fuzzy sets under fuzzy evidence."""

from ._core import (
    Bpa,
    BeliefInterval,
    CombinationReport,
    CompatibilityRelation,
    Decomposition,
    Frame,
    FuzzyDSError,
    FuzzySet,
    Level,
    NormalizedFocal,
    PairRecord,
    SourceDistribution,
    alpha_cut,
    bel,
    bel_crisp,
    combine,
    combine_relations,
    complement,
    compose_from_consonant,
    decompose,
    epsilon,
    granule,
    induce_bpa,
    interval,
    intersect_min,
    ishizuka_equivalence_check,
    legacy,
    mass_lower,
    mass_upper,
    normalize_subnormal,
    oracle,
    pls,
    pls_crisp,
    set_epsilon,
    singleton_pls,
)

__all__ = [name for name in dir() if not name.startswith("_")]
