"""Finite Krasner (m,n)-hyperring engine and theorem-checking harness."""

from .constructions import (
    HomViolation,
    HyperRingHom,
    QuotientRing,
    check_homomorphism,
    cyclic_ring,
    identity_hom,
    product_ring,
    quotient_ring,
    ring_from_ring_table,
    transport_ideal,
)
from .errors import HyperIdealError
from .harness import (
    CATALOG,
    DEFAULT_SUITE_FIXTURES,
    FIXTURE_NAMES,
    SuiteResult,
    TheoremReport,
    check_theorem,
    fixtures,
    run_suite,
)
from .ideals import (
    IdealProfile,
    PowerDiagnostic,
    SpecialSets,
    Verdict,
    classify_ideal,
    enumerate_hyperideals,
    generated_hyperideal,
    is_hyperideal,
    minimal_primes_over,
    prime_hyperideals,
    proper_hyperideals,
    radical,
    radical_power_diagnostic,
    special_sets,
)
from .kernel import (
    LENIENT,
    STRICT,
    AxiomReport,
    HyperRing,
    HyperRingSpec,
    SubsetMask,
    parse_spec,
    require_ring,
    serialize_spec,
    verify_axioms,
)
from .multiplicative import (
    MulSet,
    SClassification,
    SVerdict,
    SWitness,
    SaturationResult,
    classify_s,
    enumerate_multiplicative_sets,
    is_multiplicative_set,
    is_s_hyperideal,
    is_sr_hyperideal,
    maximal_ms_for,
    multiplicative_set,
    primary_decomposition,
    residual,
    s_maximal_hyperideals,
    saturation,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CATALOG",
    "DEFAULT_SUITE_FIXTURES",
    "FIXTURE_NAMES",
    "HomViolation",
    "HyperIdealError",
    "HyperRing",
    "HyperRingHom",
    "HyperRingSpec",
    "IdealProfile",
    "LENIENT",
    "MulSet",
    "PowerDiagnostic",
    "QuotientRing",
    "SClassification",
    "STRICT",
    "SVerdict",
    "SWitness",
    "SaturationResult",
    "SpecialSets",
    "SubsetMask",
    "SuiteResult",
    "TheoremReport",
    "Verdict",
    "check_homomorphism",
    "check_theorem",
    "classify_ideal",
    "classify_s",
    "cyclic_ring",
    "enumerate_hyperideals",
    "enumerate_multiplicative_sets",
    "fixtures",
    "generated_hyperideal",
    "identity_hom",
    "is_hyperideal",
    "is_multiplicative_set",
    "is_s_hyperideal",
    "is_sr_hyperideal",
    "maximal_ms_for",
    "minimal_primes_over",
    "multiplicative_set",
    "parse_spec",
    "primary_decomposition",
    "prime_hyperideals",
    "product_ring",
    "proper_hyperideals",
    "quotient_ring",
    "radical",
    "radical_power_diagnostic",
    "require_ring",
    "residual",
    "ring_from_ring_table",
    "run_suite",
    "s_maximal_hyperideals",
    "saturation",
    "serialize_spec",
    "special_sets",
    "transport_ideal",
    "verify_axioms",
]
