"""Exact-arithmetic analysis of switched ARX models.

Decides strong minimality of switched ARX systems, certifies minimality
via their switched state-space realizations, and computes identifiable
sub-parametrizations of polynomial model families with Groebner bases.
All computation is over exact rationals.
"""

from .groebner import Ideal, buchberger, elimination_ideal, ideal_product, ideals_equal, normal_form
from .identifiability import (
    IdentifiabilityReport,
    IdentifiableRegion,
    InjectivityEvidence,
    ParamError,
    PolyParametrization,
    SymbolicTheorem2Data,
    genericity_witness,
    identifiability_verdict,
    injectivity_probe,
    procedure1,
    symbolic_theorem2,
    verify_region_membership,
)
from .linalg import RatMatrix, Subspace, solve_affine
from .lss import (
    IsoSolution,
    Lss,
    LssError,
    LssMinimalityCertificate,
    LssMode,
    associated_lss,
    find_isomorphisms,
    is_minimal_lss,
    reachable_span,
    simulate_lss,
    unobservable_space,
)
from .minimality import (
    MinimalityVerdict,
    Theorem2Data,
    check_condition_a,
    check_condition_b,
    check_strong_minimality,
    check_type_consistency,
    condition_b_scalar,
    gamma_polynomials,
    sarx_minimality_sufficient,
    theorem2_polynomials,
)
from .multipoly import MonomialOrder, MultiPoly
from .rationals import format_rational, parse_rational
from .sarx import (
    ArxMode,
    HybridWord,
    SarxError,
    SarxModel,
    arx_is_minimal,
    arx_transfer,
    equivalent_on_samples,
    reduce_trailing_zero,
    simulate_sarx,
)
from .unipoly import UniPoly, char_poly, is_coprime, uni_extended_gcd, uni_gcd

__version__ = "0.1.0"
