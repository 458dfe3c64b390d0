"""Exact verification toolkit for dual 3-nets in the projective plane."""

from .scalar import (
    QQ,
    QW,
    OMEGA,
    DEFAULT_PRIME,
    DEFAULT_PRIMES,
    CycRat,
    PrimeField,
    Rational,
    cube_root_of_unity_mod,
)
from .poly import (
    MonomialOrder,
    MultiPoly,
    PolyRing,
    RationalFunction,
    RingMismatchError,
    exact_div,
)
from .textform import ParseError, parse_poly, parse_poly_file, poly_to_str, scan_variables
from .elim import (
    BudgetExceededError,
    CertificationError,
    GroebnerBasis,
    buchberger,
    certify_basis,
    det_polymatrix,
    express_over_inputs,
    normal_form,
    resultant,
    spoly,
    sylvester_matrix,
)
from .geom import (
    Collineation,
    DegenerateIntersectionError,
    collinear3,
    cross,
    idet,
    isect,
    proj_equal,
)
from .groups import BUILTIN_TABLES, BadTableError, CayleyTable, builtin
from .netcfg import (
    ConstraintSystem,
    ConstructionError,
    NetConstruction,
    alt4_constraints,
    build_alt4,
    build_c3c3,
    c3c3_constraints,
)
from .lame import (
    C2C4_CHAIN,
    CollinearTriple,
    InvalidLameConfig,
    LameConfig,
    SEED_CORRECTED,
    SEED_FIRST_CONFIG,
    TriplePoint,
    all_lame_configs,
    all_net_points,
    closure_chain,
    parse_chain,
    parse_seed,
    search_chain,
    serialize_chain,
    validate_lame,
)
from .report import CheckResult, VerificationReport, merge_reports
from .verify import (
    verify_alt4,
    verify_c2c4,
    verify_c3c3,
    verify_c3c3_lemma_ab,
    verify_c3c3_lemma_uv,
    verify_c3c3_theorem,
)

__version__ = "0.1.0"
