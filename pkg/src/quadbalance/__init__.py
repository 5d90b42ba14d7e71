"""Exact certificates around quadratic monomial ideals: regular sequences of
variable-times-form products, powers-plus-lex Hilbert function realizations,
and balanced Cohen-Macaulay companions of flag complexes."""

from .balance import BalanceReport, balance
from .covers import height, minimal_primes
from .errors import (
    BudgetExceededError,
    InputError,
    NotCohenMacaulayError,
    RegularSequenceNotFoundError,
    UnattainableTargetError,
)
from .fields import GF, QQ, parse_field_spec
from .hilbert import (
    HilbertData,
    hilbert_function,
    hilbert_series_equal,
    series_numerator,
)
from .homology import (
    CMCertificate,
    depth_and_pd,
    is_cohen_macaulay,
    reduced_homology_ranks,
    total_betti_numbers,
)
from .jsonio import canonical_json
from .linalg import LinearForm, ProductOfLinearForms
from .lpp import (
    EghReport,
    LppResult,
    LppTarget,
    construct_lex_plus_powers,
    egh_for_quadratic,
    quotient_monomials,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    format_monomial,
    parse_monomial,
    polarize,
)
from .regseq import (
    DegreeTwoDecomposition,
    MatchingInstance,
    RegularSequenceCertificate,
    TransversalWitness,
    build_matching_instance,
    certify_transversal_ranks,
    check_height_inequality,
    decompose_degree_two,
    find_matching,
    find_regular_sequence,
    is_regular_sequence_of_products,
    monomial_as_product,
    sample_forms,
)
from .reports import (
    analyze_report,
    balance_report,
    egh_report,
    regseq_report,
    verify_report,
)
from .simplicial import (
    SimplicialComplex,
    check_balanced,
    complex_of_ideal,
    f_vector,
    h_vector,
    independence_complex,
    is_flag,
    minimal_non_faces,
    stanley_reisner,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "BudgetExceededError",
    "CMCertificate",
    "DegreeTwoDecomposition",
    "EghReport",
    "GF",
    "HilbertData",
    "InputError",
    "LinearForm",
    "LppResult",
    "LppTarget",
    "MatchingInstance",
    "Monomial",
    "MonomialIdeal",
    "NotCohenMacaulayError",
    "ProductOfLinearForms",
    "QQ",
    "RegularSequenceCertificate",
    "RegularSequenceNotFoundError",
    "SimplicialComplex",
    "TransversalWitness",
    "UnattainableTargetError",
    "analyze_report",
    "balance",
    "balance_report",
    "build_matching_instance",
    "canonical_json",
    "certify_transversal_ranks",
    "check_balanced",
    "check_height_inequality",
    "complex_of_ideal",
    "construct_lex_plus_powers",
    "decompose_degree_two",
    "depth_and_pd",
    "egh_for_quadratic",
    "egh_report",
    "f_vector",
    "find_matching",
    "find_regular_sequence",
    "format_monomial",
    "h_vector",
    "height",
    "hilbert_function",
    "hilbert_series_equal",
    "independence_complex",
    "is_cohen_macaulay",
    "is_flag",
    "is_regular_sequence_of_products",
    "minimal_non_faces",
    "minimal_primes",
    "monomial_as_product",
    "parse_field_spec",
    "parse_monomial",
    "polarize",
    "quotient_monomials",
    "reduced_homology_ranks",
    "regseq_report",
    "sample_forms",
    "series_numerator",
    "stanley_reisner",
    "total_betti_numbers",
    "verify_report",
]
