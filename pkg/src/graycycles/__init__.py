"""Maximum-length Gray cycles under the k-character substitution relation.

Two length-n words over a size-p alphabet are related when they differ in
exactly k positions.  This package builds cycles that visit as many words
as the relation allows, one construction per parameter regime, and ships an
independent verifier plus a brute-force oracle to check them.
"""

from .constructions import (
    Case,
    CaseTag,
    OddPair,
    build_even,
    build_nonbinary,
    build_odd_pair,
    classify,
    complement_pair,
    max_cycle_length,
    max_gray_cycle,
    odd_pair_levels,
)
from .reflected import (
    binary_reflected,
    gamma_base,
    gamma_base_term,
    p_ary_reflected,
    reflected_term,
    rho_base,
    rho_base_term,
)
from .verify import (
    DEFAULT_BUDGET,
    DEFAULT_VERTEX_LIMIT,
    OracleInconclusive,
    OracleResult,
    VerificationReport,
    brute_force_max_cycle,
    check_parity_class,
    neighbor_count,
    verify_gray_cycle,
)
from .words import (
    BINARY,
    Alphabet,
    CapacityError,
    DimensionError,
    DomainError,
    GrayCycleError,
    GraySequence,
    MAX_COUNT,
    ParameterError,
    Parity,
    Word,
    all_words,
    check_capacity,
    cycle_char,
    cycle_word,
    hamming_distance,
    ones_parity,
    parity_class,
    substitution_related,
    xor_words,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BINARY",
    "CapacityError",
    "Case",
    "CaseTag",
    "DEFAULT_BUDGET",
    "DEFAULT_VERTEX_LIMIT",
    "DimensionError",
    "DomainError",
    "GrayCycleError",
    "GraySequence",
    "MAX_COUNT",
    "OddPair",
    "OracleInconclusive",
    "OracleResult",
    "ParameterError",
    "Parity",
    "VerificationReport",
    "Word",
    "all_words",
    "binary_reflected",
    "brute_force_max_cycle",
    "build_even",
    "build_nonbinary",
    "build_odd_pair",
    "check_capacity",
    "check_parity_class",
    "classify",
    "complement_pair",
    "cycle_char",
    "cycle_word",
    "gamma_base",
    "gamma_base_term",
    "hamming_distance",
    "max_cycle_length",
    "max_gray_cycle",
    "neighbor_count",
    "odd_pair_levels",
    "ones_parity",
    "p_ary_reflected",
    "parity_class",
    "reflected_term",
    "rho_base",
    "rho_base_term",
    "substitution_related",
    "verify_gray_cycle",
    "xor_words",
]
