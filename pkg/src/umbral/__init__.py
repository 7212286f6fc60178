"""Exact umbral calculus: Sheffer sequences, their powers under umbral
composition, and the combinatorial identities they satisfy."""

from .errors import (
    ClassMismatchError,
    InvalidInputError,
    InvalidParameterError,
    OutOfRangeError,
    UmbralError,
)
from .identities import (
    IdentityCase,
    IdentityReport,
    remark_lhs,
    remark_rhs,
    remark_rhs_terms,
    t1_lhs,
    t1_rhs,
    t2_lhs,
    t2_rhs,
    t3_lhs,
    t3_rhs,
    verify,
)
from .polynomials import Polynomial
from .rationals import Rational, format_rational, parse_rational
from .series import Series, SeriesClass
from .sheffer import (
    SequenceFamily,
    ShefferPair,
    apply_operator,
    compositional_power,
    family,
    identity_pair,
    pair_power,
    pairing,
    sheffer_triangle,
    transfer,
    umbral_compose,
    umbral_power_gf,
    umbral_power_matrix,
    verify_orthogonality,
)
from .special import (
    abel_triangle,
    bernoulli_high,
    bernoulli_series,
    compositions,
    euler_high,
    euler_series,
    falling_factorial,
    lah,
    lah_triangle,
    mittag_leffler_triangle,
    multinomial,
    rising_factorial,
    stirling1_signed,
    stirling1_triangle,
    stirling1_unsigned,
)
from .triangles import CoeffTriangle

__version__ = "0.1.0"

__all__ = [
    "CoeffTriangle",
    "ClassMismatchError",
    "IdentityCase",
    "IdentityReport",
    "InvalidInputError",
    "InvalidParameterError",
    "OutOfRangeError",
    "Polynomial",
    "Rational",
    "SequenceFamily",
    "Series",
    "SeriesClass",
    "ShefferPair",
    "UmbralError",
    "abel_triangle",
    "apply_operator",
    "bernoulli_high",
    "bernoulli_series",
    "compositional_power",
    "compositions",
    "euler_high",
    "euler_series",
    "falling_factorial",
    "family",
    "format_rational",
    "identity_pair",
    "lah",
    "lah_triangle",
    "mittag_leffler_triangle",
    "multinomial",
    "pair_power",
    "pairing",
    "parse_rational",
    "remark_lhs",
    "remark_rhs",
    "remark_rhs_terms",
    "rising_factorial",
    "sheffer_triangle",
    "stirling1_signed",
    "stirling1_triangle",
    "stirling1_unsigned",
    "t1_lhs",
    "t1_rhs",
    "t2_lhs",
    "t2_rhs",
    "t3_lhs",
    "t3_rhs",
    "transfer",
    "umbral_compose",
    "umbral_power_gf",
    "umbral_power_matrix",
    "verify",
    "verify_orthogonality",
]
