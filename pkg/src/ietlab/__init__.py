"""Exact-arithmetic laboratory for interval-exchange words and repetitions."""

from .exactreal import CFExpansion, QuadraticReal, cf_expand, convergents, parse_quadratic
from .errors import (
    BlockParseError,
    FieldMismatchError,
    InsufficientCoefficientsError,
    NumberParseError,
    ParameterError,
)
from .repetitions import (
    IndexReport,
    Run,
    brute_force_index,
    factor_index_in,
    max_integer_power,
    max_runs,
    word_index_estimate,
)
from .sturmian import (
    BlockParse,
    IndexFormulaResult,
    RotationParams,
    SturmianParams,
    block_decompose,
    characteristic_prefix,
    rotation_word,
    standard_word,
    sturmian_index_formula,
    sturmian_word,
)
from .threeiet import (
    BoundReport,
    NotAmicable,
    ProjectionReport,
    ThreeIetParams,
    bound_check,
    is_amicable,
    rotation_coding_image,
    step,
    ternarize,
    ternarize_prefix,
    threeiet_word,
    validate_params,
    verify_projections,
)
from .words import (
    BINARY,
    EXCHANGE_01,
    SPLIT_B01,
    SPLIT_B10,
    TERNARY,
    BalanceCheck,
    Morphism,
    Word,
    is_balanced,
    letter_permutation,
    rotation_coding_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "BalanceCheck",
    "BlockParse",
    "BlockParseError",
    "BoundReport",
    "CFExpansion",
    "EXCHANGE_01",
    "FieldMismatchError",
    "IndexFormulaResult",
    "IndexReport",
    "InsufficientCoefficientsError",
    "Morphism",
    "NotAmicable",
    "NumberParseError",
    "ParameterError",
    "ProjectionReport",
    "QuadraticReal",
    "RotationParams",
    "Run",
    "SPLIT_B01",
    "SPLIT_B10",
    "SturmianParams",
    "TERNARY",
    "ThreeIetParams",
    "Word",
    "block_decompose",
    "bound_check",
    "brute_force_index",
    "cf_expand",
    "characteristic_prefix",
    "convergents",
    "factor_index_in",
    "is_amicable",
    "is_balanced",
    "letter_permutation",
    "max_integer_power",
    "max_runs",
    "parse_quadratic",
    "rotation_coding_image",
    "rotation_coding_morphism",
    "rotation_word",
    "standard_word",
    "step",
    "sturmian_index_formula",
    "sturmian_word",
    "ternarize",
    "ternarize_prefix",
    "threeiet_word",
    "validate_params",
    "verify_projections",
    "word_index_estimate",
]
