"""Conjugations and complex symmetric operators on a truncated Hardy space."""
from .conjugations import (
    AntilinearMap,
    Conjugation,
    apply_antilinear,
    canonical_conjugation,
    commutes,
    compose,
    family_conjugation,
    fixed_basis,
    is_conjugation,
    random_conjugation,
)
from .hardy import (
    ToleranceConfig,
    frobenius_distance,
    inner_product,
    random_unitary,
    smallest_singular_value,
)
from .report import VerificationReport
from .symbols import Symbol, SymbolSyntaxError, format_symbol, parse_symbol
from .toeplitz import csym_residual, injectivity_proxy, toeplitz_matrix

__version__ = "0.1.0"
