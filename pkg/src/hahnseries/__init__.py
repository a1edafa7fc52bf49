"""Exact arithmetic for Hahn-type power series over the rationals.

Exponents live in an ordered group built from atoms ``e(i)`` and tails
``tau(i)``; series are finite jets with an explicit guarantee bound.  The
package provides exp/log, four families of derivations, a linear
independence certificate and a polynomial relation search.
"""

from .deriv import EL, Affine, Case1, Case2Cofinal, Case2Max, CofinalSequence, Table, d_monomial, d_series
from .errors import (
    ConfigurationError,
    DomainError,
    HahnError,
    ModeMismatchError,
    ResourceError,
    UndefinedValuationError,
    UnsupportedConstantLogError,
    UsageError,
)
from .exponents import Exponent, ShiftMap, exp_add, exp_cmp, exp_sign, tail_unfold
from .linalg import rank_and_kernel
from .oracle import RelationReport, find_relation
from .schanuel import Certificate, check_corollary, qlin_rank, shift_by_coA, verify_lemma2
from .series import Decomposition, Series, decompose, s_add, s_inv, s_mul, v_min
from .translog import log_monomial, s_exp, s_log

__version__ = "0.1.0"
