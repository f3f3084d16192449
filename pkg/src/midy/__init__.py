"""Midy sets of repeating base-b expansions: decision, enumeration, collapse."""

from .analyzer import (
    CardinalityReport,
    CosetDecomposition,
    FailureCertificate,
    MidySet,
    MidyVerdict,
    RestrictionReport,
    cardinality_prime_power,
    cardinality_report,
    check_midy,
    check_midy_gcd,
    coset_decompose,
    midy_set,
    multiplier,
    attach_multipliers,
    prime_power_set,
    product_set,
    restrict_set,
)
from .constructor import (
    ShrinkResult,
    ShrinkStep,
    minimal_shrink_multiplier,
    primitive_prime,
    shrink,
    shrink_step,
    vanish_threshold,
)
from .ntcore import (
    Factorization,
    MidyError,
    OrderProfile,
    divisors,
    factorize,
    is_prime,
    lifted_order,
    mod_pow,
    multiplicative_order,
    nu,
    primes_upto,
    wieferich_level,
)
from .period import (
    BlockDecomposition,
    PeriodExpansion,
    blocks,
    expand,
    oracle_midy,
    oracle_midy_sweep,
    period_integer,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CardinalityReport",
    "CosetDecomposition",
    "Factorization",
    "FailureCertificate",
    "MidyError",
    "MidySet",
    "MidyVerdict",
    "OrderProfile",
    "PeriodExpansion",
    "RestrictionReport",
    "ShrinkResult",
    "ShrinkStep",
    "attach_multipliers",
    "blocks",
    "cardinality_prime_power",
    "cardinality_report",
    "check_midy",
    "check_midy_gcd",
    "coset_decompose",
    "divisors",
    "expand",
    "factorize",
    "is_prime",
    "lifted_order",
    "midy_set",
    "minimal_shrink_multiplier",
    "mod_pow",
    "multiplicative_order",
    "multiplier",
    "nu",
    "oracle_midy",
    "oracle_midy_sweep",
    "period_integer",
    "prime_power_set",
    "primes_upto",
    "primitive_prime",
    "product_set",
    "restrict_set",
    "shrink",
    "shrink_step",
    "vanish_threshold",
    "wieferich_level",
]
