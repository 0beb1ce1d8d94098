"""Factorization invariants of numerical monoids.

Dynamic algorithms for factorization sets, length sets, delta sets and
omega-primality, each cross-validated against an independent
brute-force oracle.

>>> from numfac import NumericalMonoid, factorizations, delta_set, omega
>>> S = NumericalMonoid([6, 9, 20])
>>> sorted(factorizations(S, 60))
[(0, 0, 3), (1, 6, 0), (4, 4, 0), (7, 2, 0), (10, 0, 0)]
>>> delta_set(S, bound_override=144)
(1, 2, 3, 4)
>>> omega(S, 1000)
170
"""

from .delta import (
    DeltaPeriodicityReport,
    delta_of_lengths,
    delta_periodicity,
    delta_scan_bound,
    delta_set,
)
from .errors import (
    BelowThreshold,
    EmptyGenerators,
    EmptySubset,
    HorizonTooSmall,
    Int64Overflow,
    MonoidInputError,
    NegativeTarget,
    NonCoprime,
    NonPositiveBase,
    NotAGenerator,
    NotInMonoid,
    TargetBelowBase,
    ZeroGenerator,
)
from .factorization import (
    brute_force_factorizations,
    factorizations,
    factorizations_up_to,
    length_set,
    length_sets_up_to,
    max_length,
)
from .monoid import AperySet, NumericalMonoid
from .omega import (
    QuasilinearModel,
    bullets_brute_force,
    bullets_via_apery,
    dynamic_bullets,
    omega,
    omega_extrapolate,
    omega_up_to,
    quasilinear_model,
)
from .verify import PropertyResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "NumericalMonoid",
    "AperySet",
    "factorizations",
    "factorizations_up_to",
    "brute_force_factorizations",
    "length_set",
    "length_sets_up_to",
    "max_length",
    "delta_of_lengths",
    "delta_set",
    "delta_scan_bound",
    "delta_periodicity",
    "DeltaPeriodicityReport",
    "omega",
    "omega_up_to",
    "dynamic_bullets",
    "bullets_brute_force",
    "bullets_via_apery",
    "quasilinear_model",
    "omega_extrapolate",
    "QuasilinearModel",
    "run_suite",
    "PropertyResult",
    "MonoidInputError",
    "EmptyGenerators",
    "ZeroGenerator",
    "NonCoprime",
    "NotInMonoid",
    "NonPositiveBase",
    "EmptySubset",
    "NotAGenerator",
    "NegativeTarget",
    "HorizonTooSmall",
    "TargetBelowBase",
    "BelowThreshold",
    "Int64Overflow",
    "__version__",
]
