"""Abelian ideals of Borel subalgebras of simple Lie algebras.

Build a root system, enumerate its abelian ideals, and compare the
dimension distribution with closed forms::

    >>> from abelian_ideals import LieType, build_root_system, dimension_distribution
    >>> dimension_distribution(build_root_system(LieType.parse("G2"))).counts
    (1, 1, 1, 1)
"""
from .exceptions import (
    AbelianIdealsError,
    AdmissibilityError,
    ArithmeticCapacityError,
    DimensionError,
    InvalidAntichainError,
    InvalidRootError,
    RankBoundsError,
    ResourceBoundError,
    UnsupportedTypeError,
)
from .genfun import (
    EXCEPTIONAL_TABLES,
    VerificationReport,
    class_closed_forms,
    closed_form_distribution,
    closed_form_polynomial,
    exceptional_table,
    f_A,
    f_B,
    f_C,
    f_D,
    restricted_partition,
    type_a_count,
    verify,
)
from .ideal_enum import (
    AbelianIdeal,
    DimensionDistribution,
    MinimalGenerators,
    dimension_distribution,
    enumerate_ideals,
    ideal_from_minimal,
    is_abelian_set,
    minimal_roots,
    stratify_classical,
    type_a_dimension,
)
from .kernel import BACKEND
from .polynomial import Polynomial, poly_add, poly_eval, poly_mul
from .poset import OmegaPoset, compute_omega, hasse_to_dot, sum_not_preceding_theta
from .root_system import (
    LieType,
    RootSystem,
    build_root_system,
    cartan_matrix,
    height,
    precedes,
)

__version__ = "0.1.0"
