"""Generalized continued fractions from unimodular partitions of [0, 1].

Exact expansion of rationals and quadratic irrationals under the Gauss map
of any unimodular partition with a sign function, detection of eventual
periodicity through integer matrix conjugation, and reconstruction of
quadratic irrationals from periodic digit words.
"""
from .dynamics import (
    DEFAULT_MAX_STEPS,
    CylinderState,
    Expansion,
    cylinder,
    evaluate_composition,
    expand,
    gamma_interval,
    orbit,
    push_cylinder,
    step,
)
from .exact import (
    IDENTITY,
    Mat2,
    QuadSurd,
    compare,
    conjugate,
    minimal_polynomial,
    mobius_apply,
    normalize_surd,
    root_in_unit_interval,
)
from .lagrange import (
    HyperbolicCert,
    PeriodReport,
    build_certificate,
    conjugate_step,
    detect_period,
    orbit_oracle,
    reconstruct,
)
from .partition import (
    FAREY,
    ODD,
    ORDINARY,
    Branch,
    FinitePartition,
    Partition,
    branch_matrix,
    inverse_branch,
    locate,
    odd_digit_form,
    validate_finite,
)

__version__ = "0.1.0"
