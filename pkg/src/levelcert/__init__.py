"""Certificates for polynomial positivity on the orthant part of a level set ``{r = c}``."""

from .certificates import (
    Certificate,
    PreconditionError,
    ProblemInstance,
    VerificationReport,
    build_g,
    extend_certificate,
    find_min_N,
    search_certificate,
    verify_certificate,
)
from .falsify import Witness, falsify, ray_solve
from .poly import Polynomial, divide_exact, evaluate, format_polynomial, parse_polynomial, reduce_mod
from .polya import cross_check_polya, polya_expand, polya_min_N
from .support import (
    SupportSet,
    check_precondition,
    cumulative_support,
    grade_slice,
    log_set,
    minkowski_power,
    minkowski_sum,
    support_of,
)

__version__ = "0.1.0"
