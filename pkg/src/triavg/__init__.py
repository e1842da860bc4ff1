"""triavg: exact arithmetic for the sequences behind triangular-number averages.

The headline statement: the average of the first b_n triangular numbers is
itself a triangular number, the a_n-th. Everything here exists either to
generate the sequence family involved (a, b, u, v, L, F, and the convergent
numerators z) or to verify, with exact integer arithmetic, the identities
that make the statement true.
"""

from .convergents import (
    Convergent,
    cf_sqrt3,
    check_bisection,
    check_difference_identities,
    z,
)
from .exactnum import ALPHA, BETA, ONE, SQRT3, ZERO, QuadElem, is_perfect_square, isqrt
from .identities import (
    IdentityReport,
    check_congruences,
    check_discriminant,
    check_linkages,
    check_lucas_identities,
    check_v_square,
    run_all,
)
from .recurrences import (
    A_SPEC,
    B_SPEC,
    F_SPEC,
    L_SPEC,
    NAMED_SPECS,
    U_SPEC,
    V_SPEC,
    RecurrenceSpec,
    SequenceId,
    eval_closed_form,
    eval_iterative,
    eval_u,
    eval_v,
    eval_via_L,
    gf_coefficients,
    resolve_spec,
    sequence_prefix,
)
from .triangular import (
    TriangularWitness,
    check_pair,
    enumerate_solutions,
    is_triangular,
    prefix_average,
    prefix_sum,
    solve_r_for_s,
    solve_s_for_r,
    triangular,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "ONE",
    "SQRT3",
    "ZERO",
    "QuadElem",
    "isqrt",
    "is_perfect_square",
    "RecurrenceSpec",
    "SequenceId",
    "NAMED_SPECS",
    "A_SPEC",
    "B_SPEC",
    "U_SPEC",
    "V_SPEC",
    "L_SPEC",
    "F_SPEC",
    "resolve_spec",
    "eval_iterative",
    "eval_closed_form",
    "eval_via_L",
    "eval_u",
    "eval_v",
    "gf_coefficients",
    "sequence_prefix",
    "IdentityReport",
    "check_lucas_identities",
    "check_discriminant",
    "check_congruences",
    "check_linkages",
    "check_v_square",
    "run_all",
    "triangular",
    "is_triangular",
    "prefix_sum",
    "prefix_average",
    "check_pair",
    "solve_s_for_r",
    "solve_r_for_s",
    "enumerate_solutions",
    "TriangularWitness",
    "witness",
    "Convergent",
    "cf_sqrt3",
    "z",
    "check_bisection",
    "check_difference_identities",
]
