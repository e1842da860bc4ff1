"""Linear recurrence toolkit for the family w_n = 4*w_{n-1} - w_{n-2} + k.

A spec (k, w0, w1) pins down one sequence. The named instances, by letter:

    a = w(1,  0, 1)   triangular indices of the integral averages (A061278)
    b = w(3, -1, 1)   prefix lengths whose triangular average is triangular
    u = w(0,  1, 5)   square roots of 1 + 12*a_n + 12*a_n^2 (A001834)
    v = w(0,  3, 9)   3 + 6*a_n, companion of u
    L = w(0,  2, 4)   alpha^n + beta^n, the Lucas-like companion
    F = w(0,  0, 1)   kernel of the homogeneous family (A001353)

Every sequence can be evaluated four independent ways: direct iteration,
the closed form over Q(sqrt(3)), the L-companion form, and coefficient
extraction from the generating function. The paths share no arithmetic,
so their agreement is strong evidence of correctness; the test suite and
the ``verify`` CLI command exercise exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactnum import ALPHA, BETA, ONE, SQRT3, QuadElem


@dataclass(frozen=True)
class RecurrenceSpec:
    """Parameters of w_n = 4*w_{n-1} - w_{n-2} + k with w_0, w_1 given."""

    k: int
    w0: int
    w1: int


A_SPEC = RecurrenceSpec(k=1, w0=0, w1=1)
B_SPEC = RecurrenceSpec(k=3, w0=-1, w1=1)
U_SPEC = RecurrenceSpec(k=0, w0=1, w1=5)
V_SPEC = RecurrenceSpec(k=0, w0=3, w1=9)
L_SPEC = RecurrenceSpec(k=0, w0=2, w1=4)
F_SPEC = RecurrenceSpec(k=0, w0=0, w1=1)

NAMED_SPECS: dict[str, RecurrenceSpec] = {
    "a": A_SPEC,
    "b": B_SPEC,
    "u": U_SPEC,
    "v": V_SPEC,
    "L": L_SPEC,
    "F": F_SPEC,
}

SequenceId = Union[str, RecurrenceSpec]


def resolve_spec(seq: SequenceId) -> RecurrenceSpec:
    """Map a sequence letter (a, b, u, v, L, F) or an explicit spec to its spec."""
    if isinstance(seq, RecurrenceSpec):
        return seq
    for candidate in (seq, seq.lower(), seq.upper()):
        if candidate in NAMED_SPECS:
            return NAMED_SPECS[candidate]
    raise KeyError(f"unknown sequence {seq!r}; expected one of a, b, u, v, L, F")


def _require_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {n}")


def eval_iterative(spec: RecurrenceSpec, n: int) -> int:
    """w_n by direct iteration from w_0, w_1; the reference evaluator."""
    _require_index(n)
    if n == 0:
        return spec.w0
    prev, cur = spec.w0, spec.w1
    for _ in range(n - 1):
        prev, cur = cur, 4 * cur - prev + spec.k
    return cur


def _closed_form_weights(spec: RecurrenceSpec) -> tuple[QuadElem, QuadElem]:
    k, r, s = spec.k, spec.w0, spec.w1
    shared = k - 2 * r
    weight_alpha = (s * ALPHA + (k + 4 * r - s) * BETA + shared) / 12
    weight_beta = (s * BETA + (k + 4 * r - s) * ALPHA + shared) / 12
    return weight_alpha, weight_beta


def eval_closed_form(spec: RecurrenceSpec, n: int) -> int:
    """w_n = -k/2 + c_a*alpha^n + c_b*beta^n, evaluated exactly in Q(sqrt(3)).

    The sqrt(3) component must cancel and the rational part must be an
    integer; ``QuadElem.as_integer`` enforces both, raising ArithmeticError
    on any violation.
    """
    _require_index(n)
    weight_alpha, weight_beta = _closed_form_weights(spec)
    value = weight_alpha * ALPHA**n + weight_beta * BETA**n - Fraction(spec.k, 2)
    return value.as_integer()


def eval_via_L(spec: RecurrenceSpec, n: int) -> int:
    """w_n = -k/2 + (4s+k-2r)/12 * L_n + (k+4r-2s)/12 * L_{n-1}, n >= 1."""
    if n < 1:
        raise ValueError("the companion form references L_{n-1}, so n >= 1 is required")
    k, r, s = spec.k, spec.w0, spec.w1
    l_n = eval_iterative(L_SPEC, n)
    l_prev = eval_iterative(L_SPEC, n - 1)
    value = (
        -Fraction(k, 2)
        + Fraction(4 * s + k - 2 * r, 12) * l_n
        + Fraction(k + 4 * r - 2 * s, 12) * l_prev
    )
    if value.denominator != 1:
        raise ArithmeticError(f"companion form gave a non-integer {value} at n={n}")
    return value.numerator


def gf_coefficients(spec: RecurrenceSpec, count: int) -> list[int]:
    """First ``count`` series coefficients of the generating function.

    g(x) = (w0 + (w1 - 5*w0)*x + (k + 4*w0 - w1)*x^2) / ((1 - x)(1 - 4x + x^2)).

    Long division by the expanded denominator 1 - 5x + 5x^2 - x^3 yields
    c_n = num_n + 5*c_{n-1} - 5*c_{n-2} + c_{n-3}, a three-term path that is
    independent of the defining two-term recurrence.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    numerator = (spec.w0, spec.w1 - 5 * spec.w0, spec.k + 4 * spec.w0 - spec.w1)
    coeffs: list[int] = []
    for n in range(count):
        c = numerator[n] if n < 3 else 0
        if n >= 1:
            c += 5 * coeffs[n - 1]
        if n >= 2:
            c -= 5 * coeffs[n - 2]
        if n >= 3:
            c += coeffs[n - 3]
        coeffs.append(c)
    return coeffs


# alpha^(1/2) = (1 + sqrt3)/sqrt2 and beta^(1/2) = (sqrt3 - 1)/sqrt2 (taking
# alpha^(1/2) - beta^(1/2) = sqrt2), so the half-power closed forms for u and v
# collapse to integer powers with these weights and never leave Q(sqrt(3)).
_W_PLUS = ONE + SQRT3
_W_MINUS = SQRT3 - ONE
_HALF = Fraction(1, 2)


def eval_u(n: int) -> int:
    """u_n = ((1+sqrt3)*alpha^n - (sqrt3-1)*beta^n) / 2."""
    _require_index(n)
    value = (_W_PLUS * ALPHA**n - _W_MINUS * BETA**n) * _HALF
    return value.as_integer()


def eval_v(n: int) -> int:
    """v_n = sqrt3 * ((1+sqrt3)*alpha^n + (sqrt3-1)*beta^n) / 2.

    The inner bracket is a pure sqrt(3) multiple; that is checked before the
    final multiplication brings the value back to the rationals.
    """
    _require_index(n)
    inner = (_W_PLUS * ALPHA**n + _W_MINUS * BETA**n) * _HALF
    if inner.a:
        raise ArithmeticError(f"expected a pure sqrt(3) multiple, got {inner}")
    return (SQRT3 * inner).as_integer()


def sequence_prefix(seq: SequenceId, count: int) -> list[int]:
    """[w_0, ..., w_{count-1}] for a named or custom sequence, by iteration."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    spec = resolve_spec(seq)
    out = [spec.w0]
    if count == 1:
        return out
    out.append(spec.w1)
    prev, cur = spec.w0, spec.w1
    for _ in range(count - 2):
        prev, cur = cur, 4 * cur - prev + spec.k
        out.append(cur)
    return out
