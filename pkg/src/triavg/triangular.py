"""Triangular numbers, their prefix averages, and the equation tying them together.

Asking for the average of the first s triangular numbers to be the r-th
triangular number leads to s^2 + 3s + 2 = 3r^2 + 3r. This module is the
ground-truth side of the project: it solves that equation by radical
inversion and exhaustive scan, with no recourse to the recurrences, and it
packages fully verified (s, average, r) witnesses for the indices that the
recurrences predict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import is_perfect_square
from .recurrences import A_SPEC, B_SPEC, eval_iterative

# Above this many terms the literal sum is skipped and only the closed
# product formula is used; below it, both are computed and must agree.
LITERAL_SUM_CUTOFF = 10**5


def triangular(k: int) -> int:
    """T_k = k*(k+1)/2."""
    if k < 0:
        raise ValueError(f"triangular numbers are indexed from 0, got {k}")
    return k * (k + 1) // 2


def is_triangular(m: int) -> int | None:
    """The index k with T_k = m, or None when m is not triangular.

    Inverts the triangular map through the perfect-square test on 8m + 1;
    the root of an odd square is odd, so (root - 1)/2 is exact.
    """
    if m < 0:
        return None
    root = is_perfect_square(8 * m + 1)
    if root is None:
        return None
    return (root - 1) // 2


def prefix_sum(s: int) -> int:
    """Sum of the first s triangular numbers, s*(s+1)*(s+2)/6 exactly.

    For s up to LITERAL_SUM_CUTOFF the literal term-by-term sum is computed
    as well and compared, so the closed product never silently drifts from
    the definition.
    """
    if s < 1:
        raise ValueError(f"need at least one term, got s={s}")
    # s*(s+1)*(s+2) is a product of three consecutive integers, hence
    # divisible by 6.
    total = s * (s + 1) * (s + 2) // 6
    if s <= LITERAL_SUM_CUTOFF:
        literal = sum(k * (k + 1) // 2 for k in range(1, s + 1))
        if literal != total:
            raise ArithmeticError(
                f"prefix sum mismatch at s={s}: literal {literal} vs formula {total}"
            )
    return total


def prefix_average(s: int) -> Fraction:
    """Exact average of T_1 .. T_s, the rational (s+1)(s+2)/6."""
    if s < 1:
        raise ValueError(f"need at least one term, got s={s}")
    return Fraction((s + 1) * (s + 2), 6)


def check_pair(s: int, r: int) -> bool:
    """Does (s, r) satisfy s^2 + 3s + 2 = 3r^2 + 3r?"""
    return s * s + 3 * s + 2 == 3 * r * r + 3 * r


def solve_s_for_r(r: int) -> int | None:
    """The count s whose triangular average is T_r, if any.

    Solving for s gives s = (sqrt(1 + 12r + 12r^2) - 3) / 2, so an answer
    exists exactly when the radicand is a perfect square, the root minus 3
    is even, and the resulting s is at least 1.
    """
    if r < 1:
        raise ValueError(f"triangular index must be positive, got r={r}")
    root = is_perfect_square(1 + 12 * r + 12 * r * r)
    if root is None:
        return None
    if (root - 3) % 2:
        return None
    s = (root - 3) // 2
    return s if s >= 1 else None


def solve_r_for_s(s: int) -> int | None:
    """The triangular index r of the average of T_1 .. T_s, if integral.

    Solving for r gives r = (sqrt(3*(11 + 12s + 4s^2)) - 3) / 6, so an
    answer exists exactly when the radicand is a perfect square and the
    root is 3 mod 6.
    """
    if s < 1:
        raise ValueError(f"need at least one term, got s={s}")
    root = is_perfect_square(3 * (11 + 12 * s + 4 * s * s))
    if root is None:
        return None
    if root % 6 != 3:
        return None
    r = (root - 3) // 6
    return r if r >= 1 else None


def enumerate_solutions(s_max: int) -> list[tuple[int, int]]:
    """All (s, r) with 1 <= s <= s_max satisfying the equation, by brute scan.

    Deliberately built on solve_r_for_s alone so it stays an oracle that is
    independent of the recurrence machinery.
    """
    if s_max < 1:
        raise ValueError(f"s_max must be positive, got {s_max}")
    found = []
    for s in range(1, s_max + 1):
        r = solve_r_for_s(s)
        if r is not None:
            found.append((s, r))
    return found


@dataclass(frozen=True)
class TriangularWitness:
    """One verified instance: the first s triangular numbers average to T_r.

    Fields: n is the index into the b/a sequences, s = b_n is the count
    averaged, avg is the integral average, and r = a_n is the index with
    T_r = avg.
    """

    n: int
    s: int
    avg: int
    r: int

    @property
    def total(self) -> int:
        """The exact prefix sum, s * avg."""
        return self.s * self.avg

    def verify(self) -> bool:
        """Re-check all invariants with fresh computation."""
        return (
            self.avg == triangular(self.r)
            and check_pair(self.s, self.r)
            and prefix_sum(self.s) == self.s * self.avg
        )


def witness(n: int) -> TriangularWitness:
    """Build and verify the witness for index n >= 1.

    b_n and a_n come from the recurrences; the average is then recomputed
    from first principles and every invariant is confirmed before the
    record is returned. Failure to verify raises ArithmeticError, since it
    would mean a bug, not bad input.
    """
    if n < 1:
        raise ValueError("witness requires n >= 1: b_0 = -1 is not a valid prefix length")
    s = eval_iterative(B_SPEC, n)
    r = eval_iterative(A_SPEC, n)
    total = prefix_sum(s)
    if total % s:
        raise ArithmeticError(f"average of the first {s} triangular numbers is not integral")
    avg = total // s
    if avg != triangular(r):
        raise ArithmeticError(f"average {avg} is not the {r}-th triangular number")
    if not check_pair(s, r):
        raise ArithmeticError(f"pair ({s}, {r}) fails the defining equation")
    return TriangularWitness(n=n, s=s, avg=avg, r=r)
