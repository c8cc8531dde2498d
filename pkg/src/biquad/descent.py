"""Quartic homogeneous spaces and the square-class rank lower bound.

For y^2 = x^3 + B*x, each squarefree divisor d of B (either sign) gives
the space d*U^4 + (B/d)*V^4 = H^2; a solution with H != 0 lifts to the
rational point (d*U^2/V^2, d*U*H/V^3).  The images of the descent maps on
the curve and its associated curve are subgroups of Q*/(Q*)^2; if their
found sizes are s and s', then rank >= log2(s*s') - 2.  Found classes can
only undercount the true images, so the bound is always valid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    ArithDomainError,
    SquareClass,
    square_class_mul,
    squarefree_divisors,
    squarefree_kernel,
)
from .curves import Curve, CurveUsageError, Point


@dataclass(frozen=True)
class HomSpaceSolution:
    """(U, V, H) with d*U^4 + (B/d)*V^4 = H^2, gcd(U, V) = 1, V > 0."""

    d: int
    u_val: int
    v_val: int
    h_val: int

    @property
    def is_two_torsion_lift(self) -> bool:
        return self.h_val == 0

    def to_json(self) -> dict:
        return {
            "d": str(self.d),
            "u": str(self.u_val),
            "v": str(self.v_val),
            "h": str(self.h_val),
        }


def verify_solution(B: int, s: HomSpaceSolution) -> bool:
    """Exact check of the defining equation; d must divide B."""
    if s.d == 0 or B % s.d != 0:
        raise CurveUsageError(f"d = {s.d} does not divide B = {B}")
    lhs = s.d * s.u_val**4 + (B // s.d) * s.v_val**4
    return lhs == s.h_val**2


def lift_to_point(B: int, s: HomSpaceSolution) -> Point:
    """The point (d u^2/v^2, d u h/v^3) on y^2 = x^3 + B*x.

    An H = 0 solution lifts to a 2-torsion point (y = 0); callers can
    recognize that case through ``is_two_torsion_lift``.
    """
    if not verify_solution(B, s):
        raise CurveUsageError("solution does not satisfy its homogeneous space")
    curve = Curve(0, B)
    x = Fraction(s.d * s.u_val**2, s.v_val**2)
    y = Fraction(s.d * s.u_val * s.h_val, s.v_val**3)
    return curve.point(x, y)


def search_solutions(B: int, height_bound: int) -> list[HomSpaceSolution]:
    """All solutions with coprime 0 <= u, 1 <= v, max(u, v) <= bound.

    u < 0 duplicates u > 0 (fourth powers), so only u >= 0 is emitted.
    Deterministic order: |d| ascending, positive d before negative,
    then u, then v.
    """
    if B == 0:
        raise ArithDomainError("B must be nonzero")
    out: list[HomSpaceSolution] = []
    divisors = []
    for d0 in squarefree_divisors(B):
        divisors += [d0, -d0]
    divisors.sort(key=lambda d: (abs(d), d < 0))
    for d in divisors:
        comp = B // d
        for u in range(0, height_bound + 1):
            du4 = d * u**4
            for v in range(1, height_bound + 1):
                if math.gcd(u, v) != 1:
                    continue
                lhs = du4 + comp * v**4
                if lhs < 0:
                    continue
                h = math.isqrt(lhs)
                if h * h == lhs:
                    out.append(HomSpaceSolution(d, u, v, h))
    return out


@dataclass
class DescentReport:
    n: int
    classes_e: list[int] = field(default_factory=list)
    classes_e4: list[int] = field(default_factory=list)
    s: int = 1
    s_prime: int = 1
    rank_lower_bound: int = 0
    solutions_e: list[HomSpaceSolution] = field(default_factory=list)
    solutions_e4: list[HomSpaceSolution] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "N": str(self.n),
            "classes_E": [str(c) for c in self.classes_e],
            "classes_E4": [str(c) for c in self.classes_e4],
            "s": self.s,
            "s_prime": self.s_prime,
            "rank_lower_bound": self.rank_lower_bound,
            "solutions_E": [s.to_json() for s in self.solutions_e],
            "solutions_E4": [s.to_json() for s in self.solutions_e4],
        }


def _subgroup(classes: set[int]) -> set[int]:
    """Closure of a set of square classes under multiplication."""
    group = {1}
    frontier = {SquareClass(c) for c in classes}
    changed = True
    while changed:
        changed = False
        current = {SquareClass(c) for c in group}
        for g in list(current):
            for f in frontier:
                r = square_class_mul(g, f).rep
                if r not in group:
                    group.add(r)
                    changed = True
    return group


def _point_classes(points, expect_b: int) -> set[int]:
    classes = set()
    for p in points:
        if p.is_identity:
            continue
        if p.curve.b != expect_b or p.curve.a2 != 0:
            raise CurveUsageError(
                f"extra point lies on b={p.curve.b}, expected b={expect_b}"
            )
        if p.x == 0:
            continue  # 2-torsion; its class is that of B, added separately
        classes.add(squarefree_kernel(p.x).rep)
    return classes


def rank_lower_bound(
    N: int, height_bound: int, extra_points=()
) -> DescentReport:
    """Certified lower bound for the rank of y^2 = x^3 - N*x.

    Collects square classes of x-coordinates from quartic-space searches
    on the curve (B = -N) and its associated curve (B = 4N), plus the
    2-torsion class of B on each, plus any supplied points (which must lie
    on B = -N).  Bound: log2(s * s') - 2.
    """
    if N < 2:
        raise ArithDomainError("N must be at least 2")
    b_e, b_e4 = -N, 4 * N

    sols_e = [s for s in search_solutions(b_e, height_bound)]
    sols_e4 = [s for s in search_solutions(b_e4, height_bound)]

    classes_e = {squarefree_kernel(s.d).rep for s in sols_e if s.h_val != 0}
    classes_e.add(squarefree_kernel(b_e).rep)
    classes_e |= _point_classes(extra_points, b_e)

    classes_e4 = {squarefree_kernel(s.d).rep for s in sols_e4 if s.h_val != 0}
    classes_e4.add(squarefree_kernel(b_e4).rep)

    group_e = _subgroup(classes_e)
    group_e4 = _subgroup(classes_e4)
    s, s_prime = len(group_e), len(group_e4)
    bound = max(s.bit_length() + s_prime.bit_length() - 2 - 2, 0)
    return DescentReport(
        n=N,
        classes_e=sorted(group_e, key=lambda c: (abs(c), c < 0)),
        classes_e4=sorted(group_e4, key=lambda c: (abs(c), c < 0)),
        s=s,
        s_prime=s_prime,
        rank_lower_bound=bound,
        solutions_e=sols_e,
        solutions_e4=sols_e4,
    )
