"""Naive and canonical heights, height pairing, regulators.

Normalization: hhat(P) = lim 4^-n log max(|num x(2^n P)|, den x(2^n P)),
so hhat(2P) = 4 hhat(P) exactly and hhat is twice the classically
normalized Neron-Tate height.  Only curves y^2 = x^3 + b*x are supported
(every curve in this toolkit has a2 = 0).

Algorithm: split the doubling recursion on reduced fractions u/v into

  hhat(P) = G(u, v) - sum_j 4^-j log g_j

where G is the archimedean Green's function of the duplication forms
F = (u^2 - b v^2)^2, G = 4uv(u^2 + b v^2), evaluated by normalized
high-precision iteration, and g_j is the gcd cancelled at step j.  Each
g_j divides a fixed curve constant (a product of two resultants), so the
g_j are recovered exactly from modular residues and both tails admit
explicit geometric bounds.  The resulting error bound is far below the
10^-3 contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .curves import Curve, CurveUsageError, Point, scalar_mul, add

_DPS = 120


class HeightUsageError(CurveUsageError):
    pass


@dataclass(frozen=True)
class HeightValue:
    value: float
    abs_error: float


@dataclass(frozen=True)
class GramMatrix:
    points: tuple
    entries: tuple          # rows of floats
    entry_error: float      # uniform per-entry bound

    def determinant(self) -> float:
        return _det([list(r) for r in self.entries])

    def det_error_bound(self) -> float:
        n = len(self.entries)
        if n == 0:
            return 0.0
        a = max((abs(x) for row in self.entries for x in row), default=0.0)
        a += self.entry_error
        return n * math.factorial(n) * a ** (n - 1) * self.entry_error


def _det(m: list[list[float]]) -> float:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0.0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def log_big(n: int) -> float:
    """Natural log of a positive integer of any size."""
    if n <= 0:
        raise ValueError("log_big needs a positive integer")
    k = max(n.bit_length() - 53, 0)
    return math.log(n >> k) + k * math.log(2)


def naive_height(p: Point) -> float:
    """log max(|num|, den) of the x-coordinate; 0 for the identity."""
    if p.is_identity:
        return 0.0
    return log_big(max(abs(p.x.numerator), p.x.denominator))


# ---------------------------------------------------------------------------
# Per-curve constants from the duplication forms
# ---------------------------------------------------------------------------


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Division with remainder for dense coefficient lists (low first)."""
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a.pop()
    return q, a


def _poly_extgcd(f: list[Fraction], g: list[Fraction]):
    """(s, t) with s*f + t*g = 1 for coprime univariate polynomials."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def sub_scaled(p, q, c, k):
        out = p[:] + [Fraction(0)] * max(0, len(q) + k - len(p))
        for i, qc in enumerate(q):
            out[i + k] -= c * qc
        return trim(out)

    r0, r1 = trim([Fraction(c) for c in f]), trim([Fraction(c) for c in g])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        q = trim(q)
        # s = s0 - q*s1, t = t0 - q*t1
        s = s0[:]
        t = t0[:]
        for k, qc in enumerate(q):
            if qc:
                s = sub_scaled(s, s1, qc, k)
                t = sub_scaled(t, t1, qc, k)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, s
        t0, t1 = t1, t
    c = r0[-1] if r0 else None
    if c is None or len(r0) != 1:
        raise HeightUsageError("duplication forms share a factor (singular curve?)")
    return [x / c for x in s0], [x / c for x in t0]


def _clear_denominators(polys):
    lcm = 1
    for p in polys:
        for c in p:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [[int(c * lcm) for c in p] for p in polys], lcm


@lru_cache(maxsize=None)
def _curve_constants(b: int):
    """Constants for y^2 = x^3 + b*x.

    Returns (D, log_D, log_bound) where every duplication gcd divides D
    and |log s| <= log_bound for the normalized Green iteration factor s.
    """
    # duplication forms in x (v = 1): F = (x^2-b)^2, G = 4x^3 + 4bx
    f = [Fraction(c) for c in (b * b, 0, -2 * b, 0, 1)]
    g = [Fraction(c) for c in (0, 4 * b, 0, 4)]
    s, t = _poly_extgcd(f, g)
    (si, ti), r1 = _clear_denominators([s, t])
    k1 = sum(abs(c) for c in si) + sum(abs(c) for c in ti)
    # reversed forms in y = v/u (u = 1): F~ = (1 - b y^2)^2, G~ = 4y + 4b y^3
    fr = [Fraction(c) for c in (1, 0, -2 * b, 0, b * b)]
    gr = [Fraction(c) for c in (0, 4, 0, 4 * b)]
    sr, tr = _poly_extgcd(fr, gr)
    (sri, tri), r2 = _clear_denominators([sr, tr])
    k2 = sum(abs(c) for c in sri) + sum(abs(c) for c in tri)
    d_const = abs(r1 * r2)
    c_up = max((1 + abs(b)) ** 2, 4 * (1 + abs(b)))
    c_low = min(Fraction(r1, k1), Fraction(r2, k2))
    log_bound = max(
        log_big(c_up), abs(log_big(c_low.numerator) - log_big(c_low.denominator))
    )
    return d_const, log_big(d_const), log_bound


def _is_torsion(p: Point) -> bool:
    # torsion on y^2 = x^3 + b*x has exponent dividing 4
    return scalar_mul(4, p).is_identity


def canonical_height(p: Point, target: float = 1e-12) -> HeightValue:
    """Canonical height with a certified absolute error bound.

    Returns 0 exactly for the identity and for torsion points.  The
    reported abs_error is the sum of both geometric tail bounds plus a
    generous allowance for floating-point roundoff.
    """
    c = p.curve
    if c.a2 != 0:
        raise HeightUsageError("canonical height implemented for a2 = 0 curves")
    if p.is_identity or _is_torsion(p):
        return HeightValue(0.0, 0.0)
    b = c.b
    d_const, log_d, log_bound = _curve_constants(b)

    worst = max(log_d, log_bound)
    n_iter = max(8, math.ceil(math.log(worst / (3 * target)) / math.log(4)))
    n_iter = min(n_iter, 60)

    u0 = p.x.numerator
    v0 = p.x.denominator

    # exact gcd corrections via residues modulo a power of the curve constant
    mod = d_const ** (n_iter + 1)
    a_res, b_res = u0 % mod, v0 % mod
    gcd_sum = 0.0
    for j in range(1, n_iter + 1):
        fv = (a_res * a_res - b * b_res * b_res) ** 2 % mod
        gv = 4 * a_res * b_res * (a_res * a_res + b * b_res * b_res) % mod
        g = math.gcd(math.gcd(fv % d_const, gv % d_const), d_const)
        if g > 1:
            gcd_sum += log_big(g) / 4**j
        mod //= g
        a_res, b_res = (fv // g) % mod, (gv // g) % mod
    gcd_tail = log_d * 4.0**-n_iter / 3.0

    # archimedean Green's function by normalized iteration
    with mpmath.workdps(_DPS):
        au = mpmath.mpf(u0)
        av = mpmath.mpf(v0)
        s = max(abs(au), av)
        green = mpmath.log(s)
        au, av = au / s, av / s
        bb = mpmath.mpf(b)
        for n in range(1, n_iter + 1):
            fu = (au * au - bb * av * av) ** 2
            gv2 = 4 * au * av * (au * au + bb * av * av)
            s = max(abs(fu), abs(gv2))
            green += mpmath.log(s) / mpmath.mpf(4) ** n
            au, av = fu / s, gv2 / s
        green_f = float(green)
    green_tail = log_bound * 4.0**-n_iter / 3.0

    value = green_f - gcd_sum
    err = gcd_tail + green_tail + 1e-20 * max(1.0, abs(value))
    return HeightValue(value, err)


def height_pairing(p: Point, q: Point) -> float:
    """(hhat(p+q) - hhat(p) - hhat(q)) / 2."""
    return _pairing_with_error(p, q)[0]


def _pairing_with_error(p: Point, q: Point) -> tuple[float, float]:
    if p.curve != q.curve:
        raise HeightUsageError("height pairing needs points on one curve")
    hpq = canonical_height(add(p, q))
    hp = canonical_height(p)
    hq = canonical_height(q)
    value = (hpq.value - hp.value - hq.value) / 2
    err = (hpq.abs_error + hp.abs_error + hq.abs_error) / 2
    return value, err


def gram_matrix(points) -> GramMatrix:
    points = tuple(points)
    if not points:
        raise HeightUsageError("empty point list")
    n = len(points)
    entries = [[0.0] * n for _ in range(n)]
    worst = 0.0
    for i in range(n):
        for j in range(i, n):
            v, e = _pairing_with_error(points[i], points[j])
            entries[i][j] = entries[j][i] = v
            worst = max(worst, e)
    return GramMatrix(points, tuple(tuple(r) for r in entries), worst)


# a Gram determinant above this (and above its own error bound) certifies
# linear independence
INDEPENDENCE_TOLERANCE = 0.01


def regulator(points) -> float:
    """Gram determinant of the height pairing."""
    return gram_matrix(points).determinant()


def regulator_report(points) -> dict:
    """Determinant, entries, error bound and independence verdict."""
    gm = gram_matrix(points)
    det = gm.determinant()
    err = gm.det_error_bound()
    threshold = max(INDEPENDENCE_TOLERANCE, err)
    return {
        "points": [p.to_json() for p in gm.points],
        "gram": [[f"{x:.12f}" for x in row] for row in gm.entries],
        "determinant": f"{det:.12f}",
        "error_bound": f"{max(err, gm.entry_error):.3e}",
        "threshold": f"{threshold:.3e}",
        "independent": bool(det > threshold),
        "rank_lower_bound": len(gm.points) if det > threshold else 0,
    }
