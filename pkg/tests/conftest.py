import random

import pytest

from biquad.curves import add, scalar_mul
from biquad.families import general_family_points, specialize_general


def family_curve_points(m, n):
    """The two specialized generators on y^2 = x^3 - (m^4+n^4)x."""
    p1_sym, p2_sym = general_family_points()
    return specialize_general(p1_sym, m, n), specialize_general(p2_sym, m, n)


def random_family_point(rng: random.Random, max_param=6, max_coeff=2):
    """A nontorsion point on a random curve of the family."""
    while True:
        m = rng.randint(1, max_param)
        n = rng.randint(1, max_param)
        if m + n == 0:
            continue
        p1, p2 = family_curve_points(m, n)
        a = rng.randint(-max_coeff, max_coeff)
        b = rng.randint(-max_coeff, max_coeff)
        if a == 0 and b == 0:
            continue
        q = add(scalar_mul(a, p1), scalar_mul(b, p2))
        if q.is_identity or q.y == 0:
            continue
        return q


@pytest.fixture
def rng():
    return random.Random(20260823)
