import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebotarev import polynomials as P
from chebotarev.frobenius import factor_mod_p, poly_disc

from oracles import root_count_mod_p, sylvester_resultant

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 31, 59, 101, 257]


def test_discriminant_examples():
    assert poly_disc((1, 0, 1)) == -4
    assert poly_disc((1, 1, 1)) == -3
    assert poly_disc((-1, -1, 0, 1)) == -23
    assert poly_disc((1, -2, -1, 1)) == 49
    assert poly_disc((1, 1, 1, 1, 1)) == 125


def test_resultant_sign_odd_degrees():
    f, g = (1, 2, 0, 3), (5, -1, 0, 0, 0, 2)
    assert P.resultant(f, g) == sylvester_resultant(f, g)


monic = st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(lambda c: tuple(c) + (1,))
any_poly = st.lists(st.integers(-20, 20), min_size=2, max_size=6).filter(lambda c: c[-1] != 0).map(tuple)


@settings(max_examples=150, deadline=None)
@given(any_poly, any_poly)
def test_resultant_matches_sylvester(f, g):
    assert P.resultant(f, g) == sylvester_resultant(f, g)


@settings(max_examples=100, deadline=None)
@given(monic)
def test_discriminant_matches_sylvester(f):
    n = len(f) - 1
    if n < 1:
        return
    df = P.derivative(f)
    if n == 1:
        assert P.discriminant(f) == 1
        return
    expected = (-1) ** (n * (n - 1) // 2) * sylvester_resultant(f, df)
    assert P.discriminant(f) == expected


def test_factor_examples():
    assert factor_mod_p((1, 0, 1), 5) == [((2, 1), 1), ((3, 1), 1)]
    assert factor_mod_p((1, 0, 1), 3) == [((1, 0, 1), 1)]
    f = (-1, -1, 0, 1)
    linear = [h for h, m in factor_mod_p(f, 59) if P.degree(h) == 1]
    assert len(linear) == root_count_mod_p(f, 59)


def test_factor_repeated_and_char_p_powers():
    # (x + 1)^2 (x^2 + 1) over F_3 and x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
    f = P.mul(P.mul((1, 1), (1, 1), 3), (1, 0, 1), 3)
    assert factor_mod_p(f, 3) == [((1, 1), 2), ((1, 0, 1), 1)]
    assert factor_mod_p((1, 0, 1, 0, 1), 2) == [((1, 1, 1), 2)]


def _product(factors, p):
    out = (1,)
    for h, m in factors:
        for _ in range(m):
            out = P.mul(out, h, p)
    return out


def _irreducible(h, p):
    """Rabin's test: h | x^{p^n} - x and gcd(x^{p^{n/q}} - x, h) = 1 for prime q | n."""
    n = P.degree(h)
    x = P.rem((0, 1), h, p)

    def frob_power(k):
        y = x
        for _ in range(k):
            y = P.powmod(y, p, h, p)
        return y

    if P.sub(frob_power(n), x, p) != ():
        return False
    for q in {q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))}:
        if P.degree(P.gcd(P.sub(frob_power(n // q), x, p), h, p)) > 0:
            return False
    return True


def test_random_factorizations():
    rng = random.Random(7)
    for _ in range(1000):
        p = rng.choice(SMALL_PRIMES)
        n = rng.randint(1, 8)
        f = P.mod_p([rng.randrange(p) for _ in range(n)] + [1], p)
        factors = factor_mod_p(f, p)
        assert sum(P.degree(h) * m for h, m in factors) == n
        assert _product(factors, p) == f
        assert all(h[-1] == 1 and _irreducible(h, p) for h, _ in factors)
        distinct_roots = sum(1 for h, _ in factors if P.degree(h) == 1)
        assert distinct_roots == root_count_mod_p(f, p)


def test_factor_deterministic_for_seed():
    f = P.mod_p([3, 1, 4, 1, 5, 9, 2, 6, 1], 101)
    assert P.factor(f, 101, seed=3) == P.factor(f, 101, seed=3)
    assert P.factor(f, 101, seed=3) == P.factor(f, 101, seed=11)


def test_q_compose_mod():
    from fractions import Fraction

    # roots of x^3 - x^2 - 2x + 1 are -2cos(2 pi k/7); x -> 2 - x^2 permutes them
    f = (1, -2, -1, 1)
    assert P.q_compose_mod(f, (2, 0, -1), f) == ()
    assert P.q_compose_mod(f, (-2, 0, 1), f) != ()
    assert P.q_compose_mod(f, (Fraction(1, 2), 0, 1), f) != ()
