"""Dense polynomial arithmetic over Z, Q and F_p.

Polynomials are tuples of coefficients from the constant term up, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

Poly = tuple


def trim(c: Sequence) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1


# Integer polynomials.

def derivative(f: Poly) -> Poly:
    return trim(i * c for i, c in enumerate(f) if i)


def _pseudo_remainder(a: Poly, b: Poly) -> Poly:
    """lc(b)^{deg a - deg b + 1} a mod b, computed over Z."""
    r = list(a)
    db, lb = degree(b), b[-1]
    e = degree(a) - db + 1
    while r and len(r) - 1 >= db:
        lr, shift = r[-1], len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        r = list(trim(r))
        e -= 1
    return tuple(c * lb ** e for c in r)


def resultant(a: Poly, b: Poly) -> int:
    """Res(a, b) over Z by the subresultant remainder sequence."""
    if not a or not b:
        return 0
    s, swap = 1, False
    if degree(a) < degree(b):
        a, b = b, a
        swap = degree(a) % 2 == 1 and degree(b) % 2 == 1
    if swap:
        s = -1
    g = h = 1
    while degree(b) > 0:
        delta = degree(a) - degree(b)
        if degree(a) % 2 == 1 and degree(b) % 2 == 1:
            s = -s
        r = _pseudo_remainder(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = tuple(c // div for c in r)
        g = a[-1]
        h = g ** delta // h ** (delta - 1) if delta >= 1 else h
    da = degree(a)
    return s * b[0] ** da // h ** (da - 1) if da >= 1 else s


def discriminant(f: Poly) -> int:
    """(-1)^{n(n-1)/2} Res(f, f')/lc(f)."""
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree at least 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) // f[-1]


# Rational polynomials, used to validate automorphisms.

def q_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def q_rem(a: Poly, m: Poly) -> Poly:
    r = [Fraction(c) for c in a]
    dm, lm = degree(m), Fraction(m[-1])
    while r and len(r) - 1 >= dm:
        q, shift = r[-1] / lm, len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] -= q * c
        r = list(trim(r))
    return tuple(r)


def q_compose_mod(f: Poly, g: Poly, m: Poly) -> Poly:
    """f(g(x)) mod m by Horner's rule."""
    acc: Poly = ()
    for c in reversed(f):
        acc = list(q_rem(q_mul(acc, g), m)) or [Fraction(0)]
        acc[0] += c
        acc = trim(acc)
    return q_rem(acc, m)


# Polynomials over F_p.

def mod_p(f: Sequence[int], p: int) -> Poly:
    return trim(c % p for c in f)


def add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n))


def sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n))


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(c % p for c in out)


def divmod_p(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = degree(b)
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    while r and len(r) - 1 >= db:
        c, shift = r[-1] * inv % p, len(r) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        r = list(trim(r))
    return trim(q), tuple(r)


def rem(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_p(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def powmod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = rem(base, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), m, p)
    return rem(result, m, p)


def deriv_p(f: Poly, p: int) -> Poly:
    return trim(i * c % p for i, c in enumerate(f) if i)


def _pth_root(f: Poly, p: int) -> Poly:
    """g with g(x)^p = f(x), for f whose exponents are all multiples of p."""
    return trim(f[i] for i in range(0, len(f), p))


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities, f = prod a_i^{m_i}."""
    f = monic(f, p)
    out: list[tuple[Poly, int]] = []

    def recurse(f: Poly, mult: int) -> None:
        if degree(f) < 1:
            return
        df = deriv_p(f, p)
        if not df:
            recurse(_pth_root(f, p), mult * p)
            return
        c = gcd(f, df, p)
        w = divmod_p(f, c, p)[0]
        i = 1
        while degree(w) > 0:
            y = gcd(w, c, p)
            z = divmod_p(w, y, p)[0]
            if degree(z) > 0:
                out.append((monic(z, p), i * mult))
            w, c = y, divmod_p(c, y, p)[0]
            i += 1
        if degree(c) > 0:
            recurse(_pth_root(c, p), mult * p)

    recurse(f, 1)
    return out


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    out = []
    x: Poly = (0, 1)
    h = x
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if degree(g) > 0:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = rem(h, f, p)
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out


def _split_candidate(a: Poly, f: Poly, d: int, p: int) -> Poly:
    if p == 2:
        t, s = a, a
        for _ in range(d - 1):
            s = rem(mul(s, s, p), f, p)
            t = add(t, s, p)
        return t
    return sub(powmod(a, (p ** d - 1) // 2, f, p), (1,), p)


def equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of f, a product of irreducibles of degree d."""
    if degree(f) == d:
        return [f]
    while True:
        a = trim(rng.randrange(p) for _ in range(degree(f)))
        if degree(a) < 1:
            continue
        g = gcd(f, _split_candidate(a, f, d, p), p)
        if 0 < degree(g) < degree(f):
            h = divmod_p(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(monic(h, p), d, p, rng)


def factor(f: Sequence[int], p: int, seed: int = 0) -> list[tuple[Poly, int]]:
    """Complete factorization of f over F_p into monic irreducibles."""
    fp = mod_p(f, p)
    if degree(fp) < 1:
        raise ValueError("polynomial is constant modulo p")
    rng = random.Random(seed)
    out = []
    for part, mult in squarefree_decomposition(fp, p):
        for block, d in distinct_degree(part, p):
            for irr in equal_degree(block, d, p, rng):
                out.append((irr, mult))
    return sorted(out, key=lambda fm: (degree(fm[0]), fm[0][::-1], fm[1]))
