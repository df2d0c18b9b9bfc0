"""Least prime whose Frobenius matches a given automorphism, for concrete fields.

A field is given by a monic irreducible f in Z[x] and its automorphisms as
polynomials g in Q[x] sending a root r of f to g(r). For a prime p that does
not divide disc(f) or the denominators of g, the automorphism is a Frobenius
at p exactly when g(x) = x^p modulo (p, h) for some irreducible factor h of
f mod p.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import polynomials as P
from .numerics import EULER_GAMMA

DEFAULT_CEILING = 10 ** 8
_C_SCALE = (3 * math.exp(EULER_GAMMA) / math.pi) ** 2


class IndeterminateError(ValueError):
    """The prime divides disc(f) or an automorphism denominator."""


class SearchCeilingError(RuntimeError):
    """No matching prime below the search ceiling."""


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    degree: int
    f: tuple[int, ...]
    discriminant: int
    automorphisms: tuple[tuple[Fraction, ...], ...]
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.degree < 2 or P.degree(self.f) != self.degree or self.f[-1] != 1:
            raise ValueError(f"f must be monic of degree {self.degree}")
        if abs(self.discriminant) < 3:
            raise ValueError("field discriminant must satisfy |d| >= 3")
        if not self.automorphisms:
            raise ValueError("at least one automorphism is required")
        if self.validate:
            for i, g in enumerate(self.automorphisms):
                if P.q_compose_mod(self.f, g, self.f):
                    raise ValueError(f"automorphism {i} does not map roots of f to roots")

    @property
    def poly_discriminant(self) -> int:
        return P.discriminant(self.f)

    def denominator(self, sigma_index: int) -> int:
        return math.lcm(*(Fraction(c).denominator for c in self.automorphisms[sigma_index]))

    def sigma_label(self, sigma_index: int) -> str:
        if self.automorphisms[sigma_index] == (0, 1):
            return "id"
        return f"s{sigma_index}"


@dataclass(frozen=True)
class Exponents:
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class FrobeniusResult:
    p: int
    factor_degrees: tuple[int, ...]
    exponents: Exponents
    skipped: tuple[int, ...] = ()


def exponents(p: int, discriminant: int) -> Exponents:
    """The three normalized sizes of p against |d_L|."""
    L = math.log(abs(discriminant))
    ll = math.log(L)
    return Exponents(
        A=math.log(p) / L,
        B=p / L ** 2,
        C=p * ll ** 2 / (_C_SCALE * L ** 2 * math.log(2 * ll) ** 2),
    )


def poly_disc(f: Sequence[int]) -> int:
    return P.discriminant(tuple(f))


def factor_mod_p(f: Sequence[int], p: int, seed: int = 0) -> list[tuple[tuple[int, ...], int]]:
    return P.factor(tuple(f), p, seed)


def _g_mod_p(g: Sequence[Fraction], p: int) -> tuple[int, ...]:
    return P.trim(Fraction(c).numerator * pow(Fraction(c).denominator, -1, p) % p for c in g)


def frobenius_matches(field: FieldSpec, sigma_index: int, p: int) -> bool:
    if field.poly_discriminant % p == 0 or field.denominator(sigma_index) % p == 0:
        raise IndeterminateError(f"p={p} divides disc(f) or the denominator of sigma")
    g = _g_mod_p(field.automorphisms[sigma_index], p)
    for h, _ in factor_mod_p(field.f, p):
        frob = P.powmod((0, 1), p, h, p)
        if P.sub(frob, P.rem(g, h, p), p) == ():
            return True
    return False


def primes(limit: int, segment: int = 1 << 16) -> Iterator[int]:
    """Primes up to ``limit`` from a segmented sieve."""
    if limit < 2:
        return
    base_limit = math.isqrt(limit)
    base = bytearray([1]) * (base_limit + 1)
    base[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(base_limit) + 1):
        if base[i]:
            base[i * i::i] = bytearray(len(base[i * i::i]))
    small = [i for i in range(2, base_limit + 1) if base[i]]
    lo = 2
    while lo <= limit:
        hi = min(lo + segment - 1, limit)
        mark = bytearray([1]) * (hi - lo + 1)
        for q in small:
            if q * q > hi:
                break
            start = max(q * q, (lo + q - 1) // q * q)
            mark[start - lo::q] = bytearray(len(mark[start - lo::q]))
        for i, flag in enumerate(mark):
            if flag:
                yield lo + i
        lo = hi + 1


def least_frobenius_prime(field: FieldSpec, sigma_index: int,
                          ceiling: int = DEFAULT_CEILING) -> FrobeniusResult:
    """Smallest unramified p whose Frobenius class contains sigma.

    Primes dividing d_L are ramified and passed over. Primes dividing disc(f) or
    the denominator of sigma but not d_L cannot be decided with Z[x]/(f) and
    are listed in ``skipped``.
    """
    pdisc = field.poly_discriminant
    den = field.denominator(sigma_index)
    skipped = []
    for p in primes(ceiling):
        if field.discriminant % p == 0:
            continue
        if pdisc % p == 0 or den % p == 0:
            skipped.append(p)
            continue
        if frobenius_matches(field, sigma_index, p):
            degrees = tuple(sorted(P.degree(h) for h, m in factor_mod_p(field.f, p) for _ in range(m)))
            return FrobeniusResult(p, degrees, exponents(p, field.discriminant), tuple(skipped))
    raise SearchCeilingError(f"no matching prime up to {ceiling}")


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False

    def squarefree(n: int) -> bool:
        n = abs(n)
        return all(n % (k * k) for k in range(2, math.isqrt(n) + 1))

    if d % 4 == 1:
        return squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def quadratic_field(d: int) -> FieldSpec:
    """Q(sqrt d) for a fundamental discriminant d, with identity and conjugation."""
    if not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a fundamental discriminant")
    if d % 4 == 1:
        f = ((1 - d) // 4, -1, 1)
        conj = (Fraction(1), Fraction(-1))
    else:
        f = (-(d // 4), 0, 1)
        conj = (Fraction(0), Fraction(-1))
    return FieldSpec(2, f, d, ((Fraction(0), Fraction(1)), conj))


def quadratic_corpus(height: int) -> list[FieldSpec]:
    if height < 3:
        raise ValueError("height must be at least 3")
    return [quadratic_field(d) for d in range(-height, height + 1) if is_fundamental_discriminant(d)]


@dataclass(frozen=True)
class ScanRow:
    degree: int
    discriminant: int
    sigma: str
    result: FrobeniusResult | None
    error: str | None = None


@dataclass(frozen=True)
class WorstCase:
    value: float
    discriminant: int
    sigma: str
    p: int


@dataclass
class ScanReport:
    rows: list[ScanRow]
    worst: dict[int, dict[str, WorstCase]]

    @property
    def failures(self) -> list[ScanRow]:
        return [r for r in self.rows if r.result is None]


def _scan_field(args: tuple[FieldSpec, int]) -> list[ScanRow]:
    fld, ceiling = args
    rows = []
    for i in range(len(fld.automorphisms)):
        label = fld.sigma_label(i)
        try:
            rows.append(ScanRow(fld.degree, fld.discriminant, label,
                                least_frobenius_prime(fld, i, ceiling)))
        except SearchCeilingError as exc:
            rows.append(ScanRow(fld.degree, fld.discriminant, label, None, str(exc)))
    return rows


def corpus_scan(corpus: Sequence[FieldSpec], ceiling: int = DEFAULT_CEILING,
                workers: int = 1) -> ScanReport:
    """Least Frobenius prime for every (field, automorphism), with per-degree maxima."""
    ordered = sorted(corpus, key=lambda f: (f.degree, f.discriminant))
    jobs = [(f, ceiling) for f in ordered]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_field, jobs, chunksize=16))
    else:
        chunks = [_scan_field(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    worst: dict[int, dict[str, WorstCase]] = {}
    for r in rows:
        if r.result is None:
            continue
        per_degree = worst.setdefault(r.degree, {})
        for shape in ("A", "B", "C"):
            value = getattr(r.result.exponents, shape)
            if shape not in per_degree or value > per_degree[shape].value:
                per_degree[shape] = WorstCase(value, r.discriminant, r.sigma, r.result.p)
    return ScanReport(rows, worst)


def _parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _parse_coefficients(text: str) -> tuple[Fraction, ...]:
    return tuple(_parse_rational(c) for c in text.split(","))


def parse_corpus(text: str, source: str = "<corpus>") -> list[FieldSpec]:
    """Read ``degree : discriminant : c0,c1,...,1 : g1 ; g2 ; ...`` lines."""
    fields_out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [s.strip() for s in line.split(":")]
        if len(parts) != 4:
            raise CorpusError(f"{source}:{lineno}: expected 4 ':'-separated fields, got {len(parts)}")
        try:
            deg, disc = int(parts[0]), int(parts[1])
            coeffs = _parse_coefficients(parts[2])
            if any(c.denominator != 1 for c in coeffs):
                raise ValueError("defining polynomial must have integer coefficients")
            autos = tuple(P.trim(_parse_coefficients(g)) for g in parts[3].split(";") if g.strip())
            fields_out.append(FieldSpec(deg, tuple(int(c) for c in coeffs), disc, autos))
        except (ValueError, ZeroDivisionError) as exc:
            raise CorpusError(f"{source}:{lineno}: {exc}") from exc
    return fields_out


def read_corpus(path: str) -> list[FieldSpec]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc
    return parse_corpus(text, path)
