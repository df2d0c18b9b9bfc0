"""Per-degree discriminant floors: n0, d0, L0 = log d0, Q0 and Delta0."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from decimal import Decimal

# Degree classes 2..20 use Q0 = n0/L0; from 21 on every field has d_L > 10^{n_L}
# and Q0 = 1/log 10 works uniformly.
LAST_EXPLICIT_DEGREE = 20

# (n0, d0) discriminant floors used for the repulsion constants.
_REPULSION_FLOORS = (
    (2, "400000"), (3, "239"), (4, "320"), (5, "1609"), (6, "9747"),
    (7, "184607"), (8, "1257728"), (9, "2.29e7"), (10, "1.56e8"),
    (11, "3.91e9"), (12, "2.74e10"), (13, "7.56e11"), (14, "5.43e12"),
    (15, "1.61e14"), (16, "1.17e15"), (17, "3.70e16"), (18, "2.73e17"),
    (19, "9.03e18"), (20, "6.74e19"), (21, "1e21"),
)

# Floors used for the least-prime exponent B; degrees 2..8 start higher.
_LEASTPRIME_FLOORS = (
    (2, "1e10"), (3, "1e10"), (4, "1e8"), (5, "1e8"), (6, "1e8"),
    (7, "1e8"), (8, "1e7"), (9, "2.29e7"), (10, "1.56e8"),
    (11, "3.91e9"), (12, "2.74e10"), (13, "7.56e11"), (14, "5.43e12"),
    (15, "1.61e14"), (16, "1.17e15"), (17, "3.70e16"), (18, "2.73e17"),
    (19, "9.03e18"), (20, "6.74e19"), (21, "1e21"),
)


@dataclass(frozen=True)
class DegreeProfile:
    """Fields of degree n0 (or >= 21 for the last class) with d_L >= d0."""

    n0: int
    d0_text: str

    def __post_init__(self) -> None:
        if self.n0 < 2:
            raise ValueError(f"degree must be at least 2, got {self.n0}")
        if not Decimal(self.d0_text) >= 3:
            raise ValueError(f"discriminant floor must be at least 3, got {self.d0_text}")
        if self.n0 > 2.0 * self.L0 / math.log(3.0) * (1 + 1e-12):
            raise ValueError(f"n0={self.n0} violates n0 <= 2 log d0 / log 3 for d0={self.d0_text}")

    @property
    def d0(self) -> float:
        return float(Decimal(self.d0_text))

    @property
    def L0(self) -> float:
        return float(Decimal(self.d0_text).ln())

    @property
    def Q0(self) -> float:
        if self.n0 <= LAST_EXPLICIT_DEGREE:
            return self.n0 / self.L0
        return 1.0 / math.log(10.0)

    @property
    def label(self) -> str:
        return f"{self.n0}+" if self.n0 > LAST_EXPLICIT_DEGREE else str(self.n0)


def profile(n0: int, d0: float | str) -> DegreeProfile:
    return DegreeProfile(n0, str(d0))


def large_degree_profile(n_l: int) -> DegreeProfile:
    """Profile for degree n_L >= 21 using the floor d0 = 10^{n_L}."""
    if n_l <= LAST_EXPLICIT_DEGREE:
        raise ValueError("large-degree profiles start at degree 21")
    return DegreeProfile(n_l, f"1e{n_l}")


def builtin_profiles() -> list[DegreeProfile]:
    """Floors for degrees 2..20 and the 21+ class (d0 = 10^21)."""
    return [DegreeProfile(n, d) for n, d in _REPULSION_FLOORS]


def leastprime_profiles() -> list[DegreeProfile]:
    """Floors at which the least-prime exponent B is tabulated."""
    return [DegreeProfile(n, d) for n, d in _LEASTPRIME_FLOORS]


def find_profile(profiles: list[DegreeProfile], n0: int) -> DegreeProfile:
    for p in profiles:
        if p.n0 == min(n0, LAST_EXPLICIT_DEGREE + 1):
            return p
    raise KeyError(f"no profile for degree {n0}")


def delta0(t0: float, p: DegreeProfile) -> float:
    """Delta0(T0) = Q0 log(T0 + 2), an upper bound for log(tau^{n_L})/log d_L."""
    if t0 < 0:
        raise ValueError("t0 must be non-negative")
    return p.Q0 * math.log(t0 + 2.0)


def profiles_to_csv(profiles: list[DegreeProfile]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n0", "d0", "L0", "Q0"])
    for p in profiles:
        w.writerow([p.label, p.d0_text, f"{p.L0:.10g}", f"{p.Q0:.10g}"])
    return buf.getvalue()
