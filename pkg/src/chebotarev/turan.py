"""Witness search for the power-sum lower bound: for z_1, ..., z_N with
|z_1| maximal there is 1 <= j <= (8 + eps) M with
Re(sum z_n^j) >= eps/(4(8 + eps)) |z_1|^j, where M = sum |z_n|/(|z_1| + |z_n|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EPS_CHOICES = (0.1, 1.0, 5.57, 5.97)


class TuranViolation(AssertionError):
    """No witness index exists; this would contradict the power-sum theorem."""


@dataclass(frozen=True)
class PowerSumInstance:
    zs: tuple[complex, ...]
    eps: float

    def __post_init__(self) -> None:
        if not self.zs:
            raise ValueError("need at least one point")
        if self.zs[0] == 0:
            raise ValueError("z_1 must be non-zero")
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        mods = [abs(z) for z in self.zs]
        if any(b > a for a, b in zip(mods, mods[1:])):
            raise ValueError("points must be sorted by non-increasing modulus")

    @classmethod
    def from_points(cls, zs, eps: float) -> "PowerSumInstance":
        return cls(tuple(sorted((complex(z) for z in zs), key=abs, reverse=True)), eps)


def m_value(inst: PowerSumInstance) -> float:
    r1 = abs(inst.zs[0])
    return math.fsum(abs(z) / (r1 + abs(z)) for z in inst.zs)


def witness_bound(inst: PowerSumInstance) -> int:
    return math.ceil((8.0 + inst.eps) * m_value(inst))


def turan_witness(inst: PowerSumInstance) -> tuple[int, float]:
    """Smallest admissible j0 and Re(s_{j0})."""
    zs = np.asarray(inst.zs, dtype=complex)
    r1 = abs(inst.zs[0])
    factor = inst.eps / (4.0 * (8.0 + inst.eps))
    powers = np.ones_like(zs)
    for j in range(1, witness_bound(inst) + 1):
        powers = powers * zs
        re_sum = math.fsum(powers.real.tolist())
        if re_sum >= factor * r1 ** j:
            return j, re_sum
    raise TuranViolation(f"no witness up to j={witness_bound(inst)} for eps={inst.eps}")


def random_instance(rng: np.random.Generator, size: int, eps: float) -> PowerSumInstance:
    """One point on the unit circle, the rest in the closed unit disk.

    A quarter of the extra points are placed on the circle as well, since
    equal moduli are where the bound is tight. Sorting afterwards keeps the
    instance valid when rounding puts a circle point a hair above the first.
    """
    first = np.exp(2j * np.pi * rng.random())
    rest = []
    for _ in range(size - 1):
        angle = 2 * np.pi * rng.random()
        radius = 1.0 if rng.random() < 0.25 else math.sqrt(rng.random())
        rest.append(radius * np.exp(1j * angle))
    return PowerSumInstance.from_points([first] + rest, eps)


@dataclass(frozen=True)
class TrialSummary:
    trials: int
    failures: int
    max_j0: int
    max_ratio: float  # largest j0 / ((8 + eps) M) observed

    @property
    def passed(self) -> bool:
        return self.failures == 0


def run_trials(trials: int, seed: int, max_size: int = 64) -> TrialSummary:
    rng = np.random.default_rng(seed)
    failures, max_j0, max_ratio = 0, 0, 0.0
    for _ in range(trials):
        size = int(rng.integers(1, max_size + 1))
        eps = EPS_CHOICES[int(rng.integers(len(EPS_CHOICES)))]
        inst = random_instance(rng, size, eps)
        try:
            j0, _ = turan_witness(inst)
        except TuranViolation:
            failures += 1
            continue
        max_j0 = max(max_j0, j0)
        max_ratio = max(max_ratio, j0 / ((8 + eps) * m_value(inst)))
    return TrialSummary(trials, failures, max_j0, max_ratio)
