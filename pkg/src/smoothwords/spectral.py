"""Trigonometric closed forms, residues, and asymptotics.

The transfer matrix has eigenvalues 1 + 2 cos(j pi/(k+1)), j = 1..k, so
every count family also has a closed form as a sum of eigenvalue powers
in double precision.  A sum of k terms of size up to 3^n carries absolute
error around k * 3^n * 2^-52, so validated rounding back to an exact
integer is only offered inside the window n <= 25, k <= 10 where the 0.25
budget is safe; outside it callers get `PrecisionExhausted` instead of a
possibly wrong integer and should fall back to the exact pipelines.
"""
from __future__ import annotations

import dataclasses
import math

from .transfer import divisors, totient

# Largest (n, k) for which double-precision eigenvalue sums round reliably.
WINDOW_N_MAX = 25
WINDOW_K_MAX = 10


class PrecisionExhausted(Exception):
    """A floating-point count was too far from an integer to round safely."""


def in_validated_window(n: int, k: int) -> bool:
    """True iff the spectral formulas are guaranteed to round exactly."""
    return 1 <= n <= WINDOW_N_MAX and 1 <= k <= WINDOW_K_MAX


@dataclasses.dataclass(frozen=True)
class Spectrum:
    """Eigendata of the k x k transfer matrix.

    angles[j-1] = j pi/(k+1); eigenvalues[j-1] = 1 + 2 cos(angle), strictly
    decreasing; cot2_weights[j-1] = cot^2(angle/2), the residue weights of
    the smooth-word closed form.
    """

    k: int
    angles: tuple[float, ...]
    eigenvalues: tuple[float, ...]
    cot2_weights: tuple[float, ...]


def spectrum(k: int) -> Spectrum:
    if k < 1:
        raise ValueError(f"alphabet size must be positive, got {k}")
    # Angles are computed directly from j, not by accumulation.
    angles = tuple(j * math.pi / (k + 1) for j in range(1, k + 1))
    eigenvalues = tuple(1.0 + 2.0 * math.cos(a) for a in angles)
    cot2 = tuple((math.cos(a / 2) / math.sin(a / 2)) ** 2 for a in angles)
    return Spectrum(k, angles, eigenvalues, cot2)


def sw_trig(n: int, k: int) -> float:
    """Smooth-word count as a trigonometric sum (odd-index form):
    (2/(k+1)) sum over odd j of cot^2(j pi/(2(k+1))) (1+2cos(j pi/(k+1)))^(n-1).
    """
    if n < 1:
        raise ValueError(f"closed form defined for length >= 1, got {n}")
    sp = spectrum(k)
    total = 0.0
    for idx in range(0, k, 2):  # j = 1, 3, 5, ...
        total += sp.cot2_weights[idx] * sp.eigenvalues[idx] ** (n - 1)
    return 2.0 / (k + 1) * total


def scw_trig(n: int, k: int) -> float:
    """Smooth-cyclic count as the eigenvalue power sum
    sum_j (1+2cos(j pi/(k+1)))^n."""
    if n < 1:
        raise ValueError(f"closed form defined for length >= 1, got {n}")
    return sum(lam ** n for lam in spectrum(k).eigenvalues)


def sn_trig(n: int, k: int) -> float:
    """Smooth-necklace count as the rotation average of `scw_trig`."""
    if n < 1:
        raise ValueError(f"closed form defined for length >= 1, got {n}")
    return sum(totient(d) * scw_trig(n // d, k) for d in divisors(n)) / n


def residues(m: int) -> list[float]:
    """Residues of 1/U_m at its zeros cos(j pi/(m+1)):
    (-1)^(j+1) sin^2(j pi/(m+1)) / (m+1), j = 1..m."""
    if m < 1:
        raise ValueError(f"residues need m >= 1, got {m}")
    return [(-1) ** (j + 1) * math.sin(j * math.pi / (m + 1)) ** 2 / (m + 1)
            for j in range(1, m + 1)]


def round_validated(x: float, budget: float) -> int:
    """Nearest integer to ``x`` provided it is within ``budget``; otherwise
    raises `PrecisionExhausted` so callers fall back to exact pipelines."""
    if budget <= 0:
        raise ValueError(f"rounding budget must be positive, got {budget}")
    nearest = round(x)
    if abs(x - nearest) <= budget:
        return int(nearest)
    raise PrecisionExhausted(f"{x!r} is {abs(x - nearest):.3g} from an integer")


def sw_asymptotic(n: int, k: int) -> float:
    """Leading term of the smooth-word count:
    (2/(k+1)) cot^2(pi/(2(k+1))) lambda_1^(n-1)."""
    if n < 1:
        raise ValueError(f"asymptotic form defined for length >= 1, got {n}")
    sp = spectrum(k)
    return 2.0 / (k + 1) * sp.cot2_weights[0] * sp.eigenvalues[0] ** (n - 1)


def scw_asymptotic(n: int, k: int) -> float:
    """Leading term of the smooth-cyclic count: lambda_1^n."""
    if n < 1:
        raise ValueError(f"asymptotic form defined for length >= 1, got {n}")
    return spectrum(k).eigenvalues[0] ** n


def cyclic_proportion_limit(k: int) -> float:
    """Limit of (smooth cyclic)/(smooth) in [k]^n as n grows:
    (1/2)(k+1)(2cos(pi/(k+1)) + 1) tan^2(pi/(2(k+1)))."""
    if k < 1:
        raise ValueError(f"alphabet size must be positive, got {k}")
    half_angle = math.pi / (2 * (k + 1))
    return 0.5 * (k + 1) * (2.0 * math.cos(2 * half_angle) + 1.0) \
        * math.tan(half_angle) ** 2
