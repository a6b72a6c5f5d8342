"""Entropy and latent heat from baobab multiplicities.

Entropy is k_b times the log of a multiplicity. Multiplicities overflow
floats long before the sizes of interest, so logs are taken from the
exact values by splitting off the leading 64 bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from qcube.counting import BaobabBounds
from qcube.errors import NegativeTemperatureError, NonPositiveBoundError

_LEAD_BITS = 64


def ln_exact(value: int | Fraction) -> float:
    """Natural log of an exact positive value of any size.

    Splits value into (leading bits, binary exponent) so only a 64-bit
    mantissa ever reaches floating point; relative error stays below
    1e-12 by a wide margin.
    """
    if isinstance(value, Fraction):
        if value <= 0:
            raise NonPositiveBoundError(f"log of non-positive value {value}")
        return ln_exact(value.numerator) - ln_exact(value.denominator)
    if value <= 0:
        raise NonPositiveBoundError(f"log of non-positive value {value}")
    shift = max(value.bit_length() - _LEAD_BITS, 0)
    return math.log(value >> shift) + shift * math.log(2)


@dataclass(frozen=True)
class EntropyReport:
    """Entropy interval [s_lower, s_upper] plus the tree-count approximation."""

    s_lower: float
    s_upper: float
    s_approx: float
    k_b: float


def entropy_bounds(b: BaobabBounds, k_b: float = 1.0) -> EntropyReport:
    """Entropy interval from the multiplicity bounds, in units of k_b.

    s_approx is k_b * ln(tree count), the large-n approximation of the
    same quantity.
    """
    if b.lower <= 0 or b.upper <= 0:
        raise NonPositiveBoundError("baobab bounds must be positive")
    return EntropyReport(
        s_lower=k_b * ln_exact(b.lower),
        s_upper=k_b * ln_exact(b.upper),
        s_approx=k_b * ln_exact(b.trees),
        k_b=k_b,
    )


def entropy_approx(t: int, k_b: float = 1.0) -> float:
    """k_b * ln(t) for an exact count t >= 1."""
    if t < 1:
        raise NonPositiveBoundError(f"count must be >= 1, got {t}")
    return k_b * ln_exact(t)


def latent_heat(delta_s: float, temperature: float) -> float:
    """Minimum heat delta_S * T of the baobab -> adinkra transition."""
    if temperature < 0:
        raise NegativeTemperatureError(f"temperature {temperature} < 0")
    return delta_s * temperature
