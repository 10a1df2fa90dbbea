"""Change of variable and function linking the two eigenproblems.

The oscillator on (-a, a) with mass M(x) = (1 - x^2/a^2)^-2 maps onto the
constant-mass hyperbolic well on the line: u(x) = a_bar * v(x) + b_bar with
v(x) = a * arctanh(x/a), energies transform affinely, and the potential picks
up a mass-derivative correction term.  This module holds the profile, the
transform maps, and the parameter mapping from (omega0, A, b) to everything
derived.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, ParameterError
from .rosen_morse import RosenMorseParams

__all__ = [
    "BOUNDARY_MARGIN",
    "MassProfile",
    "PctMap",
    "map_parameters",
    "mass",
    "mass_correction",
    "transform_potential",
    "transform_energy",
    "u_of_x",
    "v_of_x",
]

# x-space maps accept |x| <= (1 - BOUNDARY_MARGIN) * a; arctanh and M blow up at the ends
BOUNDARY_MARGIN = 1e-12


@dataclass(frozen=True)
class MassProfile:
    """Confinement half-width a of the mass profile (1 - x^2/a^2)^-2."""

    a: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.a) or self.a <= 0.0:
            raise ParameterError(f"need a finite half-width a > 0, got {self.a!r}")


@dataclass(frozen=True)
class PctMap:
    """Affine transform constants: u = a_bar * v + b_bar, E = a_bar^2 eps + c_bar."""

    a_bar: float
    c_bar: float
    b_bar: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a_bar) and math.isfinite(self.c_bar)):
            raise ParameterError("a_bar and c_bar must be finite")
        if self.a_bar <= 0.0:
            raise ParameterError(f"need a_bar > 0, got {self.a_bar}")
        if self.b_bar != 0.0:
            # nonzero offset would break the even symmetry of the mass profile
            raise ParameterError("b_bar is fixed at 0 for this construction")


def _check_x(profile: MassProfile, x: float) -> None:
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if abs(x) > (1.0 - BOUNDARY_MARGIN) * profile.a:
        raise DomainError(
            f"|x|={abs(x)} is outside the open confinement interval of half-width {profile.a}"
        )


def mass(profile: MassProfile, x: float) -> float:
    """Mass value (1 - x^2/a^2)^-2; diverges toward the interval ends."""
    _check_x(profile, x)
    s = 1.0 - (x / profile.a) ** 2
    return 1.0 / (s * s)


def v_of_x(profile: MassProfile, x: float) -> float:
    """Primitive of sqrt(M): v(x) = a * arctanh(x/a)."""
    _check_x(profile, x)
    return profile.a * math.atanh(x / profile.a)


def u_of_x(profile: MassProfile, pmap: PctMap, x: float) -> float:
    """Transformed coordinate u = a_bar * v(x) + b_bar."""
    return pmap.a_bar * v_of_x(profile, x) + pmap.b_bar


def mass_correction(profile: MassProfile, x: float) -> float:
    """Closed form of M''/(4M^2) - 7M'^2/(16M^3) for this profile: 1/a^2 - 2x^2/a^4."""
    _check_x(profile, x)
    a2 = profile.a * profile.a
    return 1.0 / a2 - 2.0 * x * x / (a2 * a2)


def transform_potential(
    source_potential: Callable[[float], float],
    profile: MassProfile,
    pmap: PctMap,
    x: float,
) -> float:
    """Target-space potential a_bar^2 U(u(x)) + mass correction + c_bar."""
    u = u_of_x(profile, pmap, x)
    return pmap.a_bar**2 * source_potential(u) + mass_correction(profile, x) + pmap.c_bar


def transform_energy(pmap: PctMap, epsilon: float) -> float:
    """Affine energy map E = a_bar^2 * epsilon + c_bar."""
    return pmap.a_bar**2 * epsilon + pmap.c_bar


def map_parameters(
    omega0: float, A: float, b: float = 0.0
) -> tuple[float, PctMap, RosenMorseParams]:
    """Derive (a, PctMap, RosenMorseParams) from oscillator parameters.

    Parameters
    ----------
    omega0 : float
        Oscillator frequency, > 0.
    A : float
        Well-depth parameter, > 1 (not necessarily an integer).
    b : float
        Linear shift; |b| must stay below the bound that keeps at least
        one admitted state, equivalently |b| < 2A(A-1)/(omega0 a^3).

    Returns
    -------
    (a, PctMap, RosenMorseParams)
        Half-width a = sqrt(2/omega0) * (A(A+1) - 2)^(1/4), the affine
        transform constants, and the source-well parameters with
        B = -omega0 a^3 b / 2.
    """
    if not (math.isfinite(omega0) and math.isfinite(A) and math.isfinite(b)):
        raise ParameterError("omega0, A, b must be finite")
    if omega0 <= 0.0:
        raise ParameterError(f"need omega0 > 0, got {omega0}")
    if A <= 1.0:
        raise ParameterError(f"need A > 1 for a nonempty model, got A={A}")
    a = math.sqrt(2.0 / omega0) * (A * (A + 1.0) - 2.0) ** 0.25
    a3 = a * a * a
    b_limit = 2.0 * A * (A - 1.0) / (omega0 * a3)
    if abs(b) >= b_limit:
        raise ParameterError(
            f"|b|={abs(b)} at or above the admissibility bound {b_limit:.17g}; "
            "no bound state is guaranteed beyond it"
        )
    c_bar = 0.25 * omega0 * omega0 * a * a + 1.0 / (a * a)
    if b != 0.0:
        c_bar += b * b
    B = -0.5 * omega0 * a3 * b
    return a, PctMap(a_bar=1.0 / a, c_bar=c_bar), RosenMorseParams(A=A, B=B)
