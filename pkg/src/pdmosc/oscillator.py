"""Confined harmonic oscillator with position-dependent mass on (-a, a).

Closed-form spectra and wavefunctions of the model with mass profile
(1 - x^2/a^2)^-2 and effective potential (omega0^2/4)(x - 2b/omega0)^2,
obtained by transforming the hyperbolic reference well.  The half-width a
is tied to the well depth A; non-integer A is fully admitted, which is the
point of the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable

from . import pct
from .errors import DomainError, NoSuchStateError, ParameterError
from .rosen_morse import (
    RosenMorseParams,
    admitted_nmax,
    rm_energy,
    _ln_norm_gegenbauer,
    _ln_norm_jacobi,
)
from .special_fn import gegenbauer_poly, jacobi_poly

__all__ = [
    "BoundState",
    "OscillatorParams",
    "bound_states",
    "confinement_length",
    "energy",
    "energy_harmonic_form",
    "jafarov_case",
    "num_bound_states",
    "shift_bound",
    "wavefunction",
]


@dataclass(frozen=True)
class OscillatorParams:
    """Model parameters: frequency omega0 > 0, depth A > 1, shift b."""

    omega0: float
    A: float
    b: float = 0.0

    def __post_init__(self) -> None:
        # single validation authority, shared with everything derived
        pct.map_parameters(self.omega0, self.A, self.b)


def _derived(p: OscillatorParams) -> tuple[float, pct.PctMap, RosenMorseParams]:
    return pct.map_parameters(p.omega0, p.A, p.b)


@dataclass(frozen=True)
class BoundState:
    """One bound level: quantum number, energy, normalized wavefunction of x."""

    n: int
    energy: float
    wavefunction: Callable[[float], float]


def confinement_length(omega0: float, A: float) -> float:
    """Half-width a = sqrt(2/omega0) * (A(A+1) - 2)^(1/4)."""
    a, _, _ = pct.map_parameters(omega0, A, 0.0)
    return a


def shift_bound(omega0: float, A: float) -> float:
    """Largest |b| keeping an admitted state: sqrt(omega0/2) A(A-1) / (A(A+1)-2)^(3/4)."""
    if not (math.isfinite(omega0) and math.isfinite(A)):
        raise ParameterError("omega0 and A must be finite")
    if omega0 <= 0.0:
        raise ParameterError(f"need omega0 > 0, got {omega0}")
    if A <= 1.0:
        raise ParameterError(f"need A > 1, got A={A}")
    return math.sqrt(omega0 / 2.0) * A * (A - 1.0) / (A * (A + 1.0) - 2.0) ** 0.75


def num_bound_states(p: OscillatorParams) -> int:
    """Count of admitted levels (at least 1 for valid parameters)."""
    a, _, _ = _derived(p)
    if p.b == 0.0:
        threshold = p.A - 1.0
    else:
        threshold = p.A - 0.5 * (1.0 + math.sqrt(1.0 + 2.0 * p.omega0 * a**3 * abs(p.b)))
    return admitted_nmax(threshold) + 1


def _check_level(p: OscillatorParams, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise NoSuchStateError(f"quantum number must be an integer, got {n!r}")
    count = num_bound_states(p)
    if n < 0 or n >= count:
        raise NoSuchStateError(
            f"no bound state n={n} for (omega0={p.omega0}, A={p.A}, b={p.b}); "
            f"admitted window is 0..{count - 1}"
        )


def energy(p: OscillatorParams, n: int) -> float:
    """Level energy from the transform route a_bar^2 eps_n + c_bar."""
    _check_level(p, n)
    _, pmap, rm = _derived(p)
    return pct.transform_energy(pmap, rm_energy(rm, n))


def energy_harmonic_form(p: OscillatorParams, n: int) -> float:
    """Same level via the (n + 1/2)-expanded printed form; redundant check route.

    omega0 sqrt(1 + (3/(omega0 a^2))^2) (n+1/2) - (n+1/2)^2/a^2 - 5/(4a^2),
    plus b^2 g(n)/f(n) with f(n) = (A-n)^2 and g(n) = f(n) - omega0^2 a^4/4
    when the shift is present.
    """
    _check_level(p, n)
    a, _, _ = _derived(p)
    a2 = a * a
    half = n + 0.5
    e = (
        p.omega0 * math.sqrt(1.0 + (3.0 / (p.omega0 * a2)) ** 2) * half
        - half * half / a2
        - 5.0 / (4.0 * a2)
    )
    if p.b != 0.0:
        f = (p.A - n) ** 2
        g = f - 0.25 * p.omega0**2 * a2 * a2
        e += p.b * p.b * g / f
    return e


def wavefunction(p: OscillatorParams, n: int, x: float, form: str = "auto") -> float:
    """Evaluate the normalized bound wavefunction psi_n at x.

    The b = 0 path uses the symmetric envelope (1 - x^2/a^2)^((A-n-1)/2)
    times a Gegenbauer polynomial; b != 0 tilts the envelope exponents and
    uses a Jacobi polynomial.  form forces one route ("gegenbauer" needs
    b = 0); "auto" picks by b.  Within 1e-12 a of the interval ends the
    value is exactly 0.0; beyond them the point is rejected.
    """
    _check_level(p, n)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if form not in ("auto", "jacobi", "gegenbauer"):
        raise ParameterError(f"unknown form {form!r}")
    if form == "gegenbauer" and p.b != 0.0:
        raise ParameterError("the gegenbauer form requires b = 0")
    a, _, rm = _derived(p)
    if abs(x) > a:
        raise DomainError(f"|x|={abs(x)} is outside the confinement interval [-{a}, {a}]")
    if abs(x) >= (1.0 - pct.BOUNDARY_MARGIN) * a:
        return 0.0
    m = p.A - n
    t = x / a
    if form == "gegenbauer" or (form == "auto" and p.b == 0.0):
        ln_env = (
            _ln_norm_gegenbauer(p.A, n, m)
            - 0.5 * math.log(a)
            + 0.5 * (m - 1.0) * math.log1p(-t * t)
        )
        return math.exp(ln_env) * gegenbauer_poly(n, m + 0.5, t)
    beta = rm.B / m
    ln_env = (
        _ln_norm_jacobi(p.A, n, m, beta)
        - 0.5 * math.log(a)
        + 0.5 * (m - 1.0 + beta) * math.log1p(-t)
        + 0.5 * (m - 1.0 - beta) * math.log1p(t)
    )
    return math.exp(ln_env) * jacobi_poly(n, m + beta, m - beta, t)


def bound_states(p: OscillatorParams) -> list[BoundState]:
    """All admitted levels, ordered by n."""
    return [
        BoundState(n, energy(p, n), partial(wavefunction, p, n))
        for n in range(num_bound_states(p))
    ]


def _jafarov_energy(omega0: float, a: float, n: int) -> float:
    a2 = a * a
    half = n + 0.5
    return (
        omega0 * math.sqrt(1.0 + (3.0 / (omega0 * a2)) ** 2) * half
        - half * half / a2
        - 5.0 / (4.0 * a2)
    )


def _jafarov_coeff(l: int, a: float, n: int) -> float:
    # integer-arithmetic normalization: (2l-2n)!/(2^(l-n) (l-n)!) * sqrt((l-n) n!/(a (2l-n)!))
    lead = Fraction(math.factorial(2 * l - 2 * n), 2 ** (l - n) * math.factorial(l - n))
    inner = Fraction((l - n) * math.factorial(n), math.factorial(2 * l - n))
    return float(lead) * math.sqrt(float(inner) / a)


def _jafarov_wavefunction(coeff: float, l: int, a: float, n: int, x: float) -> float:
    if abs(x) > a:
        raise DomainError(f"|x|={abs(x)} is outside the confinement interval [-{a}, {a}]")
    if abs(x) >= (1.0 - pct.BOUNDARY_MARGIN) * a:
        return 0.0
    t = x / a
    s = 1.0 - t * t
    return coeff * s ** (0.5 * (l - n - 1)) * gegenbauer_poly(n, l - n + 0.5, t)


def jafarov_case(omega0: float, l: int) -> list[BoundState]:
    """The quantized-confinement special case: integer depth l >= 2.

    Returns the l - 1 bound states with the half-width a_l fixed by l.
    Energies and normalization constants are computed through the printed
    integer-l formulas (factorials, the (n+1/2) energy form), deliberately
    not through the general transform route, so the two can be compared.
    """
    if not isinstance(l, int) or isinstance(l, bool) or l < 2:
        raise ParameterError(f"need an integer l >= 2, got {l!r}")
    if not math.isfinite(omega0) or omega0 <= 0.0:
        raise ParameterError(f"need omega0 > 0, got {omega0!r}")
    a = math.sqrt(2.0 / omega0) * (l * (l + 1) - 2) ** 0.25
    return [
        BoundState(
            n,
            _jafarov_energy(omega0, a, n),
            partial(_jafarov_wavefunction, _jafarov_coeff(l, a, n), l, a, n),
        )
        for n in range(l - 1)
    ]
