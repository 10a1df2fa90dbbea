"""Bound states of the hyperbolic potential -A(A+1)sech^2(u) + 2B tanh(u).

This is the constant-mass reference problem; everything the oscillator
module produces is obtained from it by a change of variables.  Units are
hbar = 2 m0 = 1, so the eigenproblem is -phi'' + U phi = eps phi on the
whole real line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Callable

from .errors import DomainError, NoSuchStateError, ParameterError
from .special_fn import gegenbauer_poly, jacobi_poly, ln_gamma

__all__ = [
    "ConstantMassState",
    "RosenMorseParams",
    "WINDOW_MARGIN",
    "admitted_nmax",
    "rm_bound_states",
    "rm_energy",
    "rm_nmax",
    "rm_potential",
    "rm_wavefunction",
]

# states within this distance of the normalizability threshold are not admitted
WINDOW_MARGIN = 1e-12

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class RosenMorseParams:
    """Well depth A and tilt B of the hyperbolic potential; needs B < A^2."""

    A: float
    B: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.A) and math.isfinite(self.B)):
            raise ParameterError("A and B must be finite")
        if self.A <= 0.0:
            raise ParameterError(f"need A > 0, got A={self.A}")
        if self.B >= self.A * self.A:
            raise ParameterError(
                f"need B < A^2 for any bound state, got B={self.B} >= {self.A * self.A}"
            )


@dataclass(frozen=True)
class ConstantMassState:
    """One bound level: quantum number, energy, normalized wavefunction of u."""

    n: int
    epsilon: float
    wavefunction: Callable[[float], float]


def admitted_nmax(threshold: float) -> int:
    """Largest integer n with n < threshold, or -1 when none qualifies.

    Values within WINDOW_MARGIN of the threshold count as outside it, so a
    level sitting at the edge of normalizability is dropped rather than
    returned with a blowing-up normalization constant.
    """
    if threshold <= WINDOW_MARGIN:
        return -1
    return math.ceil(threshold - WINDOW_MARGIN) - 1


def _sech(u: float) -> float:
    # exp(-|u|) form never overflows; underflows cleanly to 0 for huge |u|
    e = math.exp(-abs(u))
    return 2.0 * e / (1.0 + e * e)


def _ln1p_exp(y: float) -> float:
    """log(1 + e^y) without overflow."""
    return max(y, 0.0) + math.log1p(math.exp(-abs(y)))


def rm_potential(p: RosenMorseParams, u: float) -> float:
    """Potential value -A(A+1)sech^2(u) + 2B tanh(u)."""
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    s = _sech(u)
    return -p.A * (p.A + 1.0) * s * s + 2.0 * p.B * math.tanh(u)


def rm_nmax(p: RosenMorseParams) -> int:
    """Largest admitted quantum number, -1 if the well holds no state."""
    return admitted_nmax(p.A - math.sqrt(abs(p.B)))


def _check_level(p: RosenMorseParams, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise NoSuchStateError(f"quantum number must be an integer, got {n!r}")
    top = rm_nmax(p)
    if n < 0 or n > top:
        raise NoSuchStateError(
            f"no bound state n={n} for A={p.A}, B={p.B} (admitted window is "
            + (f"0..{top})" if top >= 0 else "empty)")
        )


def rm_energy(p: RosenMorseParams, n: int) -> float:
    """Bound-state energy -(A-n)^2 - B^2/(A-n)^2."""
    _check_level(p, n)
    m = p.A - n
    return -m * m - (p.B * p.B) / (m * m)


def _ln_norm_jacobi(A: float, n: int, m: float, beta: float) -> float:
    """Log of the normalization constant of the two-exponent envelope form."""
    return -m * _LN2 + 0.5 * (
        ln_gamma(n + 1.0)
        + ln_gamma(2.0 * A - n + 1.0)
        + math.log(m * m - beta * beta)
        - math.log(m)
        - ln_gamma(A + 1.0 + beta)
        - ln_gamma(A + 1.0 - beta)
    )


def _ln_norm_gegenbauer(A: float, n: int, m: float) -> float:
    """Log normalization of the sech^m envelope form (B = 0 only)."""
    return (
        ln_gamma(2.0 * m + 1.0)
        - m * _LN2
        - ln_gamma(m + 1.0)
        + 0.5 * (math.log(m) + ln_gamma(n + 1.0) - ln_gamma(2.0 * A - n + 1.0))
    )


def rm_wavefunction(p: RosenMorseParams, n: int, u: float, form: str = "auto") -> float:
    """Evaluate the normalized bound wavefunction phi_n at u.

    Parameters
    ----------
    p : RosenMorseParams
    n : int
        Level inside the admitted window.
    u : float
        Any finite real; tails underflow to 0.0 rather than raising.
    form : str
        "jacobi" uses the two-exponent envelope times a Jacobi polynomial
        (works for any B); "gegenbauer" uses the symmetric sech^m envelope
        times a Gegenbauer polynomial and requires B = 0; "auto" picks
        gegenbauer when B = 0.

    Returns
    -------
    float
        phi_n(u), normalized to unit integral of phi^2 over the line.
    """
    _check_level(p, n)
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    if form not in ("auto", "jacobi", "gegenbauer"):
        raise ParameterError(f"unknown form {form!r}")
    if form == "gegenbauer" and p.B != 0.0:
        raise ParameterError("the gegenbauer form requires B = 0")
    m = p.A - n
    t = math.tanh(u)
    if form == "gegenbauer" or (form == "auto" and p.B == 0.0):
        # log(sech u) without intermediate overflow
        ln_sech = _LN2 - abs(u) - math.log1p(math.exp(-2.0 * abs(u)))
        ln_env = _ln_norm_gegenbauer(p.A, n, m) + m * ln_sech
        return math.exp(ln_env) * gegenbauer_poly(n, m + 0.5, t)
    beta = p.B / m
    # log(1 -+ tanh u) stays accurate far into both tails
    ln_1m_t = _LN2 - _ln1p_exp(2.0 * u)
    ln_1p_t = _LN2 - _ln1p_exp(-2.0 * u)
    ln_env = (
        _ln_norm_jacobi(p.A, n, m, beta)
        + 0.5 * (m + beta) * ln_1m_t
        + 0.5 * (m - beta) * ln_1p_t
    )
    return math.exp(ln_env) * jacobi_poly(n, m + beta, m - beta, t)


def rm_bound_states(p: RosenMorseParams) -> list[ConstantMassState]:
    """All admitted levels, ordered by n."""
    return [
        ConstantMassState(n, rm_energy(p, n), partial(rm_wavefunction, p, n))
        for n in range(rm_nmax(p) + 1)
    ]
