"""q-expansions of the eta product and the discriminant form, Petersson
norms, and the product assembly for the (K3 x elliptic curve)/Z2 family.

Convention: eta(q) = prod_{n>=1} (1 - q^n), without the classical
q^{1/24} prefactor; the discriminant is Delta = q * eta(q)^24.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .series import ExactSeries, SeriesError


def eta_series(order: int) -> ExactSeries:
    """Truncated prod_{n=1}^{order} (1 - q^n)."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    out = ExactSeries.one(order, "q")
    for n in range(1, order + 1):
        factor = ExactSeries([1 if m == 0 else (-1 if m == n else 0)
                              for m in range(order + 1)], tag="q", order=order)
        out = out * factor
    return out


def pentagonal_coefficients(order: int) -> ExactSeries:
    """Euler's pentagonal-number expansion of the eta product,
    sum_k (-1)^k q^{k(3k-1)/2} over all integers k.  Independent route
    used to cross-check eta_series.
    """
    coeffs = [Fraction(0)] * (order + 1)
    k = 0
    while True:
        hit = False
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e <= order:
                coeffs[e] += (-1) ** (kk % 2)
                hit = True
        if not hit:
            break
        k += 1
    return ExactSeries(coeffs, tag="q", order=order)


def delta_series(order: int) -> ExactSeries:
    """Truncated q * prod (1-q^n)^24."""
    if order < 1:
        raise SeriesError("delta_series needs order >= 1")
    eta24 = eta_series(order - 1) ** 24
    return ExactSeries([Fraction(0), *eta24.coeffs], tag="q", order=order)


@dataclass(frozen=True)
class PeterssonValue:
    tau: complex
    norm_sq: float
    error_bound: float   # dominating bound on the relative truncation error

    def to_json_dict(self) -> dict:
        return {"tau": [self.tau.real, self.tau.imag],
                "norm_sq": self.norm_sq,
                "error_bound": self.error_bound}


def petersson_delta(tau: complex, terms: int = 200) -> PeterssonValue:
    """(Im tau)^12 |Delta(tau)|^2 with Delta = q prod (1-q^n)^24,
    q = exp(2 pi i tau).

    The truncated product omits factors (1-q^n) for n > terms; the
    reported bound dominates the resulting relative error of |Delta|^2.
    """
    if tau.imag <= 0:
        raise SeriesError("tau must lie in the upper half-plane")
    if terms < 1:
        raise SeriesError("terms must be positive")
    q = cmath.exp(2j * math.pi * tau)
    r = abs(q)
    prod = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    for _ in range(terms):
        qn *= q
        prod *= (1.0 - qn)
    delta = q * prod ** 24
    norm_sq = tau.imag ** 12 * abs(delta) ** 2
    # |log prod_{n>terms}(1-q^n)| <= sum_{n>terms} r^n/(1-r) = r^{terms+1}/(1-r)^2
    log_tail = r ** (terms + 1) / (1.0 - r) ** 2
    rel_bound = math.expm1(48.0 * log_tail)
    return PeterssonValue(tau=tau, norm_sq=norm_sq, error_bound=rel_bound)


def fhsv_assemble(phi_norm_sq: float, delta_norm_sq: float, C: float) -> float:
    """Product C * |Phi|^2 * |Delta|^2 for the quotient threefold; the
    ten-dimensional automorphic norm |Phi|^2 is an external input.
    """
    for name, v in (("phi_norm_sq", phi_norm_sq),
                    ("delta_norm_sq", delta_norm_sq), ("C", C)):
        if not v > 0:
            raise SeriesError(f"{name} must be positive, got {v}")
    return C * phi_norm_sq * delta_norm_sq
