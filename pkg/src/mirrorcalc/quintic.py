"""Quintic mirror series: the period y0, the mirror map, and the
genus-one amplitude log-derivative G(q).

Everything is computed in exact rational arithmetic in one of two
charts: x = (5*psi)**-5 near psi = infinity, and the flat coordinate q.
Fractional powers of psi never appear as series; they enter only as
rational multiples of log x, which become rational multiples of the
unit series u(q) = q d(log x)/dq after applying q d/dq.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import ExactSeries, SeriesError

DEFAULT_ORDER = 30


def _a(n: int) -> int:
    """Coefficient (5n)!/(n!)^5 of the holomorphic period."""
    return factorial(5 * n) // factorial(n) ** 5


def _harmonic_gap(n: int) -> Fraction:
    """sum_{j=n+1}^{5n} 1/j."""
    return sum((Fraction(1, j) for j in range(n + 1, 5 * n + 1)), Fraction(0))


def period_y0(order: int) -> ExactSeries:
    """The holomorphic period y0 = sum_n (5n)!/(n!)^5 x^n, x = (5 psi)^-5.

    Normalized so y0(0) = 1 (the unit-series normalization forced by
    y0 -> 1 as |psi| -> infinity).
    """
    if order < 0:
        raise SeriesError("order must be non-negative")
    return ExactSeries([_a(n) for n in range(order + 1)], tag="x", order=order)


@dataclass(frozen=True)
class MirrorChart:
    """The paired coordinates x and q with the mirror map both ways.

    u_of_q is q d(log x)/dq, the unit series carrying every rational
    multiple of log x through the q d/dq operator.
    """

    order: int
    y0: ExactSeries           # in x
    q_of_x: ExactSeries       # in x, = x + 770 x^2 + ...
    x_of_q: ExactSeries       # in q, compositional inverse
    u_of_q: ExactSeries       # in q, constant term 1

    def __post_init__(self):
        if self.y0.coeffs[0] != 1:
            raise SeriesError("y0 must be a unit series")
        if self.q_of_x.coeffs[0] or self.q_of_x.coeffs[1] != 1:
            raise SeriesError("q_of_x must be x + O(x^2)")


def mirror_map(order: int) -> MirrorChart:
    """Build the mirror map q(x) = x * exp((5/y0) * sum a_n H_n x^n)
    with H_n = sum_{j=n+1}^{5n} 1/j, together with its reversion and
    the logarithmic velocity u(q).
    """
    if order < 1:
        raise SeriesError("mirror_map needs order >= 1")
    y0 = period_y0(order)
    inner = ExactSeries([_a(n) * _harmonic_gap(n) for n in range(order + 1)],
                        tag="x", order=order)
    q_of_x = ExactSeries.identity(order, "x") * (inner * 5 / y0).exp()
    x_of_q = q_of_x.reverse().retag("q")
    # u = 1 + q d/dq log(x(q)/q); x(q)/q is a unit series of order-1.
    ratio = ExactSeries(x_of_q.coeffs[1:], tag="q", order=order - 1)
    u = ratio.log().q_d_dq() + 1
    return MirrorChart(order=order, y0=y0, q_of_x=q_of_x, x_of_q=x_of_q,
                       u_of_q=u)


@dataclass(frozen=True)
class F1LogDerivative:
    """The series G(q) = q d/dq of the log of the genus-one amplitude."""

    G: ExactSeries

    def __post_init__(self):
        if self.G.coeffs[0] != Fraction(50, 12):
            raise SeriesError("G must have constant term 50/12")


# Rational multiple of log x in the log of the genus-one amplitude:
#   (62/3)*log psi  -> -62/15 * log x   (log psi = -(1/5) log x + const)
#   -(1/6)*log(psi^5 - 1) -> +1/6 * log x  (psi^5 - 1 = (1-3125x)/(3125x))
#   log(q dpsi/dq) = log psi + log u + const -> -1/5 * log x
# totalling -25/6.  The amplitude is multivalued; the branch is fixed so
# that G has constant term +50/12, which flips this multiple to +25/6.
LOG_X_MULTIPLE = Fraction(25, 6)


def f1_log_derivative(chart: MirrorChart) -> F1LogDerivative:
    """G(q) = q d/dq log of (psi/y0)^(62/3) (psi^5-1)^(-1/6) q dpsi/dq,
    transported to the q-chart.

    Split as LOG_X_MULTIPLE * u(q) plus q d/dq of honest unit series:
    -(62/3) log y0(x(q)), -(1/6) log(1 - 3125 x(q)), and log u(q).
    Only rational power series are ever materialized.
    """
    n = chart.order - 1  # u and the composed series live at order-1
    x_q = chart.x_of_q.truncate(n)
    y0_q = chart.y0.truncate(n).compose(x_q)
    one_minus = ExactSeries([1, -3125], tag="x", order=n).compose(x_q)
    u = chart.u_of_q.truncate(n)
    honest = (y0_q.log() * Fraction(-62, 3)
              - one_minus.log() / 6
              + u.log())
    G = u * LOG_X_MULTIPLE + honest.q_d_dq()
    return F1LogDerivative(G=G)


def picard_fuchs_check(y0: ExactSeries) -> bool:
    """True iff (theta^4 - 5x(5theta+1)(5theta+2)(5theta+3)(5theta+4)) y0
    vanishes to truncation, theta = x d/dx.

    Equivalent coefficient recursion:
    n^4 a_n = 5 (5n-1)(5n-2)(5n-3)(5n-4) a_{n-1}.
    """
    a = y0.coeffs
    for n in range(1, y0.order + 1):
        lhs = n ** 4 * a[n]
        rhs = 5 * (5 * n - 1) * (5 * n - 2) * (5 * n - 3) * (5 * n - 4) * a[n - 1]
        if lhs != rhs:
            return False
    return True
