"""Gromov-Witten bookkeeping for the genus-one amplitude identity:
Lambert-series assembly, the equivalent eta-product log-derivative,
triangular extraction of the degree-d exponents N1(d), and the
standard genus-zero pipeline producing N0(d).

The genus-zero formulas (Yukawa coupling, multicover rule) are standard
literature imports, isolated in genus0_pipeline and anchored by the
independent count of lines on a quintic (see schubert.count_lines).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional

from .series import ExactSeries, SeriesError
from .quintic import MirrorChart

NORMALIZATION = Fraction(50, 12)


class ExtractionError(SeriesError):
    """Raised when triangular extraction preconditions fail."""


@dataclass(frozen=True)
class GWTable:
    """Degree-indexed genus-0 and genus-1 invariants, degrees 1..max_degree.

    instanton_n0 holds integer genus-0 instanton numbers when the table
    came from the genus-zero pipeline.
    """

    max_degree: int
    n0: Mapping[int, Fraction]
    n1: Mapping[int, Fraction]
    instanton_n0: Optional[Mapping[int, int]] = None

    def __post_init__(self):
        for d in range(1, self.max_degree + 1):
            if d not in self.n0 or d not in self.n1:
                raise ValueError(f"table missing degree {d}")

    @classmethod
    def from_maps(cls, n0: Mapping[int, Fraction], n1: Mapping[int, Fraction],
                  max_degree: int | None = None,
                  instanton_n0: Optional[Mapping[int, int]] = None) -> "GWTable":
        if max_degree is None:
            max_degree = max([0, *n0.keys(), *n1.keys()])
        full_n0 = {d: Fraction(n0.get(d, 0)) for d in range(1, max_degree + 1)}
        full_n1 = {d: Fraction(n1.get(d, 0)) for d in range(1, max_degree + 1)}
        return cls(max_degree=max_degree, n0=full_n0, n1=full_n1,
                   instanton_n0=instanton_n0)

    @classmethod
    def empty(cls, max_degree: int = 0) -> "GWTable":
        return cls.from_maps({}, {}, max_degree=max_degree)


def _sigma1(m: int) -> int:
    return sum(d for d in range(1, m + 1) if m % d == 0)


def lambert_series(table: GWTable, order: int) -> ExactSeries:
    """50/12 - sum_{n,d} N1(d) 2nd q^{nd}/(1-q^{nd})
             - sum_d N0(d) 2d q^d / (12 (1-q^d)).

    Expanded coefficientwise: the q^m coefficient for m >= 1 is
    -2 sum_{d|m} d sigma_1(m/d) N1(d) - (1/6) sum_{d|m} d N0(d).
    """
    coeffs = [NORMALIZATION] + [Fraction(0)] * order
    for m in range(1, order + 1):
        s = Fraction(0)
        for d in range(1, min(m, table.max_degree) + 1):
            if m % d:
                continue
            s += 2 * d * _sigma1(m // d) * table.n1[d]
            s += Fraction(d, 6) * table.n0[d]
        coeffs[m] = -s
    return ExactSeries(coeffs, tag="q", order=order)


def eta_product_log_derivative(table: GWTable, order: int) -> ExactSeries:
    """q d/dq log of {q^{25/12} prod_d eta(q^d)^{N1(d)} (1-q^d)^{N0(d)/12}}^2
    with eta(q) = prod_n (1 - q^n) (no q^{1/24} prefactor).

    Assembled through honest logarithms: the fractional power q^{25/12}
    contributes the constant 2*(25/12); each log(1-q^j) is an exact
    rational series.
    """
    from .modular import eta_series

    total = ExactSeries.constant(NORMALIZATION, order, "q")
    log_acc = ExactSeries.zero(order, "q")
    for d in range(1, min(order, table.max_degree) + 1):
        if not (table.n1[d] or table.n0[d]):
            continue
        eta_d = ExactSeries(
            [eta_series(order // d)[m // d] if m % d == 0 else 0
             for m in range(order + 1)],
            tag="q", order=order)
        one_minus_qd = ExactSeries([1 if m == 0 else (-1 if m == d else 0)
                                    for m in range(order + 1)],
                                   tag="q", order=order)
        log_acc = (log_acc
                   + eta_d.log() * table.n1[d]
                   + one_minus_qd.log() * (table.n0[d] / 12))
    return total + log_acc.q_d_dq() * 2


def extract_n1(G: ExactSeries, n0: Mapping[int, Fraction]) -> GWTable:
    """Solve the Lambert form for N1(d) degree by degree, given G and
    the genus-zero column.  Exact triangular solve; the q^m equation is
    linear in N1(m) with coefficient -2m.
    """
    if G.coeffs[0] != NORMALIZATION:
        raise ExtractionError(
            f"constant term of G must be 50/12, got {G.coeffs[0]}")
    order = G.order
    n0_full = {d: Fraction(n0.get(d, 0)) for d in range(1, order + 1)}
    n1: Dict[int, Fraction] = {}
    for m in range(1, order + 1):
        s = G.coeffs[m] + Fraction(1, 6) * sum(
            d * n0_full[d] for d in range(1, m + 1) if m % d == 0)
        s += 2 * sum(d * _sigma1(m // d) * n1[d]
                     for d in range(1, m) if m % d == 0)
        n1[m] = -s / (2 * m)
    return GWTable(max_degree=order, n0=n0_full, n1=n1)


def genus0_pipeline(chart: MirrorChart, order: int | None = None) -> GWTable:
    """Standard genus-zero pipeline for the quintic.

    The normalized Yukawa coupling in the flat coordinate is
    K(q) = 5 u(q)^3 / ((1 - 3125 x(q)) y0(x(q))^2), with K(0) = 5 the
    classical triple intersection.  Instanton numbers n_d come from
    K = 5 + sum_d n_d d^3 q^d/(1-q^d), and the multicover rule
    N0(d) = sum_{k|d} n_{d/k}/k^3 converts to GW invariants.
    Integrality of every n_d is enforced.
    """
    n = chart.order - 1
    if order is None:
        order = n
    if order > n:
        raise SeriesError("chart order too small for requested degree range")
    x_q = chart.x_of_q.truncate(n)
    y0_q = chart.y0.truncate(n).compose(x_q)
    one_minus = ExactSeries([1, -3125], tag="x", order=n).compose(x_q)
    u = chart.u_of_q.truncate(n)
    K = (u ** 3) * 5 / (one_minus * y0_q ** 2)

    inst: Dict[int, int] = {}
    for m in range(1, order + 1):
        s = K.coeffs[m] - sum(inst[d] * d ** 3
                              for d in range(1, m) if m % d == 0)
        n_m = s / m ** 3
        if n_m.denominator != 1:
            raise ExtractionError(
                f"instanton number at degree {m} is not an integer: {n_m}")
        inst[m] = int(n_m)

    n0 = {d: sum(Fraction(inst[d // k], k ** 3)
                 for k in range(1, d + 1) if d % k == 0)
          for d in range(1, order + 1)}
    n1 = {d: Fraction(0) for d in range(1, order + 1)}
    return GWTable(max_degree=order, n0=n0, n1=n1, instanton_n0=inst)


def table_to_json_dict(table: GWTable) -> dict:
    out = {
        "max_degree": table.max_degree,
        "n0": {str(d): str(table.n0[d]) for d in range(1, table.max_degree + 1)},
        "n1": {str(d): str(table.n1[d]) for d in range(1, table.max_degree + 1)},
    }
    if table.instanton_n0 is not None:
        out["instanton_n0"] = {str(d): str(v)
                               for d, v in sorted(table.instanton_n0.items())}
    return out


def n0_map_from_json_dict(d: dict) -> Dict[int, Fraction]:
    """Parse the {"n0": {"1": "2875", ...}} schema (n1 ignored if present)."""
    src = d.get("n0", d)
    return {int(k): Fraction(v) for k, v in src.items()}
