"""Truncated formal power series with exact rational coefficients.

Every series carries an explicit truncation order (inclusive) and a
variable tag ("x", "q", "psi-inv", ...).  Binary operations require
matching tags and truncate to the minimum of the two orders; nothing
ever extends precision silently.  All coefficients are
``fractions.Fraction``; no floating point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]


class SeriesError(ValueError):
    """Base class for series domain errors."""


class TagMismatchError(SeriesError):
    """Raised when two series in different formal variables are combined."""


class NonUnitError(SeriesError):
    """Raised when division/log requires an invertible constant term."""


class CompositionError(SeriesError):
    """Raised when substitution or reversion preconditions fail."""


def _frac(v: Scalar) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class ExactSeries:
    """A polynomial truncation of a formal power series over Q.

    Immutable.  ``coeffs[n]`` is the coefficient of t**n for
    n = 0..order.
    """

    __slots__ = ("coeffs", "order", "tag")

    def __init__(self, coeffs: Iterable[Scalar], tag: str = "q",
                 order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise SeriesError("order must be non-negative")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs[: order + 1]))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("ExactSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, order: int, tag: str = "q") -> "ExactSeries":
        return cls([_frac(value)], tag=tag, order=order)

    @classmethod
    def zero(cls, order: int, tag: str = "q") -> "ExactSeries":
        return cls.constant(0, order, tag)

    @classmethod
    def one(cls, order: int, tag: str = "q") -> "ExactSeries":
        return cls.constant(1, order, tag)

    @classmethod
    def identity(cls, order: int, tag: str = "q") -> "ExactSeries":
        """The series t itself."""
        if order < 1:
            raise SeriesError("identity needs order >= 1")
        return cls([0, 1], tag=tag, order=order)

    # -- basics -------------------------------------------------------

    def __repr__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*{self.tag}^{n}" if n else f"{c}")
        body = " + ".join(terms) if terms else "0"
        return f"ExactSeries({body} + O({self.tag}^{self.order + 1}))"

    def __eq__(self, other):
        if not isinstance(other, ExactSeries):
            return NotImplemented
        return (self.tag == other.tag and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.tag, self.order, self.coeffs))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _check_tag(self, other: "ExactSeries"):
        if self.tag != other.tag:
            raise TagMismatchError(
                f"variable tags differ: {self.tag!r} vs {other.tag!r}")

    def truncate(self, order: int) -> "ExactSeries":
        if order > self.order:
            raise SeriesError("cannot extend truncation order")
        return ExactSeries(self.coeffs[: order + 1], tag=self.tag, order=order)

    def retag(self, tag: str) -> "ExactSeries":
        """Reinterpret the formal variable.  Use sparingly."""
        return ExactSeries(self.coeffs, tag=tag, order=self.order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactSeries.constant(other, self.order, self.tag)
        if not isinstance(other, ExactSeries):
            return NotImplemented
        self._check_tag(other)
        n = min(self.order, other.order)
        return ExactSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)],
                           tag=self.tag, order=n)

    __radd__ = __add__

    def __neg__(self):
        return ExactSeries([-c for c in self.coeffs], tag=self.tag, order=self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactSeries.constant(other, self.order, self.tag)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _frac(other)
            return ExactSeries([c * k for c in self.coeffs],
                               tag=self.tag, order=self.order)
        if not isinstance(other, ExactSeries):
            return NotImplemented
        self._check_tag(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        a, b = self.coeffs, other.coeffs
        for i in range(n + 1):
            if not a[i]:
                continue
            ai = a[i]
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return ExactSeries(out, tag=self.tag, order=n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _frac(other)
            if not k:
                raise ZeroDivisionError("division by zero scalar")
            return ExactSeries([c / k for c in self.coeffs],
                               tag=self.tag, order=self.order)
        if not isinstance(other, ExactSeries):
            return NotImplemented
        self._check_tag(other)
        if not other.coeffs[0]:
            raise NonUnitError("divisor has zero constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        inv0 = 1 / b[0]
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            s = a[i]
            for j in range(1, i + 1):
                s -= b[j] * out[i - j]
            out[i] = s * inv0
        return ExactSeries(out, tag=self.tag, order=n)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactSeries.one(self.order, self.tag) / self ** (-k)
        result = ExactSeries.one(self.order, self.tag)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- transcendental-style operations --------------------------------

    def exp(self) -> "ExactSeries":
        """Formal exponential; requires zero constant term.

        Uses the recurrence f' = a' f, i.e.
        n f_n = sum_{k=1}^{n} k a_k f_{n-k}.
        """
        if self.coeffs[0]:
            raise NonUnitError("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                if a[k]:
                    s += k * a[k] * out[m - k]
            out[m] = s / m
        return ExactSeries(out, tag=self.tag, order=n)

    def log(self) -> "ExactSeries":
        """Formal logarithm; requires constant term 1.

        Uses g' = a'/a integrated term by term.
        """
        if self.coeffs[0] != 1:
            raise NonUnitError("log needs constant term 1")
        n = self.order
        # a'/a as a series, then divide coefficient m-1 by m.
        deriv = ExactSeries([k * c for k, c in enumerate(self.coeffs[1:], start=1)],
                            tag=self.tag, order=n - 1) if n >= 1 else None
        if deriv is None:
            return ExactSeries.zero(0, self.tag)
        ratio = deriv / self.truncate(n - 1)
        out = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            out[m] = ratio.coeffs[m - 1] / m
        return ExactSeries(out, tag=self.tag, order=n)

    def q_d_dq(self) -> "ExactSeries":
        """The Euler operator t d/dt: c_n -> n*c_n."""
        return ExactSeries([n * c for n, c in enumerate(self.coeffs)],
                           tag=self.tag, order=self.order)

    # -- composition ----------------------------------------------------

    def compose(self, inner: "ExactSeries") -> "ExactSeries":
        """Substitute ``inner`` (zero constant term) into this series.

        The result lives in the inner series' variable.
        """
        if inner.coeffs[0]:
            raise CompositionError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        result = ExactSeries.constant(self.coeffs[n], n, inner.tag)
        for k in range(n - 1, -1, -1):  # Horner in the inner variable
            result = result * inner_t.retag(inner.tag) + self.coeffs[k]
        return result

    def reverse(self) -> "ExactSeries":
        """Compositional inverse of a series c1*t + O(t^2), c1 != 0.

        Solves compose(self, b) = t triangularly for b, one coefficient
        per degree; exact, so it agrees with Lagrange inversion.
        """
        if self.coeffs[0]:
            raise CompositionError("reversion needs zero constant term")
        if self.order < 1 or not self.coeffs[1]:
            raise CompositionError("reversion needs nonzero linear term")
        n = self.order
        a = self.coeffs
        inv_a1 = 1 / a[1]
        b = [Fraction(0)] * (n + 1)
        b[1] = inv_a1
        # powers[k] holds (sum so far)^k truncated; rebuild incrementally.
        for m in range(2, n + 1):
            partial = ExactSeries(b[: m] + [Fraction(0)], tag=self.tag, order=m)
            comp = ExactSeries(a[: m + 1], tag=self.tag, order=m).compose(partial)
            # coefficient of t^m must vanish except for the identity target
            b[m] = -comp.coeffs[m] * inv_a1
        return ExactSeries(b, tag=self.tag, order=n)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "variable_tag": self.tag,
            "order": self.order,
            "coefficients": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ExactSeries":
        return cls([Fraction(s) for s in d["coefficients"]],
                   tag=d["variable_tag"], order=int(d["order"]))


def from_coeff_fn(fn, order: int, tag: str = "q") -> ExactSeries:
    """Build a series from a coefficient function n -> scalar."""
    return ExactSeries([fn(n) for n in range(order + 1)], tag=tag, order=order)
