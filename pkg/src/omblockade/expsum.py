"""Exact algebra for finite sums of ``c * t**m * exp(a*t)`` terms.

This is the closed form in which all time-ordered perturbative integrals of
the toolkit live: the class is closed under addition, multiplication,
differentiation and integration from 0 to t, so iterated integrals over the
ordered domain ``0 < t_k < ... < t_1 < t`` stay exact.
"""

from __future__ import annotations

import math
from math import fsum

# Terms whose coefficient falls below this fraction of the largest one are
# dropped when pruning.
_REL_FLOOR = 1e-18

# Rates with |a| below this bound go through the short-series branch of the
# integral to avoid the 1/a**(m+1) cancellation of the closed form.
_SMALL_RATE = 1e-8
_SERIES_ORDER = 8


class ExpSum:
    """f(t) = sum of coeff * t**power * exp(rate*t), complex coeff and rate.

    Terms are stored as ``{(power, rate): coeff}``; terms with identical
    (power, rate) merge automatically.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = dict(terms) if terms else {}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "ExpSum":
        return cls()

    @classmethod
    def term(cls, coeff, power: int = 0, rate=0.0) -> "ExpSum":
        if power < 0:
            raise ValueError("power must be >= 0")
        if coeff == 0:
            return cls()
        return cls({(int(power), complex(rate)): complex(coeff)})

    @classmethod
    def one(cls) -> "ExpSum":
        return cls.term(1.0)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "ExpSum") -> "ExpSum":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0.0) + c
        return ExpSum(out)

    def __sub__(self, other: "ExpSum") -> "ExpSum":
        return self + (-other)

    def __neg__(self) -> "ExpSum":
        return ExpSum({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExpSum):
            out: dict = {}
            for (p1, a1), c1 in self.terms.items():
                for (p2, a2), c2 in other.terms.items():
                    key = (p1 + p2, a1 + a2)
                    out[key] = out.get(key, 0.0) + c1 * c2
            return ExpSum(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "ExpSum":
        if factor == 0:
            return ExpSum()
        return ExpSum({k: c * factor for k, c in self.terms.items()})

    def shift_rate(self, delta) -> "ExpSum":
        """Multiply by exp(delta * t)."""
        delta = complex(delta)
        return ExpSum({(p, a + delta): c for (p, a), c in self.terms.items()})

    def conjugate(self) -> "ExpSum":
        return ExpSum(
            {
                (p, a.conjugate()): c.conjugate()
                for (p, a), c in self.terms.items()
            }
        )

    # -- calculus ------------------------------------------------------

    def derivative(self) -> "ExpSum":
        out: dict = {}
        for (p, a), c in self.terms.items():
            if p > 0:
                key = (p - 1, a)
                out[key] = out.get(key, 0.0) + c * p
            if a != 0:
                key = (p, a)
                out[key] = out.get(key, 0.0) + c * a
        return ExpSum(out)

    def integrate(self) -> "ExpSum":
        """Definite integral from 0 to t, returned as a function of t."""
        out: dict = {}

        def acc(power, rate, coeff):
            key = (power, rate)
            out[key] = out.get(key, 0.0) + coeff

        for (m, a), c in self.terms.items():
            if abs(a) <= _SMALL_RATE:
                # exp(a*t) ~ sum (a*t)**j / j!; the truncation error is
                # O((|a| t)**(J+1)) which is negligible for |a| <= 1e-8.
                for j in range(_SERIES_ORDER + 1):
                    coeff = c * a**j / math.factorial(j) / (m + j + 1)
                    acc(m + j + 1, complex(0.0), coeff)
            else:
                # int_0^t s**m exp(a s) ds
                #   = exp(a t) * sum_j (-1)**(m-j) m!/(j! a**(m-j+1)) t**j
                #     - (-1)**m m! / a**(m+1)
                m_fact = math.factorial(m)
                for j in range(m + 1):
                    coeff = (
                        c
                        * (-1) ** (m - j)
                        * m_fact
                        / (math.factorial(j) * a ** (m - j + 1))
                    )
                    acc(j, a, coeff)
                acc(0, complex(0.0), -c * (-1) ** m * m_fact / a ** (m + 1))
        return ExpSum(out)

    # -- evaluation ----------------------------------------------------

    def evaluate(self, t: float) -> complex:
        """Value at t, accumulated with compensated summation."""
        if not self.terms:
            return complex(0.0)
        re = []
        im = []
        for (p, a), c in sorted(
            self.terms.items(), key=lambda item: (item[0][0], item[0][1].real, item[0][1].imag)
        ):
            v = c * t**p * _cexp(a * t)
            re.append(v.real)
            im.append(v.imag)
        return complex(fsum(re), fsum(im))

    def prune(self, rel: float = _REL_FLOOR) -> "ExpSum":
        """Drop terms whose coefficient is negligibly small."""
        if not self.terms:
            return self
        floor = rel * max(abs(c) for c in self.terms.values())
        return ExpSum({k: c for k, c in self.terms.items() if abs(c) > floor})

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"ExpSum({len(self.terms)} terms)"


def _cexp(z: complex) -> complex:
    return complex(math.exp(z.real) * math.cos(z.imag), math.exp(z.real) * math.sin(z.imag))


def simplex_primitive(factors) -> ExpSum:
    """Iterated integral of a product integrand over the ordered simplex.

    ``factors`` lists one ExpSum per time variable, outermost (t_1) first;
    the integrand is ``prod_j factors[j](t_j)`` on the domain
    ``0 < t_k < ... < t_1 < t``.  Returns the result as an ExpSum in t.
    """
    acc = ExpSum.one()
    for f in reversed(list(factors)):
        acc = (f * acc).integrate()
    return acc


def simplex_integrate(factors, t: float) -> complex:
    """Evaluate the ordered-simplex integral of ``prod_j factors[j](t_j)``
    with upper limit ``t``."""
    return simplex_primitive(factors).evaluate(t)
