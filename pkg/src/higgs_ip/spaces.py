"""Poincaré series of the building-block spaces.

Everything here is a closed polynomial except the classifying spaces, whose
series are infinite; those come back either as a :class:`RationalFunction`
or, for the Z/2-split BSO(2), truncated at a caller-supplied order.

Degenerate low-genus factors (``1 - t^0 = 0``) are left to the arithmetic
rather than branched on.
"""

from dataclasses import dataclass
from typing import Union

from .errors import InvalidGenus, UsageError
from .polyring import (
    Polynomial,
    RationalFunction,
    SplitSeries,
    binomial_power,
    exact_div,
    geometric_sum,
    one_minus_t,
)


class Genus(int):
    """Genus of the curve; an ``int`` that refuses values below 2."""

    def __new__(cls, g):
        if isinstance(g, bool) or not isinstance(g, int) or g < 2:
            raise InvalidGenus(g)
        return super().__new__(cls, g)


@dataclass(frozen=True)
class SpaceSeries:
    name: str
    series: Union[Polynomial, SplitSeries]
    genus: Genus


def projective_space(n: int) -> Polynomial:
    """``P_t(P^n) = 1 + t^2 + ... + t^(2n)``; zero for ``n = -1`` (the empty space)."""
    if n < -1:
        raise ValueError(f"no projective space of dimension {n}")
    return geometric_sum(n)


def classifying_sl2() -> RationalFunction:
    """``1/(1 - t^4)``: one generator in degree 4."""
    return RationalFunction(1, one_minus_t(4))


def classifying_so2_split(order: int) -> SplitSeries:
    """BSO(2) = P^infinity split under the orientation-reversing involution.

    The invariant part lives in degrees ``4k``, the anti-invariant part in
    degrees ``4k + 2``; both truncated through ``t^order``.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    plus = [1 if i % 4 == 0 else 0 for i in range(order + 1)]
    minus = [1 if i % 4 == 2 else 0 for i in range(order + 1)]
    return SplitSeries(Polynomial(plus), Polynomial(minus))


def _den_2_4():
    return one_minus_t(2) * one_minus_t(4)


def incidence_split(g: int) -> SplitSeries:
    """Invariant/anti-invariant Betti series of the incidence variety ``I_{2g-3}``.

    plus  = (1-t^{4g-4})^2 / ((1-t^2)(1-t^4))
    minus = t^2 (1-t^{4g-4})(1-t^{4g-8}) / ((1-t^2)(1-t^4))
    """
    g = Genus(g)
    den = _den_2_4()
    a = one_minus_t(4 * g - 4)
    plus = exact_div(a * a, den)
    minus = exact_div((a * one_minus_t(4 * g - 8)).shift(2), den)
    return SplitSeries(plus, minus)


def tjtilde_split(g: int) -> SplitSeries:
    """Z/2-split Betti series of T*J blown up at its 2^{2g} fixed points."""
    g = Genus(g)
    p, m = binomial_power(1, 2 * g), binomial_power(-1, 2 * g)
    even = exact_div(p + m, Polynomial.constant(2))
    odd = exact_div(p - m, Polynomial.constant(2))
    # each of the 2^{2g} exceptional P^{2g-1}'s adds t^2 + ... + t^{4g-2}
    exceptional = (projective_space(2 * g - 1) - 1) * 2 ** (2 * g)
    return SplitSeries(even + exceptional, odd)


def symplectic_grassmannian(k: int, g: int) -> Polynomial:
    """Poincaré polynomial of the isotropic Grassmannian ``Gr^w(k, 2g)``, k in {2, 3}.

    ``prod_{i=1..k} (1 - t^{4(g-k)+4i}) / (1 - t^{2i})``, divided once as a whole:
    the individual factors need not divide.
    """
    g = Genus(g)
    if k not in (2, 3):
        raise ValueError("only k = 2 and k = 3 are supported")
    if k == 3 and g < 3:
        raise UsageError("Gr^w(3, 2g) needs g >= 3")
    num, den = Polynomial.one(), Polynomial.one()
    for i in range(1, k + 1):
        num = num * one_minus_t(4 * (g - k) + 4 * i)
        den = den * one_minus_t(2 * i)
    return exact_div(num, den)


def p_s2a(g: int) -> Polynomial:
    """P^2-bundle over ``Gr^w(2, 2g)`` (projectivised symmetric square of the tautological bundle)."""
    return projective_space(2) * symplectic_grassmannian(2, g)


def d1_fiber() -> Polynomial:
    """P^5 blown up along the Veronese P^2 (rank-one symmetric 3x3 matrices)."""
    p5, p2 = projective_space(5), projective_space(2)
    return p5 - p2 + p2 * p2


def d1_poly(g: int) -> Polynomial:
    g = Genus(g)
    if g < 3:
        raise UsageError("D_1 is only defined for g >= 3")
    return d1_fiber() * symplectic_grassmannian(3, g)
