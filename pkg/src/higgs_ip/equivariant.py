"""SL(2)-equivariant Poincaré series of the spaces in the Kirwan blow-up chain.

Most of these series are infinite.  Each is first assembled exactly as a
:class:`RationalFunction` with integer-cleared numerator and denominator and
only then expanded to a truncated power series; the halves and quarters in
the formulas must clear at that point or :class:`NonIntegerCoefficient` is
raised.

The blow-up assembly (:func:`p_sl2_r2s`) assumes that equivariant Poincaré
series change under each blow-up of the semistable loci exactly as they do
for the non-semistable spaces; this is taken as given.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import NegativeCoefficient
from .polyring import (
    Polynomial,
    RationalFunction,
    binomial_power,
    exact_div,
    one_minus_t,
)
from .spaces import (
    Genus,
    classifying_sl2,
    classifying_so2_split,
    d1_fiber,
    incidence_split,
    projective_space,
    tjtilde_split,
)
from .blowup import kunneth_z2


def default_order(g: int) -> int:
    """Default truncation: a few degrees beyond the top degree 6g-6 of IP_t(M)."""
    return 6 * g - 2


@dataclass(frozen=True)
class EquivariantSeries:
    """A Poincaré series, exact (``truncation_order is None``) or truncated."""

    name: str
    value: Polynomial
    genus: Genus
    truncation_order: Optional[int] = None

    @property
    def exact(self):
        return self.truncation_order is None

    def coefficient(self, i: int) -> int:
        if self.truncation_order is not None and i > self.truncation_order:
            raise IndexError(f"t^{i} is beyond the truncation order {self.truncation_order}")
        return self.value[i]

    def require_nonnegative(self):
        for i, c in enumerate(self.value.coeffs):
            if c < 0:
                raise NegativeCoefficient(i, c, self.name)
        return self


def _t(k):
    return Polynomial.monomial(k)


def _R(num, den=1):
    return RationalFunction(num, den)


def _order(g, order):
    return default_order(g) if order is None else order


def _truncated(name, g, r, order):
    value = r.series(order, context=f"{name} (g={g})")
    return EquivariantSeries(name, value, g, order)


def p_sl2_r_rational(g: int) -> RationalFunction:
    """Equivariant series of the space of semistable Higgs pairs (gauge-theoretic form).

    The four displayed groups of terms are summed.
    """
    g = Genus(g)
    n = 2 * g
    p, m = binomial_power(1, n), binomial_power(-1, n)
    d24 = one_minus_t(2) * one_minus_t(4)
    t4g4 = _t(4 * g - 4)

    cube = Polynomial([1, 0, 0, 1]) ** n
    term1 = _R(cube - p * _t(2 * g + 2), d24)
    term2 = (
        _R(-t4g4)
        + _R(p * _t(2 * g + 2), d24)
        + _R(m * t4g4, Polynomial([4, 0, 4]))
    )
    # 2g/(t+1) + 1/(t^2-1) - 1/2 + (3-2g)
    bracket = (
        _R(2 * g, Polynomial([1, 1]))
        + _R(1, Polynomial([-1, 0, 1]))
        + _R(5 - 4 * g, 2)
    )
    term3 = _R(p * t4g4, one_minus_t(2) * 2) * bracket
    p_short, m_short = binomial_power(1, n - 2), binomial_power(-1, n - 2)
    term4 = _R((2**n - 1) * t4g4 * (p_short + m_short - 2), 2)
    return term1 + term2 + term3 + term4


def p_sl2_R(g: int, order: Optional[int] = None) -> EquivariantSeries:
    g = Genus(g)
    return _truncated("p_sl2_r", g, p_sl2_r_rational(g), _order(g, order))


def p_sl2_sigma_rational(g: int) -> RationalFunction:
    tj = tjtilde_split(g)
    return _R(tj.plus, one_minus_t(4)) + _R(tj.minus.shift(2), one_minus_t(4))


def p_sl2_sigma(g: int, order: Optional[int] = None) -> EquivariantSeries:
    """Blow-up centre ``Sigma``: equivariantly ``(BSO(2) x T*J~)/Z2``."""
    g = Genus(g)
    return _truncated("p_sl2_sigma", g, p_sl2_sigma_rational(g), _order(g, order))


def p_sl2_sigma_kunneth(g: int, order: int) -> Polynomial:
    """The same series as an invariant Künneth product, truncated through ``t^order``."""
    return kunneth_z2(classifying_so2_split(order), tjtilde_split(g)).truncate(order)


def p_sl2_e_ss(g: int) -> Polynomial:
    """Exceptional divisor of the local rank-one blow-up: ``P+(I_{2g-3}) * P_t(P^{2g-1})``."""
    return incidence_split(g).plus * projective_space(2 * g - 1)


def p_sl2_e_ss_closed(g: int) -> Polynomial:
    a = one_minus_t(4 * g - 4)
    num = a * a * one_minus_t(4 * g)
    return exact_div(num, one_minus_t(2) ** 2 * one_minus_t(4))


def p_sl2_p_hom1_ss_rational(g: int) -> RationalFunction:
    return _R(projective_space(2 * g - 1), one_minus_t(4))


def p_sl2_p_hom1_ss(g: int, order: Optional[int] = None) -> EquivariantSeries:
    """Semistable rank-one locus: ``P_t(BSL(2)) * P_t(P^{2g-1})``."""
    g = Genus(g)
    return _truncated("p_sl2_p_hom1_ss", g, p_sl2_p_hom1_ss_rational(g), _order(g, order))


def p_sl2_p_upsilon_ss_rational(g: int) -> RationalFunction:
    """Semistable part of the projectivised local model, transcribed as one expression.

    Obtained by solving the local equivariant blow-up relation for the
    unknown term.  ``t^2 (1 - t^{2(2g-5)})`` is expanded to ``t^2 - t^{4g-8}``
    so the g = 2 evaluation stays polynomial.
    """
    g = Genus(g)
    d2, d4, d6 = one_minus_t(2), one_minus_t(4), one_minus_t(6)
    a, c = one_minus_t(4 * g - 4), one_minus_t(4 * g)
    p2 = projective_space(2)
    gr3 = _R(d1_fiber() * one_minus_t(4 * g - 8) * a * c, d2 * d4 * d6)
    exc = _R(p2 * a * c * (_t(2) - _t(4 * g - 8)), d2 * d4 * d2)
    e_ss = _R(a * a * c, d2 * d4 * d2)
    hom1 = _R(c, d4 * d2)
    return gr3 - exc - e_ss + hom1


def p_sl2_p_upsilon_ss(g: int, order: Optional[int] = None) -> EquivariantSeries:
    g = Genus(g)
    return _truncated("p_sl2_p_upsilon_ss", g, p_sl2_p_upsilon_ss_rational(g), _order(g, order))


def p_sl2_e2_ss(g: int) -> Polynomial:
    """Exceptional divisor of the second blow-up: ``[H(T*J~) (x) H(I_{2g-3})]^{Z2}``."""
    return kunneth_z2(tjtilde_split(g), incidence_split(g))


def p_sl2_e2_ss_closed(g: int) -> Polynomial:
    tj = tjtilde_split(g)
    d = one_minus_t(2) * one_minus_t(4)
    a = one_minus_t(4 * g - 4)
    plus = exact_div(a * a, d)
    minus = exact_div((a * one_minus_t(4 * g - 8)).shift(2), d)
    return tj.plus * plus + tj.minus * minus


def p_sl2_r2s_rational(g: int) -> RationalFunction:
    g = Genus(g)
    return (
        p_sl2_r_rational(g)
        + 2 ** (2 * g) * (p_sl2_p_upsilon_ss_rational(g) - classifying_sl2())
        + _R(p_sl2_e2_ss(g))
        - p_sl2_sigma_rational(g)
    )


def p_sl2_r2s(g: int, order: Optional[int] = None) -> EquivariantSeries:
    """Equivariant series of the stable locus after the first two blow-ups.

    Equal to the ordinary Poincaré series of its (orbifold) quotient.  Built
    from the truncated series of each constituent.
    """
    g = Genus(g)
    order = _order(g, order)
    value = (
        p_sl2_R(g, order).value
        + 2 ** (2 * g) * (p_sl2_p_upsilon_ss(g, order).value - classifying_sl2().series(order))
        + p_sl2_e2_ss(g).truncate(order)
        - p_sl2_sigma(g, order).value
    )
    return EquivariantSeries("p_sl2_r2s", value, g, order).require_nonnegative()

