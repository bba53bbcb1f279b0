"""Intersection-cohomology blowing-up corrections and the deepest singularity.

Two kinds of quantities live here:

* the correction terms added when blowing up along the strict transform of
  ``T*J/Z2`` (:func:`correction_theorem2`) and along the rank-one locus of the
  local model (:func:`correction_theorem3`), both built from a Z/2-invariant
  Künneth product with a degree-shifted incidence-variety fibre;
* the intersection Poincaré polynomials of the projectivised local model
  ``P(Y^-1(0))//PGL(2)`` and of its affine cone ``Y^-1(0)//PGL(2)``, each
  computed both by the blow-up chain and from a closed form.

The shift rule is applied literally, degree by degree.  Closed rational forms
of the corrections are provided only as cross-checks.
"""

from dataclasses import dataclass

from .errors import NegativeCokernel
from .polyring import (
    Polynomial,
    SplitSeries,
    exact_div,
    one_minus_t,
    truncate_below,
)
from .spaces import (
    Genus,
    d1_poly,
    incidence_split,
    p_s2a,
    projective_space,
    tjtilde_split,
)

_ONE_MINUS_T2 = one_minus_t(2)


def incidence_dim(g: int) -> int:
    """Complex dimension of ``I_{2g-3}``; the cutoff of the degree shift."""
    return 4 * g - 7


def cone_dim(g: int) -> int:
    """Complex dimension of the affine cone ``Y^-1(0)//PGL(2)``."""
    return 6 * g - 6


@dataclass(frozen=True)
class ConeSpec:
    projective_ih: Polynomial
    complex_dim: int

    def __post_init__(self):
        if self.complex_dim < 1:
            raise ValueError("complex_dim must be >= 1")


@dataclass(frozen=True)
class ShiftedKunnethSpec:
    base: SplitSeries
    fiber: SplitSeries
    cutoff_D: int

    def evaluate(self) -> Polynomial:
        return kunneth_z2(self.base, shifted_fiber_series(self.fiber, self.cutoff_D))


def cone_truncate(spec: ConeSpec) -> Polynomial:
    """IH of the affine cone over a projective quotient.

    Below the complex dimension the cone's IH is the cokernel of the
    (injective) Lefschetz map ``IH^{i-2} -> IH^i`` of the base, i.e. the
    coefficients of ``(1 - t^2) * IP_t(base)``; above it vanishes.
    """
    result = truncate_below(_ONE_MINUS_T2 * spec.projective_ih, spec.complex_dim)
    for i, c in enumerate(result.coeffs):
        if c < 0:
            raise NegativeCokernel(i, c)
    return result


def _shift_part(f: Polynomial, cutoff_D: int) -> Polynomial:
    top = f.degree if f else -1
    out = []
    for q in range(max(top, cutoff_D) + 1):
        if q <= cutoff_D:
            out.append(f[q - 2] if q >= 2 else 0)
        else:
            out.append(f[q])
    return Polynomial(out)


def shifted_fiber_series(fiber: SplitSeries, cutoff_D: int) -> SplitSeries:
    """Reindex each part by ``H^{q-2}`` for ``q <= cutoff_D`` and ``H^q`` above.

    Coefficients of the fibre in degrees ``cutoff_D - 1`` and ``cutoff_D`` are
    reached by neither branch and so drop out.
    """
    return SplitSeries(_shift_part(fiber.plus, cutoff_D), _shift_part(fiber.minus, cutoff_D))


def kunneth_z2(base: SplitSeries, fiber: SplitSeries) -> Polynomial:
    """Invariant part of a tensor product: ``A+ B+ + A- B-``."""
    return base.plus * fiber.plus + base.minus * fiber.minus


def correction_theorem2(g: int) -> Polynomial:
    """Correction from the second blow-up, along the strict transform of ``T*J/Z2``."""
    g = Genus(g)
    return ShiftedKunnethSpec(tjtilde_split(g), incidence_split(g), incidence_dim(g)).evaluate()


def _rank_one_locus_split(g: int) -> SplitSeries:
    # the quotient P^{2g-1} of the rank-one locus carries only invariant classes
    return SplitSeries(projective_space(2 * g - 1), Polynomial())


def correction_theorem3(g: int) -> Polynomial:
    """Correction from blowing up the rank-one locus of the projectivised local model."""
    g = Genus(g)
    return ShiftedKunnethSpec(_rank_one_locus_split(g), incidence_split(g), incidence_dim(g)).evaluate()


# closed forms of the shifted fibres, used only to cross-check the literal rule

def shifted_plus_closed(g: int) -> Polynomial:
    """``t^2 (1-t^{4g-4})(1-t^{4g-6}) / ((1-t^2)(1-t^4))``."""
    num = (one_minus_t(4 * g - 4) * one_minus_t(4 * g - 6)).shift(2)
    return exact_div(num, _ONE_MINUS_T2 * one_minus_t(4))


def shifted_minus_closed(g: int) -> Polynomial:
    """``t^4 (1-t^{4g-4})(1-t^{4g-10}) / ((1-t^2)(1-t^4)) + t^{4g-6}``.

    ``t^4 (1 - t^{4g-10})`` is expanded to ``t^4 - t^{4g-6}`` so that g = 2
    (negative inner exponent) needs no special case.
    """
    t4_part = Polynomial.monomial(4) - Polynomial.monomial(4 * g - 6)
    num = t4_part * one_minus_t(4 * g - 4)
    return exact_div(num, _ONE_MINUS_T2 * one_minus_t(4)) + Polynomial.monomial(4 * g - 6)


def correction_theorem2_closed(g: int) -> Polynomial:
    tj = tjtilde_split(g)
    return tj.plus * shifted_plus_closed(g) + tj.minus * shifted_minus_closed(g)


def correction_theorem3_closed(g: int) -> Polynomial:
    return projective_space(2 * g - 1) * shifted_plus_closed(g)


def ip_bl_p_upsilon(g: int) -> Polynomial:
    """IP_t of the projectivised local model blown up along its rank-one locus.

    For g = 2 this space is already smooth, a P^2-bundle over ``Gr^w(2,4)``.
    For g >= 3 it is recovered from ``D_1`` by undoing one ordinary blow-up
    whose exceptional divisor is a P^{2g-5}-bundle over ``P(S^2 A)``.
    """
    g = Genus(g)
    if g == 2:
        return p_s2a(2)
    return d1_poly(g) - p_s2a(g) * (projective_space(2 * g - 5) - 1)


def ip_p_upsilon(g: int) -> Polynomial:
    """``(1-t^{8g-8})(1-t^{4g}) / ((1-t^2)(1-t^4))``."""
    g = Genus(g)
    return exact_div(one_minus_t(8 * g - 8) * one_minus_t(4 * g), _ONE_MINUS_T2 * one_minus_t(4))


def ip_p_upsilon_pipeline(g: int) -> Polynomial:
    return ip_bl_p_upsilon(g) - correction_theorem3(g)


def ip_upsilon(g: int) -> Polynomial:
    """``(1-t^{4g}) / (1-t^4)``."""
    g = Genus(g)
    return exact_div(one_minus_t(4 * g), one_minus_t(4))


def ip_upsilon_pipeline(g: int) -> Polynomial:
    g = Genus(g)
    return cone_truncate(ConeSpec(ip_p_upsilon_pipeline(g), cone_dim(g)))
