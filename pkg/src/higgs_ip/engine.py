"""Assembly of IP_t(M) and the per-genus verification suite.

IP_t(M) is computed two ways:

``ip_m_pipeline``
    Start from the equivariant series of the stable locus after two
    blow-ups, remove the second blow-up's correction, then remove the
    first blow-up's contribution at the 2^{2g} deepest singular points.
    Works on truncated series.  This route is authoritative.

``ip_m_closed``
    One large rational expression, collapsed to a polynomial by a single
    exact division.  Used as a validation target.

Both must give a polynomial of degree exactly 6g-6 with nonnegative
coefficients and constant term 1.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import blowup, equivariant, spaces
from .errors import (
    ArithmeticFailure,
    CheckFailure,
    DegreeMismatch,
    NegativeCoefficient,
    UnknownQuantity,
)
from .polyring import Polynomial, RationalFunction, SplitSeries, binomial_power, one_minus_t
from .spaces import Genus

ROUTE_PIPELINE = "pipeline"
ROUTE_CLOSED = "closed_form"

#: Published low-genus values of IP_t(M), coefficient of t^i at index i.
KNOWN_IP_M = {
    2: (1, 0, 1, 0, 17, 0, 17),
    3: (1, 0, 1, 6, 2, 6, 17, 6, 81, 12, 396, 6, 66),
    4: (1, 0, 1, 8, 2, 8, 30, 16, 31, 72, 59, 72, 385, 80, 3955, 80, 3885, 16, 259),
    5: (1, 0, 1, 10, 2, 10, 47, 20, 48, 140, 93, 150, 304, 270, 349, 522, 1583,
        532, 29414, 532, 72170, 280, 28784, 30, 1028),
}


def expected_degree(g: int) -> int:
    return 6 * g - 6


@dataclass(frozen=True)
class QuantityReport:
    quantity_name: str
    genus: int
    coefficients: Tuple[int, ...]
    route: str
    checks_passed: Tuple[str, ...] = ()
    # only for Z/2-split quantities: the invariant / anti-invariant parts
    parts: Optional[Dict[str, Tuple[int, ...]]] = None

    def __post_init__(self):
        object.__setattr__(self, "genus", int(self.genus))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def degree(self) -> int:
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i]:
                return i
        return -1

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients)

    def to_dict(self) -> dict:
        # decimal strings: coefficients outgrow 53-bit JSON numbers at large g
        d = {
            "quantity": self.quantity_name,
            "genus": int(self.genus),
            "route": self.route,
            "degree": self.degree,
            "coefficients": [str(c) for c in self.coefficients],
            "checks_passed": list(self.checks_passed),
        }
        if self.parts is not None:
            for k, v in self.parts.items():
                d[k] = [str(c) for c in v]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "QuantityReport":
        parts = None
        if "plus" in d or "minus" in d:
            parts = {k: tuple(int(c) for c in d.get(k, [])) for k in ("plus", "minus")}
        report = cls(
            quantity_name=d["quantity"],
            genus=int(d["genus"]),
            coefficients=tuple(int(c) for c in d["coefficients"]),
            route=d["route"],
            checks_passed=tuple(d.get("checks_passed", ())),
            parts=parts,
        )
        if "degree" in d and int(d["degree"]) != report.degree:
            raise ValueError(f"degree field {d['degree']} disagrees with coefficients")
        return report


def _polynomial_law(p: Polynomial, g: int, context: str) -> List[str]:
    """Raise unless ``p`` is a genuine IP_t(M) candidate; return the checks passed."""
    deg = expected_degree(g)
    if p.degree != deg:
        raise DegreeMismatch(deg, p.degree, context)
    for i, c in enumerate(p.coeffs):
        if c < 0:
            raise NegativeCoefficient(i, c, context)
    if p[0] != 1:
        raise CheckFailure(f"constant term {p[0]} != 1 in {context}")
    return ["integral", "degree", "nonnegative", "connected"]


def ip_r1ss(g: int, order: Optional[int] = None) -> Polynomial:
    """IP_t of the quotient after the first blow-up (truncated)."""
    g = Genus(g)
    order = equivariant.default_order(g) if order is None else order
    r2s = equivariant.p_sl2_r2s(g, order).value
    value = r2s - blowup.correction_theorem2(g).truncate(order)
    for i, c in enumerate(value.coeffs):
        if c < 0:
            raise NegativeCoefficient(i, c, "IP_t(R1ss//SL(2))")
    return value


def ip_m_pipeline(g: int, order: Optional[int] = None) -> QuantityReport:
    g = Genus(g)
    order = equivariant.default_order(g) if order is None else order
    if order < expected_degree(g):
        raise ValueError(f"truncation order {order} is below the degree {expected_degree(g)}")
    r1 = ip_r1ss(g, order)
    local = blowup.ip_p_upsilon_pipeline(g) - blowup.ip_upsilon_pipeline(g)
    value = r1 - (2 ** (2 * g) * local).truncate(order)
    # the truncated tail (6g-5 .. order) must vanish identically
    checks = _polynomial_law(value, g, f"ip_m pipeline (g={g}, order={order})")
    checks.insert(1, "tail_vanishes")
    return QuantityReport("ip_m", g, value.coeffs, ROUTE_PIPELINE, tuple(checks))


def _t(k):
    return Polynomial.monomial(k)


def ip_m_closed_rational(g: int) -> RationalFunction:
    """The monolithic expression, term by term.

    The two terms with an unbalanced parenthesis are read as
    ``-P+(T*J~) * (shifted plus fibre) - P-(T*J~) * (shifted minus fibre)``.
    Where an exponent such as ``4g-10`` goes negative at g = 2 the monomial
    prefactor is distributed (``t^4 (1 - t^{4g-10}) = t^4 - t^{4g-6}``).
    """
    g = Genus(g)
    R = RationalFunction
    G = 2 ** (2 * g)
    d2, d4 = one_minus_t(2), one_minus_t(4)
    d24 = d2 * d4
    a, c = one_minus_t(4 * g - 4), one_minus_t(4 * g)
    p, m = binomial_power(1, 2 * g), binomial_power(-1, 2 * g)

    # equivariant series of R
    total = equivariant.p_sl2_r_rational(g)

    # 2^{2g} [ P(PY^ss) ] - 2^{2g} P(BSL(2))
    total += G * equivariant.p_sl2_p_upsilon_ss_rational(g)
    total -= R(G, d4)

    # P+(T*J~) and P-(T*J~) as rational expressions
    tj_plus = R(p + m, 2) + G * (R(c, d2) - 1)
    tj_minus = R(p - m, 2)

    # E_2^ss
    total += tj_plus * R(a * a, d24)
    total += tj_minus * R((a * one_minus_t(4 * g - 8)).shift(2), d24)
    # Sigma
    total -= R(1, d4) * tj_plus
    total -= R(_t(2), d4) * tj_minus
    # second blow-up correction
    total -= tj_plus * R((a * one_minus_t(4 * g - 6)).shift(2), d24)
    total -= tj_minus * (R((_t(4) - _t(4 * g - 6)) * a, d24) + R(_t(4 * g - 6)))
    # first blow-up at the 2^{2g} points
    total -= G * (R(one_minus_t(8 * g - 8) * c, d24) - R(c, d4))
    return total


def ip_m_closed(g: int) -> QuantityReport:
    g = Genus(g)
    value = ip_m_closed_rational(g).to_polynomial()
    checks = _polynomial_law(value, g, f"ip_m closed form (g={g})")
    return QuantityReport("ip_m_closed", g, value.coeffs, ROUTE_CLOSED, tuple(checks))


# --------------------------------------------------------------------------
# quantity registry (closed)

def _split_report(name, g, split: SplitSeries, route):
    total = split.total()
    return QuantityReport(
        name, g, total.coeffs, route, ("nonnegative",),
        parts={"plus": split.plus.coeffs, "minus": split.minus.coeffs},
    )


def _poly_report(name, route, fn, nonneg=True):
    def build(g, order=None):
        p = fn(g)
        checks = ()
        if nonneg:
            for i, c in enumerate(p.coeffs):
                if c < 0:
                    raise NegativeCoefficient(i, c, name)
            checks = ("nonnegative",)
        return QuantityReport(name, g, p.coeffs, route, checks)
    return build


def _series_report(name, fn):
    def build(g, order=None):
        s = fn(g, order)
        return QuantityReport(name, g, s.value.coeffs, ROUTE_PIPELINE,
                              (f"truncated_at_{s.truncation_order}",))
    return build


QUANTITIES: Dict[str, Callable[..., QuantityReport]] = {
    "ip_m": lambda g, order=None: ip_m_pipeline(g, order),
    "ip_m_closed": lambda g, order=None: ip_m_closed(g),
    "ip_p_upsilon": _poly_report("ip_p_upsilon", ROUTE_CLOSED, blowup.ip_p_upsilon),
    "ip_upsilon": _poly_report("ip_upsilon", ROUTE_CLOSED, blowup.ip_upsilon),
    "p_sl2_r": _series_report("p_sl2_r", equivariant.p_sl2_R),
    "p_sl2_sigma": _series_report("p_sl2_sigma", equivariant.p_sl2_sigma),
    "p_sl2_e_ss": _poly_report("p_sl2_e_ss", ROUTE_PIPELINE, equivariant.p_sl2_e_ss),
    "p_sl2_e2_ss": _poly_report("p_sl2_e2_ss", ROUTE_PIPELINE, equivariant.p_sl2_e2_ss),
    "p_sl2_p_upsilon_ss": _series_report("p_sl2_p_upsilon_ss", equivariant.p_sl2_p_upsilon_ss),
    "p_sl2_r2s": _series_report("p_sl2_r2s", equivariant.p_sl2_r2s),
    "correction_theorem2": _poly_report("correction_theorem2", ROUTE_PIPELINE, blowup.correction_theorem2),
    "correction_theorem3": _poly_report("correction_theorem3", ROUTE_PIPELINE, blowup.correction_theorem3),
    "d1": _poly_report("d1", ROUTE_PIPELINE, spaces.d1_poly),
    "p_s2a": _poly_report("p_s2a", ROUTE_PIPELINE, spaces.p_s2a),
    "incidence_split": lambda g, order=None: _split_report(
        "incidence_split", g, spaces.incidence_split(g), ROUTE_CLOSED),
    "tjtilde_split": lambda g, order=None: _split_report(
        "tjtilde_split", g, spaces.tjtilde_split(g), ROUTE_CLOSED),
}


def compute(name: str, g: int, order: Optional[int] = None) -> QuantityReport:
    try:
        build = QUANTITIES[name]
    except KeyError:
        raise UnknownQuantity(name, sorted(QUANTITIES)) from None
    return build(Genus(g), order)


# --------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class CheckResult:
    name: str
    genus: int
    passed: bool
    detail: str = ""
    index: Optional[int] = None
    expected: Optional[int] = None
    found: Optional[int] = None

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        s = f"g={self.genus} {self.name}: {status}"
        return f"{s} ({self.detail})" if self.detail else s


def first_divergence(a: Sequence[int], b: Sequence[int]):
    """Index and values of the first differing coefficient, or None."""
    a, b = tuple(a), tuple(b)
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return i, x, y
    return None


def _compare(name, g, expected, found) -> CheckResult:
    d = first_divergence(expected, found)
    if d is None:
        return CheckResult(name, g, True)
    i, x, y = d
    return CheckResult(name, g, False, f"first divergence at t^{i}: expected {x}, got {y}",
                       index=i, expected=x, found=y)


def _coeffs(x):
    if isinstance(x, Polynomial):
        return x.coeffs
    if isinstance(x, QuantityReport):
        return x.coefficients
    return tuple(x)


def _equality_check(name, expected_fn, found_fn):
    def run(g):
        return _compare(name, g, _coeffs(expected_fn(g)), _coeffs(found_fn(g)))
    return run


def _law_check(name, fn):
    def run(g):
        fn(g)
        return CheckResult(name, g, True)
    return run


def _check_nonneg_r1(g):
    ip_r1ss(g)
    return CheckResult("r1ss_nonnegative", g, True)


def _check_truncation_stability(g):
    lo = equivariant.default_order(g)
    a = ip_m_pipeline(g, lo).coefficients
    b = ip_m_pipeline(g, lo + 10).coefficients
    return _compare("truncation_stability", g, a, b)


def _check_table(g):
    if g not in KNOWN_IP_M:
        return None
    return _compare("table_match", g, KNOWN_IP_M[g], ip_m_pipeline(g).coefficients)


def _check_upsilon_ss_consistency(g):
    # P(PY^ss) + P(E^ss) - P(PHom_1^ss) must reproduce the blown-up local quotient
    order = 12 * g
    lhs = (
        equivariant.p_sl2_p_upsilon_ss(g, order).value
        + equivariant.p_sl2_e_ss(g).truncate(order)
        - equivariant.p_sl2_p_hom1_ss(g, order).value
    )
    return _compare("upsilon_ss_local_blowup", g, blowup.ip_bl_p_upsilon(g).truncate(order), lhs)


def _check_sigma(g):
    order = 6 * g
    return _compare("sigma_kunneth", g, equivariant.p_sl2_sigma_kunneth(g, order),
                    equivariant.p_sl2_sigma(g, order).value)


def _incidence_sum(g):
    return spaces.projective_space(2 * g - 3) * spaces.projective_space(2 * g - 4)


CHECKS: List[Tuple[str, Callable[[int], Optional[CheckResult]]]] = [
    ("route_equality", _equality_check("route_equality", ip_m_closed, ip_m_pipeline)),
    ("degree_law_pipeline", _law_check("degree_law_pipeline", ip_m_pipeline)),
    ("degree_law_closed", _law_check("degree_law_closed", ip_m_closed)),
    ("table_match", _check_table),
    ("truncation_stability", _check_truncation_stability),
    ("r1ss_nonnegative", _check_nonneg_r1),
    ("ip_p_upsilon_two_path", _equality_check(
        "ip_p_upsilon_two_path", blowup.ip_p_upsilon, blowup.ip_p_upsilon_pipeline)),
    ("ip_upsilon_two_path", _equality_check(
        "ip_upsilon_two_path", blowup.ip_upsilon, blowup.ip_upsilon_pipeline)),
    ("correction2_closed", _equality_check(
        "correction2_closed", blowup.correction_theorem2_closed, blowup.correction_theorem2)),
    ("correction3_closed", _equality_check(
        "correction3_closed", blowup.correction_theorem3_closed, blowup.correction_theorem3)),
    ("e_ss_closed", _equality_check(
        "e_ss_closed", equivariant.p_sl2_e_ss_closed, equivariant.p_sl2_e_ss)),
    ("e2_ss_closed", _equality_check(
        "e2_ss_closed", equivariant.p_sl2_e2_ss_closed, equivariant.p_sl2_e2_ss)),
    ("incidence_sum", _equality_check(
        "incidence_sum", _incidence_sum, lambda g: spaces.incidence_split(g).total())),
    ("sigma_kunneth", _check_sigma),
    ("upsilon_ss_local_blowup", _check_upsilon_ss_consistency),
]


def verify_genus(g: int) -> List[CheckResult]:
    """Run every registered cross-check for one genus.

    Failures, including arithmetic or law violations raised while computing
    a check, are returned as failed :class:`CheckResult` entries.
    """
    g = int(Genus(g))
    results = []
    for name, check in CHECKS:
        try:
            r = check(g)
        except (ArithmeticFailure, CheckFailure) as exc:
            r = CheckResult(name, g, False, f"{type(exc).__name__}: {exc}",
                            index=getattr(exc, "degree", None))
        if r is not None:
            results.append(r)
    return results
