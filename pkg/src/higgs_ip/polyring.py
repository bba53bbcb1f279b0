"""Exact univariate arithmetic over the integers in a single variable ``t``.

Polynomials are dense tuples of Python ints (index ``i`` is the coefficient
of ``t^i``).  Rational functions are unreduced numerator/denominator pairs;
sums are taken over a shared denominator and collapsed once, at the end, by
:func:`exact_div`.  A failed collapse raises :class:`NotDivisible`, which is
the main signal that a formula was transcribed wrongly.

    >>> p = Polynomial([1, 0, 1])
    >>> p * Polynomial([1, 0, -1])
    Polynomial([1, 0, 0, 0, -1])
    >>> exact_div(Polynomial.one() - Polynomial.monomial(8), Polynomial([1, 0, 0, 0, -1]))
    Polynomial([1, 0, 0, 0, 1])
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .errors import NegativeCoefficient, NonIntegerCoefficient, NotDivisible

#: Degree of the zero polynomial.  Behaves correctly under ``+`` with integers
#: (deg(0 * p) = -inf) and can never be mistaken for a real index.
ZERO_DEGREE = float("-inf")


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be ints, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def constant(cls, c: int):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        """``c * t^k``."""
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative degree")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return format_text(self)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int):
        """Multiply by ``t^k``."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def truncate(self, order: int):
        """Keep the coefficients of ``t^0 .. t^order`` (inclusive)."""
        return Polynomial(self.coeffs[: max(order + 1, 0)])

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def padded(self, length: int) -> list:
        """Coefficient list of exactly ``length`` entries (zero padded)."""
        if length < len(self.coeffs):
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant(x)
    return NotImplemented


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return Polynomial(out)


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a.coeffs or not b.coeffs:
        return Polynomial()
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    ac = a.coeffs
    out = [0] * (len(ac) + len(b.coeffs) - 1)
    # the shorter factor drives the outer loop; most of our factors are sparse
    for j, bj in enumerate(b.coeffs):
        if not bj:
            continue
        for i, ai in enumerate(ac):
            if ai:
                out[i + j] += ai * bj
    return Polynomial(out)


def divmod_poly(a: Polynomial, b: Polynomial):
    """Integer long division from the top.

    Returns ``(q, r)`` with ``a == b*q + r`` and ``deg r < deg b``.  Raises
    :class:`NotDivisible` if some quotient coefficient is not an integer,
    since then no integral ``q`` exists.
    """
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lead = bc[-1]
    if len(rem) <= db:
        return Polynomial(), a
    q = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        qk, r = divmod(c, lead)
        if r:
            raise NotDivisible(a, b, Polynomial(rem))
        q[k - db] = qk
        for j in range(db + 1):
            rem[k - db + j] -= qk * bc[j]
    return Polynomial(q), Polynomial(rem[:db])


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = divmod_poly(a, b)
    if r:
        raise NotDivisible(a, b, r)
    return q


def divides(b: Polynomial, a: Polynomial) -> bool:
    try:
        exact_div(a, b)
    except NotDivisible:
        return False
    return True


def truncate_below(p: Polynomial, cutoff: int) -> Polynomial:
    """Keep the coefficients of ``t^i`` for ``i < cutoff``."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    return Polynomial(p.coeffs[:cutoff])


def one_minus_t(k: int) -> Polynomial:
    """``1 - t^k``; for ``k == 0`` this is the zero polynomial."""
    return Polynomial.one() - Polynomial.monomial(k)


def geometric_sum(k: int, step: int = 2) -> Polynomial:
    """``1 + t^step + ... + t^(step*k)``; the empty sum (zero) for ``k < 0``."""
    if k < 0:
        return Polynomial()
    out = [0] * (step * k + 1)
    out[::step] = [1] * (k + 1)
    return Polynomial(out)


def geometric_quotient(a_exp: int, b_exp: int) -> Polynomial:
    """``(1 - t^a_exp) / (1 - t^b_exp)`` as a polynomial.

    >>> geometric_quotient(8, 2)
    Polynomial([1, 0, 1, 0, 1, 0, 1])
    """
    if a_exp <= 0 or b_exp <= 0:
        raise ValueError("exponents must be positive")
    if a_exp % b_exp:
        raise NotDivisible(one_minus_t(a_exp), one_minus_t(b_exp),
                           divmod_poly(one_minus_t(a_exp), one_minus_t(b_exp))[1])
    return geometric_sum(a_exp // b_exp - 1, b_exp)


def binomial_power(sign: int, exponent: int) -> Polynomial:
    """``(1 + sign*t)^exponent`` with exact binomial coefficients."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return Polynomial(comb(exponent, k) * sign**k for k in range(exponent + 1))


@dataclass(frozen=True)
class SplitSeries:
    """Invariant (``plus``) and anti-invariant (``minus``) Betti series under Z/2."""

    plus: Polynomial
    minus: Polynomial

    def __post_init__(self):
        for part, p in (("plus", self.plus), ("minus", self.minus)):
            for i, c in enumerate(p.coeffs):
                if c < 0:
                    raise NegativeCoefficient(i, c, f"{part} part of a split series")

    def total(self) -> Polynomial:
        return self.plus + self.minus

    def truncate(self, order: int):
        return SplitSeries(self.plus.truncate(order), self.minus.truncate(order))


Scalar = Union[int, Polynomial]


class RationalFunction:
    """``num / den`` with integer polynomial parts.

    No gcd reduction is done.  The only normalisation is a positive leading
    coefficient on the denominator, so ``1/(1-t^2)`` is stored as
    ``-1/(t^2-1)``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Scalar = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.coeffs[-1] < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFunction(a + c, b)
        # reuse a denominator that already contains the other one
        if b.degree >= d.degree:
            q = _try_div(b, d)
            if q is not None:
                return RationalFunction(a + c * q, b)
        else:
            q = _try_div(d, b)
            if q is not None:
                return RationalFunction(a * q + c, d)
        return RationalFunction(a * d + c * b, b * d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return other
        return other / self

    def to_polynomial(self) -> Polynomial:
        return ratfunc_normalize_to_poly(self)

    def series(self, order: int, context: str = "") -> Polynomial:
        return series_expand(self, order, context)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant(x)
    raise TypeError(f"expected Polynomial or int, got {type(x).__name__}")


def _as_rational(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial) or (isinstance(x, int) and not isinstance(x, bool)):
        return RationalFunction(x)
    return NotImplemented


def _try_div(a, b):
    try:
        return exact_div(a, b)
    except NotDivisible:
        return None


def ratfunc_normalize_to_poly(r: RationalFunction) -> Polynomial:
    return exact_div(r.num, r.den)


def series_expand(r: RationalFunction, order: int, context: str = "") -> Polynomial:
    """Power series of ``r`` about ``t = 0`` through ``t^order`` (inclusive).

    The recurrence runs in exact rationals, so a denominator such as
    ``4(1+t^2)`` is fine; every produced coefficient must nevertheless be an
    integer, otherwise :class:`NonIntegerCoefficient` is raised.
    """
    if order < 0:
        return Polynomial()
    den = r.den.coeffs
    d0 = den[0] if den else 0
    if not d0:
        raise ZeroDivisionError("denominator vanishes at t = 0; no power series")
    num = r.num
    out: list = []
    unit = d0 in (1, -1)
    for k in range(order + 1):
        acc = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            dj = den[j]
            if dj:
                acc -= dj * out[k - j]
        if unit:
            out.append(acc * d0)
        else:
            out.append(Fraction(acc, d0) if isinstance(acc, int) else acc / d0)
    if unit:
        return Polynomial(out)
    coeffs = []
    for k, c in enumerate(out):
        if c.denominator != 1:
            raise NonIntegerCoefficient(k, c, context)
        coeffs.append(int(c))
    return Polynomial(coeffs)


def format_text(p: Polynomial, var: str = "t") -> str:
    """Human-readable form, e.g. ``1 + t^2 + 17 t^4``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            term = mono if mag == 1 else f"{mag} {mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def format_latex(p: Polynomial, var: str = "t") -> str:
    """LaTeX form, e.g. ``1+t^{2}+17t^{4}``."""
    if p.is_zero():
        return "0"
    out = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{{{i}}}"
            term = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + term)
    return "".join(out)
