"""Exact integer-coefficient polynomials and shape tests for coefficient sequences.

Everything here is pure and exact: coefficients are Python ints, rationals
appear only inside the Sturm real-root count.  Values are immutable after
construction, so they are safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    NonExactDivision,
    NotPalindromic,
    PreconditionViolated,
    ZeroPolynomial,
)


@dataclass(frozen=True)
class IntPoly:
    """A dense polynomial over the integers.

    ``coeffs[k]`` holds the coefficient of X^k.  Trailing zeros are stripped,
    so the zero polynomial is the empty tuple and ``degree == len - 1`` for
    nonzero polynomials.

    >>> IntPoly([1, 1]) * IntPoly([1, 1])
    IntPoly((1, 2, 1))
    >>> IntPoly([1, 2, 0, 0])
    IntPoly((1, 2))
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Least exponent with a nonzero coefficient."""
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no lowest term")
        return next(k for k, c in enumerate(self.coeffs) if c)

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def evaluate(self, x):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by X^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union[int, "IntPoly"]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return div_exact(self, other)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    # -- constructors / serialization ---------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_json(cls, strings: Iterable[Union[str, int]]) -> "IntPoly":
        return cls(int(s) for s in strings)

    def to_json(self) -> list[str]:
        """Decimal strings, lowest degree first, so precision survives transport."""
        return [str(c) for c in self.coeffs]


PolyLike = Union[IntPoly, Sequence[int]]


def as_poly(f: PolyLike) -> IntPoly:
    """Coerce a coefficient sequence (lowest degree first) to an IntPoly."""
    return f if isinstance(f, IntPoly) else IntPoly(f)


def binomial_power(k: int) -> IntPoly:
    """(1 + X)^k via the binomial row."""
    if k < 0:
        raise ValueError("negative exponent")
    return IntPoly(math.comb(k, i) for i in range(k + 1))


def div_exact(f: PolyLike, g: PolyLike) -> IntPoly:
    """Exact quotient f / g over the integers.

    Raises NonExactDivision when g does not divide f exactly (any remainder
    coefficient nonzero, or a leading-coefficient division leaves a rest).

    >>> div_exact([-1, 0, 1], [-1, 1])
    IntPoly((1, 1))
    """
    f, g = as_poly(f), as_poly(g)
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return f
    if f.degree < g.degree:
        raise NonExactDivision(f"degree {f.degree} < divisor degree {g.degree}")
    rem = list(f.coeffs)
    lead = g.coeffs[-1]
    dg = g.degree
    quot = [0] * (f.degree - dg + 1)
    for k in range(f.degree - dg, -1, -1):
        top = rem[k + dg]
        q, r = divmod(top, lead)
        if r:
            raise NonExactDivision(f"coefficient {top} not divisible by {lead}")
        if q:
            quot[k] = q
            for j, c in enumerate(g.coeffs):
                rem[k + j] -= q * c
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return IntPoly(quot)


# -- sequence shape tests ----------------------------------------------------


def is_unimodal(f: PolyLike) -> bool:
    """True iff the coefficients weakly rise then weakly fall.

    The zero polynomial and constants are unimodal (vacuous peak).
    """
    a = as_poly(f).coeffs
    i = 0
    while i + 1 < len(a) and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < len(a) and a[i] >= a[i + 1]:
        i += 1
    return i >= len(a) - 1


def mode(f: PolyLike) -> int | None:
    """Least peak index of a unimodal polynomial; None when not unimodal.

    Also None for the zero polynomial, which is unimodal but has no
    coefficient index.
    """
    a = as_poly(f).coeffs
    if not a or not is_unimodal(a):
        return None
    j = len(a) - 1
    while j > 0 and a[j - 1] >= a[j]:
        j -= 1
    return j


def is_nonnegative(f: PolyLike) -> bool:
    return all(c >= 0 for c in as_poly(f).coeffs)


def is_log_concave(f: PolyLike) -> bool:
    """a_k^2 >= a_{k-1} * a_{k+1} for all internal indices of the stored sequence."""
    a = as_poly(f).coeffs
    return all(a[k] * a[k] >= a[k - 1] * a[k + 1] for k in range(1, len(a) - 1))


def is_palindromic(f: PolyLike, n: int) -> bool:
    """True iff a_k = a_{n-k} for 0 <= k <= n (center n/2).

    The center is an explicit parameter because symmetric polynomials whose
    support starts above 0 (e.g. X^2 + X^3) have centers beyond deg/2.
    """
    if n < 0:
        raise ValueError("center parameter must be nonnegative")
    p = as_poly(f)
    if p.degree > n:
        return False
    a = list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))
    return a == a[::-1]


def darga(f: PolyLike) -> int:
    """Sum of the lowest and the highest exponents carrying nonzero coefficients."""
    p = as_poly(f)
    if p.is_zero:
        raise ZeroPolynomial("darga of the zero polynomial is undefined")
    return p.low_degree + p.degree


def is_darga_palindromic(f: PolyLike) -> bool:
    """Symmetric about darga/2, i.e. a_k = a_{darga - k}."""
    return is_palindromic(f, darga(f))


# -- gamma decomposition -----------------------------------------------------


@dataclass(frozen=True)
class GammaVector:
    """Coordinates of a palindromic polynomial in the X^k (1+X)^(n-2k) basis.

    ``center`` stores n, i.e. twice the palindromic center.
    """

    gammas: tuple[int, ...]
    center: int

    @property
    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self) -> IntPoly:
        total = IntPoly.zero()
        for k, g in enumerate(self.gammas):
            if g:
                total = total + binomial_power(self.center - 2 * k).shift(k) * g
        return total


def gamma_decompose(f: PolyLike, n: int) -> GammaVector:
    """Unique gamma-vector of a polynomial palindromic with center n/2.

    Solves the unitriangular change of basis by peeling the basis elements
    off the low-degree coefficients; integer inputs yield integer gammas
    because the basis change is unimodular over the integers.
    """
    if n < 0:
        raise ValueError("center parameter must be nonnegative")
    p = as_poly(f)
    if not is_palindromic(p, n):
        raise NotPalindromic(f"not palindromic with center {n}/2: {p.coeffs}")
    residual = list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))
    gammas = []
    for k in range(n // 2 + 1):
        g = residual[k]
        gammas.append(g)
        if g:
            for t in range(n - 2 * k + 1):
                residual[k + t] -= g * math.comb(n - 2 * k, t)
    assert not any(residual), "palindromic input must be exhausted exactly"
    return GammaVector(tuple(gammas), n)


def is_gamma_nonnegative(f: PolyLike, n: int) -> bool:
    return gamma_decompose(f, n).is_nonnegative


# -- exact real-rootedness via Sturm sequences --------------------------------


def _to_fractions(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _frac_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _frac_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = num[:]
    _frac_trim(num)
    dd = len(den) - 1
    lead = den[-1]
    while num and len(num) - 1 >= dd:
        q = num[-1] / lead
        dn = len(num) - 1
        for j in range(dd + 1):
            num[dn - dd + j] -= q * den[j]
        num.pop()
        _frac_trim(num)
    return num


def _scale_to_ints(a: list[Fraction]) -> IntPoly:
    """Clear denominators and divide by the positive content; sign preserved."""
    if not a:
        return IntPoly.zero()
    denom = math.lcm(*(c.denominator for c in a))
    ints = [int(c * denom) for c in a]
    g = math.gcd(*ints)
    return IntPoly(c // g for c in ints)


def _primitive_from_fractions(a: list[Fraction]) -> IntPoly:
    """Primitive integer form with positive leading coefficient."""
    p = _scale_to_ints(a)
    if not p.is_zero and p.coeffs[-1] < 0:
        return -p
    return p


def _poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive integer gcd with positive leading coefficient."""
    a, b = _to_fractions(p), _to_fractions(q)
    while _frac_trim(b):
        a, b = b, _frac_rem(a, b)
    return _primitive_from_fractions(a)


def square_free_part(f: PolyLike) -> IntPoly:
    """f divided by gcd(f, f'); same root set, all roots simple."""
    p = as_poly(f)
    if p.is_zero:
        raise ZeroPolynomial("square-free part of zero is undefined")
    if p.degree < 1:
        return IntPoly.one()
    g = _poly_gcd(p, p.derivative())
    return div_exact(p, g)


def _sign_variations(values: Iterable[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_chain(f: PolyLike) -> list[IntPoly]:
    """Standard Sturm sequence p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).

    Each member is rescaled by a positive rational to integer form; positive
    scaling never changes sign variations, and keeping the sign of the
    remainder itself is what makes the chain a Sturm chain.
    """
    p = as_poly(f)
    if p.is_zero:
        raise ZeroPolynomial("Sturm chain of zero is undefined")
    chain = [p]
    if p.degree >= 1:
        chain.append(p.derivative())
        while chain[-1].degree >= 1:
            rem = _frac_rem(_to_fractions(chain[-2]), _to_fractions(chain[-1]))
            nxt = _scale_to_ints(rem)
            if nxt.is_zero:
                break
            chain.append(-nxt)
    return chain


def count_distinct_real_roots(f: PolyLike) -> int:
    """Exact count of distinct real roots (Sturm, Cauchy bound, rationals only)."""
    p = as_poly(f)
    if p.is_zero:
        raise ZeroPolynomial("root count of zero is undefined")
    if p.degree == 0:
        return 0
    g = square_free_part(p)
    if g.degree == 0:
        return 0
    chain = sturm_chain(g)
    bound = Fraction(1) + Fraction(max(abs(c) for c in g.coeffs[:-1]), abs(g.coeffs[-1]))
    lo = _sign_variations(q.evaluate(-bound) for q in chain)
    hi = _sign_variations(q.evaluate(bound) for q in chain)
    return lo - hi


def is_real_rooted(f: PolyLike) -> bool:
    """True iff every complex root is real; decided exactly.

    Repeated roots are handled by reducing to the square-free part first:
    f is real-rooted iff its square-free part has as many distinct real
    roots as its degree.
    """
    p = as_poly(f)
    if p.is_zero:
        raise ZeroPolynomial("real-rootedness of zero is undefined")
    if p.degree <= 1:
        return True
    g = square_free_part(p)
    return count_distinct_real_roots(g) == g.degree


# -- nondecreasing-coefficient shift test -------------------------------------


def boros_moll_P(m: int, r: int) -> IntPoly:
    """(1 + X)^(m+1) - (1 + X)^r for 0 <= r <= m.

    >>> boros_moll_P(1, 0)
    IntPoly((0, 2, 1))
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    return binomial_power(m + 1) - binomial_power(r)


def _require_nonneg_nondecreasing(p: IntPoly) -> None:
    a = p.coeffs
    if a and a[0] < 0:
        raise PreconditionViolated("negative coefficient at index 0")
    for k in range(1, len(a)):
        if a[k] < a[k - 1]:
            raise PreconditionViolated(f"coefficients decrease at index {k}")


def shift_by_one(f: PolyLike) -> IntPoly:
    """f(X + 1) by exact binomial expansion (Horner in X + 1)."""
    p = as_poly(f)
    one_plus_x = IntPoly((1, 1))
    acc = IntPoly.zero()
    for c in reversed(p.coeffs):
        acc = acc * one_plus_x + IntPoly((c,))
    return acc


def shifted_is_unimodal(f: PolyLike) -> bool:
    """Test unimodality of f(X+1) for f with nonnegative nondecreasing coefficients.

    The hypothesis guarantees the answer is True; the precondition is checked,
    not assumed, and its violation raises PreconditionViolated.
    """
    p = as_poly(f)
    _require_nonneg_nondecreasing(p)
    return is_unimodal(shift_by_one(p))


def decompose_shift(f: PolyLike) -> tuple[int, ...]:
    """First-difference weights (a_0, a_1 - a_0, ..., a_n - a_{n-1}).

    For nonnegative nondecreasing f these are the nonnegative weights in the
    exact identity X * f(X+1) = sum_k (a_k - a_{k-1}) * P_{n,k}(X) with
    P from :func:`boros_moll_P`.
    """
    p = as_poly(f)
    _require_nonneg_nondecreasing(p)
    a = p.coeffs
    return tuple(a[k] - (a[k - 1] if k else 0) for k in range(len(a)))


# -- nondecreasing weight families --------------------------------------------
#
# Each builder returns the polynomial sum_j w_j X^j for a weight family that
# is nonnegative and nondecreasing, so shifted_is_unimodal applies and the
# binomial transform a_k = sum_{j>=k} w_j C(j, k) (the coefficients of
# f(X+1)) is unimodal.


def geometric_weight_poly(base: int, m: int) -> IntPoly:
    """Weights w_j = base^j for j = 0..m (base >= 1)."""
    if base < 1 or m < 0:
        raise ValueError("need base >= 1 and m >= 0")
    return IntPoly(base**j for j in range(m + 1))


def power_weight_poly(exponent: int, m: int) -> IntPoly:
    """Weights w_j = j^exponent for j = 0..m (exponent >= 1)."""
    if exponent < 1 or m < 0:
        raise ValueError("need exponent >= 1 and m >= 0")
    return IntPoly(j**exponent for j in range(m + 1))


def self_power_weight_poly(m: int) -> IntPoly:
    """Weights w_j = j^j for j = 0..m, with 0^0 = 1."""
    if m < 0:
        raise ValueError("need m >= 0")
    return IntPoly(j**j for j in range(m + 1))


def binomial_product_weight_poly(factors: Sequence[tuple[int, int]], m: int) -> IntPoly:
    """Weights w_j = prod_i C(a_i * m, j)^{n_i} for factor list [(a_i, n_i)].

    Requires 2 < a_1 < a_2 < ... and positive n_i, which keeps the weights
    nondecreasing on j <= m.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    prev = 2
    for a, n in factors:
        if a <= prev or n < 1:
            raise ValueError("factor bases must satisfy 2 < a_1 < a_2 < ... with n_i >= 1")
        prev = a
    weights = []
    for j in range(m + 1):
        w = 1
        for a, n in factors:
            w *= math.comb(a * m, j) ** n
        weights.append(w)
    return IntPoly(weights)
