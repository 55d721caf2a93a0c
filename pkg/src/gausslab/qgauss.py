"""q-integers, q-factorials, and Gaussian polynomials by four independent routes.

The routes are: an exact polynomial quotient, the q-Pascal recurrence, direct
enumeration of box partitions by weight, and a sum over multiplicity vectors
that rebuilds the polynomial from smaller Gaussian factors.  Cross-validating
all four is the point of this module.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import injectlab
from .errors import NegativeArgument, NegativeExponent
from .polycore import IntPoly, darga, div_exact

DEFAULT_ENUMERATION_BUDGET = injectlab.DEFAULT_ENUMERATION_BUDGET


def q_int(k: int) -> IntPoly:
    """1 + X + ... + X^(k-1); the zero polynomial for k = 0.

    >>> q_int(3)
    IntPoly((1, 1, 1))
    """
    if k < 0:
        raise ValueError("q_int needs k >= 0")
    return IntPoly([1] * k)


def q_factorial(k: int) -> IntPoly:
    """Product of q_int(m) for m = 1..k, with q_factorial(0) = 1.

    The product runs through m = k (not k - 1), the convention under which
    the quotient definition of the Gaussian polynomial specializes to the
    binomial coefficients at X = 1.
    """
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    out = IntPoly.one()
    for m in range(1, k + 1):
        out = out * q_int(m)
    return out


def gaussian_quotient(a: int, b: int) -> IntPoly:
    """prod_{i=1..b} (X^(a+i) - 1) / prod_{j=1..b} (X^j - 1), divided exactly.

    The division is performed incrementally, so every intermediate value is
    itself a Gaussian polynomial; a nonzero remainder anywhere would be an
    implementation bug and surfaces as a hard error.
    """
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    out = IntPoly.one()
    for i in range(1, b + 1):
        numerator = out * (IntPoly.monomial(a + i) - IntPoly.one())
        out = div_exact(numerator, IntPoly.monomial(i) - IntPoly.one())
    return out


_pascal_cache: dict[tuple[int, int], IntPoly] = {}
_pascal_lock = threading.Lock()


def gaussian_pascal(a: int, b: int) -> IntPoly:
    """Same polynomial via the recurrence G(a,b) = G(a-1,b) + X^a G(a,b-1).

    Memoized; the table is filled under a lock and entries are immutable, so
    concurrent readers are safe.
    """
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    if a == 0 or b == 0:
        return IntPoly.one()
    key = (a, b)
    cached = _pascal_cache.get(key)
    if cached is not None:
        return cached
    with _pascal_lock:
        # Iterative fill keeps recursion depth flat for large boxes; the
        # ascending order guarantees both neighbours are already present.
        for aa in range(1, a + 1):
            for bb in range(1, b + 1):
                if (aa, bb) in _pascal_cache:
                    continue
                left = _pascal_cache[(aa - 1, bb)] if aa > 1 else IntPoly.one()
                down = _pascal_cache[(aa, bb - 1)] if bb > 1 else IntPoly.one()
                _pascal_cache[(aa, bb)] = left + down.shift(aa)
        return _pascal_cache[key]


def level_counts(
    a: int, b: int, budget: Optional[int] = DEFAULT_ENUMERATION_BUDGET
) -> list[int]:
    """(c_0, ..., c_ab): partitions in the (a, b) box counted by weight.

    Computed by direct enumeration; equals the coefficient sequence of
    gaussian_quotient(a, b) and is palindromic.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    counts = [0] * (a * b + 1)
    for p in injectlab.enumerate_box(a, b, budget):
        counts[p.weight] += 1
    return counts


# -- multiplicity vectors and term assembly -------------------------------------


@dataclass(frozen=True)
class MultiplicityVector:
    """(d_1, ..., d_b) with sum of i * d_i equal to b."""

    d: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        if len(self.d) != self.b:
            raise ValueError(f"expected {self.b} entries, got {len(self.d)}")
        if any(x < 0 for x in self.d):
            raise ValueError(f"negative multiplicity in {self.d}")
        total = sum((i + 1) * x for i, x in enumerate(self.d))
        if total != self.b:
            raise ValueError(f"weighted sum {total} != {self.b} for {self.d}")


def koh_multiplicity_vectors(b: int) -> tuple[MultiplicityVector, ...]:
    """All solutions of sum i*d_i = b; one per integer partition of b."""
    if b < 1:
        raise ValueError("need b >= 1")
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, acc: list[int]) -> None:
        if i == 0:
            if remaining == 0:
                out.append(tuple(acc[::-1]))
            return
        for cnt in range(remaining // i + 1):
            acc.append(cnt)
            rec(i - 1, remaining - cnt * i, acc)
            acc.pop()

    rec(b, b, [])
    return tuple(MultiplicityVector(d, b) for d in sorted(out))


class ArgRule(enum.Enum):
    """Which argument formula feeds the per-factor box widths.

    STATED is the formula exactly as printed in the source identity;
    CALIBRATED is the corrected formula selected by
    :func:`calibrate_argument_rule` against the enumeration oracle.
    """

    STATED = "stated"
    CALIBRATED = "calibrated"


ArgumentFormula = Callable[[int, int, Sequence[int], int], int]


def _argument_tail(d: Sequence[int], b: int, i: int) -> int:
    # sum over j = 0..i-1 of 2 (i - j) d_{b-j}, with d_1-based entries in d[0..b-1]
    return sum(2 * (i - j) * d[b - 1 - j] for j in range(i))


def stated_argument(a: int, b: int, d: Sequence[int], i: int) -> int:
    """Printed width formula: (b - i) * b - 2i + tail."""
    return (b - i) * b - 2 * i + _argument_tail(d, b, i)


def minimal_edit_argument(a: int, b: int, d: Sequence[int], i: int) -> int:
    """First calibration candidate: a - 2i + tail (a for the printed leading term)."""
    return a - 2 * i + _argument_tail(d, b, i)


def calibrated_argument(a: int, b: int, d: Sequence[int], i: int) -> int:
    """Second calibration candidate: (b - i) * a - 2i + tail (b -> a in the leading product).

    This is the rule the calibration harness selects; every term it builds is
    darga-palindromic with darga a*b, as the inductive argument requires.
    """
    return (b - i) * a - 2 * i + _argument_tail(d, b, i)


CALIBRATION_CANDIDATES: tuple[tuple[str, ArgumentFormula], ...] = (
    ("keep-leading-term-drop-b", minimal_edit_argument),
    ("leading-b-to-a", calibrated_argument),
)

ARGUMENT_FORMULAS: dict[ArgRule, ArgumentFormula] = {
    ArgRule.STATED: stated_argument,
    ArgRule.CALIBRATED: calibrated_argument,
}


def koh_exponent(dv: MultiplicityVector) -> int:
    """b * (sum d_i) - b - sum_{i<j} (j - i) d_i d_j; the monomial prefactor power."""
    d, b = dv.d, dv.b
    cross = sum(
        (j - i) * d[i - 1] * d[j - 1]
        for i in range(1, b + 1)
        for j in range(i + 1, b + 1)
    )
    return b * sum(d) - b - cross


@dataclass(frozen=True)
class KohTerm:
    """One assembled summand: X^exponent times a product of Gaussian factors.

    ``factors`` records the raw (a_i, b_i) pairs produced by the argument
    rule, including any negative a_i.  A factor with b_i = 0 contributes 1;
    a factor with b_i > 0 and a_i < 0 is the zero polynomial (no partitions
    fit a negative-width box), which makes the whole term vanish.  Vanishing
    terms stay in the breakdown with their offending indices recorded; they
    are never silently dropped.
    """

    multiplicities: tuple[int, ...]
    exponent: int
    factors: tuple[tuple[int, int], ...]
    poly: IntPoly
    darga: Optional[int]
    negative_factor_indexes: tuple[int, ...] = ()

    @property
    def vanishes(self) -> bool:
        return self.poly.is_zero

    def to_json_dict(self) -> dict:
        return {
            "multiplicities": list(self.multiplicities),
            "exponent": self.exponent,
            "factors": [list(f) for f in self.factors],
            "darga": self.darga,
            "coefficients": self.poly.to_json(),
            "negative_factor_indexes": list(self.negative_factor_indexes),
        }


def _resolve_argument(rule, argument: Optional[ArgumentFormula]) -> ArgumentFormula:
    if argument is not None:
        return argument
    if isinstance(rule, ArgRule):
        return ARGUMENT_FORMULAS[rule]
    raise ValueError(f"unknown argument rule {rule!r}")


def koh_terms(
    a: int,
    b: int,
    rule: ArgRule = ArgRule.CALIBRATED,
    *,
    argument: Optional[ArgumentFormula] = None,
    on_negative: str = "zero",
) -> list[KohTerm]:
    """Assemble one term per multiplicity vector.

    ``on_negative`` controls factors whose width a_i goes negative while
    b_i > 0: "zero" (default) values them as the zero polynomial and keeps
    the flagged term in the breakdown; "error" raises NegativeArgument.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if on_negative not in ("zero", "error"):
        raise ValueError("on_negative must be 'zero' or 'error'")
    arg = _resolve_argument(rule, argument)
    terms = []
    for dv in koh_multiplicity_vectors(b):
        exponent = koh_exponent(dv)
        if exponent < 0:
            raise NegativeExponent(
                f"exponent {exponent} for multiplicities {dv.d} in box ({a},{b})"
            )
        pairs = []
        negatives = []
        for i in range(b):
            a_i = arg(a, b, dv.d, i)
            b_i = dv.d[b - 1 - i]
            pairs.append((a_i, b_i))
            if b_i > 0 and a_i < 0:
                negatives.append(i)
        if negatives and on_negative == "error":
            raise NegativeArgument(
                f"negative factor width(s) at indexes {negatives} for"
                f" multiplicities {dv.d} in box ({a},{b}): {pairs}"
            )
        if negatives:
            poly = IntPoly.zero()
        else:
            poly = IntPoly.one()
            for a_i, b_i in pairs:
                if b_i > 0:
                    poly = poly * gaussian_pascal(a_i, b_i)
            poly = poly.shift(exponent)
        terms.append(
            KohTerm(
                dv.d,
                exponent,
                tuple(pairs),
                poly,
                None if poly.is_zero else darga(poly),
                tuple(negatives),
            )
        )
    return terms


def koh_sum(
    a: int,
    b: int,
    rule: ArgRule = ArgRule.CALIBRATED,
    *,
    argument: Optional[ArgumentFormula] = None,
    on_negative: str = "zero",
) -> tuple[IntPoly, list[KohTerm]]:
    """The assembled sum plus its per-term breakdown."""
    terms = koh_terms(a, b, rule, argument=argument, on_negative=on_negative)
    total = IntPoly.zero()
    for term in terms:
        total = total + term.poly
    return total, terms


def calibrate_argument_rule(
    max_a: int = 6,
    max_b: int = 6,
    candidates: tuple[tuple[str, ArgumentFormula], ...] = CALIBRATION_CANDIDATES,
) -> tuple[str, ArgumentFormula]:
    """First candidate formula whose sums match the enumeration oracle everywhere.

    Candidates are tried in order on every box with 1 <= a <= max_a,
    1 <= b <= max_b; a candidate is disqualified by any mismatch.
    """
    oracle = {
        (a, b): level_counts(a, b)
        for a in range(1, max_a + 1)
        for b in range(1, max_b + 1)
    }
    for name, formula in candidates:
        if all(
            list(koh_sum(a, b, argument=formula)[0].coeffs) == counts
            for (a, b), counts in oracle.items()
        ):
            return name, formula
    raise RuntimeError("no candidate argument formula matches the enumeration oracle")
