"""Three-interval exchange words, their binary projections, and bound checks.

The transformation acts on [0, ell) with three half-open intervals

    I_A = [0, ell - 1 + eps),  I_B = [ell - 1 + eps, eps),  I_C = [eps, ell),

translating by 1 - eps, 1 - 2*eps and -eps respectively; parameters must
satisfy max(eps, 1 - eps) < ell < 1 with eps irrational.  The word coding an
orbit projects onto two rotation-coded binary words (B split as 01 or 10),
and those two projections recombine uniquely by the two-cursor ternarization
scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .exactreal import QuadraticReal, cf_expand
from .repetitions import word_index_estimate
from .sturmian import RotationParams, rotation_word
from .words import (
    BINARY,
    SPLIT_B01,
    SPLIT_B10,
    TERNARY,
    Word,
    is_balanced,
    rotation_coding_morphism,
)


@dataclass(frozen=True)
class ThreeIetParams:
    """Validated parameters (eps, ell, x0) of a three-interval exchange."""

    epsilon: QuadraticReal
    ell: QuadraticReal
    x0: QuadraticReal

    @property
    def boundary_ab(self) -> QuadraticReal:
        """Left endpoint of I_B, which is ell - 1 + eps."""
        return self.ell - 1 + self.epsilon

    @property
    def boundary_bc(self) -> QuadraticReal:
        """Left endpoint of I_C, which is eps."""
        return self.epsilon


def validate_params(
    epsilon: QuadraticReal, ell: QuadraticReal, x0: QuadraticReal
) -> ThreeIetParams:
    """Check the parameter constraints and package the triple."""
    if epsilon.is_rational:
        raise ParameterError("epsilon must be irrational (nonzero square-root part)")
    if not (epsilon.sign() > 0 and (epsilon - 1).sign() < 0):
        raise ParameterError("epsilon must lie in (0, 1)")
    one_minus = 1 - epsilon
    larger = epsilon if (epsilon - one_minus).sign() >= 0 else one_minus
    if (ell - larger).sign() <= 0:
        raise ParameterError(
            "ell must satisfy max(epsilon, 1 - epsilon) < ell < 1 "
            "(ell <= max(epsilon, 1 - epsilon))"
        )
    if (ell - 1).sign() >= 0:
        raise ParameterError(
            "ell must satisfy max(epsilon, 1 - epsilon) < ell < 1 (ell >= 1)"
        )
    if x0.sign() < 0 or (x0 - ell).sign() >= 0:
        raise ParameterError("x0 must lie in [0, ell)")
    return ThreeIetParams(epsilon, ell, x0)


def step(params: ThreeIetParams, x: QuadraticReal) -> tuple[str, QuadraticReal]:
    """One transformation step: interval letter and the next point."""
    if x.sign() < 0 or (x - params.ell).sign() >= 0:
        raise ParameterError("point outside the domain [0, ell)")
    eps = params.epsilon
    if (x - params.boundary_ab).sign() < 0:
        letter, nxt = "A", x + (1 - eps)
    elif (x - eps).sign() < 0:
        letter, nxt = "B", x + (1 - eps - eps)
    else:
        letter, nxt = "C", x - eps
    if nxt.sign() < 0 or (nxt - params.ell).sign() >= 0:
        raise ArithmeticError("orbit left the domain; parameters are inconsistent")
    return letter, nxt


def threeiet_word(params: ThreeIetParams, n_letters: int) -> Word:
    """The ternary word coding the orbit of x0.

    Equivalent to iterating ``step``, with the interval boundaries hoisted
    out of the loop; every visited point is still checked to stay inside
    [0, ell) by exact comparison.
    """
    if n_letters < 1:
        raise ParameterError("n_letters must be >= 1")
    eps = params.epsilon
    ell = params.ell
    b_ab = params.boundary_ab
    jump_a = 1 - eps
    jump_b = 1 - eps - eps
    letters = []
    x = params.x0
    for _ in range(n_letters):
        if (x - b_ab).sign() < 0:
            letters.append("A")
            x = x + jump_a
        elif (x - eps).sign() < 0:
            letters.append("B")
            x = x + jump_b
        else:
            letters.append("C")
            x = x - eps
        if x.sign() < 0 or (x - ell).sign() >= 0:
            raise ArithmeticError("orbit left the domain; parameters are inconsistent")
    return Word("".join(letters), TERNARY)


# ---------------------------------------------------------------------------
# ternarization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NotAmicable:
    """Returned (not raised) when two binary words have no common preimage."""

    position: int
    reason: str

    def __bool__(self):
        return False


def _require_binary(word: Word):
    if set(word.alphabet) != set(BINARY):
        raise ParameterError("ternarization needs binary words")


def _scan(first: str, second: str) -> tuple[list[str], int] | NotAmicable:
    """Two-cursor scan; returns (letters, consumed) up to the last complete
    alignment, or NotAmicable on a genuine mismatch."""
    out: list[str] = []
    i = 0
    n = min(len(first), len(second))
    while i < n:
        a, b = first[i], second[i]
        if a == "0" and b == "0":
            out.append("A")
            i += 1
        elif a == "1" and b == "1":
            out.append("C")
            i += 1
        elif a == "0" and b == "1":
            if i + 1 >= n:
                break  # a trailing half-pair; callers decide if that is fine
            if first[i + 1] == "1" and second[i + 1] == "0":
                out.append("B")
                i += 2
            else:
                return NotAmicable(i + 1, "pair (0,1) not followed by (1,0)")
        else:
            return NotAmicable(i, "pair (1,0) matches no letter image")
    return out, i


def ternarize(first: Word, second: Word):
    """The unique ternary word mapping to the pair, or NotAmicable.

    ``first`` plays the B -> 01 role and ``second`` the B -> 10 role; the
    relation is not symmetric.
    """
    _require_binary(first)
    _require_binary(second)
    if len(first) != len(second):
        return NotAmicable(min(len(first), len(second)), "length mismatch")
    result = _scan(first.text, second.text)
    if isinstance(result, NotAmicable):
        return result
    letters, consumed = result
    if consumed != len(first):
        return NotAmicable(consumed, "dangling unmatched tail")
    return Word("".join(letters), TERNARY)


def ternarize_prefix(first: Word, second: Word):
    """Prefix-tolerant ternarization.

    Trims a trailing half-completed B alignment instead of failing, so equal
    length prefixes of two amicable infinite words recombine; returns
    (word, consumed letters per input) or NotAmicable on a real mismatch.
    """
    _require_binary(first)
    _require_binary(second)
    result = _scan(first.text, second.text)
    if isinstance(result, NotAmicable):
        return result
    letters, consumed = result
    return Word("".join(letters), TERNARY), consumed


def is_amicable(first: Word, second: Word) -> bool:
    """Whether the pair has a ternarization (in this order)."""
    return not isinstance(ternarize(first, second), NotAmicable)


def rotation_coding_image(word: Word, k: int) -> Word:
    """Image under A -> 0, B -> 0 1^(k+1), C -> 0 1^k."""
    return rotation_coding_morphism(k)(word)


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjectionReport:
    """Checks tying a three-interval word to its two binary projections.

    The projections must recombine to the original word, certify as
    complexity n+1 and balanced (the finite-word certificates of being
    Sturmian), and the B -> 01 projection must equal the rotation word
    generated independently from the same parameters.
    """

    prefix_length: int
    certificate_depth: int
    roundtrip_ok: bool
    b01_complexity_ok: bool
    b01_balance_ok: bool
    b10_complexity_ok: bool
    b10_balance_ok: bool
    rotation_match: bool

    @property
    def passed(self) -> bool:
        return all(
            (
                self.roundtrip_ok,
                self.b01_complexity_ok,
                self.b01_balance_ok,
                self.b10_complexity_ok,
                self.b10_balance_ok,
                self.rotation_match,
            )
        )

    def to_json_dict(self) -> dict:
        return {
            "prefix_length": self.prefix_length,
            "certificate_depth": self.certificate_depth,
            "roundtrip_ok": self.roundtrip_ok,
            "b01_complexity_ok": self.b01_complexity_ok,
            "b01_balance_ok": self.b01_balance_ok,
            "b10_complexity_ok": self.b10_complexity_ok,
            "b10_balance_ok": self.b10_balance_ok,
            "rotation_match": self.rotation_match,
            "passed": self.passed,
        }


def verify_projections(
    params: ThreeIetParams, n_letters: int, depth: int
) -> ProjectionReport:
    """Generate a prefix and run the projection consistency checks."""
    word = threeiet_word(params, n_letters)
    b01 = SPLIT_B01(word)
    b10 = SPLIT_B10(word)
    if len(b01) < 20 * depth:
        raise ParameterError(
            f"projections of length {len(b01)} are too short for depth {depth}"
        )
    roundtrip = ternarize(b01, b10) == word

    def sturmian_certificates(image: Word) -> tuple[bool, bool]:
        complexity = all(
            image.factor_complexity(n) == n + 1 for n in range(1, depth + 1)
        )
        balance = is_balanced(image, depth).balanced
        return complexity, balance

    c01, bal01 = sturmian_certificates(b01)
    c10, bal10 = sturmian_certificates(b10)
    rot = rotation_word(
        RotationParams(1 - params.epsilon, params.epsilon, params.x0), len(b01)
    )
    return ProjectionReport(
        prefix_length=n_letters,
        certificate_depth=depth,
        roundtrip_ok=roundtrip,
        b01_complexity_ok=c01,
        b01_balance_ok=bal01,
        b10_complexity_ok=c10,
        b10_balance_ok=bal10,
        rotation_match=rot == b01,
    )


@dataclass(frozen=True)
class BoundReport:
    """Index bounds in terms of the largest partial quotient K of eps.

    The index of the infinite word lies in [floor(K/2), K+3] and integer
    powers never exceed K+2; the prefix estimate is a lower bound of the
    true index, so reaching floor(K/2) is a convergence witness rather
    than a pass/fail verdict.
    """

    prefix_length: int
    largest_coefficient: int
    lower: int
    upper: int
    index_estimate: Fraction
    max_power: int
    upper_ok: bool
    power_ok: bool
    lower_reached: bool

    @property
    def passed(self) -> bool:
        return self.upper_ok and self.power_ok

    def to_json_dict(self) -> dict:
        return {
            "prefix_length": self.prefix_length,
            "largest_coefficient": self.largest_coefficient,
            "lower": self.lower,
            "upper": self.upper,
            "index_num": self.index_estimate.numerator,
            "index_den": self.index_estimate.denominator,
            "max_integer_power": self.max_power,
            "upper_ok": self.upper_ok,
            "power_ok": self.power_ok,
            "lower_reached": self.lower_reached,
            "passed": self.passed,
        }


def bound_check(params: ThreeIetParams, n_letters: int) -> BoundReport:
    """Measure a prefix against the continued-fraction index bounds."""
    cf = cf_expand(params.epsilon, 8)
    if not cf.is_periodic:
        raise ParameterError(
            "the continued-fraction period of epsilon was not found; "
            "the largest coefficient would not be exact"
        )
    largest, _ = cf.max_coefficient()
    report = word_index_estimate(threeiet_word(params, n_letters))
    estimate = report.index_estimate
    lower = largest // 2
    upper = largest + 3
    return BoundReport(
        prefix_length=n_letters,
        largest_coefficient=largest,
        lower=lower,
        upper=upper,
        index_estimate=estimate,
        max_power=report.max_power,
        upper_ok=estimate <= upper,
        power_ok=report.max_power <= largest + 2,
        lower_reached=estimate >= lower,
    )
