"""Rotation-coded binary words, standard words, and their repetition formula.

The rotation coding writes letter 0 exactly when the orbit point falls in
[0, beta).  The two-interval exchange with parameter eps is the special
case alpha = 1 - eps, beta = eps; its distinguished fixed word of the same
slope is built from the standard-word recursion driven by the continued
fraction of eps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BlockParseError, InsufficientCoefficientsError, ParameterError
from .exactreal import CFExpansion, QuadraticReal
from .words import BINARY, Word


def _require_unit_interval(value: QuadraticReal, name: str, closed_left: bool):
    low = value.sign() >= 0 if closed_left else value.sign() > 0
    if not (low and (value - 1).sign() < 0):
        bracket = "[0, 1)" if closed_left else "(0, 1)"
        raise ParameterError(f"{name} must lie in {bracket}")


@dataclass(frozen=True)
class RotationParams:
    """Rotation by alpha with cut point beta, started at x0."""

    alpha: QuadraticReal
    beta: QuadraticReal
    x0: QuadraticReal

    def __post_init__(self):
        if self.alpha.is_rational:
            raise ParameterError("alpha must be irrational")
        _require_unit_interval(self.alpha, "alpha", closed_left=False)
        _require_unit_interval(self.beta, "beta", closed_left=False)
        _require_unit_interval(self.x0, "x0", closed_left=True)


@dataclass(frozen=True)
class SturmianParams:
    """Two-interval exchange parameters; letter 0 is emitted on [0, epsilon)."""

    epsilon: QuadraticReal
    x0: QuadraticReal

    def __post_init__(self):
        if self.epsilon.is_rational:
            raise ParameterError("epsilon must be irrational")
        _require_unit_interval(self.epsilon, "epsilon", closed_left=False)
        _require_unit_interval(self.x0, "x0", closed_left=True)


def rotation_word(params: RotationParams, n_letters: int) -> Word:
    """Letters u_i = 0 iff the fractional part of x0 + i*alpha lies in [0, beta)."""
    if n_letters < 1:
        raise ParameterError("n_letters must be >= 1")
    x = params.x0
    alpha = params.alpha
    beta = params.beta
    letters = []
    for _ in range(n_letters):
        letters.append("0" if (x - beta).sign() < 0 else "1")
        x = x + alpha
        if (x - 1).sign() >= 0:
            x = x - 1
    return Word("".join(letters), BINARY)


def sturmian_word(params: SturmianParams, n_letters: int) -> Word:
    """Coding of the orbit of x0 under the exchange of [0, eps) and [eps, 1)."""
    rot = RotationParams(1 - params.epsilon, params.epsilon, params.x0)
    return rotation_word(rot, n_letters)


def standard_word(cf: CFExpansion, level: int) -> Word:
    """The standard word s_level of the recursion

    s_-1 = 1, s_0 = 0, s_1 = s_0^(a_1 - 1) s_-1,
    s_(n+1) = s_n^(a_(n+1)) s_(n-1).
    """
    if level < -1:
        raise ParameterError("level must be >= -1")
    if level == -1:
        return Word("1", BINARY)
    if level == 0:
        return Word("0", BINARY)
    prev, cur = "0", "0" * (cf.coefficient(1) - 1) + "1"
    for n in range(1, level):
        prev, cur = cur, cur * cf.coefficient(n + 1) + prev
    return Word(cur, BINARY)


def characteristic_prefix(cf: CFExpansion, n_letters: int) -> Word:
    """Length-n prefix of the limit of the standard words.

    Any s_m of length >= n has the same prefix (prefix stability of the
    recursion).
    """
    if n_letters < 1:
        raise ParameterError("n_letters must be >= 1")
    prev, cur = "0", "0" * (cf.coefficient(1) - 1) + "1"
    n = 1
    while len(cur) < n_letters:
        n += 1
        try:
            a = cf.coefficient(n)
        except InsufficientCoefficientsError:
            raise InsufficientCoefficientsError(
                f"need |s_n| >= {n_letters} but coefficients end at a_{n - 1}"
            ) from None
        prev, cur = cur, cur * a + prev
    return Word(cur[:n_letters], BINARY)


@dataclass(frozen=True)
class IndexFormulaResult:
    """Evaluation of the repetition-index formula along a continued fraction.

    Each term is 2 + a_(N+1) + (q_(N-1) - 2) / q_N; the true index of the
    corresponding rotation word is the supremum of all terms.
    """

    terms: tuple[Fraction, ...]
    truncated_sup: Fraction
    sup_at: int
    finite: bool
    largest_coefficient: int
    window_only: bool
    periodic_limit: QuadraticReal | None

    def to_json_dict(self) -> dict:
        return {
            "n_max": len(self.terms) - 1,
            "truncated_sup_num": self.truncated_sup.numerator,
            "truncated_sup_den": self.truncated_sup.denominator,
            "sup_at": self.sup_at,
            "finite": self.finite,
            "largest_coefficient": self.largest_coefficient,
            "window_only": self.window_only,
            "periodic_limit": None if self.periodic_limit is None else str(self.periodic_limit),
        }


def _purely_periodic_value(period: tuple[int, ...]) -> QuadraticReal:
    """Exact value of the purely periodic continued fraction [0; period...]."""
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    for a in period:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    b = q_cur - p_prev
    disc = b * b + 4 * q_prev * p_cur
    return QuadraticReal(-b, 1, disc, 2 * q_prev)


def sturmian_index_formula(cf: CFExpansion, n_max: int) -> IndexFormulaResult:
    """Truncated supremum of the index formula, plus its exact periodic limit.

    The limit along each residue of a periodic tail is evaluated in the
    quadratic field: the coefficient ratio q_(N-1)/q_N converges to the
    purely periodic continued fraction built from the reversed period.
    """
    if n_max < 0:
        raise ParameterError("n_max must be >= 0")
    if cf.terminated:
        raise ParameterError("the index formula needs an irrational slope")
    convs = cf.convergents(n_max)
    terms = []
    q_prev = 0  # q_(-1)
    for n in range(0, n_max + 1):
        q_n = convs[n][1]
        terms.append(2 + cf.coefficient(n + 1) + Fraction(q_prev - 2, q_n))
        q_prev = q_n
    truncated_sup = max(terms)
    sup_at = terms.index(truncated_sup)
    largest, exact = cf.max_coefficient()
    limit = None
    if cf.is_periodic:
        period = cf.period
        m = len(period)
        for i in range(m):
            reversed_cycle = tuple(period[(i - k) % m] for k in range(m))
            ratio_limit = _purely_periodic_value(reversed_cycle)
            candidate = ratio_limit + (2 + period[(i + 1) % m])
            if limit is None or (candidate - limit).sign() > 0:
                limit = candidate
    # Bounded coefficients mean a finite index; a periodic tail decides this
    # exactly, otherwise the verdict only covers the available window.
    return IndexFormulaResult(
        terms=tuple(terms),
        truncated_sup=truncated_sup,
        sup_at=sup_at,
        finite=True,
        largest_coefficient=largest,
        window_only=not exact,
        periodic_limit=limit,
    )


@dataclass(frozen=True)
class BlockParse:
    """A decomposition of a word prefix into long/short blocks.

    At level n the building blocks are E^(k+1) F (long) and E^k F (short)
    with E = s_n, F = s_(n-1), k = a_(n+1); concatenating the tagged blocks
    reproduces the consumed prefix exactly and the unparsed tail is shorter
    than the long block.
    """

    level: int
    root: str
    filler: str
    k: int
    tags: tuple[str, ...]
    consumed: int
    tail_length: int

    @property
    def long_block(self) -> str:
        return self.root * (self.k + 1) + self.filler

    @property
    def short_block(self) -> str:
        return self.root * self.k + self.filler

    def reconstruct(self) -> str:
        long_b, short_b = self.long_block, self.short_block
        return "".join(long_b if tag == "long" else short_b for tag in self.tags)

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "root": self.root,
            "filler": self.filler,
            "k": self.k,
            "tags": list(self.tags),
            "consumed": self.consumed,
            "tail_length": self.tail_length,
        }


def block_decompose(prefix: Word, cf: CFExpansion, level: int) -> BlockParse:
    """Parse a prefix into long/short blocks by backtracking (long first).

    Greedy parsing without backtracking misparses at low levels, so failed
    positions are memoized and alternatives explored.  Fails only when no
    decomposition covers more than nothing and leaves a tail shorter than
    the long block.
    """
    if level < 1:
        raise ParameterError("level must be >= 1")
    root = standard_word(cf, level).text
    filler = standard_word(cf, level - 1).text
    k = cf.coefficient(level + 1)
    long_b = root * (k + 1) + filler
    short_b = root * k + filler
    text = prefix.text
    n = len(text)
    if not (text.startswith(long_b) or text.startswith(short_b)):
        raise BlockParseError("prefix does not begin with either block", 0)
    dead: set[int] = set()
    tags: list[str] = []
    stack: list[list[int]] = [[0, 0]]
    while stack:
        pos, option = stack[-1]
        if option == 0:
            stack[-1][1] = 1
            nxt = pos + len(long_b)
            if nxt <= n and nxt not in dead and text.startswith(long_b, pos):
                tags.append("long")
                stack.append([nxt, 0])
            continue
        if option == 1:
            stack[-1][1] = 2
            nxt = pos + len(short_b)
            if nxt <= n and nxt not in dead and text.startswith(short_b, pos):
                tags.append("short")
                stack.append([nxt, 0])
            continue
        if tags and n - pos < len(long_b):
            return BlockParse(
                level=level,
                root=root,
                filler=filler,
                k=k,
                tags=tuple(tags),
                consumed=pos,
                tail_length=n - pos,
            )
        dead.add(pos)
        stack.pop()
        if tags:
            tags.pop()
    raise BlockParseError(
        "no block decomposition leaves a tail shorter than the long block", 0
    )
