"""Tests for the three-interval exchange, ternarization and bound reports."""

import random
from fractions import Fraction

import pytest

from ietlab.errors import ParameterError
from ietlab.exactreal import QuadraticReal
from ietlab.sturmian import RotationParams, rotation_word
from ietlab.threeiet import (
    NotAmicable,
    bound_check,
    is_amicable,
    rotation_coding_image,
    step,
    ternarize,
    ternarize_prefix,
    threeiet_word,
    validate_params,
    verify_projections,
)
from ietlab.words import SPLIT_B01, SPLIT_B10, TERNARY, Word

from oracles import mp_value

W = Word.from_text
PHI_MINUS_1 = QuadraticReal(-1, 1, 5, 2)
SQRT2_MINUS_1 = QuadraticReal(-1, 1, 2, 1)
ZERO = QuadraticReal(0)
GOLDEN = validate_params(PHI_MINUS_1, QuadraticReal(4, 0, 0, 5), ZERO)
SILVER = validate_params(SQRT2_MINUS_1, QuadraticReal(7, 0, 0, 10), ZERO)


def mp_threeiet_word(params, n_letters):
    """Independent decimal recomputation of the orbit coding (60 digits)."""
    eps = mp_value(params.epsilon)
    ell = mp_value(params.ell)
    boundary = ell - 1 + eps
    x = mp_value(params.x0)
    out = []
    for _ in range(n_letters):
        if x < boundary:
            out.append("A")
            x += 1 - eps
        elif x < eps:
            out.append("B")
            x += 1 - 2 * eps
        else:
            out.append("C")
            x -= eps
    return "".join(out)


class TestValidation:
    def test_valid_parameters_and_intervals(self):
        params = GOLDEN
        assert params.boundary_ab == PHI_MINUS_1 - Fraction(1, 5)
        assert params.boundary_bc == PHI_MINUS_1

    def test_ell_too_small(self):
        with pytest.raises(ParameterError, match="max"):
            validate_params(PHI_MINUS_1, QuadraticReal(1, 0, 0, 2), ZERO)

    def test_ell_too_large(self):
        with pytest.raises(ParameterError):
            validate_params(PHI_MINUS_1, QuadraticReal(1), ZERO)

    def test_rational_eps_rejected(self):
        with pytest.raises(ParameterError, match="irrational"):
            validate_params(QuadraticReal(2, 0, 0, 5), QuadraticReal(4, 0, 0, 5), ZERO)

    def test_x0_outside_domain(self):
        with pytest.raises(ParameterError, match="x0"):
            validate_params(PHI_MINUS_1, QuadraticReal(4, 0, 0, 5), QuadraticReal(9, 0, 0, 10))


class TestStep:
    def test_first_step_from_zero(self):
        letter, nxt = step(GOLDEN, ZERO)
        assert letter == "A"
        assert nxt == QuadraticReal(3, -1, 5, 2)

    def test_left_closed_interval_boundary(self):
        letter, _ = step(GOLDEN, PHI_MINUS_1)
        assert letter == "C"

    def test_domain_error_at_ell(self):
        with pytest.raises(ParameterError):
            step(GOLDEN, QuadraticReal(4, 0, 0, 5))

    def test_word_equals_step_iteration(self):
        x = GOLDEN.x0
        letters = []
        for _ in range(300):
            letter, x = step(GOLDEN, x)
            letters.append(letter)
        assert threeiet_word(GOLDEN, 300).text == "".join(letters)


class TestOrbitWords:
    def test_golden_prefix(self):
        assert threeiet_word(GOLDEN, 7).text == "AACABAC"

    def test_first_letter_is_a(self):
        assert threeiet_word(GOLDEN, 1).text == "A"
        assert threeiet_word(SILVER, 1).text == "A"

    def test_silver_prefix_against_decimal_oracle(self):
        assert threeiet_word(SILVER, 20).text == "ACBBCACBCACBBCBBCACB"

    def test_long_prefixes_match_decimal_orbit(self):
        for params in (GOLDEN, SILVER):
            assert threeiet_word(params, 2000).text == mp_threeiet_word(params, 2000)

    def test_orbit_stays_in_domain(self):
        x = SILVER.x0
        ell = SILVER.ell
        for _ in range(10000):
            _, x = step(SILVER, x)
            assert x.sign() >= 0 and (x - ell).sign() < 0

    def test_projection_length_accounting(self):
        word = threeiet_word(GOLDEN, 700)
        assert len(SPLIT_B01(word)) == 700 + word.count("B")


class TestTernarization:
    def test_known_pair(self):
        assert ternarize(W("0100101"), W("0101001")) == Word("ACABAC", TERNARY)

    def test_single_letters(self):
        assert ternarize(W("0"), W("0")).text == "A"
        assert ternarize(W("01"), W("10")).text == "B"
        assert ternarize(W("1"), W("1")).text == "C"

    def test_mismatch_is_a_value(self):
        result = ternarize(W("10"), W("01"))
        assert isinstance(result, NotAmicable)
        assert result.position == 0

    def test_relation_not_symmetric(self):
        assert is_amicable(W("0100101"), W("0101001"))
        assert not is_amicable(W("0101001"), W("0100101"))

    def test_letterwise_pair(self):
        assert ternarize(W("0011"), W("0011")).text == "AACC"

    def test_length_mismatch(self):
        assert isinstance(ternarize(W("00"), W("0")), NotAmicable)

    def test_dangling_half_pair(self):
        strict = ternarize(W("00"), W("01"))
        assert isinstance(strict, NotAmicable)
        word, consumed = ternarize_prefix(W("00"), W("01"))
        assert word.text == "A" and consumed == 1

    def test_prefix_variant_still_rejects_mismatch(self):
        assert isinstance(ternarize_prefix(W("11"), W("00")), NotAmicable)

    def test_round_trip_random_parameters(self):
        rng = random.Random(97)
        roots = [2, 3, 5, 6, 7, 10, 11, 13]
        done = 0
        while done < 50:
            eps = QuadraticReal(0, 1, roots[done % len(roots)], 1).fract()
            if eps.is_rational or not (0 < float(eps) < 1):
                roots.append(roots[done % len(roots)] + 12)
                continue
            bound = max(float(eps), 1 - float(eps))
            ell = QuadraticReal(rng.randint(int(bound * 1000) + 2, 999), 0, 0, 1000)
            x0 = QuadraticReal(rng.randint(0, int(float(ell) * 100) - 1), 0, 0, 100)
            params = validate_params(eps, ell, x0)
            word = threeiet_word(params, 500)
            assert ternarize(SPLIT_B01(word), SPLIT_B10(word)) == word
            done += 1


class TestInducedRotation:
    def test_projection_equals_rotation_word(self):
        for params in (GOLDEN, SILVER):
            word = threeiet_word(params, 400)
            image = SPLIT_B01(word)
            rot = rotation_word(
                RotationParams(1 - params.epsilon, params.epsilon, params.x0),
                len(image),
            )
            assert rot == image


class TestProjectionReport:
    def test_golden_parameters(self):
        report = verify_projections(GOLDEN, 200, 10)
        assert report.passed
        assert report.to_json_dict()["passed"] is True

    def test_silver_parameters(self):
        assert verify_projections(SILVER, 500, 12).passed

    def test_single_letter_roundtrip(self):
        word = threeiet_word(GOLDEN, 1)
        recombined, consumed = ternarize_prefix(SPLIT_B01(word), SPLIT_B10(word))
        assert recombined == word and consumed == 1

    def test_too_short_for_depth(self):
        with pytest.raises(ParameterError):
            verify_projections(GOLDEN, 30, 10)


class TestBoundReports:
    def test_silver_bounds(self):
        report = bound_check(SILVER, 10000)
        assert report.largest_coefficient == 2
        assert report.lower == 1 and report.upper == 5
        assert report.index_estimate <= 5
        assert report.max_power <= 4
        assert report.passed and report.lower_reached

    def test_golden_bounds(self):
        report = bound_check(GOLDEN, 10000)
        assert report.largest_coefficient == 1
        assert report.index_estimate <= 4
        assert report.max_power <= 3
        assert report.passed

    def test_report_ordering_invariant(self):
        for k in range(1, 9):
            assert k // 2 <= k + 3

    def test_finiteness_across_ell_values(self):
        # the same eps with several interval lengths keeps the upper verdicts
        for num in (62, 70, 80, 90):
            params = validate_params(
                SQRT2_MINUS_1, QuadraticReal(num, 0, 0, 100), ZERO
            )
            report = bound_check(params, 5000)
            assert report.upper_ok and report.power_ok

    def test_x0_exploration(self):
        # index estimates for different starting points stay within the bound
        for tenth in (0, 1, 3):
            params = validate_params(
                SQRT2_MINUS_1, QuadraticReal(7, 0, 0, 10), QuadraticReal(tenth, 0, 0, 10)
            )
            assert bound_check(params, 4000).upper_ok


class TestRotationCodingImages:
    def test_collapse_tables(self):
        word = Word("ACABAC", TERNARY)
        assert rotation_coding_image(word, 0).text == "0000100"
        assert rotation_coding_image(word, 1).text == "0010011001"

    def test_non_ternary_rejected(self):
        with pytest.raises(ParameterError):
            rotation_coding_image(W("0101"), 0)

    def test_image_of_orbit_word_is_rotation_like(self):
        # B and C collapse toward 0 blocks; the image stays binary and long
        word = threeiet_word(GOLDEN, 300)
        image = rotation_coding_image(word, 0)
        assert len(image) == 300 + word.count("B")
        assert set(image.text) <= {"0", "1"}
