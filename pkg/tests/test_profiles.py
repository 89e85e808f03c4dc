import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swocheck.profiles import (
    EmptyProfileError,
    ParseError,
    Profile,
    ProfileError,
    concat,
    count_positive,
    geomean_negative_part_abs,
    geomean_positive_part,
    mean,
    parse_profile,
    parse_profile_lines,
    replicate,
    sorted_ascending,
    Verdict,
)


class TestParse:
    def test_replicated_token(self):
        p = parse_profile("10*10")
        assert p.levels == (10.0,) * 10

    def test_plain_listing(self):
        assert parse_profile("1 2 3").levels == (1.0, 2.0, 3.0)

    def test_expansion_then_append(self):
        assert parse_profile("2*1 -1").levels == (1.0, 1.0, -1.0)

    def test_negative_replicated_level(self):
        assert parse_profile("3*-0.5").levels == (-0.5, -0.5, -0.5)

    def test_empty_input(self):
        with pytest.raises(EmptyProfileError):
            parse_profile("   ")

    def test_zero_count(self):
        with pytest.raises(ParseError) as err:
            parse_profile("0*5")
        assert err.value.position == 1

    def test_malformed_token_reports_position(self):
        with pytest.raises(ParseError) as err:
            parse_profile("1 2 zebra")
        assert err.value.position == 3

    def test_malformed_count(self):
        with pytest.raises(ParseError):
            parse_profile("x*5")

    def test_non_finite_rejected(self):
        with pytest.raises(ParseError):
            parse_profile("inf")
        with pytest.raises(ParseError):
            parse_profile("nan")

    def test_profile_lines_with_comments(self):
        text = "# leading comment\n10*10\n\n  # indented comment\n1 2 3\n"
        profiles = parse_profile_lines(text)
        assert len(profiles) == 2
        assert profiles[0].levels == (10.0,) * 10
        assert profiles[1].levels == (1.0, 2.0, 3.0)


class TestProfileType:
    def test_rejects_empty(self):
        with pytest.raises(EmptyProfileError):
            Profile(())

    def test_rejects_nan(self):
        with pytest.raises(ProfileError):
            Profile((1.0, float("nan")))

    def test_rejects_infinity(self):
        with pytest.raises(ProfileError):
            Profile((float("inf"),))

    def test_coerces_ints(self):
        assert Profile((1, 2)).levels == (1.0, 2.0)

    def test_verdict_swap(self):
        assert Verdict.BETTER.swapped() is Verdict.WORSE
        assert Verdict.WORSE.swapped() is Verdict.BETTER
        assert Verdict.INDIFFERENT.swapped() is Verdict.INDIFFERENT


class TestOperations:
    def test_concat(self):
        assert concat(Profile((1, 2)), Profile((3,))).levels == (1.0, 2.0, 3.0)
        assert concat(Profile((5,)), Profile((5,))).levels == (5.0, 5.0)

    def test_concat_intro_construction(self):
        eleven = concat(replicate(10, 10.0), Profile((-1.0,)))
        assert len(eleven) == 11
        assert eleven.levels[-1] == -1.0

    def test_replicate(self):
        assert replicate(101, 1.0).levels == (1.0,) * 101
        assert replicate(1, 7.0).levels == (7.0,)
        assert replicate(3, 0.0).levels == (0.0, 0.0, 0.0)

    def test_replicate_needs_positive_count(self):
        with pytest.raises(ValueError):
            replicate(0, 1.0)

    def test_mean_mixed_construction(self):
        p = concat(replicate(10, 10.0), replicate(100, 1.0))
        assert mean(p) == pytest.approx(float(Fraction(200, 110)), abs=0, rel=1e-15)

    def test_mean_trivial(self):
        assert mean(Profile((4.0,))) == 4.0
        assert mean(Profile((4.0, 2.0))) == 3.0

    def test_sorted_ascending(self):
        assert sorted_ascending(Profile((3, 1, 2))).levels == (1.0, 2.0, 3.0)
        assert sorted_ascending(Profile((1, 1))).levels == (1.0, 1.0)
        assert sorted_ascending(Profile((-1, -2))).levels == (-2.0, -1.0)

    def test_count_positive(self):
        assert count_positive(Profile((1, 0, -1))) == 1
        assert count_positive(Profile((2, 3))) == 2
        assert count_positive(Profile((-1, -1))) == 0


class TestGeometricMeans:
    def test_positive_equal_levels(self):
        assert geomean_positive_part(Profile((100.0, 100.0))) == 100.0

    def test_zero_level_collapses(self):
        assert geomean_positive_part(Profile((100.0, 100.0, 0.0))) == 0.0

    def test_two_point_by_hand(self):
        # sqrt(2 * 8) = 4
        assert geomean_positive_part(Profile((2.0, 8.0))) == pytest.approx(4.0, rel=1e-12)

    def test_negative_part_by_hand(self):
        assert geomean_negative_part_abs(Profile((-2.0, -8.0))) == pytest.approx(4.0, rel=1e-12)

    def test_negative_part_collapses_on_nonnegative(self):
        assert geomean_negative_part_abs(Profile((-1.0, 5.0))) == 0.0
        assert geomean_negative_part_abs(Profile((-1.0, 0.0))) == 0.0

    def test_negative_part_singleton(self):
        assert geomean_negative_part_abs(Profile((-3.0,))) == 3.0

    def test_no_overflow_for_large_population(self):
        p = replicate(5000, 1e300)
        assert geomean_positive_part(p) == 1e300

    def test_no_underflow_for_tiny_levels(self):
        p = Profile(tuple(1e-300 * (1 + 0.1 * i) for i in range(50)))
        value = geomean_positive_part(p)
        assert 1e-300 < value < 1e-299


# hypothesis strategies

levels_01_100 = st.floats(min_value=0.1, max_value=100.0, allow_nan=False)
small_profiles = st.lists(levels_01_100, min_size=1, max_size=8)


@given(
    a=st.lists(st.floats(-50, 50), min_size=1, max_size=6),
    b=st.lists(st.floats(-50, 50), min_size=1, max_size=6),
)
def test_concat_order_is_a_permutation(a, b):
    left = concat(Profile(tuple(a)), Profile(tuple(b)))
    right = concat(Profile(tuple(b)), Profile(tuple(a)))
    assert len(left) == len(a) + len(b)
    assert sorted(left.levels) == sorted(right.levels)


@given(levels=small_profiles)
def test_geomean_log_domain_matches_naive(levels):
    p = Profile(tuple(levels))
    naive = math.prod(p.levels) ** (1.0 / len(p))
    assert geomean_positive_part(p) == pytest.approx(naive, rel=1e-12)


@given(m=st.integers(1, 500), x=st.floats(min_value=1e-6, max_value=1e6))
def test_geomean_of_constant_profile_is_exact(m, x):
    assert geomean_positive_part(replicate(m, x)) == x


@given(m=st.integers(1, 500), x=st.floats(-1e6, 1e6, allow_nan=False))
def test_mean_of_constant_profile_is_exact(m, x):
    assert mean(replicate(m, x)) == x


@settings(max_examples=200)
@given(data=st.data())
def test_geomean_strictly_rises_under_equalizing_transfer(data):
    levels = data.draw(st.lists(st.floats(0.5, 100.0), min_size=2, max_size=8))
    p = Profile(tuple(levels))
    i, j = data.draw(
        st.tuples(st.integers(0, len(levels) - 1), st.integers(0, len(levels) - 1)).filter(
            lambda ij: ij[0] != ij[1]
        )
    )
    if p.levels[i] < p.levels[j]:
        i, j = j, i
    gap = p.levels[i] - p.levels[j]
    if gap < 1e-6:
        return
    eps = gap / 4.0
    after = list(p.levels)
    after[i] -= eps
    after[j] += eps
    assert geomean_positive_part(Profile(tuple(after))) > geomean_positive_part(p)


def test_geomean_transfer_rise_seeded_sweep():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(2, 8)
        levels = [rng.uniform(0.5, 100.0) for _ in range(n)]
        i, j = rng.sample(range(n), 2)
        if levels[i] < levels[j]:
            i, j = j, i
        if levels[i] - levels[j] < 1e-6:
            continue
        eps = (levels[i] - levels[j]) / 4.0
        before = geomean_positive_part(Profile(tuple(levels)))
        levels[i] -= eps
        levels[j] += eps
        assert geomean_positive_part(Profile(tuple(levels))) > before
