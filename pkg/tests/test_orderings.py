import math
import random

import pytest

from swocheck.orderings import (
    SwoConfig,
    SwoId,
    compare,
    compare_baseline,
    compare_leximin_extended,
    compare_theorem3,
    compare_theorem7,
    swo_value,
    theorem3_keys,
    value_modified_theorem2,
    value_theorem2,
    value_theorem2_uniform_sup,
    value_theorem7_reduced,
    verdict_from_values,
)
from swocheck.profiles import Profile, Verdict, concat, parse_profile, replicate

CFG = SwoConfig()


def P(text: str) -> Profile:
    return parse_profile(text)


class TestConfig:
    def test_defaults(self):
        assert CFG.g_kind == "identity"
        assert CFG.tolerance == 1e-9

    def test_g_zero_is_zero(self):
        for kind in ("identity", "exp_bounded"):
            assert SwoConfig(g_kind=kind).g(0.0) == 0.0

    def test_exp_bounded_is_increasing_and_concave(self):
        cfg = SwoConfig(g_kind="exp_bounded")
        xs = [-2.0, -1.0, 0.0, 1.0, 2.0]
        values = [cfg.g(x) for x in xs]
        assert all(b > a for a, b in zip(values, values[1:]))
        slopes = [b - a for a, b in zip(values, values[1:])]
        assert all(later < earlier for earlier, later in zip(slopes, slopes[1:]))

    def test_rejects_bad_kinds(self):
        with pytest.raises(ValueError):
            SwoConfig(g_kind="cubic")
        with pytest.raises(ValueError):
            SwoConfig(tolerance=0.0)

    def test_unknown_cli_id(self):
        with pytest.raises(ValueError):
            SwoId.from_cli("nosuch")


class TestBaselines:
    def test_total_prefers_the_larger_sum(self):
        assert compare_baseline(SwoId.TOTAL, P("10*10"), P("101*1"), CFG) is Verdict.WORSE

    def test_average_prefers_the_higher_mean(self):
        assert compare_baseline(SwoId.AVERAGE, P("10*10"), P("101*1"), CFG) is Verdict.BETTER

    def test_average_prefers_one_miserable_addition(self):
        # 110 people averaging 20/11 vs 11 people averaging 9
        left = P("10*10 100*1")
        right = P("10*10 -1")
        assert compare_baseline(SwoId.AVERAGE, left, right, CFG) is Verdict.WORSE

    def test_clgu_subtracts_the_critical_level(self):
        cfg = SwoConfig(critical_level=1.0)
        # (2, 2): (2-1)*2 = 2 vs (0.5, 0.5, 0.5): (0.5-1)*3 = -1.5
        assert compare_baseline(SwoId.CLGU, P("2 2"), P("3*0.5"), cfg) is Verdict.BETTER

    def test_non_baseline_rejected(self):
        with pytest.raises(ValueError):
            compare_baseline(SwoId.THEOREM2, P("1"), P("1"), CFG)


class TestBoundedSumOrdering:
    def test_value_all_positive(self):
        assert value_theorem2(P("100 100"), CFG) == pytest.approx(math.atan(200.0) + 100.0, abs=1e-12)
        assert value_theorem2(P("100 100"), CFG) == pytest.approx(101.56579636846094, abs=1e-12)

    def test_value_zero_kills_the_geometric_term(self):
        assert value_theorem2(P("100 100 0"), CFG) == pytest.approx(math.atan(200.0), abs=1e-12)

    def test_value_of_zero_profile(self):
        assert value_theorem2(P("0"), CFG) == 0.0

    def test_dispatch_uses_the_values(self):
        assert compare(SwoId.THEOREM2, P("100 100"), P("100 100 0"), CFG) is Verdict.BETTER

    def test_uniform_supremum_bound(self):
        # score of m people at epsilon rises in m but never reaches pi/2 + epsilon
        eps = 1.0
        sup = value_theorem2_uniform_sup(eps, CFG)
        assert sup == pytest.approx(math.pi / 2.0 + 1.0, abs=1e-15)
        previous = -math.inf
        for m in (1, 2, 5, 10, 100, 10_000, 1_000_000):
            value = math.atan(m * eps) + eps
            assert previous < value < sup
            previous = value


class TestLexicographicOrdering:
    def test_negative_part_dominates(self):
        assert compare_theorem3(P("1 1"), P("2 -0.001"), CFG) is Verdict.BETTER

    def test_tied_negative_part_falls_to_dampened_positive(self):
        # keys: (0, sqrt(1)/1 * 2) = 2 vs (0, sqrt(2)/2 * 2) = sqrt(2)
        assert compare_theorem3(P("2 0"), P("1 1"), CFG) is Verdict.BETTER

    def test_reflexive(self):
        u = P("3 -1 2")
        assert compare_theorem3(u, u, CFG) is Verdict.INDIFFERENT

    def test_keys_by_hand(self):
        neg, pos = theorem3_keys(P("2 0 -3"), CFG)
        assert neg == -3.0
        assert pos == pytest.approx(2.0)

    def test_worsening_a_negative_level_lowers_the_first_key(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(1, 6)
            levels = [rng.uniform(-50, 50) for _ in range(n)]
            non_positive = [i for i, x in enumerate(levels) if x <= 0]
            if not non_positive:
                continue
            i = rng.choice(non_positive)
            worse = list(levels)
            worse[i] -= rng.uniform(0.01, 5.0)
            # the positive part may move arbitrarily
            j = rng.randrange(n)
            if worse[j] > 0:
                worse[j] += rng.uniform(0, 10.0)
            before, _ = theorem3_keys(Profile(tuple(levels)), CFG)
            after, _ = theorem3_keys(Profile(tuple(worse)), CFG)
            assert after < before


class TestExtendedLeximin:
    def test_identical(self):
        assert compare_leximin_extended(P("1 2"), P("1 2")) is Verdict.INDIFFERENT

    def test_padding_with_own_maximum(self):
        assert compare_leximin_extended(P("5"), P("5 5")) is Verdict.INDIFFERENT

    def test_worst_off_decides(self):
        assert compare_leximin_extended(P("0 10"), P("1 1")) is Verdict.WORSE

    def test_padding_uses_each_sides_own_maximum(self):
        # (3,) padded to (3, 3) loses to (3, 4) at the second position
        assert compare_leximin_extended(P("3"), P("3 4")) is Verdict.WORSE
        # (5,) padded to (5, 5) beats (5, 4) at the first sorted position
        assert compare_leximin_extended(P("5"), P("5 4")) is Verdict.BETTER

    def test_exact_comparison_no_tolerance(self):
        a = P("1")
        b = Profile((1.0 + 1e-12,))
        assert compare_leximin_extended(a, b) is Verdict.WORSE


class TestPopulationCountOrdering:
    def test_fewer_people_always_wins(self):
        assert compare_theorem7(P("-5"), P("10 10"), CFG) is Verdict.BETTER

    def test_singleton_above_everyone(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(2, 8)
            u = Profile(tuple(rng.uniform(-100, 100) for _ in range(n)))
            top = Profile((max(u.levels) + 1.0,))
            assert compare_theorem7(top, u, CFG) is Verdict.BETTER

    def test_equal_sizes_fall_back_to_welfare_sum(self):
        assert compare_theorem7(P("3 3"), P("4 2"), CFG) is Verdict.INDIFFERENT
        assert compare_theorem7(P("4 3"), P("4 2"), CFG) is Verdict.BETTER

    def test_reduced_form_values_by_hand(self):
        assert value_theorem7_reduced(P("0"), CFG) == 0.0
        assert value_theorem7_reduced(P("0 0"), CFG) == pytest.approx(-math.pi, abs=1e-15)

    def test_reduced_form_interval_separation(self):
        # any singleton scores above -pi/2; any pair scores below pi/2 - pi
        rng = random.Random(6)
        for _ in range(200):
            single = value_theorem7_reduced(Profile((rng.uniform(-100, 100),)), CFG)
            pair = value_theorem7_reduced(
                Profile((rng.uniform(-100, 100), rng.uniform(-100, 100))), CFG
            )
            assert single > -math.pi / 2.0
            assert pair < math.pi / 2.0 - math.pi
            assert single > pair

    def test_direct_and_reduced_agree_on_random_pairs(self):
        rng = random.Random(7)
        for _ in range(2000):
            u = Profile(tuple(rng.uniform(-10, 10) for _ in range(rng.randint(1, 6))))
            v = Profile(tuple(rng.uniform(-10, 10) for _ in range(rng.randint(1, 6))))
            direct = compare_theorem7(u, v, CFG)
            reduced = verdict_from_values(
                value_theorem7_reduced(u, CFG), value_theorem7_reduced(v, CFG), CFG.tolerance
            )
            if Verdict.INDIFFERENT in (direct, reduced):
                continue
            assert direct is reduced


class TestDampedBoundedOrderingWithPenalty:
    def test_value_all_positive(self):
        assert value_modified_theorem2(P("100 100"), CFG) == pytest.approx(
            math.atan(200.0) + 100.0, abs=1e-12
        )

    def test_value_all_negative(self):
        assert value_modified_theorem2(P("-2 -8"), CFG) == pytest.approx(
            math.atan(-10.0) - 4.0, abs=1e-12
        )

    def test_value_zero_profile(self):
        assert value_modified_theorem2(P("0"), CFG) == 0.0

    def test_many_slightly_negative_beat_few_deeply_negative(self):
        many = replicate(1000, -0.01)
        few = P("-100 -100")
        assert compare(SwoId.MODIFIED_THEOREM2, many, few, CFG) is Verdict.BETTER


class TestDispatch:
    def test_trivial_indifference(self):
        assert compare(SwoId.TOTAL, P("1"), P("1"), CFG) is Verdict.INDIFFERENT

    def test_swo_value_only_for_scored_orderings(self):
        assert swo_value(SwoId.THEOREM3, P("1"), CFG) is None
        assert swo_value(SwoId.LEXIMIN_EXTENDED, P("1"), CFG) is None
        assert swo_value(SwoId.TOTAL, P("1 2"), CFG) == 3.0

    def test_every_ordering_swap_antisymmetry(self):
        rng = random.Random(7)
        for swo in SwoId:
            for _ in range(500):
                u = Profile(tuple(rng.uniform(-100, 100) for _ in range(rng.randint(1, 8))))
                v = Profile(tuple(rng.uniform(-100, 100) for _ in range(rng.randint(1, 8))))
                assert compare(swo, u, v, CFG) is compare(swo, v, u, CFG).swapped()

    def test_every_ordering_permutation_indifference(self):
        rng = random.Random(8)
        for swo in SwoId:
            for _ in range(300):
                u = Profile(tuple(rng.uniform(-100, 100) for _ in range(rng.randint(1, 8))))
                order = list(range(len(u)))
                rng.shuffle(order)
                permuted = Profile(tuple(u.levels[i] for i in order))
                assert compare(swo, u, permuted, CFG) is Verdict.INDIFFERENT

    def test_concat_is_separable_for_additive_orderings(self):
        rng = random.Random(9)
        for swo in (SwoId.TOTAL, SwoId.CLGU, SwoId.THEOREM7):
            for _ in range(200):
                u = Profile(tuple(rng.uniform(-50, 50) for _ in range(rng.randint(1, 5))))
                v = Profile(tuple(rng.uniform(-50, 50) for _ in range(rng.randint(1, 5))))
                s = Profile(tuple(rng.uniform(-50, 50) for _ in range(rng.randint(1, 5))))
                assert compare(swo, v, s, CFG) is compare(swo, concat(u, v), concat(u, s), CFG)
