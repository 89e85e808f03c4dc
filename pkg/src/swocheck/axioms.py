"""Randomized falsification probes and deterministic searches for the axioms.

Universal axioms (anonymity, Pareto conditions, transfer principles, the
sadistic-conclusion family, independence) are probed by seeded random
sampling of their quantified variables: a Fail is a constructive refutation
carrying a replayable witness, while a Pass only says no counterexample was
found in the sampled instances.  Existential conditions (repugnant-conclusion
avoidance, critical levels, zero-addition monotonicity) use explicit search
grids and bisection, upgraded to certified results where an ordering admits a
closed-form bound.

Every probe is deterministic given its inputs and seed.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from enum import Enum, unique
from typing import Callable, Iterable, Sequence

from .orderings import (
    SwoConfig,
    SwoId,
    compare,
    swo_value,
    theorem3_keys,
    value_clgu,
    value_modified_theorem2,
    value_theorem2,
    value_theorem2_uniform_sup,
    verdict_from_values,
)
from .profiles import Profile, Verdict, concat, count_positive, mean, replicate

__all__ = [
    "SamplerConfig",
    "ProbeStatus",
    "ComparisonRecord",
    "ProbeWitness",
    "ProbeResult",
    "AxiomId",
    "CriticalLevelResult",
    "check_universal_axiom",
    "check_avoid_repugnant",
    "check_avoid_weak_repugnant",
    "find_critical_level",
    "search_critical_level",
    "probe_extended_continuity",
    "probe_monotone_zero_addition",
    "default_continuity_probe",
    "replay_witness",
    "derive_seed",
]

# Canonical inputs for the existential probes, shared by the CLI battery and
# the test suites.
DEFAULT_EPSILON = 1.0
DEFAULT_M_MAX = 10_000
DEFAULT_T_GRID = (1.0, 2.0, 5.0, 10.0, 100.0)
DEFAULT_WEAK_REPUGNANT_GRID = (0.5, 1.0, 2.0, 5.0)
REPUGNANT_CANDIDATES = (Profile((100.0, 100.0)), Profile((101.0,)))

# Strict-axiom instances keep increments at least this far apart so that a
# genuine strict improvement is not swallowed by the indifference band of a
# bounded value transform.
_STRICT_GAP_LO = 0.01
_STRICT_GAP_HI = 1.0


@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic sampling plan for the randomized probes.

    Levels are drawn uniformly from ``[-range_b, range_b]``, population sizes
    uniformly from ``1..max_pop``.  The same seed always reproduces the same
    sample stream.
    """

    seed: int
    range_b: float = 100.0
    max_pop: int = 8
    samples: int = 100_000

    def __post_init__(self) -> None:
        if not (0 <= self.seed < 2**64):
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if not (self.range_b > 0.0):
            raise ValueError(f"level range must be positive, got {self.range_b}")
        if self.max_pop < 1:
            raise ValueError(f"max population must be at least 1, got {self.max_pop}")
        if self.samples < 1:
            raise ValueError(f"sample count must be at least 1, got {self.samples}")


@unique
class ProbeStatus(Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ComparisonRecord:
    """One observed comparison: replaying left vs right must reproduce the verdict."""

    label: str
    left: Profile
    right: Profile
    verdict: Verdict

    def to_payload(self) -> dict:
        return {
            "label": self.label,
            "left": list(self.left.levels),
            "right": list(self.right.levels),
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class ProbeWitness:
    """Structured record behind a Fail (refutation) or a constructive find."""

    comparisons: tuple[ComparisonRecord, ...]
    params: dict = field(default_factory=dict)

    def to_payload(self) -> dict:
        return {
            "comparisons": [c.to_payload() for c in self.comparisons],
            "params": dict(sorted(self.params.items())),
        }


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of a probe.

    A Fail always carries a witness; Pass results of the existential searches
    may also carry the constructive witness they found.  A plain sampled Pass
    is evidence only, never a proof, and the ``note`` says which.
    """

    status: ProbeStatus
    samples_run: int
    witness: ProbeWitness | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.status is ProbeStatus.FAIL and self.witness is None:
            raise ValueError("a Fail result must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status is ProbeStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is ProbeStatus.FAIL

    def to_payload(self) -> dict:
        return {
            "status": self.status.value,
            "samples_run": self.samples_run,
            "witness": self.witness.to_payload() if self.witness else None,
            "note": self.note,
        }


@unique
class AxiomId(Enum):
    """Universal axioms checked by seeded random falsification."""

    ANONYMITY = "Anonymity"
    STRONG_PARETO = "StrongPareto"
    WEAK_PARETO = "WeakPareto"
    MINIMAL_INCREASING = "MinimalIncreasing"
    PIGOU_DALTON = "PigouDalton"
    MINIMAL_EQUITY = "MinimalEquity"
    AVOID_SADISTIC = "AvoidSadistic"
    AVOID_WEAK_SADISTIC = "AvoidWeakSadistic"
    STRONG_AVOID_WEAK_SADISTIC = "StrongAvoidWeakSadistic"
    ADDITION_OF_INDIFFERENT = "AdditionOfIndifferent"
    POSITIVE_RESPONSIVENESS = "PositiveResponsiveness"
    UTILITY_INDEPENDENCE = "UtilityIndependence"

    @classmethod
    def from_cli(cls, name: str) -> "AxiomId":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(member.value for member in cls)
            raise ValueError(f"unknown axiom {name!r}; expected one of: {valid}") from None


def derive_seed(master_seed: int, label: str) -> int:
    """Stable 64-bit sub-seed for a named probe under one master seed."""
    digest = hashlib.sha256(f"{master_seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def replay_witness(witness: ProbeWitness, swo: SwoId, cfg: SwoConfig) -> bool:
    """True when every recorded comparison reproduces its recorded verdict."""
    return all(
        compare(swo, record.left, record.right, cfg) is record.verdict
        for record in witness.comparisons
    )


# ---------------------------------------------------------------------------
# sampling helpers


def _draw_levels(rng: random.Random, sampler: SamplerConfig, n: int) -> tuple[float, ...]:
    b = sampler.range_b
    return tuple(rng.uniform(-b, b) for _ in range(n))


def _draw_profile(rng: random.Random, sampler: SamplerConfig, min_size: int = 1) -> Profile:
    n = rng.randint(min_size, max(min_size, sampler.max_pop))
    return Profile(_draw_levels(rng, sampler, n))


def _draw_signed_profile(rng: random.Random, sampler: SamplerConfig, sign: int) -> Profile:
    n = rng.randint(1, sampler.max_pop)
    levels = []
    for _ in range(n):
        x = rng.uniform(0.0, sampler.range_b)
        while x == 0.0:
            x = rng.uniform(0.0, sampler.range_b)
        levels.append(sign * x)
    return Profile(tuple(levels))


def _strict_gap(rng: random.Random) -> float:
    return rng.uniform(_STRICT_GAP_LO, _STRICT_GAP_HI)


# ---------------------------------------------------------------------------
# universal axiom checkers
#
# Each checker draws one instantiation of the axiom's quantified variables and
# evaluates the axiom's implication.  It returns None when the instance holds
# and a ProbeWitness when it is violated.

_InstanceChecker = Callable[[random.Random, SamplerConfig, SwoId, SwoConfig], ProbeWitness | None]


def _record(label: str, swo: SwoId, cfg: SwoConfig, left: Profile, right: Profile) -> ComparisonRecord:
    return ComparisonRecord(label, left, right, compare(swo, left, right, cfg))


def _check_anonymity(rng, sampler, swo, cfg):
    u = _draw_profile(rng, sampler)
    order = list(range(len(u)))
    rng.shuffle(order)
    permuted = Profile(tuple(u.levels[i] for i in order))
    rec = _record("profile vs permutation", swo, cfg, u, permuted)
    if rec.verdict is Verdict.INDIFFERENT:
        return None
    return ProbeWitness((rec,), {"permutation": order})


def _check_strong_pareto(rng, sampler, swo, cfg):
    base = _draw_profile(rng, sampler)
    n = len(base)
    raised = set(rng.sample(range(n), rng.randint(1, n)))
    better = Profile(
        tuple(x + (_strict_gap(rng) if i in raised else 0.0) for i, x in enumerate(base.levels))
    )
    rec = _record("improved vs original", swo, cfg, better, base)
    if rec.verdict is Verdict.BETTER:
        return None
    return ProbeWitness((rec,), {"raised_indices": sorted(raised)})


def _check_weak_pareto(rng, sampler, swo, cfg):
    base = _draw_profile(rng, sampler)
    better = Profile(tuple(x + _strict_gap(rng) for x in base.levels))
    rec = _record("everywhere-improved vs original", swo, cfg, better, base)
    if rec.verdict is Verdict.BETTER:
        return None
    return ProbeWitness((rec,))


def _check_minimal_increasing(rng, sampler, swo, cfg):
    n = rng.randint(1, sampler.max_pop)
    b = rng.uniform(-sampler.range_b, sampler.range_b)
    a = b + _strict_gap(rng)
    rec = _record("uniform higher vs uniform lower", swo, cfg, replicate(n, a), replicate(n, b))
    if rec.verdict is Verdict.BETTER:
        return None
    return ProbeWitness((rec,), {"n": n, "a": a, "b": b})


def _check_pigou_dalton(rng, sampler, swo, cfg):
    if sampler.max_pop < 2:
        return None
    pre = _draw_profile(rng, sampler, min_size=2)
    i, j = rng.sample(range(len(pre)), 2)
    if pre.levels[i] < pre.levels[j]:
        i, j = j, i
    gap = pre.levels[i] - pre.levels[j]
    if gap == 0.0:
        return None
    eps = rng.uniform(0.0, gap / 2.0) or gap / 4.0
    post_levels = list(pre.levels)
    post_levels[i] -= eps
    post_levels[j] += eps
    post = Profile(tuple(post_levels))
    rec = _record("after transfer vs before", swo, cfg, post, pre)
    if rec.verdict.at_least:
        return None
    return ProbeWitness((rec,), {"rich": i, "poor": j, "transfer": eps})


def _check_minimal_equity(rng, sampler, swo, cfg):
    u = _draw_profile(rng, sampler)
    equal = replicate(len(u), mean(u))
    rec = _record("equal split vs original", swo, cfg, equal, u)
    if rec.verdict.at_least:
        return None
    return ProbeWitness((rec,))


def _check_avoid_sadistic(rng, sampler, swo, cfg):
    u = _draw_profile(rng, sampler)
    positive = _draw_signed_profile(rng, sampler, +1)
    negative = _draw_signed_profile(rng, sampler, -1)
    rec = _record(
        "base plus positives vs base plus negatives",
        swo,
        cfg,
        concat(u, positive),
        concat(u, negative),
    )
    if rec.verdict.at_least:
        return None
    return ProbeWitness(
        (rec,),
        {"base": list(u.levels), "added_positive": list(positive.levels), "added_negative": list(negative.levels)},
    )


def _oriented_triple(rng, sampler, swo, cfg):
    """Draw (u, v, s) with v at least as good as s; returns the premise verdict."""
    u = _draw_profile(rng, sampler)
    v = _draw_profile(rng, sampler)
    s = _draw_profile(rng, sampler)
    premise = compare(swo, v, s, cfg)
    if premise is Verdict.WORSE:
        v, s = s, v
        premise = Verdict.BETTER
    return u, v, s, premise


def _check_avoid_weak_sadistic(rng, sampler, swo, cfg):
    u, v, s, premise = _oriented_triple(rng, sampler, swo, cfg)
    if premise is not Verdict.BETTER:
        return None
    premise_rec = ComparisonRecord("better vs worse sub-profile", v, s, premise)
    rec = _record("base plus better vs base plus worse", swo, cfg, concat(u, v), concat(u, s))
    if rec.verdict.at_least:
        return None
    return ProbeWitness((premise_rec, rec), {"base": list(u.levels)})


def _check_strong_avoid_weak_sadistic(rng, sampler, swo, cfg):
    u, v, s, premise = _oriented_triple(rng, sampler, swo, cfg)
    premise_rec = ComparisonRecord("sub-profile premise", v, s, premise)
    rec = _record("base plus better vs base plus worse", swo, cfg, concat(u, v), concat(u, s))
    if not rec.verdict.at_least:
        return ProbeWitness((premise_rec, rec), {"base": list(u.levels)})
    if premise is Verdict.BETTER and rec.verdict is not Verdict.BETTER:
        return ProbeWitness((premise_rec, rec), {"base": list(u.levels), "strict_part": True})
    return None


def _check_positive_responsiveness(rng, sampler, swo, cfg):
    u, v, s, premise = _oriented_triple(rng, sampler, swo, cfg)
    if premise is not Verdict.BETTER:
        return None
    premise_rec = ComparisonRecord("strictly better sub-profile", v, s, premise)
    rec = _record("base plus better vs base plus worse", swo, cfg, concat(u, v), concat(u, s))
    if rec.verdict is Verdict.BETTER:
        return None
    return ProbeWitness((premise_rec, rec), {"base": list(u.levels)})


def _bisect_indifferent_partner(rng, sampler, swo, cfg, v: Profile) -> Profile | None:
    """Try to construct s with s ~ v by bisecting the last level of a fresh draw."""
    base = _draw_profile(rng, sampler)
    span = sampler.range_b * 4.0
    lo, hi = -span, span

    def candidate(t: float) -> Profile:
        return Profile(base.levels[:-1] + (t,))

    v_lo = compare(swo, candidate(lo), v, cfg)
    v_hi = compare(swo, candidate(hi), v, cfg)
    if v_lo is Verdict.INDIFFERENT:
        return candidate(lo)
    if v_hi is Verdict.INDIFFERENT:
        return candidate(hi)
    if v_lo is v_hi:
        return None
    for _ in range(200):
        mid = (lo + hi) / 2.0
        verdict = compare(swo, candidate(mid), v, cfg)
        if verdict is Verdict.INDIFFERENT:
            return candidate(mid)
        if verdict is v_lo:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, abs(hi), abs(lo)):
            break
    return None


def _check_addition_of_indifferent(rng, sampler, swo, cfg):
    u = _draw_profile(rng, sampler)
    v = _draw_profile(rng, sampler)
    mode = rng.randrange(3)
    s: Profile | None
    if mode == 0:
        order = list(range(len(v)))
        rng.shuffle(order)
        s = Profile(tuple(v.levels[i] for i in order))
    elif mode == 1:
        s = v
    else:
        s = _bisect_indifferent_partner(rng, sampler, swo, cfg, v)
        if s is None:
            s = v
    premise = compare(swo, v, s, cfg)
    if premise is not Verdict.INDIFFERENT:
        return None
    premise_rec = ComparisonRecord("indifferent sub-profiles", v, s, premise)
    rec = _record("base plus first vs base plus second", swo, cfg, concat(u, v), concat(u, s))
    if rec.verdict is Verdict.INDIFFERENT:
        return None
    return ProbeWitness((premise_rec, rec), {"base": list(u.levels), "mode": mode})


def _check_utility_independence(rng, sampler, swo, cfg):
    u = _draw_profile(rng, sampler)
    v = _draw_profile(rng, sampler)
    s = _draw_profile(rng, sampler)
    alone = ComparisonRecord("sub-profiles alone", v, s, compare(swo, v, s, cfg))
    joined = _record("with common base attached", swo, cfg, concat(u, v), concat(u, s))
    if alone.verdict is joined.verdict:
        return None
    return ProbeWitness((alone, joined), {"base": list(u.levels)})


_AXIOM_CHECKERS: dict[AxiomId, _InstanceChecker] = {
    AxiomId.ANONYMITY: _check_anonymity,
    AxiomId.STRONG_PARETO: _check_strong_pareto,
    AxiomId.WEAK_PARETO: _check_weak_pareto,
    AxiomId.MINIMAL_INCREASING: _check_minimal_increasing,
    AxiomId.PIGOU_DALTON: _check_pigou_dalton,
    AxiomId.MINIMAL_EQUITY: _check_minimal_equity,
    AxiomId.AVOID_SADISTIC: _check_avoid_sadistic,
    AxiomId.AVOID_WEAK_SADISTIC: _check_avoid_weak_sadistic,
    AxiomId.STRONG_AVOID_WEAK_SADISTIC: _check_strong_avoid_weak_sadistic,
    AxiomId.ADDITION_OF_INDIFFERENT: _check_addition_of_indifferent,
    AxiomId.POSITIVE_RESPONSIVENESS: _check_positive_responsiveness,
    AxiomId.UTILITY_INDEPENDENCE: _check_utility_independence,
}

_SAMPLED_PASS_NOTE = (
    "no counterexample in {n} sampled instances; a Pass is sampling evidence only, "
    "a Fail is a constructive refutation"
)


def check_universal_axiom(
    axiom: AxiomId, swo: SwoId, cfg: SwoConfig, sampler: SamplerConfig
) -> ProbeResult:
    """Probe one universal axiom by seeded random falsification.

    Draws ``sampler.samples`` instantiations of the axiom's quantified
    variables and evaluates the axiom's implication through the ordering's
    comparison.  Returns Fail with the first witness found, else Pass.
    """
    checker = _AXIOM_CHECKERS[axiom]
    rng = random.Random(sampler.seed)
    for i in range(sampler.samples):
        witness = checker(rng, sampler, swo, cfg)
        if witness is not None:
            return ProbeResult(
                ProbeStatus.FAIL,
                samples_run=i + 1,
                witness=witness,
                note=f"{axiom.value} violated at sample {i + 1}",
            )
    return ProbeResult(
        ProbeStatus.PASS,
        samples_run=sampler.samples,
        note=_SAMPLED_PASS_NOTE.format(n=sampler.samples),
    )


# ---------------------------------------------------------------------------
# fast comparison of a profile against a uniform profile
#
# The repugnant-conclusion searches sweep population sizes into the tens of
# thousands; materializing every uniform profile would be quadratic.  This
# mirror of the comparison rules evaluates `compare(swo, u, m * level)`
# in O(|u|) and is cross-checked against the real comparator in the tests.


def _uniform_value(swo: SwoId, cfg: SwoConfig, m: int, level: float) -> float:
    if swo is SwoId.TOTAL:
        return m * level
    if swo is SwoId.AVERAGE:
        return level
    if swo is SwoId.CLGU:
        return m * (cfg.g(level) - cfg.g(cfg.critical_level))
    if swo is SwoId.THEOREM2:
        return cfg.f_bounded(m * cfg.g(level)) + (level if level > 0.0 else 0.0)
    if swo is SwoId.MODIFIED_THEOREM2:
        return cfg.f_bounded(m * cfg.g(level)) + level
    raise ValueError(f"{swo} has no single-value form")


def compare_vs_uniform(swo: SwoId, cfg: SwoConfig, u: Profile, m: int, level: float) -> Verdict:
    """Verdict of ``compare(swo, u, replicate(m, level), cfg)`` without
    materializing the uniform profile."""
    if swo is SwoId.THEOREM3:
        u_neg, u_pos = theorem3_keys(u, cfg)
        g_level = cfg.g(level)
        if level <= 0.0:
            v_neg, v_pos = m * g_level, 0.0
        else:
            v_neg, v_pos = 0.0, cfg.f_dampen(m) * g_level
        first = verdict_from_values(u_neg, v_neg, cfg.tolerance)
        if first is not Verdict.INDIFFERENT:
            return first
        return verdict_from_values(u_pos, v_pos, cfg.tolerance)
    if swo is SwoId.LEXIMIN_EXTENDED:
        # After padding, the uniform side is constant, so the first sorted
        # level of u differing from `level` decides; padding with max(u)
        # matters only when every level of u equals `level`.
        for x in sorted(u.levels):
            if x > level:
                return Verdict.BETTER
            if x < level:
                return Verdict.WORSE
        return Verdict.INDIFFERENT
    if swo is SwoId.THEOREM7:
        if len(u) < m:
            return Verdict.BETTER
        if len(u) > m:
            return Verdict.WORSE
        return verdict_from_values(
            value_clgu(u, cfg), m * (cfg.g(level) - cfg.g(cfg.critical_level)), cfg.tolerance
        )
    left = swo_value(swo, u, cfg)
    assert left is not None
    return verdict_from_values(left, _uniform_value(swo, cfg, m, level), cfg.tolerance)


def _has_uniform_sup(swo: SwoId) -> bool:
    return swo in (SwoId.THEOREM2, SwoId.MODIFIED_THEOREM2)


# ---------------------------------------------------------------------------
# existential probes


def check_avoid_repugnant(
    swo: SwoId,
    cfg: SwoConfig,
    candidate_u: Profile,
    epsilon: float = DEFAULT_EPSILON,
    m_max: int = DEFAULT_M_MAX,
) -> ProbeResult:
    """Can any population of people at level ``epsilon`` overtake ``candidate_u``?

    Verifies ``candidate_u`` at-least-as-good-as ``m * epsilon`` for every
    ``m`` up to ``m_max``.  When the ordering's score of a uniform profile has
    a closed-form supremum below the candidate's score, the Pass is certified
    for every ``m``, not just the scanned range.
    """
    if not candidate_u.all_positive():
        raise ValueError("the candidate profile must be strictly positive throughout")
    if not (epsilon > 0.0):
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if m_max < 1:
        raise ValueError(f"m_max must be at least 1, got {m_max}")

    certificate = None
    if _has_uniform_sup(swo):
        sup = value_theorem2_uniform_sup(epsilon, cfg)
        val = swo_value(swo, candidate_u, cfg)
        assert val is not None
        if val >= sup:
            certificate = (
                f"certified: sup over all m of value(m * {epsilon:g}) = {sup:.12g} "
                f"<= value(candidate) = {val:.12g}"
            )
    if certificate is None and swo is SwoId.THEOREM7 and m_max >= len(candidate_u):
        # A larger population can never strictly beat the candidate, so
        # scanning m up to the candidate's size is exhaustive.
        if all(
            compare_vs_uniform(swo, cfg, candidate_u, m, epsilon).at_least
            for m in range(1, len(candidate_u) + 1)
        ):
            certificate = (
                "certified: populations larger than the candidate's are strictly "
                "worse under this ordering, and all smaller sizes were checked"
            )

    scan_limit = min(m_max, 1000) if certificate else m_max
    for m in range(1, scan_limit + 1):
        if not compare_vs_uniform(swo, cfg, candidate_u, m, epsilon).at_least:
            uniform = replicate(m, epsilon)
            rec = ComparisonRecord(
                f"candidate vs {m} people at {epsilon:g}",
                candidate_u,
                uniform,
                compare(swo, candidate_u, uniform, cfg),
            )
            return ProbeResult(
                ProbeStatus.FAIL,
                samples_run=m,
                witness=ProbeWitness((rec,), {"m": m, "epsilon": epsilon}),
                note=f"overtaken at population size {m}",
            )
    if certificate:
        return ProbeResult(ProbeStatus.PASS, samples_run=scan_limit, note=certificate)
    return ProbeResult(
        ProbeStatus.PASS,
        samples_run=scan_limit,
        note=f"no overtaking population of size <= {m_max}; no closed-form bound for this ordering",
    )


def _defeat_witness_m(
    swo: SwoId, cfg: SwoConfig, u: Profile, c: float, m_max: int
) -> tuple[int | None, bool, int]:
    """Smallest m <= m_max with ``m * c`` strictly better than ``u``.

    Returns (m or None, exhaustive, scanned).  ``exhaustive`` is True when the
    absence of an m is certified for every population size, not just m_max.
    """
    if _has_uniform_sup(swo) and c > 0.0:
        val = swo_value(swo, u, cfg)
        assert val is not None
        if val >= value_theorem2_uniform_sup(c, cfg):
            return None, True, 0
    if swo is SwoId.THEOREM7:
        limit = min(len(u), m_max)
        for m in range(1, limit + 1):
            if not compare_vs_uniform(swo, cfg, u, m, c).at_least:
                return m, False, m
        return None, len(u) <= m_max, limit
    for m in range(1, m_max + 1):
        if not compare_vs_uniform(swo, cfg, u, m, c).at_least:
            return m, False, m
    return None, False, m_max


def check_avoid_weak_repugnant(
    swo: SwoId,
    cfg: SwoConfig,
    c_grid: Sequence[float],
    m_max: int = DEFAULT_M_MAX,
    u_candidates: Sequence[Profile] = (),
) -> ProbeResult:
    """Look for a fixed positive level c whose uniform populations overtake
    every candidate profile.

    For each c in the grid the probe searches for a defeating candidate: a
    strictly positive profile that no population at level c strictly beats
    (scanning m up to ``m_max``, or exactly when a closed-form bound applies).
    A singleton at level ``c + 1`` is always tried after the supplied
    candidates.  Every c defeated means Pass; a c that beats every candidate
    means Fail with the per-candidate overtaking sizes.
    """
    if not c_grid:
        raise ValueError("the level grid must not be empty")
    for c in c_grid:
        if not (c > 0.0):
            raise ValueError(f"grid levels must be positive, got {c}")
    for u in u_candidates:
        if not u.all_positive():
            raise ValueError(f"candidate profiles must be strictly positive, got {u}")

    scanned = 0
    defeaters: dict[float, str] = {}
    for c in c_grid:
        candidates = list(u_candidates) + [Profile((c + 1.0,))]
        beaten: list[ComparisonRecord] = []
        beaten_sizes: list[int] = []
        defeater: tuple[Profile, bool] | None = None
        for u in candidates:
            m, exhaustive, steps = _defeat_witness_m(swo, cfg, u, c, m_max)
            scanned += steps
            if m is None:
                defeater = (u, exhaustive)
                break
            uniform = replicate(m, c)
            beaten.append(
                ComparisonRecord(
                    f"candidate vs {m} people at {c:g}",
                    u,
                    uniform,
                    compare(swo, u, uniform, cfg),
                )
            )
            beaten_sizes.append(m)
        if defeater is None:
            return ProbeResult(
                ProbeStatus.FAIL,
                samples_run=scanned,
                witness=ProbeWitness(
                    tuple(beaten),
                    {"c": c, "overtaking_sizes": beaten_sizes},
                ),
                note=f"level {c:g} overtakes every candidate profile",
            )
        u, exhaustive = defeater
        kind = "certified" if exhaustive else f"no overtaking size <= {m_max}"
        defeaters[c] = f"{u} ({kind})"
    note = "; ".join(f"level {c:g} defeated by {d}" for c, d in defeaters.items())
    return ProbeResult(ProbeStatus.PASS, samples_run=scanned, note=note)


# ---------------------------------------------------------------------------
# critical levels


@dataclass(frozen=True)
class CriticalLevelResult:
    """Outcome of a critical-level search; ``value`` is None when absent."""

    value: float | None
    reason: str
    comparisons: int

    @property
    def found(self) -> bool:
        return self.value is not None


def _critical_candidates(u: Profile, cfg: SwoConfig, lo: float, hi: float) -> list[float]:
    seen: set[float] = set()
    ordered: list[float] = []
    for c in (0.0, cfg.critical_level, mean(u), max(u.levels), min(u.levels), *u.levels):
        if lo <= c <= hi and c not in seen:
            seen.add(c)
            ordered.append(c)
    return ordered


def search_critical_level(
    swo: SwoId, cfg: SwoConfig, u: Profile, lo: float, hi: float, tol: float
) -> CriticalLevelResult:
    """Search for a level c with ``(u, c)`` indifferent to ``u``.

    Natural candidates (zero, the configured critical level, the mean and the
    profile's own levels) are tried exactly first, so orderings whose critical
    level is one of these report it without rounding.  Otherwise the verdict
    of ``(u, c)`` vs ``u`` is bisected: the boundary of each strict region is
    located to within ``tol`` and the midpoint between the two boundaries is
    accepted when it verifies as indifferent.  A verdict that jumps between
    strict sides with no indifference point means the ordering has no critical
    level on this bracket (a discontinuous flip); no sign change at all means
    none exists there.  Assumes a single monotone flip across the bracket.
    """
    if not (lo < hi):
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if not (tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {tol}")

    count = 0

    def verdict_at(c: float) -> Verdict:
        nonlocal count
        count += 1
        return compare(swo, concat(u, Profile((c,))), u, cfg)

    for c in _critical_candidates(u, cfg, lo, hi):
        if verdict_at(c) is Verdict.INDIFFERENT:
            return CriticalLevelResult(c, "exact candidate", count)

    v_lo = verdict_at(lo)
    v_hi = verdict_at(hi)
    if v_lo is Verdict.INDIFFERENT:
        return CriticalLevelResult(lo, "bracket endpoint is indifferent", count)
    if v_hi is Verdict.INDIFFERENT:
        return CriticalLevelResult(hi, "bracket endpoint is indifferent", count)
    if v_lo is v_hi:
        return CriticalLevelResult(None, "no sign change in bracket", count)

    def boundary(match: Verdict, keep_low: bool) -> float:
        # Smallest (or largest) point where the verdict stops matching `match`.
        a, b = lo, hi
        for _ in range(200):
            if b - a <= tol / 4.0:
                break
            mid = (a + b) / 2.0
            if (verdict_at(mid) is match) == keep_low:
                a = mid
            else:
                b = mid
        return (a + b) / 2.0

    lower_edge = boundary(v_lo, keep_low=True)
    upper_edge = boundary(v_hi, keep_low=False)
    center = (lower_edge + upper_edge) / 2.0
    if verdict_at(center) is Verdict.INDIFFERENT:
        return CriticalLevelResult(center, "bisection", count)
    return CriticalLevelResult(
        None, "verdict flips with no indifference point (discontinuous ordering)", count
    )


def find_critical_level(
    swo: SwoId, cfg: SwoConfig, u: Profile, lo: float, hi: float, tol: float
) -> float | None:
    """Critical level of ``u`` within ``[lo, hi]``, or None when absent."""
    return search_critical_level(swo, cfg, u, lo, hi, tol).value


# ---------------------------------------------------------------------------
# continuity probing


def probe_extended_continuity(
    swo: SwoId,
    cfg: SwoConfig,
    u: Profile,
    ray_base: Profile,
    ray_dir: Profile,
    tol: float = 1e-12,
) -> ProbeResult:
    """Probe contour-set closedness along one ray of same-size profiles.

    The ray ``base + t * dir`` for t in [0, 1] must cross the indifference
    boundary of ``u`` (different verdicts at the endpoints); otherwise the
    probe is Inconclusive.  Bisecting the verdict flip: finding an indifferent
    point at the boundary means both contour sets contain it (Pass), while a
    verdict that jumps directly between the strict sides leaves one contour
    set missing its limit point (Fail, with the flip-point witness).  This is
    an operational, finitely-sampled stand-in for a topological property;
    rays should target suspected discontinuities.
    """
    if len(ray_base) != len(ray_dir):
        raise ValueError("ray base and direction must have the same population size")
    if not (tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {tol}")

    def point(t: float) -> Profile:
        return Profile(tuple(b + t * d for b, d in zip(ray_base.levels, ray_dir.levels)))

    def verdict_at(t: float) -> Verdict:
        return compare(swo, point(t), u, cfg)

    a, b = 0.0, 1.0
    va, vb = verdict_at(a), verdict_at(b)
    if va is vb:
        return ProbeResult(
            ProbeStatus.INCONCLUSIVE,
            samples_run=2,
            note="no verdict change along the ray; the ray does not cross the boundary",
        )

    samples = 2
    while b - a > tol:
        mid = (a + b) / 2.0
        vm = verdict_at(mid)
        samples += 1
        if vm is Verdict.INDIFFERENT and Verdict.INDIFFERENT not in (va, vb):
            rec = ComparisonRecord("boundary point vs reference", point(mid), u, vm)
            return ProbeResult(
                ProbeStatus.PASS,
                samples_run=samples,
                witness=ProbeWitness((rec,), {"t": mid}),
                note="the flip passes through an indifference point; both contour sets closed here",
            )
        if vm is va:
            a = mid
        elif vm is vb:
            b = mid
        else:
            # A third strict verdict: narrow onto the strict-strict jump.
            a, va = mid, vm

    if Verdict.INDIFFERENT in (va, vb):
        return ProbeResult(
            ProbeStatus.PASS,
            samples_run=samples,
            note="the strict region adjoins an indifference region within tolerance",
        )

    flip_rec = ComparisonRecord("verdict at the flip point", point(b), u, vb)
    approach_rec = ComparisonRecord("approaching from the other side", point(a), u, va)
    losing_side = "lower" if vb is Verdict.BETTER else "upper"
    return ProbeResult(
        ProbeStatus.FAIL,
        samples_run=samples,
        witness=ProbeWitness(
            (flip_rec, approach_rec),
            {
                "t_flip": b,
                "t_approach": a,
                "flip_point": list(point(b).levels),
            },
        ),
        note=(
            f"verdict jumps straight from {va.value} to {vb.value}: "
            f"the {losing_side} contour set does not contain its limit point"
        ),
    )


#: Rays used when no specific discontinuity is targeted: one level crossing
#: zero, and a uniform sweep through the reference profile.
_DEFAULT_RAYS = (
    (Profile((1.0, 1.0)), Profile((2.0, -1.0)), Profile((0.0, 2.0))),
    (Profile((1.0, 1.0)), Profile((0.25, 0.25)), Profile((2.0, 2.0))),
)


def default_continuity_probe(swo: SwoId, cfg: SwoConfig, tol: float = 1e-12) -> ProbeResult:
    """Run the standard ray battery; Fail on the first discontinuous flip."""
    results = []
    samples = 0
    for u, base, direction in _DEFAULT_RAYS:
        result = probe_extended_continuity(swo, cfg, u, base, direction, tol)
        samples += result.samples_run
        if result.failed:
            return ProbeResult(ProbeStatus.FAIL, samples, result.witness, result.note)
        results.append(result)
    if any(r.passed for r in results):
        return ProbeResult(
            ProbeStatus.PASS, samples, note="every crossing ray flips through an indifference point"
        )
    return ProbeResult(ProbeStatus.INCONCLUSIVE, samples, note="no ray crossed the boundary")


# ---------------------------------------------------------------------------
# zero-addition monotonicity


def probe_monotone_zero_addition(
    swo: SwoId,
    cfg: SwoConfig,
    u: Profile,
    t_grid: Sequence[float] = DEFAULT_T_GRID,
) -> ProbeResult:
    """Search for an everywhere-at-least-as-good v whose extension by one
    person at level zero is still at least as good as ``u``.

    Candidates are ``u`` itself, uniform raises ``u + t``, and scalings
    ``(1 + t) * u`` over the grid.  For orderings whose score of any profile
    containing a zero is capped by the bound of the welfare transform, a
    candidate score above that cap proves no witness can exist (Fail with the
    bound note).  An exhausted grid is Inconclusive, not a refutation.
    """
    if not u.all_positive():
        raise ValueError("the reference profile must be strictly positive throughout")
    for t in t_grid:
        if not (t > 0.0):
            raise ValueError(f"grid offsets must be positive, got {t}")

    if _has_uniform_sup(swo):
        val = swo_value(swo, u, cfg)
        assert val is not None
        cap = cfg.f_bounded_sup()
        if val - cap > cfg.tolerance:
            rec = _record("reference extended by a zero vs reference", swo, cfg, concat(u, Profile((0.0,))), u)
            return ProbeResult(
                ProbeStatus.FAIL,
                samples_run=1,
                witness=ProbeWitness((rec,), {"score_cap_with_zero": cap, "reference_score": val}),
                note=(
                    f"no witness can exist: any profile containing a zero scores at most "
                    f"{cap:.12g}, below the reference score {val:.12g}"
                ),
            )

    candidates = [u]
    candidates += [Profile(tuple(x + t for x in u.levels)) for t in t_grid]
    candidates += [Profile(tuple((1.0 + t) * x for x in u.levels)) for t in t_grid]
    for i, v in enumerate(candidates, start=1):
        rec = _record("raised profile plus a zero vs reference", swo, cfg, concat(v, Profile((0.0,))), u)
        if rec.verdict.at_least:
            return ProbeResult(
                ProbeStatus.PASS,
                samples_run=i,
                witness=ProbeWitness((rec,), {"v": list(v.levels)}),
                note="witness found",
            )
    return ProbeResult(
        ProbeStatus.INCONCLUSIVE,
        samples_run=len(candidates),
        note="search grid exhausted without a witness",
    )
