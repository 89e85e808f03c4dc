"""Every social welfare ordering in the registry, behind one comparison call.

Each ordering is a complete, transitive rule for ranking two well-being
profiles of possibly different population sizes.  Value-based orderings
compare a real-valued score with a declared indifference tolerance; the
lexicographic orderings compare keys or sorted levels exactly.

Registry:

======================  =======================================================
``total``               sum of levels
``average``             mean of levels
``clgu``                sum of ``g(level) - g(critical_level)``
``theorem2``            bounded transform of the welfare sum plus the
                        positive-part geometric mean
``theorem3``            lexicographic: non-positive-part welfare sum first,
                        then population-dampened positive-part welfare sum
``leximin``             extended leximin: the shorter profile is padded with
                        copies of its own maximum, then sorted levels are
                        compared from the worst-off upward
``theorem7``            smaller population always wins; equal sizes fall back
                        to the ``clgu`` sum
``modified-theorem2``   bounded welfare sum plus positive-part geometric mean
                        minus the magnitude of the negative-part geometric
                        mean
======================  =======================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique

from .profiles import (
    Profile,
    Verdict,
    count_positive,
    geomean_negative_part_abs,
    geomean_positive_part,
    mean,
    sorted_ascending,
)

__all__ = [
    "SwoConfig",
    "SwoId",
    "BASELINE_IDS",
    "VALUE_BASED_IDS",
    "compare",
    "compare_baseline",
    "compare_theorem3",
    "compare_leximin_extended",
    "compare_theorem7",
    "value_theorem2",
    "value_theorem7_reduced",
    "value_modified_theorem2",
    "swo_value",
    "theorem3_keys",
    "verdict_from_values",
]

_G_KINDS = ("identity", "exp_bounded")
_F_BOUNDED_KINDS = ("arctan",)
_F_DAMPEN_KINDS = ("sqrt", "identity")


@dataclass(frozen=True)
class SwoConfig:
    """Open parameters of the orderings.

    ``g_kind`` selects the per-person welfare transform (continuous, strictly
    increasing, concave, zero at zero): the identity, or ``1 - exp(-x)``.
    ``f_bounded_kind`` selects the bounded strictly increasing transform of
    the welfare sum (``arctan``).  ``f_dampen_kind`` selects the population
    dampening used by the lexicographic positive part (``sqrt(n)``, or ``n``
    which recovers plain totals).  ``critical_level`` is the level whose
    addition the ``clgu`` and ``theorem7`` rules treat as neutral.
    ``tolerance`` is the indifference band for value comparisons.
    """

    g_kind: str = "identity"
    f_bounded_kind: str = "arctan"
    f_dampen_kind: str = "sqrt"
    critical_level: float = 0.0
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if self.g_kind not in _G_KINDS:
            raise ValueError(f"unknown g kind {self.g_kind!r}; expected one of {_G_KINDS}")
        if self.f_bounded_kind not in _F_BOUNDED_KINDS:
            raise ValueError(f"unknown bounded-f kind {self.f_bounded_kind!r}; expected one of {_F_BOUNDED_KINDS}")
        if self.f_dampen_kind not in _F_DAMPEN_KINDS:
            raise ValueError(f"unknown dampening-f kind {self.f_dampen_kind!r}; expected one of {_F_DAMPEN_KINDS}")
        if not (self.tolerance > 0.0):
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if not math.isfinite(self.critical_level):
            raise ValueError(f"critical level must be finite, got {self.critical_level}")

    def g(self, x: float) -> float:
        """Per-person welfare transform; g(0) = 0 for every kind."""
        if self.g_kind == "identity":
            return x
        return 1.0 - math.exp(-x)

    def f_bounded(self, x: float) -> float:
        """Bounded strictly increasing transform of a welfare sum."""
        return math.atan(x)

    def f_bounded_sup(self) -> float:
        """Least upper bound of :meth:`f_bounded` over the reals."""
        return math.pi / 2.0

    def f_dampen(self, n: int) -> float:
        """Population dampening for the lexicographic positive part."""
        if self.f_dampen_kind == "sqrt":
            return math.sqrt(n)
        return float(n)


@unique
class SwoId(Enum):
    """Identifiers of the orderings in the registry; values double as CLI names."""

    TOTAL = "total"
    AVERAGE = "average"
    CLGU = "clgu"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    LEXIMIN_EXTENDED = "leximin"
    THEOREM7 = "theorem7"
    MODIFIED_THEOREM2 = "modified-theorem2"

    @classmethod
    def from_cli(cls, name: str) -> "SwoId":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(member.value for member in cls)
            raise ValueError(f"unknown ordering {name!r}; expected one of: {valid}") from None


BASELINE_IDS = (SwoId.TOTAL, SwoId.AVERAGE, SwoId.CLGU)

#: Orderings ranked by a single real score (used for value printing and
#: closed-form bound reasoning).  theorem7 is listed because its reduced
#: two-variable form assigns a score that reproduces the direct rule.
VALUE_BASED_IDS = (
    SwoId.TOTAL,
    SwoId.AVERAGE,
    SwoId.CLGU,
    SwoId.THEOREM2,
    SwoId.THEOREM7,
    SwoId.MODIFIED_THEOREM2,
)


def verdict_from_values(left: float, right: float, tolerance: float) -> Verdict:
    """Three-valued comparison of scores: within ``tolerance`` is indifferent."""
    if left - right > tolerance:
        return Verdict.BETTER
    if right - left > tolerance:
        return Verdict.WORSE
    return Verdict.INDIFFERENT


def _g_sum(p: Profile, cfg: SwoConfig) -> float:
    if cfg.g_kind == "identity":
        return math.fsum(p.levels)
    return math.fsum(cfg.g(x) for x in p.levels)


def value_total(p: Profile, cfg: SwoConfig) -> float:
    return math.fsum(p.levels)


def value_average(p: Profile, cfg: SwoConfig) -> float:
    return mean(p)


def value_clgu(p: Profile, cfg: SwoConfig) -> float:
    gc = cfg.g(cfg.critical_level)
    return math.fsum(cfg.g(x) - gc for x in p.levels)


def value_theorem2(u: Profile, cfg: SwoConfig) -> float:
    """Bounded welfare sum plus the positive-part geometric mean.

    The second term is exactly 0 whenever any level is <= 0, so a single
    non-positive person removes the geometric bonus entirely; the first term
    never exceeds its bound, which is what blocks arbitrarily large
    populations of barely-positive people from overtaking a genuinely good
    profile.
    """
    return cfg.f_bounded(_g_sum(u, cfg)) + geomean_positive_part(u)


def theorem3_keys(u: Profile, cfg: SwoConfig) -> tuple[float, float]:
    """The two lexicographic keys: non-positive welfare sum, then the
    population-dampened positive welfare sum (0 when nobody is positive)."""
    negative_key = math.fsum(cfg.g(x) for x in u.levels if x <= 0.0)
    positives = count_positive(u)
    if positives == 0:
        positive_key = 0.0
    else:
        positive_key = cfg.f_dampen(positives) / positives * math.fsum(
            cfg.g(x) for x in u.levels if x > 0.0
        )
    return negative_key, positive_key


def compare_theorem3(u: Profile, v: Profile, cfg: SwoConfig) -> Verdict:
    """Lexicographic comparison: the profile whose non-positive members fare
    better wins outright; ties fall through to the dampened positive part."""
    u_neg, u_pos = theorem3_keys(u, cfg)
    v_neg, v_pos = theorem3_keys(v, cfg)
    first = verdict_from_values(u_neg, v_neg, cfg.tolerance)
    if first is not Verdict.INDIFFERENT:
        return first
    return verdict_from_values(u_pos, v_pos, cfg.tolerance)


def compare_leximin_extended(u: Profile, v: Profile) -> Verdict:
    """Extended leximin: pad the shorter profile with copies of its own
    maximum to equal length, sort ascending, and let the first strict
    difference from the worst-off position decide.  Element comparisons are
    exact; there is no tolerance band.
    """
    n, m = len(u), len(v)
    if n > m:
        v = Profile(v.levels + (max(v.levels),) * (n - m))
    elif m > n:
        u = Profile(u.levels + (max(u.levels),) * (m - n))
    for a, b in zip(sorted_ascending(u).levels, sorted_ascending(v).levels):
        if a > b:
            return Verdict.BETTER
        if a < b:
            return Verdict.WORSE
    return Verdict.INDIFFERENT


def compare_theorem7(u: Profile, v: Profile, cfg: SwoConfig) -> Verdict:
    """Population count decides first (strictly fewer people is strictly
    better); equal sizes are ranked by the ``clgu`` welfare sum."""
    if len(u) < len(v):
        return Verdict.BETTER
    if len(u) > len(v):
        return Verdict.WORSE
    return verdict_from_values(value_clgu(u, cfg), value_clgu(v, cfg), cfg.tolerance)


def value_theorem7_reduced(u: Profile, cfg: SwoConfig) -> float:
    """Two-variable score equivalent to :func:`compare_theorem7`.

    The bounded transform keeps the welfare contribution inside an interval
    of width pi, while each extra person subtracts a full pi, so any smaller
    population scores strictly above any larger one and equal sizes reduce to
    the welfare sum.
    """
    return cfg.f_bounded(value_clgu(u, cfg)) - (len(u) - 1) * math.pi


def value_modified_theorem2(u: Profile, cfg: SwoConfig) -> float:
    """Bounded welfare sum plus the positive-part geometric mean minus the
    magnitude of the negative-part geometric mean.

    At most one geometric term is nonzero: a profile cannot be all-positive
    and all-negative at once.  The subtracted magnitude makes a few deeply
    miserable people score below many slightly miserable ones.
    """
    return (
        cfg.f_bounded(_g_sum(u, cfg))
        + geomean_positive_part(u)
        - geomean_negative_part_abs(u)
    )


def value_theorem2_uniform_sup(epsilon: float, cfg: SwoConfig) -> float:
    """Supremum over population size of the ``theorem2`` (and
    ``modified-theorem2``) score of a uniform all-``epsilon`` profile,
    for ``epsilon > 0``: the bound of the welfare transform plus ``epsilon``.
    """
    if epsilon <= 0.0:
        raise ValueError(f"uniform supremum is only defined for positive levels, got {epsilon}")
    return cfg.f_bounded_sup() + epsilon


def compare_baseline(kind: SwoId, u: Profile, v: Profile, cfg: SwoConfig) -> Verdict:
    """Comparison for the classical baselines: total, average, or clgu."""
    if kind is SwoId.TOTAL:
        return verdict_from_values(value_total(u, cfg), value_total(v, cfg), cfg.tolerance)
    if kind is SwoId.AVERAGE:
        return verdict_from_values(value_average(u, cfg), value_average(v, cfg), cfg.tolerance)
    if kind is SwoId.CLGU:
        return verdict_from_values(value_clgu(u, cfg), value_clgu(v, cfg), cfg.tolerance)
    raise ValueError(f"{kind} is not a baseline ordering")


_VALUE_FUNCTIONS = {
    SwoId.TOTAL: value_total,
    SwoId.AVERAGE: value_average,
    SwoId.CLGU: value_clgu,
    SwoId.THEOREM2: value_theorem2,
    SwoId.THEOREM7: value_theorem7_reduced,
    SwoId.MODIFIED_THEOREM2: value_modified_theorem2,
}


def swo_value(swo: SwoId, u: Profile, cfg: SwoConfig) -> float | None:
    """The ordering's real score of ``u``, or None for purely lexicographic
    orderings (``theorem3``, ``leximin``)."""
    fn = _VALUE_FUNCTIONS.get(swo)
    return None if fn is None else fn(u, cfg)


def compare(swo: SwoId, u: Profile, v: Profile, cfg: SwoConfig) -> Verdict:
    """Compare two profiles under the given ordering.

    Complete by construction: always returns a :class:`Verdict`.
    """
    if swo in BASELINE_IDS:
        return compare_baseline(swo, u, v, cfg)
    if swo is SwoId.THEOREM2:
        return verdict_from_values(value_theorem2(u, cfg), value_theorem2(v, cfg), cfg.tolerance)
    if swo is SwoId.THEOREM3:
        return compare_theorem3(u, v, cfg)
    if swo is SwoId.LEXIMIN_EXTENDED:
        return compare_leximin_extended(u, v)
    if swo is SwoId.THEOREM7:
        return compare_theorem7(u, v, cfg)
    if swo is SwoId.MODIFIED_THEOREM2:
        return verdict_from_values(
            value_modified_theorem2(u, cfg), value_modified_theorem2(v, cfg), cfg.tolerance
        )
    raise ValueError(f"unknown ordering id {swo!r}")
