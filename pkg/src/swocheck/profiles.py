"""Well-being profiles and the primitive statistics shared by every ordering.

A profile is a finite, nonempty sequence of real well-being levels, one per
person.  Profiles of different lengths are first-class: the whole point of the
library is comparing populations of different sizes.  This module also fixes
the text notation for profiles (``k*x`` replicates level ``x`` for ``k``
people) and provides the handful of statistics the comparison rules are built
from: mean, ascending sort, positive/negative-part geometric means, and the
count of strictly positive levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, Iterator

__all__ = [
    "ProfileError",
    "EmptyProfileError",
    "ParseError",
    "Verdict",
    "Profile",
    "parse_profile",
    "parse_profile_lines",
    "concat",
    "replicate",
    "mean",
    "sorted_ascending",
    "geomean_positive_part",
    "geomean_negative_part_abs",
    "count_positive",
]


class ProfileError(ValueError):
    """A profile could not be constructed."""


class EmptyProfileError(ProfileError):
    """The domain contains no empty profile: every population has n >= 1."""


class ParseError(ProfileError):
    """A malformed token in profile text; carries the 1-based token position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"token {position}: {message}")
        self.position = position


@unique
class Verdict(Enum):
    """Three-valued outcome of a social comparison of two profiles.

    ``BETTER`` and ``WORSE`` are mutual inverses under swapping the arguments;
    ``INDIFFERENT`` is symmetric.
    """

    BETTER = "BETTER"
    WORSE = "WORSE"
    INDIFFERENT = "INDIFFERENT"

    def swapped(self) -> "Verdict":
        """The verdict of the same comparison with its arguments exchanged."""
        if self is Verdict.BETTER:
            return Verdict.WORSE
        if self is Verdict.WORSE:
            return Verdict.BETTER
        return Verdict.INDIFFERENT

    @property
    def at_least(self) -> bool:
        """True when the left profile is at least as good as the right."""
        return self is not Verdict.WORSE

    @property
    def strictly_better(self) -> bool:
        return self is Verdict.BETTER


@dataclass(frozen=True)
class Profile:
    """A nonempty, finite sequence of well-being levels (binary64 reals).

    Immutable after construction; every level must be finite (no NaN or
    infinities).  Accepts any iterable of numbers and normalizes to a tuple
    of floats.
    """

    levels: tuple[float, ...]

    def __post_init__(self) -> None:
        try:
            levels = tuple(float(x) for x in self.levels)
        except TypeError:
            raise ProfileError(f"levels must be an iterable of reals, got {self.levels!r}") from None
        if not levels:
            raise EmptyProfileError("a profile must contain at least one individual")
        for x in levels:
            if not math.isfinite(x):
                raise ProfileError(f"well-being levels must be finite, got {x!r}")
        object.__setattr__(self, "levels", levels)

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[float]:
        return iter(self.levels)

    def __getitem__(self, i: int) -> float:
        return self.levels[i]

    @property
    def size(self) -> int:
        """Number of individuals in the profile."""
        return len(self.levels)

    def all_positive(self) -> bool:
        return all(x > 0.0 for x in self.levels)

    def all_negative(self) -> bool:
        return all(x < 0.0 for x in self.levels)

    def __str__(self) -> str:
        return "(" + " ".join(format(x, "g") for x in self.levels) + ")"


def _parse_real(text: str, position: int, what: str = "level") -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{what} {text!r} is not a decimal real", position) from None
    if not math.isfinite(value):
        raise ParseError(f"{what} {text!r} is not finite", position)
    return value


def parse_profile(text: str) -> Profile:
    """Parse profile text into a :class:`Profile`.

    The grammar is whitespace-separated tokens, each either a decimal real or
    ``k*x`` where ``k`` is a positive integer replication count and ``x`` a
    decimal real.  Tokens expand left to right, so ``"2*1 -1"`` yields the
    profile ``(1, 1, -1)``.  Parsing is locale-independent (period decimal
    separator).

    Raises :class:`EmptyProfileError` on empty input and :class:`ParseError`
    (with the 1-based token position) on a malformed token or ``k = 0``.
    """
    tokens = text.split()
    if not tokens:
        raise EmptyProfileError("profile text contains no tokens")
    levels: list[float] = []
    for position, token in enumerate(tokens, start=1):
        if "*" in token:
            count_text, _, level_text = token.partition("*")
            try:
                count = int(count_text)
            except ValueError:
                raise ParseError(f"replication count {count_text!r} is not an integer", position) from None
            if count < 1:
                raise ParseError(f"replication count must be a positive integer, got {count}", position)
            level = _parse_real(level_text, position)
            levels.extend([level] * count)
        else:
            levels.append(_parse_real(token, position))
    return Profile(tuple(levels))


def parse_profile_lines(text: str) -> list[Profile]:
    """Parse a profile file: one profile per line, ``#`` begins a comment line.

    Blank lines are skipped.  Line numbers are not tracked; a bad token raises
    :class:`ParseError` for the offending line.
    """
    profiles: list[Profile] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        profiles.append(parse_profile(stripped))
    return profiles


def concat(a: Profile, b: Profile) -> Profile:
    """The profile of both populations together: levels of ``a`` then ``b``."""
    return Profile(a.levels + b.levels)


def replicate(m: int, x: float) -> Profile:
    """A profile of ``m`` individuals, each at well-being level ``x``."""
    if m < 1:
        raise ValueError(f"population size must be a positive integer, got {m}")
    return Profile((float(x),) * m)


def mean(p: Profile) -> float:
    """Arithmetic mean of the levels, computed with an exact inner sum.

    A constant profile short-circuits to its level so that the mean of
    ``m`` copies of ``x`` is ``x`` without any rounding detour.
    """
    first = p.levels[0]
    if all(x == first for x in p.levels):
        return first
    return math.fsum(p.levels) / len(p)


def sorted_ascending(p: Profile) -> Profile:
    """Levels in nondecreasing order."""
    return Profile(tuple(sorted(p.levels)))


def geomean_positive_part(p: Profile) -> float:
    """Geometric mean of the levels when all are strictly positive, else 0.

    Any level <= 0 contributes a zero factor after clamping negatives to zero,
    which collapses the whole product, so the result is exactly 0 unless the
    profile is strictly positive.  The strictly positive case is evaluated in
    the log domain to avoid overflow and underflow for large populations; a
    constant profile short-circuits to its level exactly.
    """
    levels = p.levels
    if any(x <= 0.0 for x in levels):
        return 0.0
    first = levels[0]
    if all(x == first for x in levels):
        return first
    return math.exp(math.fsum(map(math.log, levels)) / len(levels))


def geomean_negative_part_abs(p: Profile) -> float:
    """Geometric mean of the absolute levels when all are strictly negative.

    Mirrors :func:`geomean_positive_part` for the negative part: any level
    >= 0 zeroes a factor and hence the result.  The magnitude is returned;
    callers that need the penalty reattach the sign.  (An n-th root of a
    product of negative reals is not defined over the reals for even n, so
    the magnitude-with-explicit-sign convention is used throughout.)
    """
    levels = p.levels
    if any(x >= 0.0 for x in levels):
        return 0.0
    first = -levels[0]
    if all(-x == first for x in levels):
        return first
    return math.exp(math.fsum(math.log(-x) for x in levels) / len(levels))


def count_positive(p: Profile) -> int:
    """Number of strictly positive levels."""
    return sum(1 for x in p.levels if x > 0.0)
