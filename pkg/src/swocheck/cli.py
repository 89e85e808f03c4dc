"""Command-line front end: comparisons, axiom tables, critical levels, chains.

Exit codes: 0 pass/complete, 1 fail/violation, 2 inconclusive (and nothing
failed), 3 not found, 64 usage error.  JSON reports are key-sorted with a
fixed schema version so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field

from .axioms import (
    DEFAULT_EPSILON,
    DEFAULT_M_MAX,
    DEFAULT_T_GRID,
    DEFAULT_WEAK_REPUGNANT_GRID,
    REPUGNANT_CANDIDATES,
    AxiomId,
    ComparisonRecord,
    ProbeResult,
    ProbeStatus,
    ProbeWitness,
    SamplerConfig,
    check_avoid_repugnant,
    check_avoid_weak_repugnant,
    check_universal_axiom,
    default_continuity_probe,
    derive_seed,
    probe_monotone_zero_addition,
    search_critical_level,
)
from .orderings import SwoConfig, SwoId, compare, swo_value
from .profiles import Profile, ProfileError, concat, parse_profile
from .witnesses import (
    WitnessChain,
    check_proposition1,
    run_theorem1_chain,
    run_theorem4_chain,
    test_lemma2_equivalence,
    test_lemma3_implication,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_NOT_FOUND = 3
EXIT_USAGE = 64

SCHEMA_VERSION = "1"

#: The full probe battery: every universal axiom plus the existential and
#: topological probes at their canonical inputs.
EXTRA_PROBES = (
    "AvoidRepugnant",
    "AvoidWeakRepugnant",
    "MonotonicityZero",
    "ExtendedContinuity",
    "WeakExistence",
)
ALL_PROBES = tuple(a.value for a in AxiomId) + EXTRA_PROBES

_WEAK_EXISTENCE_PROFILE = Profile((1.0, 2.0, 3.0))
_MONOTONE_ZERO_PROFILE = Profile((100.0, 100.0))


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 64."""

    def error(self, message: str) -> None:  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class Report:
    """Machine-readable result document; serializes deterministically."""

    command: str
    seed: int
    swos: tuple[dict, ...]
    rows: tuple[dict, ...]
    schema_version: str = SCHEMA_VERSION

    def to_payload(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "seed": self.seed,
            "swos": list(self.swos),
            "rows": list(self.rows),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2) + "\n"


def _config_payload(cfg: SwoConfig) -> dict:
    return {
        "g_kind": cfg.g_kind,
        "f_bounded_kind": cfg.f_bounded_kind,
        "f_dampen_kind": cfg.f_dampen_kind,
        "critical_level": cfg.critical_level,
        "tolerance": cfg.tolerance,
    }


def _witness_digest(witness_payload: dict | None) -> str:
    if witness_payload is None:
        return ""
    canonical = json.dumps(witness_payload, sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _short_profile(p: Profile) -> str:
    if len(p) > 8 and len(set(p.levels)) == 1:
        return f"{len(p)}*{p.levels[0]:g}"
    if len(p) > 8:
        head = " ".join(format(x, "g") for x in p.levels[:4])
        return f"({head} ... n={len(p)})"
    return str(p)


# ---------------------------------------------------------------------------
# probe battery


def _weak_existence_probe(swo: SwoId, cfg: SwoConfig) -> ProbeResult:
    result = search_critical_level(swo, cfg, _WEAK_EXISTENCE_PROFILE, -1e3, 1e3, 1e-9)
    if result.found:
        return ProbeResult(
            ProbeStatus.PASS,
            samples_run=result.comparisons,
            note=f"critical level {result.value:.12g} for {_WEAK_EXISTENCE_PROFILE} ({result.reason})",
        )
    u = _WEAK_EXISTENCE_PROFILE
    records = tuple(
        ComparisonRecord(
            f"profile plus {c:g} vs profile",
            concat(u, Profile((c,))),
            u,
            compare(swo, concat(u, Profile((c,))), u, cfg),
        )
        for c in (-1e3, 0.0, 1e3)
    )
    return ProbeResult(
        ProbeStatus.FAIL,
        samples_run=result.comparisons,
        witness=ProbeWitness(records, {"lo": -1e3, "hi": 1e3}),
        note=f"no critical level on the bracket: {result.reason}",
    )


def _repugnant_probe(swo: SwoId, cfg: SwoConfig) -> ProbeResult:
    """Existential over the candidate profiles: a single surviving candidate
    establishes avoidance."""
    first_fail: ProbeResult | None = None
    samples = 0
    for candidate in REPUGNANT_CANDIDATES:
        result = check_avoid_repugnant(swo, cfg, candidate, DEFAULT_EPSILON, DEFAULT_M_MAX)
        samples += result.samples_run
        if result.passed:
            return ProbeResult(
                ProbeStatus.PASS,
                samples_run=samples,
                note=f"candidate {candidate} survives: {result.note}",
            )
        if first_fail is None:
            first_fail = result
    assert first_fail is not None
    return ProbeResult(
        ProbeStatus.FAIL,
        samples_run=samples,
        witness=first_fail.witness,
        note=f"every candidate overtaken; first: {first_fail.note}",
    )


def run_probe(
    name: str,
    swo: SwoId,
    cfg: SwoConfig,
    master_seed: int,
    samples: int,
    range_b: float,
    max_pop: int,
) -> ProbeResult:
    """Run one named probe with a seed derived from (master seed, swo, probe)."""
    axiom_names = {a.value: a for a in AxiomId}
    if name in axiom_names:
        sampler = SamplerConfig(
            seed=derive_seed(master_seed, f"{swo.value}:{name}"),
            range_b=range_b,
            max_pop=max_pop,
            samples=samples,
        )
        return check_universal_axiom(axiom_names[name], swo, cfg, sampler)
    if name == "AvoidRepugnant":
        return _repugnant_probe(swo, cfg)
    if name == "AvoidWeakRepugnant":
        return check_avoid_weak_repugnant(
            swo,
            cfg,
            c_grid=DEFAULT_WEAK_REPUGNANT_GRID,
            m_max=DEFAULT_M_MAX,
            u_candidates=(Profile((100.0, 100.0)),),
        )
    if name == "MonotonicityZero":
        return probe_monotone_zero_addition(swo, cfg, _MONOTONE_ZERO_PROFILE, DEFAULT_T_GRID)
    if name == "ExtendedContinuity":
        return default_continuity_probe(swo, cfg)
    if name == "WeakExistence":
        return _weak_existence_probe(swo, cfg)
    raise ValueError(f"unknown probe {name!r}")


def _aggregate_exit(statuses: list[ProbeStatus]) -> int:
    if any(s is ProbeStatus.FAIL for s in statuses):
        return EXIT_FAIL
    if any(s is ProbeStatus.INCONCLUSIVE for s in statuses):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands


def _build_config(args: argparse.Namespace) -> SwoConfig:
    return SwoConfig(
        g_kind=getattr(args, "g", "identity"),
        critical_level=getattr(args, "c", 0.0),
        tolerance=getattr(args, "tau", 1e-9),
    )


def cmd_compare(args: argparse.Namespace) -> int:
    swo = SwoId.from_cli(args.swo)
    cfg = _build_config(args)
    left = parse_profile(args.profile_a)
    right = parse_profile(args.profile_b)
    verdict = compare(swo, left, right, cfg)
    left_value = swo_value(swo, left, cfg)
    right_value = swo_value(swo, right, cfg)
    if left_value is None or right_value is None:
        print(verdict.value)
    else:
        print(f"{verdict.value}  value_left={left_value:.12g} value_right={right_value:.12g}")
    return EXIT_OK


def cmd_axioms(args: argparse.Namespace) -> int:
    swo = SwoId.from_cli(args.swo)
    cfg = _build_config(args)
    if args.axiom == "all":
        probes = list(ALL_PROBES)
    else:
        probes = [AxiomId.from_cli(args.axiom).value]

    rows = []
    statuses = []
    print(f"{'probe':32} {'status':14} {'samples':>9}  note")
    for name in probes:
        start = time.perf_counter()
        result = run_probe(name, swo, cfg, args.seed, args.samples, args.range, args.max_pop)
        elapsed_ms = (time.perf_counter() - start) * 1e3
        statuses.append(result.status)
        rows.append(
            {
                "swo": swo.value,
                "probe": name,
                "status": result.status.value,
                "samples": result.samples_run,
                "note": result.note,
                "witness": result.witness.to_payload() if result.witness else None,
            }
        )
        print(f"{name:32} {result.status.value:14} {result.samples_run:>9}  {result.note}  [{elapsed_ms:.1f} ms]")

    if args.json:
        report = Report(
            command="axioms",
            seed=args.seed,
            swos=({"id": swo.value, "config": _config_payload(cfg)},),
            rows=tuple(rows),
        )
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    return _aggregate_exit(statuses)


def cmd_matrix(args: argparse.Namespace) -> int:
    names = [s for s in args.swos.split(",") if s]
    if not names:
        raise ProfileError("at least one ordering id is required")
    if names == ["all"]:
        swos = list(SwoId)
    else:
        swos = [SwoId.from_cli(name) for name in names]
    cfg = _build_config(args)

    rows = []
    statuses = []
    for swo in swos:
        for name in ALL_PROBES:
            result = run_probe(name, swo, cfg, args.seed, args.samples, args.range, args.max_pop)
            statuses.append(result.status)
            witness_payload = result.witness.to_payload() if result.witness else None
            rows.append(
                {
                    "swo": swo.value,
                    "probe": name,
                    "status": result.status.value,
                    "samples": result.samples_run,
                    "note": result.note,
                    "witness": witness_payload,
                }
            )
        line = " ".join(
            f"{row['probe']}={row['status']}" for row in rows if row["swo"] == swo.value
        )
        print(f"{swo.value}: {line}")

    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["swo", "axiom", "status", "samples", "witness_digest"])
            for row in rows:
                writer.writerow(
                    [
                        row["swo"],
                        row["probe"],
                        row["status"],
                        row["samples"],
                        _witness_digest(row["witness"]),
                    ]
                )
    if args.json:
        report = Report(
            command="matrix",
            seed=args.seed,
            swos=tuple({"id": swo.value, "config": _config_payload(cfg)} for swo in swos),
            rows=tuple(rows),
        )
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    return _aggregate_exit(statuses)


def cmd_critical_level(args: argparse.Namespace) -> int:
    if not (args.lo < args.hi):
        raise ProfileError(f"need --lo < --hi, got [{args.lo}, {args.hi}]")
    swo = SwoId.from_cli(args.swo)
    cfg = _build_config(args)
    profile = parse_profile(args.profile)
    result = search_critical_level(swo, cfg, profile, args.lo, args.hi, args.tol)
    if result.found:
        print(f"c={result.value:.12g}")
        return EXIT_OK
    print(f"NONE ({result.reason})")
    return EXIT_NOT_FOUND


def _print_chain(chain: WitnessChain) -> None:
    for i, step in enumerate(chain.steps, start=1):
        mark = "ok" if step.ok else "BREAK"
        print(
            f"  step {i}: {_short_profile(step.left)} {step.requirement.symbol} "
            f"{_short_profile(step.right)}  observed={step.observed.value} [{mark}]  {step.description}"
        )
    if chain.derived:
        derived = ", ".join(
            f"{k}={v}" for k, v in sorted(chain.derived.items()) if not isinstance(v, list)
        )
        print(f"  derived: {derived}")
    if chain.note:
        print(f"  note: {chain.note}")
    if chain.completed:
        print("  chain completed: the constructed population overtakes the reference")
    else:
        print(f"  chain broke at step {chain.broke_at_step}")


def cmd_witness(args: argparse.Namespace) -> int:
    swo = SwoId.from_cli(args.swo)
    cfg = _build_config(args)
    rows: list[dict] = []

    if args.theorem == "1":
        chain = run_theorem1_chain(swo, cfg, parse_profile(args.u), args.epsilon)
        print(f"zero-absorption overtaking chain under {swo.value}:")
        _print_chain(chain)
        rows.append({"swo": swo.value, "probe": "chain-zero-absorption", **chain.to_payload()})
        exit_code = EXIT_OK if chain.completed else EXIT_FAIL
    elif args.theorem == "4":
        chain = run_theorem4_chain(swo, cfg, parse_profile(args.u), parse_profile(args.v), args.epsilon)
        print(f"critical-level extension chain under {swo.value}:")
        _print_chain(chain)
        rows.append({"swo": swo.value, "probe": "chain-critical-level", **chain.to_payload()})
        exit_code = EXIT_OK if chain.completed else EXIT_FAIL
    elif args.theorem == "prop1":
        verdict = check_proposition1(swo, cfg, args.c, args.epsilon, args.n, args.m)
        print(
            f"{args.n} people at {args.c:g} vs {args.m} people at {args.c - args.epsilon:g}: "
            f"{verdict.value}"
        )
        rows.append(
            {
                "swo": swo.value,
                "probe": "critical-level-dominance",
                "observed": verdict.value,
                "expected": "BETTER",
            }
        )
        exit_code = EXIT_OK if verdict.value == "BETTER" else EXIT_FAIL
    elif args.theorem in ("lemma2", "lemma3"):
        sampler = SamplerConfig(seed=args.seed, samples=args.samples)
        if args.theorem == "lemma2":
            result = test_lemma2_equivalence(swo, cfg, sampler)
            probe_name = "independence-equivalence"
        else:
            result = test_lemma3_implication(swo, cfg, sampler)
            probe_name = "strengthening-implication"
        print(f"{probe_name} under {swo.value}: {result.status.value}")
        print(f"  {result.note}")
        if result.witness:
            for rec in result.witness.comparisons:
                print(
                    f"  witness: {_short_profile(rec.left)} vs {_short_profile(rec.right)} "
                    f"-> {rec.verdict.value} ({rec.label})"
                )
        rows.append(
            {
                "swo": swo.value,
                "probe": probe_name,
                "status": result.status.value,
                "samples": result.samples_run,
                "note": result.note,
                "witness": result.witness.to_payload() if result.witness else None,
            }
        )
        exit_code = EXIT_OK if not result.failed else EXIT_FAIL
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown chain {args.theorem!r}")

    if args.json:
        report = Report(
            command="witness",
            seed=getattr(args, "seed", 0),
            swos=({"id": swo.value, "config": _config_payload(cfg)},),
            rows=tuple(rows),
        )
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    return exit_code


# ---------------------------------------------------------------------------
# argument parsing


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g", choices=["identity", "exp_bounded"], default="identity",
                        help="per-person welfare transform")
    parser.add_argument("--c", type=float, default=0.0, help="critical level")
    parser.add_argument("--tau", type=float, default=1e-9, help="indifference tolerance")


def _add_sampler_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=100_000, help="sampled instances per probe")
    parser.add_argument("--seed", type=int, default=7, help="master seed")
    parser.add_argument("--range", type=float, default=100.0, help="level range bound B")
    parser.add_argument("--max-pop", type=int, default=8, help="largest sampled population")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="swocheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_compare = sub.add_parser("compare", help="compare two profiles under one ordering")
    p_compare.add_argument("--swo", required=True, help="ordering id")
    _add_config_flags(p_compare)
    p_compare.add_argument("profile_a")
    p_compare.add_argument("profile_b")
    p_compare.set_defaults(func=cmd_compare)

    p_axioms = sub.add_parser("axioms", help="probe axioms for one ordering")
    p_axioms.add_argument("--swo", required=True, help="ordering id")
    p_axioms.add_argument("--axiom", default="all", help="axiom id or 'all'")
    _add_sampler_flags(p_axioms)
    _add_config_flags(p_axioms)
    p_axioms.add_argument("--json", help="write the JSON report here")
    p_axioms.set_defaults(func=cmd_axioms)

    p_matrix = sub.add_parser("matrix", help="probe grid over several orderings")
    p_matrix.add_argument("--swos", required=True, help="comma-separated ordering ids, or 'all'")
    _add_sampler_flags(p_matrix)
    _add_config_flags(p_matrix)
    p_matrix.add_argument("--csv", help="write the CSV grid here")
    p_matrix.add_argument("--json", help="write the JSON report here")
    p_matrix.set_defaults(func=cmd_matrix)

    p_critical = sub.add_parser("critical-level", help="search for a critical level")
    p_critical.add_argument("--swo", required=True, help="ordering id")
    p_critical.add_argument("--profile", required=True, help="profile text")
    p_critical.add_argument("--lo", type=float, default=-1e6, help="bracket lower end")
    p_critical.add_argument("--hi", type=float, default=1e6, help="bracket upper end")
    p_critical.add_argument("--tol", type=float, default=1e-9, help="bracket tolerance")
    _add_config_flags(p_critical)
    p_critical.set_defaults(func=cmd_critical_level)

    p_witness = sub.add_parser("witness", help="replay an overtaking construction")
    p_witness.add_argument("--theorem", required=True, choices=["1", "4", "prop1", "lemma2", "lemma3"],
                           help="which construction to replay")
    p_witness.add_argument("--swo", required=True, help="ordering id")
    p_witness.add_argument("--u", default="10*10", help="reference profile")
    p_witness.add_argument("--v", default="5*5", help="target profile (chain 4)")
    p_witness.add_argument("--epsilon", type=float, default=1.0, help="overtaking level offset")
    p_witness.add_argument("--n", type=int, default=1, help="left population size (prop1)")
    p_witness.add_argument("--m", type=int, default=1000, help="right population size (prop1)")
    p_witness.add_argument("--samples", type=int, default=10_000, help="sampled triples (lemmas)")
    p_witness.add_argument("--seed", type=int, default=7, help="sampling seed (lemmas)")
    _add_config_flags(p_witness)
    p_witness.add_argument("--json", help="write the JSON report here")
    p_witness.set_defaults(func=cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProfileError, ValueError) as exc:
        print(f"swocheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
