"""Command-line interface: deal groups, run scenarios, verify claims.

Exit codes: 0 success, 1 when a run contained at least one protocol
rejection, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .claims import run_all_claims
from .errors import GroupAuthError, ScenarioError
from .field import FieldParams
from .manager import GroupParams, setup_group
from .sim import (
    Scenario,
    Transcript,
    load_scenario,
    run_exhaustive,
    run_scenario,
    scenario_from_dict,
    spawn_rng,
)


def _write_json(path: Path, data: dict) -> None:
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def cmd_setup(args) -> int:
    try:
        gp = GroupParams(args.t, args.n, FieldParams(args.p), args.hash)
    except (ValueError, GroupAuthError) as exc:
        print(f"error: invalid group parameters: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        state, commitment, tokens = setup_group(gp, spawn_rng(args.seed, "setup"))
        _write_json(
            out / "public.json",
            {
                "p": gp.params.p,
                "t": gp.t,
                "n": gp.n,
                "hash": gp.hash_id,
                "commitment": commitment.hex(),
            },
        )
        for tok in tokens:
            _write_json(
                out / f"token-{tok.user_id}.json",
                {"user_id": tok.user_id, "x": tok.x.value, "y": tok.y.value, "p": gp.params.p},
            )
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    print(f"seed: {args.seed}")
    print(f"wrote public.json and {len(tokens)} token files to {out}")
    return 0


def _load_run_config(args) -> tuple[Scenario, str]:
    text = Path(args.scenario).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"{args.scenario}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    mode = data.pop("mode", "monte-carlo")
    if mode not in ("monte-carlo", "exhaustive"):
        raise ScenarioError(f"unknown mode {mode!r}")
    sc = scenario_from_dict(data)
    if args.seed is not None:
        sc = Scenario(
            group=sc.group,
            seed=args.seed,
            protocol=sc.protocol,
            roster=sc.roster,
            trials=sc.trials,
            consistency_rule=sc.consistency_rule,
        )
    return sc, mode


def cmd_run(args) -> int:
    try:
        sc, mode = _load_run_config(args)
    except (OSError, ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(f"seed: {sc.seed}")
    print(
        f"scenario: protocol={sc.protocol.value} p={sc.group.params.p} "
        f"t={sc.group.t} n={sc.group.n} j={len(sc.roster)} "
        f"trials={sc.trials} mode={mode}"
    )
    if mode == "exhaustive":
        report = run_exhaustive(sc)
        if args.format == "records":
            print(json.dumps(report.to_record(), separators=(",", ":")))
        else:
            print(report.format_table())
        if args.out:
            Path(args.out).write_text(
                json.dumps(report.to_record(), separators=(",", ":")) + "\n",
                encoding="utf-8",
            )
        rejected = report.accepts < report.cases
        return 1 if rejected else 0

    transcript = run_scenario(sc)
    results = [r for r in transcript.records if r["type"] == "trial-result"]
    if len(results) <= 20:
        for r in results:
            word = "ACCEPTED" if r["accepted"] else "REJECTED"
            print(f"trial {r['trial']}: {word}")
    stats = transcript.stats_record()
    if args.format == "records":
        print(json.dumps(stats, separators=(",", ":")))
    else:
        width = 11
        print(f"{'trials':<{width}}  {stats['cases']}")
        print(f"{'accepts':<{width}}  {stats['accepts']}")
        print(f"{'rejects':<{width}}  {stats['rejects']}")
        print(f"{'accept rate':<{width}}  {stats['accept_rate']:.6f}")
        print(f"{'4-sigma ci':<{width}}  [{stats['ci_low']:.6f}, {stats['ci_high']:.6f}]")
    if args.out:
        try:
            transcript.write(args.out)
        except OSError as exc:
            print(f"error: cannot write transcript: {exc}", file=sys.stderr)
            return 2
        print(f"transcript: {args.out}")
    return 1 if stats["rejects"] > 0 else 0


def cmd_verify_claims(args) -> int:
    results = run_all_claims()
    if args.format == "records":
        for r in results:
            print(
                json.dumps(
                    {
                        "id": r.ident,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                        "elapsed": round(r.elapsed, 3),
                    },
                    separators=(",", ":"),
                )
            )
    else:
        for r in results:
            print(r.format_line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} claims passed")
    return 0 if not failed else 1


def cmd_show_transcript(args) -> int:
    try:
        records = Transcript.read_records(args.path)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read transcript: {exc}", file=sys.stderr)
        return 2
    if args.format == "records":
        for r in records:
            print(json.dumps(r, separators=(",", ":")))
        return 0
    header = next((r for r in records if r["type"] == "header"), None)
    if header:
        scenario = header.get("scenario", {})
        print(f"schema: {header.get('schema')}")
        print(
            f"protocol={scenario.get('protocol')} seed={scenario.get('seed')} "
            f"group={scenario.get('group')} trials={scenario.get('trials')}"
        )
    kinds: dict[str, int] = {}
    for r in records:
        kinds[r["type"]] = kinds.get(r["type"], 0) + 1
    for kind in sorted(kinds):
        print(f"{kind:<18}  {kinds[kind]}")
    stats = next((r for r in records if r["type"] == "stats"), None)
    if stats:
        print(
            f"accepts={stats['accepts']} rejects={stats['rejects']} "
            f"accept_rate={stats['accept_rate']:.6f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupauth",
        description="Threshold group authentication simulator and toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_setup = sub.add_parser("setup", help="deal a group: token files plus public commitment")
    p_setup.add_argument("--p", type=int, required=True, help="prime modulus")
    p_setup.add_argument("--t", type=int, required=True, help="threshold")
    p_setup.add_argument("--n", type=int, required=True, help="number of users")
    p_setup.add_argument("--hash", default="sha256", help="one-way function id")
    p_setup.add_argument("--seed", type=int, default=0, help="setup seed")
    p_setup.add_argument("--out", required=True, help="output directory")
    p_setup.set_defaults(func=cmd_setup)

    p_run = sub.add_parser("run", help="run a scenario file")
    p_run.add_argument("--scenario", required=True, help="scenario JSON path")
    p_run.add_argument("--seed", type=int, default=None, help="override scenario seed")
    p_run.add_argument("--out", default=None, help="transcript output path")
    p_run.add_argument("--format", choices=("table", "records"), default="table")
    p_run.set_defaults(func=cmd_run)

    p_claims = sub.add_parser("verify-claims", help="run the full security-claim suite")
    p_claims.add_argument("--format", choices=("table", "records"), default="table")
    p_claims.set_defaults(func=cmd_verify_claims)

    p_show = sub.add_parser("show-transcript", help="inspect a stored transcript")
    p_show.add_argument("path", help="transcript file")
    p_show.add_argument("--format", choices=("table", "records"), default="table")
    p_show.set_defaults(func=cmd_show_transcript)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupAuthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
