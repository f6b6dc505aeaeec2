"""
Command-line entry point.

Subcommands: verify (invariant suites), test4 / sctest (Monte Carlo
testers), pacc (exact acceptance probabilities), norms, discriminate
(leaf distributions of a fixed strategy), commutant (enumeration
reports), report (re-serialize a prior run).  Exit codes: 0 pass,
1 invariant failure, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time

import numpy as np

from . import commutant, densesim, gf2, norms, serialize, testers, verify
from .errors import BudgetExceededError

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def make_manifest(command: str, config: dict, results) -> dict:
    """Run manifest: config echo plus a content hash that excludes the
    timestamp, so identically seeded runs hash identically."""
    body = {"command": command, "config": config, "results": results}
    digest = hashlib.sha256(_canonical_json(body).encode()).hexdigest()
    return {
        "command": command,
        "config": config,
        "results": results,
        "content_hash": digest,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }


def _emit(manifest: dict, args) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
    else:
        text = _results_csv(manifest["results"])
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _results_csv(results) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if isinstance(results, list) and results and isinstance(results[0], dict):
        keys = sorted({k for r in results for k in r})
        writer.writerow(keys)
        for r in results:
            writer.writerow([r.get(k, "") for k in keys])
    else:
        writer.writerow(["key", "value"])
        for k in sorted(results):
            writer.writerow([k, results[k]])
    return buf.getvalue()


def _report_fields(rep: testers.TesterReport) -> dict:
    return {
        "verdict": rep.verdict,
        "shots_used": rep.shots_used,
        "acceptance_rate": rep.acceptance_rate,
        "exact_reference": rep.exact_reference,
        "queries_used": rep.queries_used,
    }


def cmd_verify(args) -> int:
    results = verify.run_suite(
        args.suite, n=args.n, samples=args.seeds, seed=args.seed, t_max=args.t
    )
    payload = [r.to_json() for r in results]
    config = {
        "suite": args.suite, "n": args.n, "seeds": args.seeds,
        "seed": args.seed, "t": args.t, "jobs": args.jobs,
    }
    manifest = make_manifest("verify", config, payload)
    failures = [r for r in results if not r.passed]
    manifest["summary"] = {
        "checks": len(results),
        "failed": len(failures),
        "first_failure": failures[0].name if failures else None,
    }
    _emit(manifest, args)
    return EXIT_PASS if not failures else EXIT_FAIL


def cmd_test4(args) -> int:
    U = serialize.load_unitary(args.input)
    cfg = testers.TesterConfig(
        epsilon=args.epsilon, shots=args.shots, seed=args.seed
    )
    if args.repeat:
        rep = testers.run_4query_repeated(U, args.epsilon, cfg)
    else:
        rep = testers.run_4query(U, cfg)
    config = {"input": args.input, "shots": args.shots, "seed": args.seed,
              "epsilon": args.epsilon, "repeat": args.repeat}
    manifest = make_manifest("test4", config, _report_fields(rep))
    _emit(manifest, args)
    return EXIT_PASS


def cmd_sctest(args) -> int:
    U = serialize.load_unitary(args.input)
    cfg = testers.TesterConfig(epsilon=args.epsilon, seed=args.seed)
    rep = testers.run_aux_free_single_copy(U, args.epsilon, cfg)
    config = {"input": args.input, "epsilon": args.epsilon, "seed": args.seed}
    manifest = make_manifest("sctest", config, _report_fields(rep))
    _emit(manifest, args)
    return EXIT_PASS


def cmd_pacc(args) -> int:
    U = serialize.load_unitary(args.input)
    results = {}
    if args.exact or not args.gnw:
        results["pacc_exact"] = testers.pacc_exact(U)
    if args.gnw:
        results["pacc_gnw_choi"] = testers.pacc_gnw_choi(U)
    manifest = make_manifest(
        "pacc", {"input": args.input, "exact": args.exact, "gnw": args.gnw}, results
    )
    _emit(manifest, args)
    return EXIT_PASS


def cmd_norms(args) -> int:
    U = serialize.load_unitary(args.input)
    v = norms.qk_norm(U, args.k)
    results = {"k": v.k, "value": v.value, "convention": v.convention}
    manifest = make_manifest("norms", {"input": args.input, "k": args.k}, results)
    _emit(manifest, args)
    return EXIT_PASS


def _load_strategy(path: str | None, t: int):
    zero = np.array([[1, 0], [0, 0]], dtype=complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    mz = [zero, np.array([[0, 0], [0, 1]], dtype=complex)]
    if path is None:
        return [(plus if i % 2 == 0 else zero, mz) for i in range(t)]
    with open(path) as fh:
        spec = json.load(fh)
    rounds = []
    for rd in spec["rounds"]:
        rho = np.array(rd["rho"]["re"]) + 1j * np.array(rd["rho"]["im"])
        povm = [np.array(M["re"]) + 1j * np.array(M["im"]) for M in rd["povm"]]
        rounds.append((rho, povm))
    return rounds


def cmd_discriminate(args) -> int:
    strategy = _load_strategy(args.strategy, args.t)
    if len(strategy) != args.t:
        print(f"strategy has {len(strategy)} rounds, expected --t {args.t}",
              file=sys.stderr)
        return EXIT_USAGE
    p_cliff = testers.leaf_distribution(strategy, "clifford", "group")
    p_wein = testers.leaf_distribution(strategy, "clifford", "weingarten")
    p_dep = testers.leaf_distribution(strategy, "depolarizing")
    results = {
        "clifford": {" ".join(map(str, k)): v for k, v in sorted(p_cliff.items())},
        "depolarizing": {" ".join(map(str, k)): v for k, v in sorted(p_dep.items())},
        "tv_distance": testers.tv_distance(p_cliff, p_dep),
        "group_vs_weingarten": testers.tv_distance(p_cliff, p_wein),
    }
    manifest = make_manifest(
        "discriminate", {"t": args.t, "strategy": args.strategy}, results
    )
    _emit(manifest, args)
    return EXIT_PASS


def cmd_commutant(args) -> int:
    if args.action != "enum":
        print(f"unknown commutant action {args.action!r}", file=sys.stderr)
        return EXIT_USAGE
    sigma = commutant.enumerate_sigma_tt(args.t)
    per_code = []
    invariants_passed = True
    for T in sigma:
        entry = {"generator": serialize.matrix_to_json(T.code.generator)}
        if args.check_all:
            S, O = commutant.unitary_partial_transpose(T.code)
            swapped = commutant.partial_transpose_code(T.code, S)
            ok = gf2.rank(swapped.a_block) == args.t and np.array_equal(
                gf2.mat2mul(O.T, O), np.eye(args.t, dtype=np.uint8)
            )
            invariants_passed &= ok
            entry["S"] = sorted(int(i) for i in S)
            entry["O"] = serialize.matrix_to_json(O)
        per_code.append(entry)
    results = {
        "count": len(sigma),
        "invariants_passed": bool(invariants_passed),
        "per_code": per_code,
    }
    manifest = make_manifest(
        "commutant", {"action": "enum", "t": args.t, "check_all": args.check_all},
        results,
    )
    _emit(manifest, args)
    return EXIT_PASS if invariants_passed else EXIT_FAIL


def cmd_report(args) -> int:
    try:
        with open(args.input) as fh:
            manifest = json.load(fh)
    except FileNotFoundError:
        print(f"missing manifest: {args.input}", file=sys.stderr)
        return EXIT_USAGE
    if "table" in manifest and "kind" in manifest:
        dist = densesim.CharDist(
            manifest["n"], manifest["kind"],
            np.array(manifest["table"], dtype=float),
        )
        text = serialize.char_dist_to_csv(dist)
        if args.format == "json":
            text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
        sys.stdout.write(text)
        return EXIT_PASS
    if "results" not in manifest:
        print("input is not a run manifest", file=sys.stderr)
        return EXIT_USAGE
    _emit(manifest, args)
    return EXIT_PASS


def _add_common(p, seed_required: bool = False):
    p.add_argument("--seed", type=int, required=seed_required,
                   default=None if seed_required else 0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifftest",
        description="Desk-scale simulation and verification of Clifford testing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seeds", type=int, default=50,
                   help="number of sampled unitaries/states per check")
    p.add_argument("--t", type=int, default=4)
    _add_common(p, seed_required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("test4", help="Monte Carlo 4-query tester")
    p.add_argument("--input", required=True)
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--repeat", action="store_true",
                   help="run the repetition wrapper sized for --epsilon")
    _add_common(p, seed_required=True)
    p.set_defaults(func=cmd_test4)

    p = sub.add_parser("sctest", help="auxiliary-free single-copy tester")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    _add_common(p, seed_required=True)
    p.set_defaults(func=cmd_sctest)

    p = sub.add_parser("pacc", help="exact acceptance probabilities")
    p.add_argument("--input", required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--gnw", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_pacc)

    p = sub.add_parser("norms", help="Q^k norm of a unitary")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, choices=(1, 2, 3), default=3)
    _add_common(p)
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("discriminate", help="leaf distributions of a strategy")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--strategy", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_discriminate)

    p = sub.add_parser("commutant", help="commutant enumeration report")
    p.add_argument("action", choices=("enum",))
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--check-all", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_commutant)

    p = sub.add_parser("report", help="re-serialize a prior run manifest")
    p.add_argument("--input", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
