"""Command line surface: invariant reports, orbit tables and experiment runs.

Commands
    group-check   group-level invariants plus the informational eta table
    orbit         images of a momentum under the four discrete elements
    rep-check     doublet representation invariants
    bell-check    two-qubit dictionary invariants
    experiment    run | sweep: Monte Carlo tallies as CSV plus a JSON manifest

Exit status: 2 for input errors, 1 when an asserted invariant fails, 0
otherwise.  Physics outcomes (signs, magnitudes, discarded trials) never
change the exit status.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from . import __version__, checks, experiment, group

CONFIG_KEYS = ("phi", "visibility", "eta", "dark", "sigma", "trials", "seed")


def _report_lines(results) -> list[str]:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name}  (max deviation {r.max_deviation:.3e}, tolerance {r.tolerance:g})"
        if r.note:
            line += f"  [{r.note}]"
        lines.append(line)
    return lines


def _emit_report(args, results, extra=None) -> int:
    doc = {
        "command": args.command,
        "seed": args.seed,
        "checks": [dataclasses.asdict(r) for r in results],
        "version": __version__,
    }
    if extra:
        doc.update(extra)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in _report_lines(results):
            print(line)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0 if all(r.passed for r in results) else 1


def _cmd_group_check(args) -> int:
    results = checks.group_checks(args.convention, args.samples, args.seed)
    table = checks.ad_eta_table(args.convention, seed=args.seed)
    if args.format != "json":
        print(f"convention: {args.convention}")
    code = _emit_report(args, results, extra={
        "convention": args.convention,
        "samples": args.samples,
        "conjugated_generator_eta_deviations": table,
    })
    if args.format != "json":
        print("informational: eta deviation of conjugated generators "
              "(closure in the identity component is not asserted)")
        for row in table:
            print(f"  {row['generator']:<15} parameter {row['parameter']:+.3f}  "
                  f"eta deviation {row['eta_deviation']:.3e}")
    return code


def _cmd_orbit(args) -> int:
    p = np.array(args.p, dtype=float)
    rows = group.z_orbit(p, args.theta, args.phi, args.convention)
    doc = {
        "command": "orbit",
        "momentum": list(p),
        "theta": args.theta,
        "phi": args.phi,
        "convention": args.convention,
        "orbit": [{"z": tag, "image": [float(x) for x in image], "class": cls.value}
                  for tag, image, cls in rows],
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"{'z':<14}{'image':<44}class")
        for tag, image, cls in rows:
            image_txt = "(" + ", ".join(f"{x:+.6g}" for x in image) + ")"
            print(f"{tag:<14}{image_txt:<44}{cls.value}")
        if all(cls is group.OrbitClass.ZERO for _, _, cls in rows):
            print("warning: zero momentum, every image is the zero class", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_rep_check(args) -> int:
    results = checks.rep_checks(args.grid_size, args.helicity, args.trials, args.seed)
    return _emit_report(args, results, extra={
        "grid_size": args.grid_size,
        "helicity": args.helicity,
        "trials": args.trials,
    })


def _cmd_bell_check(args) -> int:
    results = checks.bell_checks(args.grid_size, args.trials, args.seed)
    return _emit_report(args, results, extra={
        "grid_size": args.grid_size,
        "trials": args.trials,
    })


def _load_config_file(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as err:
        raise ValueError(f"malformed config file {path}: {err}") from err
    if "config" in doc and isinstance(doc["config"], dict):
        doc = doc["config"]  # accept a manifest as a config source
    for key in doc:
        if key not in CONFIG_KEYS:
            raise ValueError(f"config file {path}: unknown key {key!r} "
                             f"(expected one of {', '.join(CONFIG_KEYS)})")
    return doc


def _build_config(args) -> experiment.ExperimentConfig:
    values = {"phi": 0.0, "visibility": 1.0, "eta": 1.0, "dark": 0.0,
              "sigma": 0.0, "trials": 100_000, "seed": 0}
    if args.config:
        values.update(_load_config_file(args.config))
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    values["trials"] = int(values["trials"])
    values["seed"] = int(values["seed"])
    return experiment.ExperimentConfig(**values)


def _emit_experiment(args, rows, command: str, config) -> int:
    if args.out:
        experiment.write_sweep_csv(rows, args.out)
        manifest = experiment.run_manifest(command, config, args.workers, __version__)
        experiment.write_manifest(manifest, args.out + ".manifest.json")
        print(f"wrote {args.out} and {args.out}.manifest.json")
    else:
        print(experiment.sweep_csv_text(rows), end="")
    for row in rows:
        if row.e_xx is None:
            print(f"note: phi={row.phi:.6g}: all {row.tally.discarded} trials discarded, "
                  "no correlation estimate", file=sys.stderr)
    return 0


def _cmd_experiment(args) -> int:
    try:
        config = _build_config(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.subcommand == "run":
        rows = experiment.sweep_phase([config.phi], config, workers=args.workers)
        command = "experiment run"
    else:
        phis = np.linspace(args.start, args.stop, args.points)
        rows = experiment.sweep_phase(phis, config, workers=args.workers)
        command = "experiment sweep"
    return _emit_experiment(args, rows, command, config)


def _add_report_flags(p) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extpoincare",
        description="Extended Poincare group toolkit: invariant reports, orbit "
                    "tables and the correlation interferometer Monte Carlo.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-check", help="group-level invariant suite")
    p.add_argument("--convention", choices=("momentum", "coordinate"), default="momentum")
    p.add_argument("--samples", type=int, default=100)
    _add_report_flags(p)
    p.set_defaults(func=_cmd_group_check)

    p = sub.add_parser("orbit", help="discrete orbit of a momentum")
    p.add_argument("p", type=float, nargs=4, metavar=("P0", "P1", "P2", "P3"))
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--convention", choices=("momentum", "coordinate"), default="momentum")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("rep-check", help="doublet representation invariant suite")
    p.add_argument("--grid-size", type=int, default=16)
    p.add_argument("--helicity", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    _add_report_flags(p)
    p.set_defaults(func=_cmd_rep_check)

    p = sub.add_parser("bell-check", help="two-qubit dictionary invariant suite")
    p.add_argument("--grid-size", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    _add_report_flags(p)
    p.set_defaults(func=_cmd_bell_check)

    p = sub.add_parser("experiment", help="interferometer Monte Carlo")
    esub = p.add_subparsers(dest="subcommand", required=True)
    for name in ("run", "sweep"):
        ep = esub.add_parser(name)
        ep.add_argument("--config", default=None, help="JSON config file; flags win")
        ep.add_argument("--phi", type=float, default=None)
        ep.add_argument("--visibility", type=float, default=None)
        ep.add_argument("--eta", type=float, default=None)
        ep.add_argument("--dark", type=float, default=None)
        ep.add_argument("--sigma", type=float, default=None)
        ep.add_argument("--trials", type=int, default=None)
        ep.add_argument("--seed", type=int, default=None)
        ep.add_argument("--workers", type=int, default=1)
        ep.add_argument("--out", default=None, help="CSV path; manifest goes next to it")
        if name == "sweep":
            ep.add_argument("--start", type=float, default=0.0)
            ep.add_argument("--stop", type=float, default=float(2 * np.pi))
            ep.add_argument("--points", type=int, default=17)
        ep.set_defaults(func=_cmd_experiment, subcommand=name)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
