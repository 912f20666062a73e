"""Command-line front end.

Subcommands: lr (coefficient queries), enumerate (tableau listings),
verify (sweep suites), spectra (seeded sampling), figures (reference
drawings). Exit codes: 0 verified / success, 1 counterexample or
disagreement, 2 usage error, 3 time budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import polytopes, spectral
from .dominoes import (
    enumerate_domino_tableaux,
    enumerate_yamanouchi_tableaux,
    reading_word,
    yamanouchi_tableaux_by_weight,
)
from .duplication import duplicate, undo_duplicate
from .lr import lr_coefficient
from .partitions import Partition, tau_partitions
from .render import ascii_art, svg

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_threads() -> int:
    raw = os.environ.get("HORNLAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _word_str(t) -> str:
    return "".join(str(x) for x in reading_word(t))


def cmd_lr(args) -> int:
    lam = Partition.parse(args.lam)
    mu = Partition.parse(args.mu)
    nu = Partition.parse(args.nu)
    values = {}
    if args.method in ("classical", "both"):
        values["classical"] = lr_coefficient(lam, mu, nu)
    if args.method in ("domino", "both"):
        from .dominoes import cl_coefficient

        values["domino"] = cl_coefficient(lam, mu, nu)
    for name, value in values.items():
        print(f"{name}: {value}")
    if args.method == "both":
        if values["classical"] == values["domino"]:
            print("agreement: yes")
        else:
            print("agreement: NO")
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_enumerate(args) -> int:
    shape = Partition.parse(args.shape)
    weight = Partition.parse(args.weight)
    if args.render == "svg" and not args.out:
        print("error: --render svg requires --out DIR", file=sys.stderr)
        return EXIT_USAGE
    if args.yamanouchi:
        tableaux = enumerate_yamanouchi_tableaux(shape, weight)
    else:
        tableaux = enumerate_domino_tableaux(shape, weight)
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i, t in enumerate(tableaux, 1):
        print(f"tableau {i}:")
        print(t.to_text())
        print(f"word: {_word_str(t)}")
        if args.render == "ascii":
            art = ascii_art(t)
            if out:
                (out / f"tableau_{i:03d}.txt").write_text(art + "\n")
            else:
                print(art)
        elif args.render == "svg":
            (out / f"tableau_{i:03d}.svg").write_text(svg(t))
        print()
    print(f"count: {len(tableaux)}")
    return EXIT_OK


_SUITES = {
    "prop2": (polytopes.verify_duplication_inequality, "p", 6),
    "p1p2": (polytopes.verify_p1_equals_p2, "p", 5),
    "implication": (polytopes.verify_nonvanishing_implication, "p", 5),
    "fflp": (polytopes.verify_fflp_inequality, "max_len", 3),
    "lpp": (polytopes.verify_lpp_inequality, "p", 5),
    "projection": (polytopes.verify_projection_inclusion, "p", 5),
}


def cmd_verify(args) -> int:
    func, size_name, default_max_part = _SUITES[args.suite]
    max_part = args.max_part if args.max_part is not None else default_max_part
    kwargs = {
        size_name: args.p,
        "max_part": max_part,
        "threads": args.threads,
        "budget_seconds": args.budget_seconds,
    }
    if args.suite == "p1p2" and args.sigma:
        kwargs["extra_sigmas"] = [Partition.parse(s) for s in args.sigma]
    report = func(**kwargs)
    print(report.to_text())
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n")
    if not report.complete:
        return EXIT_BUDGET
    if report.counterexamples():
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _parse_sigma(text: str) -> tuple[float, ...]:
    """Partition literal that may carry non-integer parts, e.g. [5.5,3,2,0]."""
    try:
        return tuple(Partition.parse(text).parts)
    except ValueError:
        pass
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected bracketed literal, got {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = tuple(float(x) for x in inner.split(","))
    except ValueError as e:
        raise ValueError(f"bad sigma literal {text!r}: {e}") from None
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError("sigma parts must be weakly decreasing")
    if any(x < 0 for x in parts):
        raise ValueError("sigma parts must be nonnegative")
    return parts


def cmd_spectra(args) -> int:
    sigma = _parse_sigma(args.sigma)
    records = spectral.monte_carlo_q(sigma, args.samples, args.seed, mode=args.mode)
    integral = all(float(x).is_integer() for x in sigma)
    hull_pts = None
    if integral and sigma:
        part = Partition(tuple(int(x) for x in sigma))
        hull_pts = polytopes.p1_points(part).sorted_points()

    rows = []
    in_hull = 0
    max_defect = 0.0
    max_block = 0.0
    for rec in records:
        max_defect = max(max_defect, rec.pairing_defect)
        if rec.block_defect is not None:
            max_block = max(max_block, rec.block_defect)
        member = None
        if hull_pts is not None:
            member = polytopes.hull_contains(hull_pts, rec.collapsed)
            in_hull += member
        rows.append(
            {
                "index": rec.index,
                "raw": list(rec.raw),
                "collapsed": list(rec.collapsed),
                "pairing_defect": rec.pairing_defect,
                **({"block_defect": rec.block_defect} if rec.block_defect is not None else {}),
                **({"in_hull": member} if member is not None else {}),
            }
        )

    if args.out:
        with open(args.out, "w") as fh:
            for row in rows:
                fh.write(json.dumps(row) + "\n")
    else:
        for row in rows:
            print(json.dumps(row))

    n = len(records)
    lo = min((min(r.collapsed) for r in records), default=0.0)
    hi = max((max(r.collapsed) for r in records), default=0.0)
    print(f"samples: {n}  mode: {args.mode}  seed: {args.seed}")
    print(f"collapsed range: [{lo:.12g}, {hi:.12g}]")
    print(f"max pairing defect: {max_defect:.3e}")
    if args.mode == "block":
        print(f"max block defect: {max_block:.3e}")
    if hull_pts is not None:
        rate = 100.0 * in_hull / n if n else 100.0
        print(f"hull membership: {in_hull}/{n} ({rate:.1f}%)")
        if in_hull != n:
            return EXIT_COUNTEREXAMPLE
    else:
        print("hull membership: skipped (non-integer sigma)")
    return EXIT_OK


def cmd_figures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    # First drawing set: all Yamanouchi fillings of the fixed shape with
    # two-row weights, in increasing order of the first weight entry.
    shape1 = Partition((10, 6, 4, 0))
    by_weight = yamanouchi_tableaux_by_weight(shape1, max_labels=2)
    ordered = sorted(by_weight.items(), key=lambda kv: kv[0][0])
    lines1 = []
    lines2 = []
    index = 0
    for weight, tableaux in ordered:
        for t in tableaux:
            index += 1
            name = f"T{index}"
            (out / f"figure1_{name}.svg").write_text(svg(t))
            lines1 += [
                f"{name} weight {list(weight)} word {_word_str(t)}",
                t.to_text(),
                "",
            ]
            u = duplicate(t)
            assert undo_duplicate(u) == t
            (out / f"figure2_U{index}.svg").write_text(svg(u))
            lines2 += [
                f"U{index} weight {list(u.weight())} word {_word_str(u)}",
                u.to_text(),
                "",
            ]
    (out / "figure1.txt").write_text("\n".join(lines1))
    (out / "figure2.txt").write_text("\n".join(lines2))

    # Third drawing: the first (canonical order) Yamanouchi tableau of the
    # doubled shape for sigma=(7,6,4,3) and weight (10,10,8,8,2,2) that the
    # doubling map does not reach.
    sigma = Partition((7, 6, 4, 3))
    shape3 = tau_partitions(sigma, sigma)
    weight3 = Partition((10, 10, 8, 8, 2, 2))
    witness = None
    for t in enumerate_yamanouchi_tableaux(shape3, weight3):
        if undo_duplicate(t) is None:
            witness = t
            break
    if witness is None:
        print("error: no tableau outside the doubling image", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    (out / "figure3.svg").write_text(svg(witness))
    (out / "figure3.txt").write_text(
        f"weight {list(witness.weight())} word {_word_str(witness)}\n"
        + witness.to_text()
        + "\n"
    )
    written = sorted(p.name for p in out.iterdir())
    print(f"wrote {len(written)} files to {out}")
    for name in written:
        print(f"  {name}")
    return EXIT_OK


def _apply_config(args, parser: argparse.ArgumentParser) -> None:
    """Fill in flag defaults from a JSON config file; explicit flags win."""
    if not getattr(args, "config", None):
        return
    try:
        data = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as e:
        parser.error(f"cannot read config {args.config}: {e}")
    if not isinstance(data, dict):
        parser.error(f"config {args.config} must hold a JSON object")
    defaults = {
        "max_part": None,
        "p": 2,
        "threads": _default_threads(),
        "budget_seconds": None,
        "samples": 1000,
        "seed": 0,
        "mode": "random",
    }
    for key, value in data.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) == defaults.get(attr):
            setattr(args, attr, value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hornlab",
        description="Exact tableau counting and seeded spectral sampling. "
        'Partition literals are bracketed part lists, e.g. "[5,3,2,0]" or "[]".',
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("lr", help="one coefficient, by either or both methods")
    q.add_argument("lam", help='first partition, e.g. "[5,2]"')
    q.add_argument("mu", help="second partition")
    q.add_argument("nu", help="target partition")
    q.add_argument(
        "--method",
        choices=("classical", "domino", "both"),
        default="classical",
    )
    q.set_defaults(func=cmd_lr)

    e = sub.add_parser("enumerate", help="list domino tableaux of a shape and weight")
    e.add_argument("shape", help="ambient shape literal")
    e.add_argument("weight", help="weight literal (dominoes per label)")
    e.add_argument("--yamanouchi", action="store_true", help="reading word filter")
    e.add_argument("--render", choices=("ascii", "svg"), default=None)
    e.add_argument("--out", default=None, help="directory for rendered files")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument(
        "--suite",
        required=True,
        choices=tuple(_SUITES),
    )
    v.add_argument("--max-part", type=int, default=None, dest="max_part")
    v.add_argument("--p", type=int, default=2, help="rows in each half (2p total)")
    v.add_argument("--threads", type=int, default=_default_threads())
    v.add_argument("--budget-seconds", type=float, default=None, dest="budget_seconds")
    v.add_argument("--report", default=None, help="write the JSON report here")
    v.add_argument(
        "--sigma",
        action="append",
        default=None,
        help="extra sigma literal (p1p2 only; repeatable)",
    )
    v.add_argument("--config", default=None, help="JSON file with flag defaults")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectra", help="sample the spectral set for one sigma")
    s.add_argument("sigma", help='even-length literal, e.g. "[5,3,2,0]"')
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", choices=("random", "rotation", "block"), default="random")
    s.add_argument("--out", default=None, help="write JSONL here instead of stdout")
    s.add_argument("--config", default=None, help="JSON file with flag defaults")
    s.set_defaults(func=cmd_spectra)

    f = sub.add_parser("figures", help="regenerate the reference drawings")
    f.add_argument("--out", default="figures", help="output directory")
    f.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, parser)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
