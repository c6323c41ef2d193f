"""Command-line front end.

Subcommands cover square validation, design construction, basis searches,
the coprime-splitting identity, MacNeish products, lower bounds, and the
bundled end-to-end report.  Exit codes: 0 success, 1 a check failed,
2 usage or parse error.  Given the same arguments and seed, JSON output is
byte-identical between runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gf, mub, net, report as report_mod, spectra, squares, weyl


class UsageError(Exception):
    """Bad arguments or unparseable input; maps to exit code 2."""


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed {text!r} is not an integer")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit value")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_grids(path: str) -> list[list[list[int]]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        return squares.parse_squares_text(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def _load_family(path: str) -> squares.MolsFamily:
    """Parse a family file; Latin/orthogonality violations raise ValueError."""
    grids = _read_grids(path)
    sqs = tuple(squares.LatinSquare.from_grid(g) for g in grids)
    return squares.MolsFamily(sqs[0].order, sqs)


def _family_from_source(args) -> squares.MolsFamily:
    chosen = sum(
        [args.builtin_10, args.ff is not None, args.file is not None]
    )
    if chosen != 1:
        raise UsageError("give exactly one of FILE, --builtin-10, --ff Q")
    if args.builtin_10:
        return squares.builtin_mols10()
    if args.ff is not None:
        if args.ff < 2 or gf.prime_power(args.ff) is None:
            raise UsageError(f"{args.ff} is not a prime power")
        return squares.ff_complete_mols(args.ff)
    return _load_family(args.file)


# --- subcommands ---------------------------------------------------------------


def cmd_validate(args) -> int:
    grids = _read_grids(args.file)
    details: list[str] = []
    latin_ok = True
    for k, grid in enumerate(grids):
        try:
            rep = squares.validate_latin(grid)
        except ValueError as exc:
            raise UsageError(f"square {k}: {exc}")
        if not rep:
            latin_ok = False
            details.append(f"square {k}: {rep.kind} {rep.index} repeats symbol {rep.symbol}")
    orth_ok = True
    if latin_ok and len(grids) >= 2:
        sqs = [squares.LatinSquare.from_grid(g) for g in grids]
        for i in range(len(sqs)):
            for j in range(i + 1, len(sqs)):
                rep = squares.are_orthogonal(sqs[i], sqs[j])
                if not rep:
                    orth_ok = False
                    details.append(
                        f"squares {i} and {j}: pair {rep.pair} repeats "
                        f"at {rep.first} and {rep.second}"
                    )
    if len(grids) < 2:
        orth_word = "n/a"
    elif not latin_ok:
        orth_word = "not checked"
    else:
        orth_word = "yes" if orth_ok else "no"
    latin_word = "yes" if latin_ok else "no"
    print(f"{len(grids)} squares, Latin: {latin_word}, pairwise orthogonal: {orth_word}")
    for line in details:
        print(line)
    return 0 if latin_ok and orth_ok else 1


def cmd_net(args) -> int:
    family = _family_from_source(args)
    try:
        design = net.net_from_mols(family)
    except net.NetError as exc:
        print(f"net construction failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(_dump(net.design_to_json_dict(design)))
        return 0
    print(f"order {design.order}, {len(design.rows)} rows; representative cells:")
    for cell in net.representative_cells(design):
        print(net.format_cell(cell))
    check = net.validate_net(design)
    if check:
        print("cross-row intersection property: holds")
    else:
        print(f"cross-row intersection property: fails ({check.message})")
    return 0


def cmd_mub_count(args) -> int:
    if not 2 <= args.d <= weyl.MAX_CLASS_DIM:
        raise UsageError(f"d must be in 2..{weyl.MAX_CLASS_DIM}")
    rep = mub.ws_mub_number(args.d, seed=args.seed)
    if args.json:
        print(_dump(rep.to_json_dict()))
        return 0
    print(
        f"d={rep.dimension}: {rep.n_bases} candidate bases, "
        f"largest unbiased set {rep.clique_size}"
    )
    print("clique: " + ", ".join(rep.basis_ids[v] for v in rep.clique_vertices))
    print(f"worst clique deviation: {rep.worst_deviation:.3e}")
    for entry in rep.excluded:
        print(f"excluded {entry['class']}: {entry['reason']}")
    return 0


def cmd_design_mubs(args) -> int:
    family = _family_from_source(args)
    decomposition = None
    if args.prime_power:
        if gf.prime_power(family.order) is None:
            raise UsageError(
                f"--prime-power needs a prime-power order, got {family.order}"
            )
        decomposition = mub.PrimePowerDecomposition(gf.FieldSpec.for_order(family.order))
    rep = mub.design_mubs(family, decomposition, seed=args.seed)
    if args.json:
        print(_dump(rep.to_json_dict()))
        return 0
    for v in rep.row_verdicts:
        if v["commutes"]:
            print(f"row {v['row']}: commutes")
        else:
            a, b = v["witness"]
            print(
                f"row {v['row']}: fails, witness {a} / {b}, "
                f"symplectic {v['symplectic']}"
            )
    for entry in rep.excluded:
        print(f"excluded {entry['class']}: {entry['reason']}")
    print(
        f"d={rep.dimension}: {rep.n_bases} bases, largest unbiased set "
        f"{rep.clique_size}, worst deviation {rep.worst_deviation:.3e}"
    )
    return 0


def cmd_lemma(args) -> int:
    try:
        rep = spectra.lemma_verify(args.d1, args.d2)
    except ValueError as exc:
        raise UsageError(str(exc))
    status = "PASS" if rep.passed else "FAIL"
    worst = max(rep.x_deviation, rep.z_deviation)
    print(
        f"{status}, max deviation {worst:.3e} "
        f"(shift {rep.x_deviation:.3e}, clock {rep.z_deviation:.3e})"
    )
    return 0 if rep.passed else 1


def cmd_macneish(args) -> int:
    if args.d is not None:
        if args.files:
            raise UsageError("give either --d or two files, not both")
        if args.d < 2:
            raise UsageError("d must be >= 2")
        fams = [squares.ff_complete_mols(p**r) for p, r in gf.factorize(args.d)]
        family = fams[0]
        for nxt in fams[1:]:
            family = squares.macneish_family(family, nxt)
        bound = squares.macneish_bound(args.d)
    else:
        if len(args.files) != 2:
            raise UsageError("need exactly two family files (or --d N)")
        family = squares.macneish_family(
            _load_family(args.files[0]), _load_family(args.files[1])
        )
        bound = len(family)
    sys.stdout.write(squares.format_squares_text(family.squares))
    print(
        f"order {family.order}: {len(family)} pairwise orthogonal squares "
        f"(bound {bound})",
        file=sys.stderr,
    )
    return 0


def cmd_bounds(args) -> int:
    if args.d < 2:
        raise UsageError("d must be >= 2")
    print(
        f"MOLS >= {squares.macneish_bound(args.d)}, "
        f"MUB >= {squares.quantum_macneish_bound(args.d)}"
    )
    return 0


def cmd_report(args) -> int:
    rows, results = report_mod.run_reference_report(seed=args.seed, fast=args.fast)
    width = max(len(r.check) for r in rows)
    for r in rows:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.check:<{width}}  {r.observed}"
        if not r.ok:
            line += f"  [expected: {r.expected}]"
        print(line)
    paths = report_mod.write_artifacts(rows, results, args.out_dir)
    for p in paths:
        print(f"wrote {p}", file=sys.stderr)
    passed = sum(r.ok for r in rows)
    print(f"{passed}/{len(rows)} checks passed")
    return 0 if passed == len(rows) else 1


# --- parser --------------------------------------------------------------------


def _add_source(sub):
    sub.add_argument("file", nargs="?", help="square family file")
    sub.add_argument("--builtin-10", action="store_true", dest="builtin_10",
                     help="use the bundled order-10 pair")
    sub.add_argument("--ff", type=int, metavar="Q",
                     help="complete family of prime-power order Q")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubkit",
        description="Latin squares, net designs, and mutually unbiased bases.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="check a square file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("net", help="build a design and print representative cells")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_net)

    p = subs.add_parser("mub-count", help="unbiased-basis search over commuting classes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mub_count)

    p = subs.add_parser("design-mubs", help="bases from a design's representative cells")
    _add_source(p)
    p.add_argument("--prime-power", action="store_true",
                   help="decompose exponents over the order's field")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_design_mubs)

    p = subs.add_parser("lemma", help="check the coprime splitting identity")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.set_defaults(func=cmd_lemma)

    p = subs.add_parser("macneish", help="product family from factors or two files")
    p.add_argument("files", nargs="*", metavar="FILE")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_macneish)

    p = subs.add_parser("bounds", help="lower bounds for MOLS and MUB counts")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = subs.add_parser("report", help="run the bundled reference computations")
    p.add_argument("--paper", action="store_true", required=True,
                   help="run the full reproduction table")
    p.add_argument("--fast", action="store_true", help="skip the d=35 search")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out-dir", default="mubkit-report")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
