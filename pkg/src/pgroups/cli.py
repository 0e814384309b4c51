"""Command-line interface for the p-group engine.

Subcommands cover catalog enumeration, decision-tree building and group
identification, sibling/twin censuses, fingerprints, character-table
comparisons, isoclinism tests, the built-in presentation families, and
identification benchmarks.

Exit codes: 0 success, 2 invalid input, 3 size/budget bound exceeded,
4 integrity/corruption error.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from .presentation import (PcPresentation, PresentationError,
                           check_consistency, format_presentation,
                           parse_presentation)
from .table import SizeBoundError
from .pcbuild import random_presentation
from .isomorphism import isoclinic
from .fingerprint import (sibling_fingerprint, are_siblings, sibling_census,
                          census_report, group_id)
from .chartab import char_tables_equivalent, brauer_pair, are_twins
from .catalog import (Catalog, CatalogError, FamilySpec, SizeError,
                      enumerate_groups, family_parameters, load_catalog,
                      paper_family, save_catalog)
from .idtree import (TreeIntegrityError, build_tree, identify, load_tree,
                     serialize_tree)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BOUND = 3
EXIT_INTEGRITY = 4


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(args, record: dict, text: str) -> None:
    if args.machine:
        print(json.dumps(record, separators=(",", ":"), sort_keys=True))
    else:
        print(text)


def _read_presentation(spec: str) -> PcPresentation:
    """A presentation from an inline record, a file path, or '-' (stdin)."""
    if spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(spec) as fh:
                text = fh.read()
        except OSError:
            text = spec
    try:
        pres = parse_presentation(text)
    except PresentationError as exc:
        raise _CliError(f"invalid presentation {spec!r}: {exc}", EXIT_INVALID)
    if not check_consistency(pres):
        raise _CliError(f"presentation {spec!r} is inconsistent", EXIT_INVALID)
    return pres


def _load_catalog(path: str):
    try:
        entries = load_catalog(path)
    except OSError as exc:
        raise _CliError(f"cannot read catalog {path}: {exc}", EXIT_INVALID)
    except CatalogError as exc:
        raise _CliError(f"catalog {path}: {exc}", EXIT_INTEGRITY)
    if not entries:
        raise _CliError(f"catalog {path} is empty", EXIT_INVALID)
    return entries


def cmd_enumerate(args) -> int:
    entries = enumerate_groups(args.p, args.n, allow_long=args.allow_long)
    if args.out:
        save_catalog(entries, args.out)
    _emit(args, {"kind": "enumerate", "p": args.p, "n": args.n,
                 "count": len(entries), "out": args.out},
          f"order {args.p}^{args.n}: {len(entries)} groups"
          + (f" -> {args.out}" if args.out else ""))
    return EXIT_OK


def cmd_tree_build(args) -> int:
    entries = _load_catalog(args.catalog)
    tree = build_tree(entries)
    serialize_tree(tree, args.out)
    _emit(args, {"kind": "tree-build", "catalog": args.catalog,
                 "out": args.out, "groups": len(entries)},
          f"built tree over {len(entries)} groups -> {args.out}")
    return EXIT_OK


def cmd_identify(args) -> int:
    entries = _load_catalog(args.catalog)
    tree = load_tree(args.tree, entries)
    pres = _read_presentation(args.presentation)
    if pres.order != tree.order:
        raise _CliError(
            f"group order {pres.order} does not match tree order {tree.order}",
            EXIT_INVALID)
    idx = identify(tree, pres, seed=args.seed)
    _emit(args, {"kind": "identify", "order": pres.order, "index": idx},
          f"{pres.order}#{idx}")
    return EXIT_OK


def cmd_siblings(args) -> int:
    entries = _load_catalog(args.catalog)
    catalog = Catalog(entries)
    buckets = sibling_census([e.presentation for e in entries], catalog)
    report = census_report(entries[0].order, buckets)
    _emit(args, {"kind": "siblings", "order": entries[0].order,
                 "buckets": buckets}, report)
    return EXIT_OK


def cmd_twins(args) -> int:
    entries = _load_catalog(args.catalog)
    catalog = Catalog(entries)
    buckets = sibling_census([e.presentation for e in entries], catalog)
    twin_pairs = []
    for bucket in buckets:
        for i, a in enumerate(bucket):
            for b in bucket[i + 1:]:
                if are_twins(entries[a - 1].presentation,
                             entries[b - 1].presentation, catalog=catalog):
                    twin_pairs.append([a, b])
    lines = [f"sibling buckets: {len(buckets)}"]
    for pair in twin_pairs:
        lines.append(f"twins: {entries[0].order}#{pair[0]} "
                     f"{entries[0].order}#{pair[1]}")
    lines.append(f"twin-pairs={len(twin_pairs)}")
    _emit(args, {"kind": "twins", "order": entries[0].order,
                 "sibling_buckets": buckets, "twin_pairs": twin_pairs},
          "\n".join(lines))
    return EXIT_OK


def cmd_fingerprint(args) -> int:
    pres = _read_presentation(args.presentation)
    ss = sibling_fingerprint(pres)
    _emit(args, {"kind": "fingerprint", "order": pres.order,
                 "subgroups": [[l, i.to_text()] for l, i in ss.sf.entries],
                 "factors": [i.to_text() for i in ss.ff.entries],
                 "frattini": ss.frattini_id.to_text(),
                 "upper_central": [i.to_text() for i in ss.upper_series_ids],
                 "lower_central": [i.to_text() for i in ss.lower_series_ids]},
          "\n".join([f"group of order {pres.order}",
                     "subgroup classes (length, type):"]
                    + [f"  {l} {i.to_text()}" for l, i in ss.sf.entries]
                    + ["proper factors:"]
                    + [f"  {i.to_text()}" for i in ss.ff.entries]
                    + [f"frattini: {ss.frattini_id.to_text()}"]))
    return EXIT_OK


def cmd_brauer(args) -> int:
    a = _read_presentation(args.a)
    b = _read_presentation(args.b)
    equiv = char_tables_equivalent(a, b) is not None
    brauer = brauer_pair(a, b) is not None if equiv else False
    _emit(args, {"kind": "brauer", "char_equivalent": equiv, "brauer": brauer},
          f"character tables equivalent: {equiv}\nbrauer pair: {brauer}")
    return EXIT_OK


def cmd_isoclinic(args) -> int:
    a = _read_presentation(args.a)
    b = _read_presentation(args.b)
    w = isoclinic(a, b)
    _emit(args, {"kind": "isoclinic", "isoclinic": w is not None},
          f"isoclinic: {w is not None}")
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        params = family_parameters(args.family, args.p)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_INVALID)
    if args.parameter is not None and args.parameter not in params:
        raise _CliError(
            f"parameter {args.parameter} not legal for {args.family} at "
            f"p={args.p}; legal: {params}", EXIT_INVALID)
    chosen = params if args.parameter is None else [args.parameter]
    lines = []
    records = []
    for w in chosen:
        pres = paper_family(FamilySpec(args.family, args.p, w))
        ok = check_consistency(pres)
        lines.append(f"w={w}: {format_presentation(pres)}  consistent={ok}")
        records.append({"parameter": w, "presentation":
                        format_presentation(pres), "consistent": ok})
    _emit(args, {"kind": "family", "family": args.family, "p": args.p,
                 "members": records}, "\n".join(lines))
    return EXIT_OK


def cmd_bench(args) -> int:
    entries = _load_catalog(args.catalog)
    tree = load_tree(args.tree, entries)
    rng = random.Random(args.seed)
    times = []
    for t in range(args.trials):
        entry = entries[rng.randrange(len(entries))]
        pres = random_presentation(entry.presentation, rng)
        t0 = time.perf_counter()
        idx = identify(tree, pres, seed=args.seed + t)
        times.append((time.perf_counter() - t0) * 1000.0)
        if idx != entry.index:
            raise _CliError(
                f"benchmark identification mismatch: expected "
                f"{entry.index}, got {idx}", EXIT_INTEGRITY)
    mean = statistics.fmean(times)
    med = statistics.median(times)
    _emit(args, {"kind": "bench", "order": entries[0].order,
                 "trials": args.trials, "mean_ms": round(mean, 3),
                 "median_ms": round(med, 3)},
          f"order {entries[0].order}: {args.trials} trials, "
          f"mean {mean:.2f} ms, median {med:.2f} ms")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pgroups",
        description="finite p-group engine: enumeration, identification, "
                    "fingerprints, character tables")
    ap.add_argument("--machine", action="store_true",
                    help="emit one JSON record per result line")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="enumerate all groups of order p^n")
    sp.add_argument("p", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--out", help="write the catalog to this path")
    sp.add_argument("--allow-long", action="store_true", dest="allow_long",
                    help="permit the long-running order-2^7 enumeration")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("tree-build", help="build an identification tree")
    sp.add_argument("catalog")
    sp.add_argument("out")
    sp.set_defaults(func=cmd_tree_build)

    sp = sub.add_parser("identify", help="identify a group against a tree")
    sp.add_argument("tree")
    sp.add_argument("catalog")
    sp.add_argument("presentation",
                    help="presentation record, file path, or '-' for stdin")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("siblings", help="sibling census over a catalog")
    sp.add_argument("catalog")
    sp.set_defaults(func=cmd_siblings)

    sp = sub.add_parser("twins", help="twin census over a catalog")
    sp.add_argument("catalog")
    sp.set_defaults(func=cmd_twins)

    sp = sub.add_parser("fingerprint", help="sibling fingerprint of a group")
    sp.add_argument("presentation")
    sp.set_defaults(func=cmd_fingerprint)

    sp = sub.add_parser("brauer",
                        help="character-table equivalence and Brauer pairing")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_brauer)

    sp = sub.add_parser("isoclinic", help="isoclinism test")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_isoclinic)

    sp = sub.add_parser("family", help="built-in presentation families")
    sp.add_argument("family",
                    choices=["theorem1_Gx", "tuple1", "tuple2", "tuple3"])
    sp.add_argument("p", type=int)
    sp.add_argument("parameter", type=int, nargs="?")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("bench", help="identification timing benchmark")
    sp.add_argument("tree")
    sp.add_argument("catalog")
    sp.add_argument("trials", type=int)
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PresentationError, CatalogError, ValueError) as exc:
        if isinstance(exc, SizeError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BOUND
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except TreeIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
