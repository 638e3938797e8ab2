"""Command-line front end.

Exit status: 0 on success, 1 when a verified law or a ``--check`` cross-check
fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import induced as ind
from . import jsonio
from . import matroid as mat
from . import relation as rel
from . import relation_matroid as rmod
from . import rough, verify
from .errors import LoadError, RelMatroidError
from .sets import SetFamily, Subset, Universe, format_family, format_set

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_set(u: Universe, text: str) -> Subset:
    """Comma-separated labels; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return u.empty()
    return u.subset(part.strip() for part in text.split(","))


def _emit(doc: dict) -> None:
    sys.stdout.write(jsonio.dumps(doc))


def _load_any(path: str):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise LoadError(f"cannot read file: {exc.strerror}", p) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict) and "independents" in doc:
        return jsonio.matroid_from_text(text, p)
    return jsonio.relation_from_text(text, p)


def cmd_neighborhoods(args) -> int:
    r = jsonio.load_relation(args.file)
    u = r.universe
    order = sorted(range(u.n), key=lambda i: u.labels[i])
    succ = {u.labels[x]: rel.successor_neighborhood(r, x) for x in order}
    pred = {u.labels[x]: rel.predecessor_neighborhood(r, x) for x in order}
    if args.json:
        _emit({
            "successor": {k: v.sorted_labels() for k, v in succ.items()},
            "predecessor": {k: v.sorted_labels() for k, v in pred.items()},
        })
        return EXIT_OK
    for k, v in succ.items():
        print(f"RS({k}) = {format_set(v)}")
    for k, v in pred.items():
        print(f"RP({k}) = {format_set(v)}")
    return EXIT_OK


def cmd_approx(args) -> int:
    r = jsonio.load_relation(args.file)
    x = parse_set(r.universe, args.set)
    out = {}
    if args.which in ("lower", "both"):
        out["lower"] = rough.lower_approx(r, x)
    if args.which in ("upper", "both"):
        out["upper"] = rough.upper_approx(r, x)
    if args.json:
        _emit({"set": x.sorted_labels(), **{k: v.sorted_labels() for k, v in out.items()}})
        return EXIT_OK
    for k, v in out.items():
        print(f"{k}({format_set(x)}) = {format_set(v)}")
    return EXIT_OK


def cmd_matroid(args) -> int:
    r = jsonio.load_relation(args.file)
    u = r.universe
    rm = rmod.build_relation_matroid(r, args.kind)
    results: dict = {}
    disagreements: list[str] = []

    def family(name: str, closed: SetFamily, generic) -> None:
        results[name] = closed
        if args.check and closed != generic():
            disagreements.append(name)

    nothing = not (args.independents or args.dependents or args.circuits
                   or args.rank or args.closure or args.closed)
    if nothing:
        results["blocks"] = rm.blocks
    if args.independents:
        family("independents", rmod.rm_independent_sets(rm),
               lambda: SetFamily.from_masks(u, (s for s in range(1 << u.n) if rm.independent_mask(s))))
    if args.dependents:
        family("dependents", rmod.rm_dependent_sets(rm), lambda: mat.dependent_sets(rm))
    if args.circuits or nothing:
        family("circuits", rmod.rm_circuits(rm), lambda: mat.circuits(rm))
    for text in args.rank or ():
        x = parse_set(u, text)
        val = rmod.rm_rank(rm, x)
        results[f"rank({format_set(x)})"] = val
        if args.check and val != mat.rank_exhaustive(rm, x):
            disagreements.append(f"rank({format_set(x)})")
    for text in args.closure or ():
        x = parse_set(u, text)
        val = rmod.rm_closure(rm, x)
        results[f"closure({format_set(x)})"] = val
        if args.check and val != mat.closure(rm, x):
            disagreements.append(f"closure({format_set(x)})")
    for text in args.closed or ():
        x = parse_set(u, text)
        val = rmod.rm_is_closed(rm, x)
        results[f"closed({format_set(x)})"] = val
        if args.check and val != mat.is_closed(rm, x):
            disagreements.append(f"closed({format_set(x)})")

    if args.json:
        doc = {"kind": args.kind}
        for k, v in results.items():
            if isinstance(v, SetFamily):
                doc[k] = v.to_labels()
            elif isinstance(v, Subset):
                doc[k] = v.sorted_labels()
            else:
                doc[k] = v
        if args.check:
            doc["check"] = {"agree": not disagreements, "disagreements": disagreements}
        _emit(doc)
    else:
        for k, v in results.items():
            if isinstance(v, SetFamily):
                print(f"{k} = {format_family(v)}")
            elif isinstance(v, Subset):
                print(f"{k} = {format_set(v)}")
            elif isinstance(v, bool):
                print(f"{k} = {'true' if v else 'false'}")
            else:
                print(f"{k} = {v}")
        if args.check:
            print("check: agree" if not disagreements else "check: DISAGREE on " + ", ".join(disagreements))
    return EXIT_FAIL if disagreements else EXIT_OK


def cmd_induce(args) -> int:
    obj = _load_any(args.file)
    if isinstance(obj, mat.ExplicitMatroid):
        if args.roundtrip:
            raise LoadError("--roundtrip needs a relation file, got a matroid file", args.file)
        _emit(jsonio.relation_to_json(ind.induce_relation(obj).relation))
        return EXIT_OK
    if not args.roundtrip:
        raise LoadError("a relation file needs --roundtrip (or pass a matroid file)", args.file)
    report = ind.check_round_trip_laws(obj)
    doc = jsonio.relation_to_json(report.induced)
    doc["equals_original"] = report.equal
    _emit(doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    cases = verify.run_all(args.n, scope=args.scope, laws=args.law, jobs=args.jobs)
    sys.stdout.write(verify.report_lines(cases))
    failed = [c.id for c in cases if not c.passed]
    print(f"{len(cases)} laws checked at n <= {args.n}, {len(failed)} failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relmatroid",
        description="Relation matroids, rough-set approximations and an exhaustive law verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("neighborhoods", help="successor and predecessor neighborhoods of every element")
    p.add_argument("file", help="relation JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_neighborhoods)

    p = sub.add_parser("approx", help="lower/upper approximation of a set")
    p.add_argument("file", help="relation JSON file")
    p.add_argument("--set", required=True, help='comma-separated labels; "" is the empty set')
    p.add_argument("--which", choices=("lower", "upper", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("matroid", help="characteristics of the relation matroid")
    p.add_argument("file", help="relation JSON file")
    p.add_argument("--kind", choices=rmod.KINDS, default=rmod.SUCCESSOR)
    p.add_argument("--independents", action="store_true")
    p.add_argument("--dependents", action="store_true")
    p.add_argument("--circuits", action="store_true")
    p.add_argument("--rank", action="append", metavar="SET")
    p.add_argument("--closure", action="append", metavar="SET")
    p.add_argument("--closed", action="append", metavar="SET")
    p.add_argument("--check", action="store_true", help="cross-check closed forms against the generic oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("induce", help="relation induced by a matroid, or the round trip R(M(R))")
    p.add_argument("file", help="matroid JSON file, or relation JSON file with --roundtrip")
    p.add_argument("--roundtrip", action="store_true")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("verify", help="run the exhaustive law catalog")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--scope", choices=(*verify.SCOPES, "all"), default="all")
    p.add_argument("--law", action="append", metavar="ID", help="restrict to a law id (repeatable)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RelMatroidError as exc:
        print(f"relmatroid {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
