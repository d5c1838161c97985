"""Command line interface: ``semiring-lab <command> ...``.

Exit status: 0 when the command ran, 1 on usage or input errors,
2 when an audit hit a failing PROVEN claim.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import ProvenFailure, SemiringError
from .kernel import FiniteSemiring, additive_inverse, first_violation, fixture, from_json

log = logging.getLogger("semiring_lab")

EXIT_OK, EXIT_USAGE, EXIT_PROVEN = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_semiring(spec: str) -> FiniteSemiring:
    """A JSON file path, or a fixture expression such as ``prod(zmod(2),bool2)``."""
    p = Path(spec)
    if p.exists():
        with open(p) as fh:
            return from_json(json.load(fh))
    return fixture(spec)


def _indices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}") from None


def _fmt(S: FiniteSemiring, xs) -> str:
    return "{" + ",".join(S.label(x) for x in xs) + "}"


# -- commands -------------------------------------------------------------------

def cmd_validate(args) -> int:
    p = Path(args.file)
    if p.exists():
        obj = json.loads(p.read_text())
        add, mul = obj.get("add"), obj.get("mul")
        if add is not None and mul is not None:
            try:
                axiom, w = first_violation(add, mul)
            except (TypeError, IndexError):
                axiom, w = "shape", ()
            if axiom is not None:
                print(f"invalid\taxiom={axiom}\twitness={list(w)}")
                return EXIT_USAGE
    S = load_semiring(args.file)
    inv = [x for x in S.elements if additive_inverse(S, x) is not None]
    print(f"valid\torder={S.order}\tring={len(inv) == S.order}\tV={_fmt(S, inv)}")
    return EXIT_OK


def cmd_ideals(args) -> int:
    from .ideals import classify, enumerate_ideals
    from .order import hasse_dot, ideal_family

    S = load_semiring(args.file)
    cols = ["ideal"]
    if args.classify:
        cols += ["proper", "subtractive", "strongly_subtractive", "semisubtractive", "prime", "maximal"]
    print("\t".join(cols))
    for a in enumerate_ideals(S):
        row = [_fmt(S, a)]
        if args.classify:
            c = classify(S, a).to_json()
            row += [str(int(c[k])) for k in cols[1:]]
        print("\t".join(row))
    fam = ideal_family(S)
    if args.dot:
        Path(args.dot).write_text(hasse_dot(fam))
    if args.plot:
        from .plotting import hasse_figure

        hasse_figure(fam, args.plot, title=S.name)
    return EXIT_OK


def cmd_closure(args) -> int:
    from .ideals import is_ideal
    from .order import golan_closure

    S = load_semiring(args.file)
    if any(not 0 <= x < S.order for x in args.ideal) or not is_ideal(S, args.ideal):
        print(f"error: {args.ideal} is not an ideal of this semiring", file=sys.stderr)
        return EXIT_USAGE
    c = golan_closure(S, args.ideal, method=args.method)
    print(_fmt(S, c))
    return EXIT_OK


def cmd_topology(args) -> int:
    from .order import hasse_dot
    from .topology import build_space, check_connected, check_quasi_compact, check_sober, check_T0

    S = load_semiring(args.file)
    X = build_space(S)
    if args.dot:
        sys.stdout.write(hasse_dot(X.points, name="semisubtractive"))
        return EXIT_OK
    print(f"points\t{X.size}")
    print(f"closed_sets\t{len(X.closed_sets)}")
    for name, check in (("T0", check_T0), ("sober", check_sober), ("connected", check_connected),
                        ("quasi_compact", check_quasi_compact)):
        v = check(X)
        extra = f"\t{json.dumps(v.witness)}" if v.witness else ""
        print(f"{name}\t{int(v.holds)}{extra}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .enumerator import enumerate_semirings, write_corpus

    items = enumerate_semirings(args.order, allow_large=args.allow_large)
    if args.out:
        write_corpus(items, args.out)
    print(f"order\t{args.order}\tclasses\t{len(items)}")
    return EXIT_OK


def _corpus(args) -> tuple[list[FiniteSemiring], dict]:
    from .enumerator import cached_corpus, read_corpus
    from .kernel import all_fixtures

    items, desc = [], {}
    if args.corpus:
        items += read_corpus(args.corpus)
        desc["source"] = Path(args.corpus).name
    if args.order:
        for n in range(2, args.order + 1):
            items += cached_corpus(n, args.cache_dir, allow_large=args.allow_large)
        desc["orders"] = f"2..{args.order}"
    if args.fixtures:
        items += all_fixtures()
        desc["fixtures"] = True
    return items, desc


def _write_outputs(args, report: dict) -> None:
    from .auditor import dumps_report, markdown_summary, summary_csv

    if args.json:
        Path(args.json).write_text(dumps_report(report))
    if args.md:
        Path(args.md).write_text(markdown_summary(report))
    if args.csv:
        Path(args.csv).write_text(summary_csv(report))
    if args.figures:
        from .order import ideal_family
        from .plotting import hasse_figure, verdict_heatmap

        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        verdict_heatmap(report, out / "verdicts.png")
        # one lattice per semiring that carries a counterexample (first few)
        seen = []
        for cert in report["counterexamples"]:
            name = cert["semiring"].get("name") or f"cert{len(seen)}"
            if name in seen:
                continue
            seen.append(name)
            S = from_json(cert["semiring"])
            safe = "".join(ch if ch.isalnum() or ch in "_-" else "_" for ch in name)
            hasse_figure(ideal_family(S), out / f"ideals_{safe}.png", title=name)
            if len(seen) >= args.max_figures:
                break


def cmd_audit(args) -> int:
    from .auditor import default_context, run_audit, select_claims

    if not args.corpus and not args.order and not args.fixtures:
        print("error: give --corpus FILE, --order N and/or --fixtures", file=sys.stderr)
        return EXIT_USAGE
    props = args.props.split(",") if args.props else None
    claims = select_claims(props)
    corpus, desc = _corpus(args)
    ctx = default_context(all_q_witnesses=args.all_q_witnesses)
    code = EXIT_OK
    try:
        report = run_audit(corpus, claims, ctx, jobs=args.jobs, descriptor=desc)
    except ProvenFailure as exc:
        report = exc.report
        print(f"PROVEN FAILURE: {exc}", file=sys.stderr)
        print(json.dumps(exc.certificate), file=sys.stderr)
        code = EXIT_PROVEN
    _write_outputs(args, report)
    print("claim\tstatus\tpass\tfail\tvacuous")
    for cid, row in report["summary"].items():
        print(f"{cid}\t{row['status']}\t{row['PASS']}\t{row['FAIL']}\t{row['VACUOUS']}")
    return code


def cmd_replay(args) -> int:
    from .auditor import replay

    obj = json.loads(Path(args.cert).read_text())
    certs = obj["counterexamples"] if isinstance(obj, dict) and "counterexamples" in obj else [obj]
    ok = True
    for cert in certs:
        r = replay(cert)
        ok &= r.matches
        print(f"{r.claim}\trecorded={r.recorded}\treplayed={r.verdict}\t{'MATCH' if r.matches else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_USAGE


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="semiring-lab", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the semiring axioms")
    p.add_argument("file", help="semiring JSON file or fixture expression")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ideals", help="list (and classify) all ideals")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--dot", metavar="OUT", help="write the ideal lattice as DOT")
    p.add_argument("--plot", metavar="PNG", help="render the ideal lattice")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("closure", help="smallest semisubtractive ideal containing an ideal")
    p.add_argument("file")
    p.add_argument("--ideal", type=_indices, required=True, metavar="I,J,...")
    p.add_argument("--method", choices=("fixed_point", "oracle"), default="fixed_point")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("topology", help="semisubtractive space summary")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="print the inclusion order of points as DOT")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("enumerate", help="all semirings of one order, up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", metavar="JSONL")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("audit", help="evaluate registered claims over a corpus")
    p.add_argument("--corpus", metavar="JSONL")
    p.add_argument("--order", type=int, metavar="N", help="all classes of order 2..N")
    p.add_argument("--fixtures", action="store_true", help="add the named fixtures")
    p.add_argument("--props", metavar="ID,...", help="claim ids or glob patterns")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--md", metavar="OUT")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--figures", metavar="DIR", help="write PNG figures here")
    p.add_argument("--max-figures", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-q-witnesses", action="store_true")
    p.add_argument("--cache-dir", metavar="DIR")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("replay", help="re-evaluate a certificate (or every one in a report)")
    p.add_argument("cert")
    p.set_defaults(func=cmd_replay)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SemiringError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
