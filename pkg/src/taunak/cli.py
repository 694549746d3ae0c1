"""Command-line interface.

Examples::

    taunak --n 3 --kupisch 3,2,1 smc enumerate
    taunak --n 3 --kupisch 2,2,2 smc check --positive "M(1,2)" --negative "M(2,2)"
    taunak --n 4 --kupisch 3,3,3,3 complex check-cat0
    taunak --n 3 --kupisch 3,2,1 report --out build/a3

Exit status is 0 on success, 1 for invalid input and 2 when a verification
fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any

from . import arcs as am
from . import tilting as tt
from . import tors
from .cubes import build_cube_complex, check_cubical, check_links_flag
from .cubes import to_dot as complex_dot
from .picture import STYLES, presentation, verify_all
from .serial import AlgebraSpec, SpecError, parse_list, spec_from_json, validate_spec
from .smc import SemibrickPair, SmcError, all_smcs, is_completable, is_mutation_compatible, is_semibrick_pair
from .smc import mutate_smc, mutate_smc_right
from .verify import CHECKS, run_all

log = logging.getLogger("taunak")

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Declared on the main parser and on every verb, so flags may come before or after it.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("algebra and output")
    g.add_argument("--n", type=int, default=d(None), help="number of vertices")
    g.add_argument("--kupisch", default=d(None), help="Kupisch series, comma separated, e.g. 3,2,1")
    g.add_argument("--algebra", default=d(None), help='JSON file {"n": ..., "kupisch": [...]}')
    g.add_argument("--out", default=d(None), help="output file or directory for diagrams and reports")
    g.add_argument("--format", choices=("json", "dot", "tikz", "text"), default=d("json"))
    g.add_argument("--parallel", type=int, default=d(1), help="worker processes for enumeration")
    g.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taunak", description=__doc__.split("\n")[0])
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def verb(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _global_options(p, suppress=True)
        return p

    verb("info", "summary of the algebra")
    verb("bricks", "list the bricks")
    verb("arcs", "list the arcs and their modules")

    p = verb("smc", "two-term simple-minded collections")
    p.add_argument("action", choices=("enumerate", "check", "mutate"))
    p.add_argument("--positive", default="", help='positive bricks, e.g. "M(1,2) M(3,1)"')
    p.add_argument("--negative", default="", help="negative bricks (written without [1])")
    p.add_argument("--at", help="brick to mutate at")
    p.add_argument("--right", action="store_true", help="right mutation (at a negative brick)")

    p = verb("stt", "support tau-tilting pairs")
    p.add_argument("action", choices=("graph",))

    p = verb("tors", "lattice of torsion classes")
    p.add_argument("action", choices=("hasse", "polygons", "mgs"))

    p = verb("group", "picture group")
    p.add_argument("action", choices=("present", "verify"))
    p.add_argument("--style", choices=STYLES, default="polygon")

    p = verb("complex", "cube complex of the tau-cluster morphism category")
    p.add_argument("action", choices=("build", "check-cat0", "check-cubical"))

    p = verb("verify", "cross-pipeline verification suite")
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--check", action="append", choices=sorted(CHECKS), help="run only this check (repeatable)")

    verb("report", "write figures and tables to --out")
    return parser


def load_spec(args: argparse.Namespace) -> AlgebraSpec:
    if args.algebra:
        try:
            obj = json.loads(Path(args.algebra).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read algebra file {args.algebra}: {exc}") from None
        return spec_from_json(obj)
    if args.n is None or args.kupisch is None:
        raise UsageError("give --n and --kupisch, or --algebra FILE")
    try:
        kup = [int(x) for x in args.kupisch.replace(" ", "").strip("[]").split(",") if x]
    except ValueError:
        raise UsageError(f"cannot parse Kupisch series {args.kupisch!r}") from None
    return validate_spec(args.n, kup)


def _pair(spec: AlgebraSpec, args: argparse.Namespace) -> SemibrickPair:
    pos = [x.base for x in parse_list(args.positive, spec)]
    neg = [x.base for x in parse_list(args.negative, spec)]
    return SemibrickPair(frozenset(pos), frozenset(neg))


def _pattern_json(p: am.ArcPattern) -> dict:
    out = p.to_json()
    out.update(SemibrickPair.from_pattern(p).to_json())
    return out


def emit(data: Any, fmt: str, out: str | None = None) -> None:
    if fmt == "json" and not isinstance(data, str):
        text = json.dumps(data, indent=2, ensure_ascii=False)
    elif isinstance(data, str):
        text = data
    else:
        text = _as_text(data)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _as_text(data: Any) -> str:
    if isinstance(data, list):
        return "\n".join(_as_text(x) if not isinstance(x, str) else x for x in data)
    if isinstance(data, dict):
        return "\n".join(f"{k}: {v if not isinstance(v, (list, dict)) else json.dumps(v, ensure_ascii=False)}"
                         for k, v in data.items())
    return str(data)


# -- verbs ----------------------------------------------------------------

def cmd_info(spec: AlgebraSpec, args) -> int:
    lat = tors.build_lattice(spec)
    emit({"algebra": str(spec), "kind": spec.kind, "indecomposables": len(spec.indecs),
          "bricks": len(spec.bricks), "projectives": [str(p) for p in spec.projectives],
          "support_tau_tilting_pairs": len(lat.vertices), "hasse_arrows": len(lat.arrows)}, args.format, args.out)
    return EXIT_OK


def cmd_bricks(spec: AlgebraSpec, args) -> int:
    emit([str(b) for b in spec.bricks], args.format, args.out)
    return EXIT_OK


def cmd_arcs(spec: AlgebraSpec, args) -> int:
    rows = [{"source": a.source, "length": a.length, "target": am.target(spec, a),
             "module": str(am.module_of(a)), "loop": am.is_loop(spec, a)} for a in am.arcs(spec)]
    if args.format == "text":
        rows = [f"{r['module']}: {r['source']} -> {r['target']}" + (" (loop)" if r["loop"] else "") for r in rows]
    emit(rows, args.format, args.out)
    return EXIT_OK


def cmd_smc(spec: AlgebraSpec, args) -> int:
    if args.action == "enumerate":
        patterns = am.enumerate_maximal_patterns(spec, args.parallel)
        if args.format == "tikz":
            emit("\n\n".join(am.to_tikz(spec, p) for p in patterns), "tikz", args.out)
        elif args.format == "text":
            emit([str(SemibrickPair.from_pattern(p)) for p in patterns], "text", args.out)
        else:
            emit([_pattern_json(p) for p in patterns], "json", args.out)
        return EXIT_OK
    pair = _pair(spec, args)
    if args.action == "check":
        sbp, why = is_semibrick_pair(spec, pair)
        compatible, witness = is_mutation_compatible(spec, pair)
        result: dict[str, Any] = {"pair": str(pair), "semibrick_pair": sbp, "mutation_compatible": compatible}
        if not sbp:
            result["reason"] = why
        elif not compatible:
            result["reason"] = witness
        completable, info = is_completable(spec, pair) if sbp else (False, why)
        result["completable"] = completable
        if completable:
            result["completion"] = SemibrickPair.from_pattern(info).to_json()
        if args.format == "tikz":
            emit(am.to_tikz(spec, pair.pattern()), "tikz", args.out)
        else:
            emit(result, args.format, args.out)
        return EXIT_OK
    if not args.at:
        raise UsageError("smc mutate needs --at")
    at = parse_list(args.at, spec)
    if len(at) != 1:
        raise UsageError("--at takes exactly one brick")
    fn = mutate_smc_right if args.right else mutate_smc
    try:
        new = fn(spec, pair, at[0].base)
    except SmcError as exc:
        raise UsageError(str(exc)) from None
    emit(new.to_json(), args.format, args.out)
    return EXIT_OK


def cmd_stt(spec: AlgebraSpec, args) -> int:
    g = tt.all_stt(spec)
    if args.format == "dot":
        lat = tors.build_lattice(spec)
        emit(tors.to_dot(lat), "dot", args.out)
        return EXIT_OK
    data = {"vertices": [tt.obj_str(v) for v in g.vertices],
            "arrows": [{"source": tt.obj_str(s), "target": tt.obj_str(t), "mutated": str(at), "new": str(r)}
                       for s, t, at, r in g.arrows],
            "regular": g.degree_ok()}
    emit(data, args.format, args.out)
    return EXIT_OK if g.degree_ok() else EXIT_VERIFY


def cmd_tors(spec: AlgebraSpec, args) -> int:
    lat = tors.build_lattice(spec)
    if args.action == "hasse":
        emit(tors.to_dot(lat) if args.format == "dot" else tors.to_json(lat), args.format, args.out)
    elif args.action == "polygons":
        emit([p.to_json() for p in tors.polygons(lat)], args.format, args.out)
    else:
        seqs = tors.maximal_green_sequences(lat)
        if args.format == "text":
            emit([" ".join(map(str, s)) for s in seqs], "text", args.out)
        else:
            emit([[str(b) for b in s] for s in seqs], args.format, args.out)
    return EXIT_OK


def _reports_out(reports, args) -> int:
    ok = all(r.passed for r in reports)
    if args.format == "text":
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name} ({r.checked} checked)" for r in reports]
        lines += [f"    {msg}" for r in reports for msg in r.failures]
        emit(lines, "text", args.out)
    else:
        emit({"passed": ok, "checks": [r.to_json() for r in reports]}, "json", args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_group(spec: AlgebraSpec, args) -> int:
    if args.action == "present":
        pres = presentation(spec, args.style)
        emit(pres.to_text() if args.format == "text" else pres.to_json(), args.format, args.out)
        return EXIT_OK
    return _reports_out(verify_all(spec), args)


def cmd_complex(spec: AlgebraSpec, args) -> int:
    c = build_cube_complex(spec)
    if args.action == "build":
        if args.format == "dot":
            emit(complex_dot(c), "dot", args.out)
            return EXIT_OK
        flag, _ = check_links_flag(c)
        emit({**c.stats(), "flag": flag}, args.format, args.out)
        return EXIT_OK
    if args.action == "check-cubical":
        return _reports_out(check_cubical(c), args)
    flag, per = check_links_flag(c)
    data = {"flag": flag}
    if not flag:
        data["failing"] = [str(w) for w, ok in per.items() if not ok]
    emit(data, args.format, args.out)
    return EXIT_OK if flag else EXIT_VERIFY


def cmd_verify(spec: AlgebraSpec, args) -> int:
    if not args.all and not args.check:
        raise UsageError("give --all or at least one --check")
    return _reports_out(run_all(spec, None if args.all else args.check), args)


def cmd_report(spec: AlgebraSpec, args) -> int:
    """Figures (PNG) next to tab-separated and JSON tables."""
    from .plotting import plot_hasse, plot_patterns

    if not args.out:
        raise UsageError("report needs --out DIR")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lat = tors.build_lattice(spec)
    patterns = am.enumerate_maximal_patterns(spec, args.parallel)
    plot_patterns(spec, patterns, out / "arc_patterns.png")
    plot_hasse(lat, out / "hasse.png")
    with open(out / "smcs.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t")
        w.writerow(["index", "support_tau_tilting_pair", "positive", "negative", "green_arcs", "red_arcs"])
        for k, v in enumerate(lat.vertices, 1):
            pair = SemibrickPair(*tors.x_of(lat, v))
            p = pair.pattern()
            w.writerow([k, tt.obj_str(v), " ".join(map(str, sorted(pair.positive))),
                        " ".join(map(str, sorted(pair.negative))),
                        " ".join(f"{a.source}:{a.length}" for a in sorted(p.green)),
                        " ".join(f"{a.source}:{a.length}" for a in sorted(p.red))])
    (out / "hasse.dot").write_text(tors.to_dot(lat) + "\n")
    (out / "presentation.json").write_text(
        json.dumps(presentation(spec, "polygon").to_json(), indent=2, ensure_ascii=False) + "\n")
    c = build_cube_complex(spec)
    flag, _ = check_links_flag(c)
    (out / "complex.json").write_text(json.dumps({**c.stats(), "flag": flag}) + "\n")
    reports = run_all(spec)
    with open(out / "verify.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t")
        w.writerow(["check", "passed", "checked"])
        for r in reports:
            w.writerow([r.name, r.passed, r.checked])
    ok = all(r.passed for r in reports)
    emit({"out": str(out), "files": sorted(p.name for p in out.iterdir()), "passed": ok}, args.format)
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"info": cmd_info, "bricks": cmd_bricks, "arcs": cmd_arcs, "smc": cmd_smc, "stt": cmd_stt,
            "tors": cmd_tors, "group": cmd_group, "complex": cmd_complex, "verify": cmd_verify,
            "report": cmd_report}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        spec = load_spec(args)
        return COMMANDS[args.command](spec, args)
    except (UsageError, SpecError, tt.RigidityError, ValueError) as exc:
        print(f"taunak: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
