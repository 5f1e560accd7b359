"""Command-line interface.

Subcommands: analyze-diagram, analyze-matrix, realize, satoh, bounds,
classify, selftest.  Output is deterministic for a fixed input and
configuration: JSON is emitted with sorted keys and no timestamps, and every
random element is drawn from the --seed stream.

Exit codes: 0 success, 2 validation/parse error, 3 infeasible request,
4 a bound was exceeded or an unknown verdict is present.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from alexmod import __version__, grobner
from alexmod.diagrams import (
    DiskArcPresentation,
    parse_gauss_code,
    satoh_map,
    wirtinger_from_diagram,
    wirtinger_from_diskarc,
)
from alexmod.errors import (
    AlexmodError,
    BoundExceededError,
    ParseError,
    PartitionInfeasibleError,
    ValidationError,
)
from alexmod.ext import dm, ext, finite_structure, min_generators
from alexmod.groups import alexander_module, jacobian
from alexmod.laurent import LambdaMatrix, ZZ
from alexmod.modules import (
    DEFAULT_PRIMES,
    PresentedModule,
    basic_report,
    battery,
    battery_to_json,
    is_symmetric_poly,
    alexander_polynomial,
    try_corank,
)
from alexmod.realization import (
    classify,
    general_genus_lower_bound,
    normalized_presentation,
    realize,
    ribbon_genus_lower_bound,
)
from alexmod import fixtures
from alexmod.seeded import (
    random_cokernel_free_matrix,
    random_gauss_code,
    random_letters,
)
from alexmod.laurent import LaurentPoly
from alexmod.words import Word

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_UNKNOWN = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in _text_lines(payload, prefix=""):
            print(line)


def _text_lines(value, prefix: str):
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                yield f"{prefix}{k}:"
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}{k}: {v}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}- {v}"
    else:
        yield f"{prefix}{value}"


def _module_report(M: PresentedModule, primes, r=None, g=None, max_order=4096) -> dict:
    rep = basic_report(M, primes)
    dmod = dm(M)
    rep.dm_order = dmod.order
    rep.dm_battery = battery_to_json(dmod.battery(primes))
    rep.e_e2 = min_generators(finite_structure(ext(M, 2).presented()))
    cr = try_corank(M)
    if r is None:
        r = cr + 1 if cr is not None else None
    if r is not None:
        rep.verdicts = classify(M, r, g, max_submodules=max_order)
    return rep.to_json()


def cmd_analyze_diagram(args) -> int:
    code = parse_gauss_code(_read_text(args.input))
    G = wirtinger_from_diagram(code)
    M = alexander_module(G)
    payload = {
        "code": code.to_text(),
        "components": code.ncomponents,
        "wirtinger": G.to_json(),
        "jacobian": jacobian(G).to_json(),
        "module": M.to_json(),
        "report": _module_report(M, args.primes, r=code.ncomponents, max_order=args.max_order),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_analyze_matrix(args) -> int:
    M = PresentedModule.from_json(json.loads(_read_text(args.input)))
    payload = {
        "module": M.to_json(),
        "report": _module_report(M, args.primes, max_order=args.max_order),
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_realize(args) -> int:
    data = json.loads(_read_text(args.input))
    B = LambdaMatrix.from_json(data, ZZ)
    partition = tuple(int(x) for x in args.partition.split(",")) if args.partition else ()
    out = realize(B, partition)
    payload = out.to_json()
    payload["module_battery"] = battery_to_json(
        battery(PresentedModule(B.rows, B), args.primes)
    )
    if args.out:
        for name, blob in (
            ("group", out.group.to_json()),
            ("diskarc", out.diskarc.to_json()),
            ("report", payload),
        ):
            with open(f"{args.out}.{name}.json", "w", encoding="utf-8") as fh:
                json.dump(blob, fh, sort_keys=True, indent=2)
    _emit(payload, args.format)
    return EXIT_OK


def cmd_satoh(args) -> int:
    code = parse_gauss_code(_read_text(args.input))
    d = satoh_map(code)
    consistent = wirtinger_from_diskarc(d) == wirtinger_from_diagram(code)
    payload = {
        "code": code.to_text(),
        "diskarc": d.to_json(),
        "genus_partition": d.genus_partition(),
        "consistent": consistent,
    }
    _emit(payload, args.format)
    return EXIT_OK if consistent else EXIT_UNKNOWN


def cmd_bounds(args) -> int:
    M = PresentedModule.from_json(json.loads(_read_text(args.input)))
    ribbon = ribbon_genus_lower_bound(M)
    general, witness = general_genus_lower_bound(
        M, max_submodules=args.max_order, symmetry_budget=args.max_order * 256
    )
    payload = {
        "ribbon_genus_lower_bound": ribbon,
        "general_genus_lower_bound": general,
        "witness": witness,
    }
    _emit(payload, args.format)
    unknown = isinstance(witness, dict) and (
        witness.get("status") == "bound-exceeded" or witness.get("near_symmetry") == "unknown"
    )
    return EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_classify(args) -> int:
    M = PresentedModule.from_json(json.loads(_read_text(args.input)))
    payload = classify(M, args.components, args.genus, max_submodules=args.max_order)
    _emit(payload, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------


def _selftest_checks(seed: int, primes) -> list[dict]:
    P = LaurentPoly.from_text
    checks = []

    def check(name, ok, **details):
        entry = {"name": name, "pass": bool(ok)}
        entry.update(details)
        checks.append(entry)

    tre = fixtures.trefoil()
    Mt = alexander_module(wirtinger_from_diagram(tre))
    delta = alexander_polynomial(Mt, 0)
    check("trefoil-alexander", delta == P("t^2 - t + 1"), value=delta.to_text())
    check("trefoil-symmetric", is_symmetric_poly(delta))

    fe = fixtures.figure_eight()
    Mf = alexander_module(wirtinger_from_diagram(fe))
    delta8 = alexander_polynomial(Mf, 0)
    check("figure-eight-alexander", delta8 == P("t^2 - 3*t + 1"), value=delta8.to_text())

    nc = fixtures.nonclassical_2link()
    Mn = alexander_module(wirtinger_from_diagram(nc))
    ref = PresentedModule.cyclic(P("t^2 - 2*t + 1"), P("2*t - 2"))
    check("nonclassical-battery", battery(Mn, primes) == battery(ref, primes))
    verdicts = classify(Mn, 2)
    check("nonclassical-witness", verdicts["not_classical_witness"])
    check("nonclassical-virtual", verdicts["virtual_realizable"])

    rng = Random(seed)
    ok = True
    for _ in range(25):
        code = random_gauss_code(rng)
        if wirtinger_from_diskarc(satoh_map(code)) != wirtinger_from_diagram(code):
            ok = False
            break
    check("satoh-consistency-random", ok)

    rng = Random(seed + 1)
    ok = True
    tminus = P("t - 1")
    for _ in range(200):
        letters = random_letters(rng)
        w = Word(letters)
        row = w.fox_row(6)
        total = LaurentPoly.zero(ZZ)
        for p in row:
            total = total + p * tminus
        expect = LaurentPoly(ZZ, {w.gamma(): 1}) - LaurentPoly.one(ZZ)
        if total != expect:
            ok = False
            break
    check("fox-identity-random", ok)

    rng = Random(seed + 2)
    ok = True
    for _ in range(10):
        B = random_cokernel_free_matrix(rng)
        M = PresentedModule(B.rows, B)
        cr = try_corank(M)
        from alexmod.realization import base_change_at_one

        _, _, _, u = base_change_at_one(B)
        partition = [0] * (cr + 1)
        partition[0] = B.cols - u
        realize(B, partition)  # raises on any round-trip failure
    check("realize-roundtrip-random", ok)

    w1 = fixtures.witness_family(1, 1)
    check("witness-ribbon-bound", ribbon_genus_lower_bound(w1) == 1)
    gb, _ = general_genus_lower_bound(w1)
    check("witness-general-bound", gb == 1)
    return checks


def cmd_selftest(args) -> int:
    checks = _selftest_checks(args.seed, args.primes)
    payload = {
        "version": __version__,
        "seed": args.seed,
        "primes": list(args.primes),
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }
    _emit(payload, args.format)
    return EXIT_OK if payload["all_pass"] else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexmod",
        description="Exact first Alexander Z[Z]-module invariants and realizations",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--primes",
        default=",".join(str(p) for p in DEFAULT_PRIMES),
        help="comma-separated primes for the invariant batteries",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    parser.add_argument(
        "--max-order", type=int, default=4096, help="submodule enumeration / search cap"
    )
    parser.add_argument(
        "--degree-cap", type=int, default=grobner.DEFAULT_DEGREE_CAP,
        help="Groebner degree safety cap",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-diagram", help="invariants of a Gauss-code diagram")
    p.add_argument("input", help="path to a Gauss code file, or - for stdin")
    p.set_defaults(func=cmd_analyze_diagram)

    p = sub.add_parser("analyze-matrix", help="invariants of a presentation matrix")
    p.add_argument("input", help="path to a matrix JSON file, or -")
    p.set_defaults(func=cmd_analyze_matrix)

    p = sub.add_parser("realize", help="realize a cokernel-free matrix as a ribbon surface-link")
    p.add_argument("input", help="path to a matrix JSON file, or -")
    p.add_argument("--partition", required=True, help="comma-separated genus partition")
    p.add_argument("--out", help="prefix for .group/.diskarc/.report JSON files")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("satoh", help="disk-arc image of a diagram, with consistency check")
    p.add_argument("input", help="path to a Gauss code file, or -")
    p.set_defaults(func=cmd_satoh)

    p = sub.add_parser("bounds", help="total-genus lower bounds of a matrix module")
    p.add_argument("input", help="path to a matrix JSON file, or -")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="realizability verdicts for a matrix module")
    p.add_argument("input", help="path to a matrix JSON file, or -")
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--genus", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("selftest", help="deterministic end-to-end self check")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.primes = tuple(int(p) for p in str(args.primes).split(",") if p)
    except ValueError:
        print("error: --primes must be a comma-separated list of integers", file=sys.stderr)
        return EXIT_VALIDATION
    grobner.set_degree_cap(args.degree_cap)
    try:
        return args.func(args)
    except PartitionInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.minimal_genus is not None:
            print(f"minimal feasible total genus: {exc.minimal_genus}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ParseError, ValidationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except AlexmodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
