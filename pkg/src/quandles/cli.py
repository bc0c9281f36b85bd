"""Command-line front end.

Machine-readable output (tab-separated) goes to stdout; prose goes to
stderr.  Exit codes: 0 success, 1 negative result (not isomorphic, folder
obstruction, equivalence failure), 2 usage error, 3 input-format error,
4 capability bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .envelope import Envelope, EnvelopeError, quandle_from_envelope
from .families import (
    AbelianGroup,
    AutMap,
    galkin,
    affine_quandle,
    ncycles_envelope,
    platonic_envelope,
    psl3_2_envelope,
    sl2_envelope,
    tuple_envelope_alt,
    tuple_envelope_sym,
    two_subsets_envelope,
)
from .perm import BoundExceededError
from .quandle import (
    FormatError,
    InvalidQuandleError,
    Quandle,
    are_isomorphic,
    quandle_to_text,
    read_quandle_file,
    write_quandle_file,
)
from .enumeration import (
    Catalog,
    brute_force_quandles,
    builtin_catalog,
    catalog_to_text,
    classify,
    enumerate_connected_quandles,
    export_results,
    load_catalog,
    match_up_to_isomorphism,
    obstruction_check,
    save_catalog,
    trivial_catalog,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_BOUND = 4


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Connected quandles, quandle envelopes, and "
                    "transitive-group enumeration.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate",
                       help="count/emit connected quandles of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--catalog", help="external catalog file (degrees > 8)")
    p.add_argument("--method", choices=("envelope", "oracle", "both"),
                   default="envelope")
    p.add_argument("--out", help="directory for .qnd files and summary.tsv")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("check", help="validate a quandle file and report "
                                     "its properties")
    p.add_argument("path")

    p = sub.add_parser("iso", help="isomorphism test between two quandle "
                                   "files")
    p.add_argument("path1")
    p.add_argument("path2")

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("--family", required=True,
                   choices=("affine", "galkin", "two-subsets", "n-cycles",
                            "sym-tuples", "alt-tuples", "sl2", "psl3-2",
                            "platonic"))
    p.add_argument("--params", default="",
                   help="comma-separated key=value pairs")
    p.add_argument("--out", help="output quandle file (default: stdout)")

    p = sub.add_parser("catalog", help="emit or validate a transitive-group "
                                       "catalog")
    p.add_argument("--degree", type=int)
    p.add_argument("--out")
    p.add_argument("--validate", help="catalog file to re-check")

    p = sub.add_parser("obstruct", help="report groups passing the "
                                        "degree-2p obstruction conditions")
    p.add_argument("--catalog", help="catalog file")
    p.add_argument("--degree", type=int,
                   help="use the built-in catalog of this degree")
    return parser


def _parse_params(text: str) -> dict:
    params = {}
    if not text:
        return params
    for chunk in text.split(","):
        if "=" not in chunk:
            raise ValueError(f"malformed parameter {chunk!r}; "
                             f"expected key=value")
        key, value = chunk.split("=", 1)
        params[key.strip()] = value.strip()
    return params


def _parse_factors(text: str) -> AbelianGroup:
    if text in ("1", "triv", "trivial"):
        return AbelianGroup(())
    return AbelianGroup([int(tok) for tok in text.split("x")])


def _parse_element(text: str, group: AbelianGroup) -> tuple:
    parts = [int(tok) for tok in text.split(":")] if text else []
    if len(parts) != len(group.factors):
        raise ValueError(
            f"element {text!r} needs {len(group.factors)} "
            f"colon-separated components")
    return tuple(x % d for x, d in zip(parts, group.factors))


def _construct_quandle(family: str, params: dict) -> Quandle:
    def need(*keys):
        for key in keys:
            if key not in params:
                raise ValueError(f"family {family!r} needs parameter "
                                 f"{key}=...")

    if family == "affine":
        need("group", "f")
        group = _parse_factors(params["group"])
        f = AutMap.scalar(group, int(params["f"]))
        return affine_quandle(group, f)
    if family == "galkin":
        need("a", "u")
        group = _parse_factors(params["a"])
        u = _parse_element(params["u"], group)
        return galkin(group, u)
    env: Optional[Envelope] = None
    if family == "two-subsets":
        need("n")
        env = two_subsets_envelope(int(params["n"]))
    elif family == "n-cycles":
        need("n")
        env = ncycles_envelope(int(params["n"]))
    elif family == "sym-tuples":
        need("n")
        env = tuple_envelope_sym(int(params["n"]))
    elif family == "alt-tuples":
        need("n")
        env = tuple_envelope_alt(int(params["n"]))
    elif family == "sl2":
        need("q")
        env = sl2_envelope(int(params["q"]))
    elif family == "psl3-2":
        env = psl3_2_envelope()
    elif family == "platonic":
        need("solid")
        env = platonic_envelope(params["solid"])
    assert env is not None
    return quandle_from_envelope(env)


def _cmd_enumerate(args) -> int:
    n = args.order
    if n < 1:
        raise ValueError("--order must be positive")
    results = {}
    if args.method in ("envelope", "both"):
        if args.catalog:
            catalog = load_catalog(args.catalog)
            if catalog.degree != n:
                raise FormatError(
                    f"catalog degree {catalog.degree} does not match "
                    f"--order {n}", 1)
        elif n == 1:
            catalog = trivial_catalog()
        else:
            catalog = builtin_catalog(n)
        results["envelope"] = enumerate_connected_quandles(
            n, catalog, threads=max(1, args.threads))
    if args.method in ("oracle", "both"):
        results["oracle"] = brute_force_quandles(n)
    if args.method == "both":
        if not match_up_to_isomorphism(results["envelope"],
                                       results["oracle"]):
            _say("envelope enumeration and oracle disagree")
            return EXIT_NEGATIVE
        _say("oracle equivalence verified")
    primary = results.get("envelope") or results["oracle"]
    q, latin, affine = classify(primary)
    print(f"{q}\t{latin}\t{affine}")
    if args.out:
        export_results(primary, args.out)
        _say(f"wrote {q} quandle files and summary.tsv to {args.out}")
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        q = read_quandle_file(args.path)
    except InvalidQuandleError as exc:
        print("valid\t0")
        print(f"axiom\t{exc.axiom}")
        print("witness\t" + " ".join(map(str, exc.witness)))
        _say(str(exc))
        return EXIT_OK
    print("valid\t1")
    connected = q.is_connected()
    medial = q.is_medial()
    print(f"connected\t{int(connected)}")
    print(f"latin\t{int(q.is_latin())}")
    print(f"medial\t{int(medial)}")
    print(f"affine\t{int(connected and medial)}")
    if not connected:
        _say("affine criterion applies to connected quandles; "
             "reported as 0 for a disconnected one")
    print(f"rmlt_order\t{q.rmlt().order}")
    print(f"dis_order\t{q.dis().order}")
    print("orbit_sizes\t" + " ".join(str(len(o)) for o in q.orbits()))
    print("translation_class_sizes\t"
          + " ".join(map(str, q.translation_class_sizes())))
    return EXIT_OK


def _cmd_iso(args) -> int:
    q1 = read_quandle_file(args.path1)
    q2 = read_quandle_file(args.path2)
    witness = are_isomorphic(q1, q2)
    if witness is None:
        print("not isomorphic")
        return EXIT_NEGATIVE
    print(str(witness))
    return EXIT_OK


def _cmd_construct(args) -> int:
    params = _parse_params(args.params)
    try:
        q = _construct_quandle(args.family, params)
    except EnvelopeError as exc:
        if exc.reason == "folder-not-envelope":
            _say(f"obstruction: {exc}")
            return EXIT_NEGATIVE
        raise
    if args.out:
        write_quandle_file(q, args.out)
        _say(f"wrote order-{q.n} quandle to {args.out}")
    else:
        sys.stdout.write(quandle_to_text(q))
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.validate:
        catalog = load_catalog(args.validate)
        print(f"degree\t{catalog.degree}")
        print(f"count\t{len(catalog)}")
        _say("catalog valid")
        return EXIT_OK
    if args.degree is None:
        raise ValueError("catalog needs --degree N or --validate PATH")
    catalog = trivial_catalog() if args.degree == 1 \
        else builtin_catalog(args.degree)
    if args.out:
        save_catalog(catalog, args.out)
        _say(f"wrote degree-{catalog.degree} catalog "
             f"({len(catalog)} groups) to {args.out}")
    else:
        sys.stdout.write(catalog_to_text(catalog))
    return EXIT_OK


def _cmd_obstruct(args) -> int:
    if bool(args.catalog) == bool(args.degree):
        raise ValueError("obstruct needs exactly one of --catalog/--degree")
    catalog = load_catalog(args.catalog) if args.catalog \
        else builtin_catalog(args.degree)
    report = obstruction_check(catalog)
    for gid, order in report.surviving:
        print(f"{gid}\t{order}")
    _say(f"degree {report.degree}: {len(report.surviving)} group(s) "
         f"satisfy both obstruction conditions")
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "check": _cmd_check,
    "iso": _cmd_iso,
    "construct": _cmd_construct,
    "catalog": _cmd_catalog,
    "obstruct": _cmd_obstruct,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.verb](args)
    except FormatError as exc:
        _say(f"input format error: {exc}")
        return EXIT_FORMAT
    except InvalidQuandleError as exc:
        _say(f"invalid quandle: {exc}")
        return EXIT_FORMAT
    except BoundExceededError as exc:
        _say(f"capability bound exceeded: {exc}")
        return EXIT_BOUND
    except FileNotFoundError as exc:
        _say(f"cannot read file: {exc}")
        return EXIT_FORMAT
    except ValueError as exc:
        _say(f"usage error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
