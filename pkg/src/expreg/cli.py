"""Command-line surface and the machine-readable decision report.

Exit codes for `decide`: 0 partition regular, 1 not partition regular,
2 error or inconclusive (parse failure, column budget, no candidate prime
verified).  All output is deterministic: identical inputs and flags give
byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys as _sys
from pathlib import Path

from . import dsl, search
from .eqsys import ExpSystem, normalize, validate
from .graphs import LinearSystem, build_linear_system
from .rado import ColumnBudgetExceeded, NotPrime, columns_property, is_prime, rado_colour
from .witness import (
    Plain,
    Tower,
    find_positive_solution,
    lift,
    path_sums,
    prime_omega,
    verify_witness,
)

REPORT_VERSION = 1
DEFAULT_CEILING = 10**6
DEFAULT_VERIFY_BOUND = 40
DEFAULT_WITNESS_Z_CAP = 256
AUTO_PRIMES = (2, 3, 5, 7, 11, 13)


class CommandError(RuntimeError):
    """Raised for any condition that must surface as exit code 2."""


class NoPrimeVerified(CommandError):
    pass


# ---------------------------------------------------------------------------
# report assembly


def _tower_json(tv) -> dict:
    if isinstance(tv, Plain):
        return {"kind": "plain", "value": tv.value}
    assert isinstance(tv, Tower)
    return {"kind": "tower", "base": tv.base, "expbase": tv.expbase, "level": tv.level}


def _system_json(sys: ExpSystem, relabel: dict[int, int] | None = None) -> dict:
    doc = {
        "num_vertices": sys.num_vertices,
        "num_y": sys.num_y,
        "edges": [
            {"tail": e.tail, "head": e.head, "coeffs": list(e.coeffs)} for e in sys.edges
        ],
    }
    if relabel is not None:
        doc["relabel"] = {str(old): new for old, new in relabel.items()}
    return doc


def _linear_json(lin: LinearSystem) -> dict:
    return {
        "num_cols": lin.matrix.num_cols,
        "rows": [list(row) for row in lin.matrix.entries],
        "cycles": [[[idx, sign] for idx, sign in cyc.steps] for cyc in lin.cycles],
    }


def _witness_warnings(nsys, z) -> list[str]:
    raw = path_sums(nsys, z)
    lows: dict[int, int] = {}
    from .graphs import component_map

    reps = component_map(nsys)
    for v in range(1, nsys.num_vertices + 1):
        r = reps[v]
        lows[r] = min(lows.get(r, raw[v - 1]), raw[v - 1])
    notes = []
    for rep in sorted(lows):
        if lows[rep] < 0:
            notes.append(
                f"tower levels shifted up by {-lows[rep]} in the component of vertex {rep}"
            )
    return notes


def build_decision_report(
    text: str,
    source: str = "<string>",
    want_witness: bool = False,
    a: int = 2,
    b: int = 2,
    prime: int | str = "auto",
    verify_bound: int = DEFAULT_VERIFY_BOUND,
    ceiling: int = DEFAULT_CEILING,
    witness_z_cap: int = DEFAULT_WITNESS_Z_CAP,
) -> dict:
    """Run the full decision pipeline on a system document.

    Raises dsl.ParseError, ColumnBudgetExceeded, or NoPrimeVerified; any of
    those means exit code 2 for the CLI.
    """
    sys0 = dsl.parse_system(text)
    problems = validate(sys0)
    if problems:
        raise CommandError("invalid system: " + "; ".join(problems))
    nsys, relabel = normalize(sys0)
    lin = build_linear_system(nsys)

    warnings = []
    if nsys.num_vertices < sys0.num_vertices:
        warnings.append(
            f"identity equations merged {sys0.num_vertices} vertices into {nsys.num_vertices}"
        )
    if nsys.has_loops():
        warnings.append("loop equations present; each contributes a one-edge cycle row")
    if nsys.has_parallel_edges():
        warnings.append("parallel edges encode several exponent vectors on one vertex pair")

    report = {
        "version": REPORT_VERSION,
        "input": {
            "source": source,
            "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "num_variables": sys0.num_y,
        },
        "normalized": _system_json(nsys, relabel),
        "linear_system": _linear_json(lin),
        "witness": None,
    }

    part = columns_property(lin.matrix)
    if part is not None:
        report["verdict"] = "PR"
        report["certificate"] = {
            "type": "columns-partition",
            "blocks": [list(block) for block in part.blocks],
            "trivial": lin.matrix.num_rows == 0,
        }
        if want_witness:
            z = None
            bound = 4
            while bound <= witness_z_cap:
                z = find_positive_solution(lin.matrix, bound)
                if z is not None:
                    break
                bound *= 2
            if z is None:
                warnings.append(
                    f"no positive solution of the linear system within bound {witness_z_cap};"
                    " witness omitted"
                )
            else:
                warnings.extend(_witness_warnings(nsys, z))
                w = lift(nsys, z, a, b)
                ok = verify_witness(nsys, w)
                report["witness"] = {
                    "a": w.a,
                    "b": w.b,
                    "z": list(w.z),
                    "k": list(w.k),
                    "xs": [_tower_json(tv) for tv in w.xs],
                    "ys": [_tower_json(tv) for tv in w.ys],
                    "verified": ok,
                }
    else:
        report["verdict"] = "not PR"
        candidates = AUTO_PRIMES if prime == "auto" else (int(prime),)
        for p in candidates:
            if not is_prime(p):
                raise CommandError(f"--p must be prime, got {p}")
            colouring = search.RadoPNu(p)
            outcome = search.search_exp(nsys, colouring, verify_bound, ceiling)
            if outcome.exhausted:
                report["certificate"] = {
                    "type": "forbidding-colouring",
                    "colouring": dsl.print_colouring(colouring),
                    "prime": p,
                    "verification": {
                        "var_bound": verify_bound,
                        "ceiling": ceiling,
                        "skipped": outcome.skipped,
                        "outcome": "exhausted-no-solution",
                    },
                }
                break
        else:
            raise NoPrimeVerified(
                f"no candidate prime in {list(candidates)} verified empty at bound"
                f" {verify_bound}; refusing to guess"
            )
    report["warnings"] = warnings
    return report


# ---------------------------------------------------------------------------
# rendering


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _tower_text(doc: dict) -> str:
    if doc["kind"] == "plain":
        return str(doc["value"])
    return f"{doc['base']}^({doc['expbase']}^{doc['level']})"


def _render_decision(report: dict) -> str:
    lines = [f"verdict: {report['verdict']}"]
    lin = report["linear_system"]
    lines.append(f"linear system: {len(lin['rows'])} rows x {lin['num_cols']} cols")
    for i, row in enumerate(lin["rows"], start=1):
        lines.append(f"  row {i}: " + " ".join(str(v) for v in row))
    cert = report["certificate"]
    if cert is None:
        lines.append("certificate: none")
    elif cert["type"] == "columns-partition":
        blocks = " ".join(
            "S{}={{{}}}".format(i, ",".join(str(j) for j in block))
            for i, block in enumerate(cert["blocks"])
        )
        suffix = " (no cycle constraints)" if cert["trivial"] else ""
        lines.append(f"certificate: columns partition {blocks}{suffix}")
    else:
        ver = cert["verification"]
        lines.append(
            f"certificate: forbidding colouring {cert['colouring']} "
            f"(verified empty up to variable bound {ver['var_bound']}, "
            f"ceiling {ver['ceiling']}, {ver['skipped']} skipped)"
        )
    w = report["witness"]
    if w is not None:
        lines.append(
            "witness: a={} b={} z=({}) k=({}) verified={}".format(
                w["a"],
                w["b"],
                ",".join(str(v) for v in w["z"]),
                ",".join(str(v) for v in w["k"]),
                w["verified"],
            )
        )
        lines.append("  x = " + ", ".join(_tower_text(t) for t in w["xs"]))
        lines.append("  y = " + ", ".join(_tower_text(t) for t in w["ys"]))
    for warning in report["warnings"]:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"


def _search_report_json(rep: search.SearchReport) -> dict:
    return {
        "var_low": rep.var_low,
        "var_high": rep.var_high,
        "ceiling": rep.ceiling,
        "num_variables": rep.num_variables,
        "outcome": "found" if rep.found else "exhausted-no-solution",
        "assignment": list(rep.assignment) if rep.assignment is not None else None,
        "skipped": rep.skipped,
    }


def _render_search(rep: search.SearchReport) -> str:
    if rep.found:
        line = "found: " + " ".join(str(v) for v in rep.assignment)
    else:
        line = "exhausted: no monochromatic solution"
    return f"{line} (bounds [{rep.var_low},{rep.var_high}], skipped {rep.skipped})\n"


# ---------------------------------------------------------------------------
# subcommands


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}")


def _cmd_decide(args) -> int:
    text = _read(args.file)
    try:
        report = build_decision_report(
            text,
            source=Path(args.file).name,
            want_witness=args.witness,
            a=args.a,
            b=args.b,
            prime=args.p,
            verify_bound=args.verify_bound,
        )
    except NoPrimeVerified as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    _sys.stdout.write(_dump_json(report) if args.json else _render_decision(report))
    return 0 if report["verdict"] == "PR" else 1


def _cmd_linearize(args) -> int:
    nsys, _ = normalize(dsl.parse_system(_read(args.file)))
    lin = build_linear_system(nsys)
    if args.json:
        _sys.stdout.write(_dump_json(_linear_json(lin)))
    else:
        _sys.stdout.write(dsl.print_matrix(lin.matrix))
    return 0


def _cmd_witness(args) -> int:
    nsys, _ = normalize(dsl.parse_system(_read(args.file)))
    lin = build_linear_system(nsys)
    if args.z is not None:
        try:
            z = tuple(int(part) for part in args.z.split(","))
        except ValueError:
            raise CommandError(f"--z expects a comma-separated integer vector, got {args.z!r}")
    else:
        z = find_positive_solution(lin.matrix, args.z_bound)
        if z is None:
            raise CommandError(f"no positive solution within bound {args.z_bound}")
    w = lift(nsys, z, args.a, args.b)
    ok = verify_witness(nsys, w)
    doc = {
        "a": w.a,
        "b": w.b,
        "z": list(w.z),
        "k": list(w.k),
        "xs": [_tower_json(tv) for tv in w.xs],
        "ys": [_tower_json(tv) for tv in w.ys],
        "verified": ok,
    }
    if args.json:
        _sys.stdout.write(_dump_json(doc))
    else:
        _sys.stdout.write(
            "a={} b={} z=({}) k=({}) verified={}\n".format(
                w.a,
                w.b,
                ",".join(map(str, w.z)),
                ",".join(map(str, w.k)),
                ok,
            )
        )
    return 0 if ok else 2


def _cmd_search(args) -> int:
    nsys, _ = normalize(dsl.parse_system(_read(args.file)))
    colouring = dsl.parse_colouring(args.colouring)
    rep = search.search_exp(nsys, colouring, args.var_bound, args.ceiling)
    _sys.stdout.write(
        _dump_json(_search_report_json(rep)) if args.json else _render_search(rep)
    )
    return 0


def _cmd_colouring(args) -> int:
    spec = dsl.parse_colouring(args.spec)
    colour = search.colour_of(spec, args.eval)
    if args.json:
        _sys.stdout.write(
            _dump_json({"spec": args.spec, "x": args.eval, "colour": colour})
        )
    else:
        print(colour)
    return 0


def _cmd_nu(args) -> int:
    value = prime_omega(args.x)
    if args.json:
        _sys.stdout.write(_dump_json({"x": args.x, "omega": value}))
    else:
        print(value)
    return 0


def _cmd_cp(args) -> int:
    colour = rado_colour(args.p, args.x)
    if args.json:
        _sys.stdout.write(_dump_json({"p": args.p, "x": args.x, "colour": colour}))
    else:
        print(colour)
    return 0


def _cmd_rado_number(args) -> int:
    matrix = dsl.parse_matrix(_read(args.file))
    value = search.rado_number(matrix, args.colours, args.max)
    if args.json:
        _sys.stdout.write(_dump_json({"colours": args.colours, "max": args.max, "value": value}))
    else:
        print(value if value is not None else f"exceeds {args.max}")
    return 0


def _cmd_vdw(args) -> int:
    value = search.vdw_number(args.colours, args.length, args.max)
    if args.json:
        _sys.stdout.write(
            _dump_json(
                {"colours": args.colours, "length": args.length, "max": args.max, "value": value}
            )
        )
    else:
        print(value if value is not None else f"exceeds {args.max}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _base(value: str) -> int:
    v = int(value)
    if v < 2:
        raise argparse.ArgumentTypeError("witness bases must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expreg",
        description="Decide partition regularity of exponential equation systems "
        "and emit machine-checkable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="classify a system and attach a certificate")
    p.add_argument("file", help="system document (.xps)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness", action="store_true", help="attach a lifted tower witness")
    p.add_argument("--a", type=_base, default=2)
    p.add_argument("--b", type=_base, default=2)
    p.add_argument("--p", default="auto", help="forbidding prime, or 'auto'")
    p.add_argument("--verify-bound", type=int, default=DEFAULT_VERIFY_BOUND)
    p.set_defaults(run=_cmd_decide)

    p = sub.add_parser("linearize", help="print the cycle-indexed linear system")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_linearize)

    p = sub.add_parser("witness", help="lift a solution of the linear side")
    p.add_argument("file")
    p.add_argument("--z", help="comma-separated solution vector")
    p.add_argument("--z-bound", type=int, default=64)
    p.add_argument("--a", type=_base, default=2)
    p.add_argument("--b", type=_base, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_witness)

    p = sub.add_parser("search", help="exhaustive monochromatic search on a system")
    p.add_argument("file")
    p.add_argument("--colouring", required=True)
    p.add_argument("--var-bound", type=int, default=12)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_search)

    p = sub.add_parser("colouring", help="evaluate a colouring spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--eval", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_colouring)

    p = sub.add_parser("nu", help="prime factors counted with multiplicity")
    p.add_argument("x", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_nu)

    p = sub.add_parser("cp", help="lowest nonzero base-p digit")
    p.add_argument("p", type=int)
    p.add_argument("x", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_cp)

    p = sub.add_parser("rado-number", help="least N forcing a monochromatic solution")
    p.add_argument("file", help="matrix document (.mat)")
    p.add_argument("--colours", type=int, required=True)
    p.add_argument("--max", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_rado_number)

    p = sub.add_parser("vdw", help="van der Waerden number by exhaustion")
    p.add_argument("--colours", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--max", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_vdw)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (dsl.ParseError, CommandError, ColumnBudgetExceeded, NotPrime, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
