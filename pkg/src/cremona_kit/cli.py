"""Command-line front end.

Subcommands consume JSON (from a path, ``-`` for stdin, or ``--inline``)
and emit a JSON report on stdout; ``--format text`` renders the same
report as an indented key/value listing (lossy, for reading).

Exit codes:

* 0 -- success, report on stdout;
* 1 -- malformed input: unreadable source, bad JSON (reported with line
  and column), or a schema violation (reported with the field path);
* 2 -- validation or computation failure: the report explains (failed
  checks, inadmissible data, degree cap exceeded, ...).

The environment variable CREMONA_KIT_MAX_DEGREE (default 24) caps the
degree of any constructed map; exact coefficients grow quickly under
composition, so the cap keeps runtimes bounded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import __version__
from . import jonquieres as jq
from . import serialization as ser
from .corpus import corpus_passed, run_corpus
from .cremona_maps import compose, fixes_curve_pointwise
from .curve_model import genus, validate_curve_data
from .errors import CremonaKitError, SchemaError
from .linear_systems import adjoint_chain
from .rational_pencils import (
    DEFAULT_ENUM_LIMIT,
    PencilType,
    check_rational_pencil,
    enumerate_pencil_types,
    sextic_free_intersection_bound,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremona-kit",
        description="Exact arithmetic for plane birational maps, adjoint "
        "chains of linear systems, and function-field matrix groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument(
                "input",
                nargs="?",
                help="path of the JSON input ('-' for stdin); "
                "alternatively pass --inline",
            )
            p.add_argument("--inline", help="inline JSON input")
        p.add_argument(
            "--format",
            choices=("json", "text"),
            default="json",
            help="output format (default json)",
        )
        p.add_argument("-v", "--verbose", action="store_true", help="notes on stderr")

    add_io(sub.add_parser("genus", help="geometric genus of a curve model"))
    add_io(sub.add_parser("validate", help="check curve data, report per check"))
    add_io(sub.add_parser("adjoint-chain", help="full successive-adjoint report"))
    add_io(sub.add_parser("classify", help="terminal classification of the chain"))
    add_io(sub.add_parser("map-compose", help="compose two maps {outer, inner}"))
    add_io(sub.add_parser("map-fixcheck", help="does a map fix a curve pointwise"))
    add_io(sub.add_parser("jonq-order", help="projective order of a group element"))
    add_io(sub.add_parser("jonq-mul", help="product of two group elements {u, v}"))
    add_io(
        sub.add_parser(
            "jonq-fix-check", help="certify the hyperelliptic fixation of an element"
        )
    )

    pc = sub.add_parser("pencil-check", help="rational-pencil equations for (n; mults)")
    pc.add_argument("--n", type=int, required=True, help="degree of the pencil members")
    pc.add_argument(
        "--mults", required=True, help="comma-separated base multiplicities, e.g. 1,1,1,1"
    )
    add_io(pc, needs_input=False)

    pe = sub.add_parser("pencil-enum", help="enumerate valid pencil types")
    pe.add_argument("--max", type=int, required=True, help="largest degree to search")
    pe.add_argument(
        "--bound",
        type=int,
        default=DEFAULT_ENUM_LIMIT,
        help=f"enumeration guard (default {DEFAULT_ENUM_LIMIT})",
    )
    add_io(pe, needs_input=False)

    add_io(sub.add_parser("examples", help="run the built-in corpus"), needs_input=False)
    return parser


def _load_payload(args: argparse.Namespace) -> Any:
    sources = [s for s in (getattr(args, "input", None), getattr(args, "inline", None)) if s]
    if len(sources) != 1:
        raise SchemaError("$", "exactly one input source required (path or --inline)")
    if getattr(args, "inline", None):
        text = args.inline
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.input)
        try:
            text = path.read_text()
        except OSError as exc:
            raise SchemaError("$", f"cannot read {args.input!r}: {exc}") from exc
    return json.loads(text)


def _note(args: argparse.Namespace, message: str) -> None:
    if getattr(args, "verbose", False):
        print(message, file=sys.stderr)


# -- subcommand handlers -------------------------------------------------------


def _cmd_genus(args) -> Tuple[Dict[str, Any], int]:
    model = ser.decode_curve(_load_payload(args))
    _note(args, f"curve of degree {model.degree} with {len(model.singularities)} singular points")
    return {"degree": model.degree, "genus": genus(model)}, EXIT_OK


def _cmd_validate(args) -> Tuple[Dict[str, Any], int]:
    degree, sings, poly = ser.decode_curve_parts(_load_payload(args))
    report = validate_curve_data(degree, sings, poly)
    return ser.encode_curve_report(report), EXIT_OK if report.passed else EXIT_INVALID


def _cmd_adjoint_chain(args) -> Tuple[Dict[str, Any], int]:
    model = ser.decode_curve(_load_payload(args))
    report = adjoint_chain(model)
    return ser.encode_chain_report(report), EXIT_OK


def _cmd_classify(args) -> Tuple[Dict[str, Any], int]:
    model = ser.decode_curve(_load_payload(args))
    report = adjoint_chain(model)
    return {
        "class": report.classification.value,
        "terminal": ser.encode_linsys(report.terminal),
        "steps": len(report.steps),
        "warnings": list(report.warnings),
    }, EXIT_OK


def _cmd_map_compose(args) -> Tuple[Dict[str, Any], int]:
    obj = _load_payload(args)
    if not isinstance(obj, dict) or "outer" not in obj or "inner" not in obj:
        raise SchemaError("$", "expected an object with fields 'outer' and 'inner'")
    outer = ser.decode_map(obj["outer"], ("outer",))
    inner = ser.decode_map(obj["inner"], ("inner",))
    return ser.encode_map(compose(outer, inner)), EXIT_OK


def _cmd_map_fixcheck(args) -> Tuple[Dict[str, Any], int]:
    obj = _load_payload(args)
    if not isinstance(obj, dict) or "map" not in obj or "curve" not in obj:
        raise SchemaError("$", "expected an object with fields 'map' and 'curve'")
    F = ser.decode_map(obj["map"], ("map",))
    curve = ser.decode_trihom(obj["curve"], ("curve",))
    if curve.is_zero:
        raise SchemaError("$.curve", "curve polynomial must be nonzero")
    fixed = fixes_curve_pointwise(F, curve)
    payload = {
        "fixes_pointwise": fixed,
        "map_degree": F.degree,
        "curve_degree": curve.degree,
    }
    return payload, EXIT_OK if fixed else EXIT_INVALID


def _cmd_jonq_order(args) -> Tuple[Dict[str, Any], int]:
    u = ser.decode_jonq(_load_payload(args))
    return ser.encode_order_report(jq.leminv_check(u)), EXIT_OK


def _cmd_jonq_mul(args) -> Tuple[Dict[str, Any], int]:
    obj = _load_payload(args)
    if not isinstance(obj, dict) or "u" not in obj or "v" not in obj:
        raise SchemaError("$", "expected an object with fields 'u' and 'v'")
    u = ser.decode_jonq(obj["u"], ("u",))
    v = ser.decode_jonq(obj["v"], ("v",))
    return ser.encode_jonq(jq.mul(u, v)), EXIT_OK


def _cmd_jonq_fix_check(args) -> Tuple[Dict[str, Any], int]:
    u = ser.decode_jonq(_load_payload(args))
    identity_holds = jq.fixes_hyperelliptic(u)
    curve = jq.hyperelliptic_curve_poly(u.h)
    F = jq.to_cremona(u)
    pointwise = fixes_curve_pointwise(F, curve)
    payload = {
        "identity_holds": identity_holds,
        "fixes_pointwise": pointwise,
        "map_degree": F.degree,
        "curve": ser.encode_trihom(curve),
    }
    ok = identity_holds and pointwise
    return payload, EXIT_OK if ok else EXIT_INVALID


def _cmd_pencil_check(args) -> Tuple[Dict[str, Any], int]:
    try:
        mults = [int(v) for v in args.mults.split(",") if v.strip() != ""]
    except ValueError:
        raise SchemaError("$.mults", f"expected comma-separated integers, got {args.mults!r}")
    report = check_rational_pencil(args.n, mults)
    return ser.encode_pencil_check(report), EXIT_OK if report.valid else EXIT_INVALID


def _cmd_pencil_enum(args) -> Tuple[Dict[str, Any], int]:
    types = enumerate_pencil_types(args.max, args.bound)
    return {
        "max_degree": args.max,
        "count": len(types),
        "types": [ser.encode_pencil_type(p) for p in types],
    }, EXIT_OK


def _cmd_examples(args) -> Tuple[Dict[str, Any], int]:
    results = run_corpus()
    payload = {
        "passed": corpus_passed(results),
        "total": len(results),
        "failed": sum(1 for r in results if not r.passed),
        "entries": [
            {
                "name": r.name,
                "description": r.description,
                "passed": r.passed,
                "details": list(r.details),
            }
            for r in results
        ],
    }
    return payload, EXIT_OK if payload["passed"] else EXIT_INVALID


_HANDLERS = {
    "genus": _cmd_genus,
    "validate": _cmd_validate,
    "adjoint-chain": _cmd_adjoint_chain,
    "classify": _cmd_classify,
    "map-compose": _cmd_map_compose,
    "map-fixcheck": _cmd_map_fixcheck,
    "jonq-order": _cmd_jonq_order,
    "jonq-mul": _cmd_jonq_mul,
    "jonq-fix-check": _cmd_jonq_fix_check,
    "pencil-check": _cmd_pencil_check,
    "pencil-enum": _cmd_pencil_enum,
    "examples": _cmd_examples,
}


def _render_text(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            if isinstance(inner, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(inner, indent + 1))
            else:
                lines.append(f"{pad}{key}: {inner}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _emit(payload: Any, fmt: str) -> None:
    if fmt == "text":
        print("\n".join(_render_text(payload)))
    else:
        sys.stdout.write(ser.dumps(payload))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        payload, code = _HANDLERS[args.command](args)
    except json.JSONDecodeError as exc:
        _emit(
            {
                "error": "malformed-json",
                "message": exc.msg,
                "line": exc.lineno,
                "column": exc.colno,
            },
            fmt,
        )
        return EXIT_MALFORMED
    except SchemaError as exc:
        _emit({"error": "schema", "path": exc.path, "message": exc.message}, fmt)
        return EXIT_MALFORMED
    except CremonaKitError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, fmt)
        return EXIT_INVALID
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, fmt)
        return EXIT_INVALID
    _emit(payload, fmt)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
