"""JSON encoding and decoding for everything the CLI exchanges.

Conventions:

* rationals are exact strings ("3", "-1/2"); JSON integers are accepted,
  floats are rejected everywhere;
* univariate polynomials are sparse ``[[e], "c"]`` lists in ascending
  exponent order;
* homogeneous trivariate polynomials are sparse ``[[i, j, k], "c"]``
  lists in descending lexicographic order (x > y > z), leading term first;
* emitted JSON always has sorted object keys and two-space indentation,
  so identical inputs produce byte-identical output.

Decoders raise :class:`~cremona_kit.errors.SchemaError` carrying the path
of the offending field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .curve_model import (
    CurveReport,
    PlaneCurveModel,
    PointSpec,
    SingularityData,
)
from .cremona_maps import CremonaMap
from .errors import SchemaError
from .exact_algebra import RatFunc, TriHomPoly, UniPoly
from .jonquieres import JonqElement, OrderReport
from .linear_systems import (
    ChainReport,
    ChainStep,
    LinSysData,
    PencilReduction,
    RemovedComponent,
)
from .rational_pencils import PencilCheckReport, PencilType

_Path = Tuple[Any, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _pstr(path: _Path) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _fail(path: _Path, message: str) -> None:
    raise SchemaError(_pstr(path), message)


def _as_obj(v: Any, path: _Path) -> Dict[str, Any]:
    if not isinstance(v, dict):
        _fail(path, f"expected an object, got {type(v).__name__}")
    return v


def _as_list(v: Any, path: _Path) -> List[Any]:
    if not isinstance(v, list):
        _fail(path, f"expected an array, got {type(v).__name__}")
    return v


def _as_int(v: Any, path: _Path) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(path, f"expected an integer, got {type(v).__name__}")
    return v


def _as_str(v: Any, path: _Path) -> str:
    if not isinstance(v, str):
        _fail(path, f"expected a string, got {type(v).__name__}")
    return v


def _get(obj: Dict[str, Any], key: str, path: _Path) -> Any:
    if key not in obj:
        _fail(path + (key,), "missing required field")
    return obj[key]


# -- rationals ----------------------------------------------------------------


def decode_rational(v: Any, path: _Path) -> Fraction:
    if isinstance(v, bool):
        _fail(path, "expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        _fail(path, "floats are not accepted; use exact strings like \"1/3\"")
    if isinstance(v, str):
        if not _RATIONAL_RE.match(v):
            _fail(path, f"malformed rational {v!r}; expected \"p\" or \"p/q\"")
        try:
            return Fraction(v)
        except ZeroDivisionError:
            _fail(path, f"rational {v!r} has a zero denominator")
    _fail(path, f"expected a rational, got {type(v).__name__}")
    raise AssertionError  # unreachable


def encode_rational(q: Fraction) -> str:
    return str(q)


# -- polynomials ---------------------------------------------------------------


def decode_unipoly(v: Any, path: _Path) -> UniPoly:
    items = _as_list(v, path)
    coeffs: Dict[int, Fraction] = {}
    for i, item in enumerate(items):
        pair = _as_list(item, path + (i,))
        if len(pair) != 2:
            _fail(path + (i,), "expected [[exponent], coefficient]")
        exps = _as_list(pair[0], path + (i, 0))
        if len(exps) != 1:
            _fail(path + (i, 0), "univariate terms have a single exponent")
        e = _as_int(exps[0], path + (i, 0, 0))
        if e < 0:
            _fail(path + (i, 0, 0), "exponents must be >= 0")
        if e in coeffs:
            _fail(path + (i,), f"duplicate exponent {e}")
        coeffs[e] = decode_rational(pair[1], path + (i, 1))
    size = max(coeffs) + 1 if coeffs else 0
    return UniPoly(tuple(coeffs.get(e, Fraction(0)) for e in range(size)))


def encode_unipoly(p: UniPoly) -> List[Any]:
    return [[[e], encode_rational(c)] for e, c in enumerate(p.coeffs) if c != 0]


def decode_trihom(v: Any, path: _Path, degree: Optional[int] = None) -> TriHomPoly:
    items = _as_list(v, path)
    terms: Dict[Tuple[int, int, int], Fraction] = {}
    for i, item in enumerate(items):
        pair = _as_list(item, path + (i,))
        if len(pair) != 2:
            _fail(path + (i,), "expected [[i, j, k], coefficient]")
        exps = _as_list(pair[0], path + (i, 0))
        if len(exps) != 3:
            _fail(path + (i, 0), "trivariate terms need three exponents")
        e = tuple(_as_int(x, path + (i, 0, a)) for a, x in enumerate(exps))
        if min(e) < 0:
            _fail(path + (i, 0), "exponents must be >= 0")
        if e in terms:
            _fail(path + (i,), f"duplicate monomial {list(e)}")
        terms[e] = decode_rational(pair[1], path + (i, 1))
    degrees = {sum(e) for e in terms}
    if len(degrees) > 1:
        _fail(path, f"terms are not homogeneous: total degrees {sorted(degrees)}")
    if degree is None:
        if not degrees:
            _fail(path, "cannot infer the degree of a zero polynomial")
        degree = degrees.pop()
    elif degrees and degrees != {degree}:
        _fail(path, f"terms have degree {degrees.pop()}, expected {degree}")
    return TriHomPoly(degree, tuple(terms.items()))


def encode_trihom(f: TriHomPoly) -> List[Any]:
    return [[list(e), encode_rational(c)] for e, c in f.terms]


def decode_ratfunc(v: Any, path: _Path) -> RatFunc:
    obj = _as_obj(v, path)
    num = decode_unipoly(_get(obj, "num", path), path + ("num",))
    den = decode_unipoly(_get(obj, "den", path), path + ("den",))
    if den.is_zero:
        _fail(path + ("den",), "denominator must be nonzero")
    return RatFunc(num, den)


def encode_ratfunc(r: RatFunc) -> Dict[str, Any]:
    return {"num": encode_unipoly(r.num), "den": encode_unipoly(r.den)}


# -- curves ---------------------------------------------------------------------


def decode_curve_parts(
    v: Any,
) -> Tuple[int, Tuple[SingularityData, ...], Optional[TriHomPoly]]:
    """Decode the curve schema without enforcing model invariants."""
    path: _Path = ()
    obj = _as_obj(v, path)
    degree = _as_int(_get(obj, "degree", path), ("degree",))
    sing_list = _as_list(_get(obj, "singularities", path), ("singularities",))
    sings: List[SingularityData] = []
    for i, raw in enumerate(sing_list):
        spath = ("singularities", i)
        sobj = _as_obj(raw, spath)
        label = _as_str(_get(sobj, "label", spath), spath + ("label",))
        mult = _as_int(_get(sobj, "mult", spath), spath + ("mult",))
        coords = None
        if sobj.get("coords") is not None:
            clist = _as_list(sobj["coords"], spath + ("coords",))
            if len(clist) != 3:
                _fail(spath + ("coords",), "projective coordinates need three entries")
            coords = tuple(
                decode_rational(c, spath + ("coords", a)) for a, c in enumerate(clist)
            )
        if mult < 2:
            _fail(spath + ("mult",), f"singular multiplicity must be >= 2, got {mult}")
        sings.append(SingularityData(PointSpec(label, coords), mult))
    poly = None
    if obj.get("poly") is not None:
        poly = decode_trihom(obj["poly"], ("poly",), degree if degree >= 0 else None)
    return degree, tuple(sings), poly


def decode_curve(v: Any) -> PlaneCurveModel:
    degree, sings, poly = decode_curve_parts(v)
    return PlaneCurveModel(degree, sings, poly)


def encode_curve(c: PlaneCurveModel) -> Dict[str, Any]:
    sings = []
    for s in sorted(c.singularities, key=lambda s: s.label):
        coords = None
        if s.point.coords is not None:
            coords = [encode_rational(v) for v in s.point.coords]
        sings.append({"label": s.label, "mult": s.multiplicity, "coords": coords})
    return {
        "degree": c.degree,
        "singularities": sings,
        "poly": encode_trihom(c.defining_poly) if c.defining_poly is not None else None,
    }


def encode_curve_report(r: CurveReport) -> Dict[str, Any]:
    return {
        "passed": r.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in r.checks
        ],
    }


# -- linear systems and chain reports -------------------------------------------


def decode_linsys(v: Any, path: _Path = ()) -> LinSysData:
    obj = _as_obj(v, path)
    degree = _as_int(_get(obj, "degree", path), path + ("degree",))
    mults_obj = _as_obj(_get(obj, "mults", path), path + ("mults",))
    mults = {}
    for label, m in mults_obj.items():
        mv = _as_int(m, path + ("mults", label))
        if mv < 0:
            _fail(path + ("mults", label), f"multiplicity must be >= 0, got {mv}")
        mults[label] = mv
    if degree < 0:
        _fail(path + ("degree",), f"degree must be >= 0, got {degree}")
    return LinSysData.of(degree, mults)


def encode_linsys(L: LinSysData) -> Dict[str, Any]:
    return {"degree": L.degree, "mults": {l: m for l, m in L.mults}}


def encode_removed(r: RemovedComponent) -> Dict[str, Any]:
    return {
        "kind": r.kind,
        "labels": list(r.labels),
        "count": r.count,
        "system": encode_linsys(r.system),
    }


def encode_chain_step(s: ChainStep) -> Dict[str, Any]:
    pencil = None
    if s.pencil_reduction is not None:
        pencil = {
            "content": s.pencil_reduction.content,
            "system": encode_linsys(s.pencil_reduction.pencil),
        }
    return {
        "input": encode_linsys(s.input),
        "raw": encode_linsys(s.raw_adjoint),
        "removed": [encode_removed(r) for r in s.removed_fixed],
        "pencil": pencil,
        "output": encode_linsys(s.output),
        "warnings": list(s.warnings),
    }


def encode_chain_report(r: ChainReport) -> Dict[str, Any]:
    return {
        "steps": [encode_chain_step(s) for s in r.steps],
        "terminal": encode_linsys(r.terminal),
        "class": r.classification.value,
        "warnings": list(r.warnings),
    }


# -- maps ------------------------------------------------------------------------


def decode_map(v: Any, path: _Path = ()) -> CremonaMap:
    obj = _as_obj(v, path)
    degree = _as_int(_get(obj, "deg", path), path + ("deg",))
    comps = _as_list(_get(obj, "components", path), path + ("components",))
    if len(comps) != 3:
        _fail(path + ("components",), "a plane map needs exactly three components")
    polys = [
        decode_trihom(c, path + ("components", i), degree) for i, c in enumerate(comps)
    ]
    # Map JSON is an explicit assertion of birationality by whoever wrote it.
    return CremonaMap.from_components(*polys, trusted=True)


def encode_map(F: CremonaMap) -> Dict[str, Any]:
    return {
        "deg": F.degree,
        "components": [encode_trihom(c) for c in F.components],
    }


# -- group elements ----------------------------------------------------------------


def decode_jonq(v: Any, path: _Path = ()) -> JonqElement:
    obj = _as_obj(v, path)
    h = decode_unipoly(_get(obj, "h", path), path + ("h",))
    a1 = decode_ratfunc(_get(obj, "a1", path), path + ("a1",))
    a2 = decode_ratfunc(_get(obj, "a2", path), path + ("a2",))
    return JonqElement(a1, a2, h)


def encode_jonq(u: JonqElement) -> Dict[str, Any]:
    return {
        "h": encode_unipoly(u.h),
        "a1": encode_ratfunc(u.a1),
        "a2": encode_ratfunc(u.a2),
    }


def encode_order_report(r: OrderReport) -> Dict[str, Any]:
    return {
        "order": r.order if isinstance(r.order, int) else str(r.order),
        "lambda": encode_ratfunc(r.lam),
        "lambda_constant": r.lam_constant,
        "conclusion_holds": r.conclusion_holds,
        "note": r.note,
    }


# -- pencil reports -----------------------------------------------------------------


def encode_pencil_check(r: PencilCheckReport) -> Dict[str, Any]:
    return {
        "degree": r.degree,
        "mults": list(r.mults),
        "genus_residual": r.genus_residual,
        "pencil_residual": r.pencil_residual,
        "linear_residual": r.linear_residual,
        "valid": r.valid,
    }


def encode_pencil_type(p: PencilType) -> Dict[str, Any]:
    return {"degree": p.degree, "mults": list(p.mults)}


# -- top level -----------------------------------------------------------------------


def dumps(payload: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, newline end."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
