"""Plane curve data: degree plus ordinary singular points.

A :class:`PlaneCurveModel` is numerical data first: the degree and a list
of labelled singular points with multiplicities, assumed ordinary and in
general position.  Coordinates are optional and only used to verify the
declared multiplicities against an optional defining polynomial.

Irreducibility is an assertion by the caller, not something this module
verifies (that would need factorisation over Q); every model is read as
"an irreducible curve with this numerical behaviour".  Non-ordinary
singularities are rejected outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidCurveData
from .exact_algebra import RationalLike, TriHomPoly, _frac, _gcd_pair, lex_normalized, tri_div_exact


@dataclass(frozen=True)
class PointSpec:
    """A labelled point, optionally with projective coordinates."""

    label: str
    coords: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise InvalidCurveData("point labels must be nonempty strings")
        if self.coords is not None:
            cs = tuple(_frac(c) for c in self.coords)
            if len(cs) != 3:
                raise InvalidCurveData("projective coordinates need three entries")
            if all(c == 0 for c in cs):
                raise InvalidCurveData(f"point {self.label!r}: coordinates are all zero")
            object.__setattr__(self, "coords", cs)


@dataclass(frozen=True)
class SingularityData:
    """An ordinary singular point of the given multiplicity."""

    point: PointSpec
    multiplicity: int
    ordinary: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.multiplicity, int) or self.multiplicity < 2:
            raise InvalidCurveData(
                f"point {self.point.label!r}: singular multiplicity must be an integer >= 2"
            )
        if self.ordinary is not True:
            raise InvalidCurveData(
                f"point {self.point.label!r}: non-ordinary singularities are not modelled"
            )

    @property
    def label(self) -> str:
        return self.point.label


@dataclass(frozen=True)
class CurveCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CurveReport:
    checks: Tuple[CurveCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> Tuple[CurveCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _genus_value(degree: int, mults: Sequence[int]) -> int:
    return (degree - 1) * (degree - 2) // 2 - sum(m * (m - 1) // 2 for m in mults)


@dataclass(frozen=True)
class PlaneCurveModel:
    """Degree-d plane curve with ordinary singularities in general position."""

    degree: int
    singularities: Tuple[SingularityData, ...] = ()
    defining_poly: Optional[TriHomPoly] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "singularities", tuple(self.singularities))
        failures = [
            c
            for c in _structural_checks(self.degree, self.singularities, self.defining_poly)
            if not c.passed
        ]
        if failures:
            msgs = "; ".join(f"{c.name}: {c.detail}" for c in failures)
            raise InvalidCurveData(msgs)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(s.label for s in self.singularities)

    def mult_map(self) -> Dict[str, int]:
        return {s.label: s.multiplicity for s in self.singularities}


def genus(c: PlaneCurveModel) -> int:
    """Geometric genus (d-1)(d-2)/2 - sum m_i(m_i-1)/2 for ordinary points."""
    return _genus_value(c.degree, [s.multiplicity for s in c.singularities])


def multiplicity_at(f: TriHomPoly, point: Sequence[RationalLike]) -> int:
    """Smallest k such that some order-k partial of f is nonzero at the point.

    Zero means the point is not on the curve; 1 a smooth point; m >= 2 an
    m-fold point.
    """
    if f.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    pt = tuple(_frac(v) for v in point)
    if len(pt) != 3 or all(v == 0 for v in pt):
        raise ValueError("expected a valid projective point")
    partials: Dict[Tuple[int, int, int], TriHomPoly] = {(0, 0, 0): f}

    def derived(a: int, b: int, c: int) -> TriHomPoly:
        key = (a, b, c)
        if key not in partials:
            if a > 0:
                partials[key] = derived(a - 1, b, c).partial(0)
            elif b > 0:
                partials[key] = derived(a, b - 1, c).partial(1)
            else:
                partials[key] = derived(a, b, c - 1).partial(2)
        return partials[key]

    for k in range(f.degree + 1):
        for a in range(k + 1):
            for b in range(k - a + 1):
                if derived(a, b, k - a - b).evaluate(pt) != 0:
                    return k
    raise AssertionError("all partials vanished for a nonzero polynomial")


def is_perfect_power(f: TriHomPoly) -> bool:
    """True iff f = g**k for some homogeneous g and integer k >= 2.

    Uses iterated gcds with the partials: writing f as a product of
    irreducible powers prod q_i^{e_i}, the j-th iterate of
    w -> gcd(w, w_x, w_y, w_z) is prod q_i^{max(e_i - j, 0)}, so the exact
    multiplicities e_i are recovered without factoring.  f is a perfect
    power iff the multiplicities that actually occur share a factor >= 2.
    """
    if f.is_zero:
        raise ValueError("perfect-power test on the zero polynomial")
    if f.degree == 0:
        return False
    w = lex_normalized(f)
    radicals: List[TriHomPoly] = []
    while w.degree > 0:
        u = w
        for axis in range(3):
            p = w.partial(axis)
            if not p.is_zero:
                u = _gcd_pair(u, p)
            if u.degree == 0:
                break
        radicals.append(lex_normalized(tri_div_exact(w, u)))
        w = u
    radicals.append(TriHomPoly.monomial((0, 0, 0)))
    exponents = []
    for j in range(len(radicals) - 1):
        level = tri_div_exact(radicals[j], radicals[j + 1])
        if level.degree > 0:
            exponents.append(j + 1)
    return math.gcd(*exponents) >= 2 if exponents else False


def _structural_checks(
    degree: int,
    singularities: Sequence[SingularityData],
    defining_poly: Optional[TriHomPoly],
) -> List[CurveCheck]:
    """Constructor-level checks (everything except coordinate verification)."""
    checks: List[CurveCheck] = []
    ok = isinstance(degree, int) and degree >= 1
    checks.append(CurveCheck("degree-positive", ok, f"degree {degree} must be >= 1"))
    if not ok:
        return checks

    labels = [s.label for s in singularities]
    dup = sorted({l for l in labels if labels.count(l) > 1})
    checks.append(
        CurveCheck("labels-unique", not dup, f"duplicate labels {dup}" if dup else "")
    )

    oversized = [s.label for s in singularities if s.multiplicity > degree]
    checks.append(
        CurveCheck(
            "multiplicity-range",
            not oversized,
            f"multiplicity exceeds degree at {oversized}" if oversized else "",
        )
    )

    g = _genus_value(degree, [s.multiplicity for s in singularities])
    checks.append(
        CurveCheck("genus-nonnegative", g >= 0, f"computed genus {g} is negative")
    )

    if defining_poly is not None:
        if defining_poly.is_zero:
            checks.append(CurveCheck("poly-nonzero", False, "defining polynomial is zero"))
            return checks
        checks.append(CurveCheck("poly-nonzero", True))
        checks.append(
            CurveCheck(
                "poly-degree-matches",
                defining_poly.degree == degree,
                f"polynomial degree {defining_poly.degree} != declared degree {degree}",
            )
        )
        if defining_poly.degree == degree:
            power = is_perfect_power(defining_poly)
            checks.append(
                CurveCheck(
                    "poly-not-perfect-power",
                    not power,
                    "defining polynomial is a perfect power" if power else "",
                )
            )
    return checks


def validate_curve_data(
    degree: int,
    singularities: Sequence[SingularityData],
    defining_poly: Optional[TriHomPoly] = None,
) -> CurveReport:
    """Full report-style validation, including multiplicity verification.

    Unlike the :class:`PlaneCurveModel` constructor this never raises on
    inconsistent data; every failure lands in the report.
    """
    checks = _structural_checks(degree, singularities, defining_poly)
    structurally_ok = all(c.passed for c in checks)
    if defining_poly is not None and structurally_ok:
        for s in singularities:
            if s.point.coords is None:
                continue
            found = multiplicity_at(defining_poly, s.point.coords)
            checks.append(
                CurveCheck(
                    f"poly-multiplicity-at-{s.label}",
                    found == s.multiplicity,
                    f"declared multiplicity {s.multiplicity}, polynomial has {found}",
                )
            )
    return CurveReport(tuple(checks))


def validate(c: PlaneCurveModel) -> CurveReport:
    """Re-check an already constructed model (adds coordinate verification)."""
    return validate_curve_data(c.degree, c.singularities, c.defining_poly)


def curve_from_mults(degree: int, mults: Iterable[int], prefix: str = "p") -> PlaneCurveModel:
    """Convenience: build a model on abstract general-position labels."""
    sings = tuple(
        SingularityData(PointSpec(f"{prefix}{i}"), m) for i, m in enumerate(mults)
    )
    return PlaneCurveModel(degree, sings)
