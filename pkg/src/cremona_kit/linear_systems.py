"""Numerical linear systems on general-position points and adjoint chains.

A :class:`LinSysData` is the pair (degree n; multiplicities mu_i at
labelled points), the object the adjoint operation rewrites.  Everything
here is integer arithmetic under the general-position assumption:

* fixed components are detected by Bezout counts against lines (pairs of
  points with mu_i + mu_j > n) and conics (5-point subsets with total
  multiplicity > 2n) and subtracted until no rule applies;
* a system whose degree and multiplicities share a content c >= 2 is
  decomposed as c copies of its primitive part when that part is
  numerically a rational pencil (genus 0, self-intersection 0, dim 1);
* the adjoint of a system lowers the degree by 3 and every multiplicity
  by 1, and exists only above genus 1, so chains terminate after at most
  degree/3 steps in a rational or elliptic terminal system.

Line/conic detection suffices for every configuration this package is
used on; should a higher-degree fixed component survive, the numbers turn
inconsistent (negative self-intersection) and a warning is attached to
the step rather than silently guessing.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .curve_model import PlaneCurveModel
from .errors import (
    AdjointDoesNotExist,
    DegenerateSystem,
    NegativeDegree,
    NegativeMultiplicity,
)

Mults = Union[Mapping[str, int], Iterable[Tuple[str, int]]]


@dataclass(frozen=True)
class LinSysData:
    """Numerical linear system: degree plus point multiplicities.

    Zero multiplicities are dropped and labels are kept sorted, so equal
    systems compare equal structurally.
    """

    degree: int
    mults: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.degree, int) or self.degree < 0:
            raise DegenerateSystem(f"linear system with negative degree {self.degree}")
        seen: Dict[str, int] = {}
        for label, m in self.mults:
            if not isinstance(m, int) or m < 0:
                raise DegenerateSystem(f"negative multiplicity {m} at {label!r}")
            if label in seen:
                raise DegenerateSystem(f"duplicate label {label!r}")
            if m > 0:
                seen[label] = m
        object.__setattr__(self, "mults", tuple(sorted(seen.items())))

    @classmethod
    def of(cls, degree: int, mults: Mults = ()) -> "LinSysData":
        pairs = mults.items() if isinstance(mults, Mapping) else mults
        return cls(degree, tuple(pairs))

    def mult(self, label: str) -> int:
        return dict(self.mults).get(label, 0)

    def labels(self) -> Tuple[str, ...]:
        return tuple(l for l, _ in self.mults)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.mults)

    def __str__(self) -> str:
        if not self.mults:
            return f"({self.degree}; -)"
        inner = ", ".join(f"{l}:{m}" for l, m in self.mults)
        return f"({self.degree}; {inner})"


def virtual_dim(L: LinSysData) -> int:
    """Expected projective dimension n(n+3)/2 - sum mu(mu+1)/2 (may be < 0)."""
    return L.degree * (L.degree + 3) // 2 - sum(m * (m + 1) // 2 for _, m in L.mults)


def member_genus(L: LinSysData) -> int:
    """Genus of a general member: (n-1)(n-2)/2 - sum mu(mu-1)/2."""
    return (L.degree - 1) * (L.degree - 2) // 2 - sum(m * (m - 1) // 2 for _, m in L.mults)


def self_intersection(L: LinSysData) -> int:
    """n^2 - sum mu^2, the intersection of two general members off the base."""
    return L.degree**2 - sum(m * m for _, m in L.mults)


def _numerical_data(source: Union[PlaneCurveModel, LinSysData]) -> LinSysData:
    if isinstance(source, PlaneCurveModel):
        return LinSysData.of(source.degree, source.mult_map())
    return source


def adjoint_raw(source: Union[PlaneCurveModel, LinSysData]) -> LinSysData:
    """(d; m_i) -> (d-3; m_i-1), defined only above genus 1.

    Accepts a curve model or a linear system; only the numerical data
    enters, so a system is treated as a general member curve.
    """
    data = _numerical_data(source)
    g = member_genus(data)
    if g <= 1:
        raise AdjointDoesNotExist(f"adjoint requires genus > 1, got genus {g}")
    return LinSysData.of(
        data.degree - 3, {label: m - 1 for label, m in data.mults}
    )


# -- fixed-component removal --------------------------------------------------

_Rule = Tuple[str, Tuple[str, ...]]


@dataclass(frozen=True)
class RemovedComponent:
    """A line or conic subtracted from a system, with repetition count."""

    kind: str
    labels: Tuple[str, ...]
    count: int
    system: LinSysData  # one copy of the subtracted system

    @classmethod
    def single(cls, kind: str, labels: Tuple[str, ...], count: int) -> "RemovedComponent":
        degree = 1 if kind == "line" else 2
        return cls(kind, labels, count, LinSysData.of(degree, {l: 1 for l in labels}))


def _applicable_rules(n: int, mults: Dict[str, int]) -> List[_Rule]:
    """All Bezout rules that currently apply, lines first, lex within a kind."""
    active = sorted(l for l, m in mults.items() if m >= 1)
    rules: List[_Rule] = []
    for i, j in combinations(active, 2):
        if mults[i] + mults[j] > n:
            rules.append(("line", (i, j)))
    for subset in combinations(active, 5):
        if sum(mults[l] for l in subset) > 2 * n:
            rules.append(("conic", subset))
    return rules


def _apply_rule(rule: _Rule, n: int, mults: Dict[str, int]) -> int:
    kind, labels = rule
    n -= 1 if kind == "line" else 2
    for l in labels:
        mults[l] -= 1
    if n < 0:
        raise DegenerateSystem(
            "fixed-component removal drove the degree negative; input numerics are inconsistent"
        )
    return n


def _finish_removal(
    n: int, mults: Dict[str, int], counts: Dict[_Rule, int]
) -> Tuple[LinSysData, Tuple[RemovedComponent, ...]]:
    removed = tuple(
        RemovedComponent.single(kind, labels, counts[(kind, labels)])
        for kind, labels in sorted(counts, key=lambda r: (0 if r[0] == "line" else 1, r[1]))
    )
    return LinSysData.of(n, mults), removed


def remove_fixed_components(
    L: LinSysData,
) -> Tuple[LinSysData, Tuple[RemovedComponent, ...]]:
    """Subtract forced lines and conics until no Bezout rule applies.

    Deterministic order: at each step the first applicable rule is taken,
    scanning lines before conics and lexicographically within each kind.

    On usable systems (virtual dimension >= 1) the rewriting is confluent,
    so the order fixes only the trace, never the result: applying a rule
    never lowers the virtual dimension, and two rules can interfere only
    through a shared point of multiplicity 1, which forces the dimension
    negative.  Numerically empty inputs carry no such guarantee.
    """
    n, mults = L.degree, L.as_dict()
    counts: Dict[_Rule, int] = {}
    while True:
        rules = _applicable_rules(n, mults)
        if not rules:
            break
        rule = rules[0]
        n = _apply_rule(rule, n, mults)
        counts[rule] = counts.get(rule, 0) + 1
    return _finish_removal(n, mults, counts)


def remove_fixed_components_random_order(
    L: LinSysData, rng: random.Random
) -> Tuple[LinSysData, Tuple[RemovedComponent, ...]]:
    """Order-randomised variant used to exercise confluence of the rules."""
    n, mults = L.degree, L.as_dict()
    counts: Dict[_Rule, int] = {}
    while True:
        rules = _applicable_rules(n, mults)
        if not rules:
            break
        rule = rules[rng.randrange(len(rules))]
        n = _apply_rule(rule, n, mults)
        counts[rule] = counts.get(rule, 0) + 1
    return _finish_removal(n, mults, counts)


# -- pencil decomposition ------------------------------------------------------


@dataclass(frozen=True)
class PencilReduction:
    """A system written as `content` copies of an irreducible pencil."""

    content: int
    pencil: LinSysData


def _content_split(L: LinSysData) -> Tuple[int, Optional[LinSysData]]:
    c = math.gcd(L.degree, *(m for _, m in L.mults))
    if c < 2:
        return c, None
    return c, LinSysData.of(L.degree // c, {l: m // c for l, m in L.mults})


def pencil_decompose(L: LinSysData) -> Optional[PencilReduction]:
    """Detect a system composed of a rational pencil, numerically.

    Returns (c, P) when degree and multiplicities share a content c >= 2
    and the primitive part P is a rational pencil by the numbers: member
    genus 0, self-intersection 0, virtual dimension 1.  Otherwise None and
    the system is treated as irreducible.  Assumes fixed components were
    already removed.
    """
    c, P = _content_split(L)
    if P is None:
        return None
    if member_genus(P) == 0 and self_intersection(P) == 0 and virtual_dim(P) == 1:
        return PencilReduction(c, P)
    return None


# -- one adjoint step and the full chain --------------------------------------


@dataclass(frozen=True)
class ChainStep:
    """One application of adjoint + fixed-part removal + pencil reduction."""

    input: LinSysData
    raw_adjoint: LinSysData
    removed_fixed: Tuple[RemovedComponent, ...]
    reduced: LinSysData
    pencil_reduction: Optional[PencilReduction]
    warnings: Tuple[str, ...] = ()

    @property
    def output(self) -> LinSysData:
        if self.pencil_reduction is not None:
            return self.pencil_reduction.pencil
        return self.reduced


class Classification(str, enum.Enum):
    RATIONAL_PENCIL = "RationalPencil"
    ELLIPTIC_PENCIL = "EllipticPencil"
    ELLIPTIC_NET = "EllipticNet"
    RATIONAL_SYSTEM = "RationalSystem"
    EXHAUSTED = "Exhausted"


@dataclass(frozen=True)
class ChainReport:
    steps: Tuple[ChainStep, ...]
    terminal: LinSysData
    classification: Classification
    warnings: Tuple[str, ...] = ()


def adjoint_step(L: LinSysData) -> ChainStep:
    """Adjoint of a system followed by removal and pencil reduction."""
    raw = adjoint_raw(L)
    reduced, removed = remove_fixed_components(raw)
    warnings: List[str] = []
    # A fixed-part-free system meets itself nonnegatively off the base
    # points; a negative count here means a fixed component beyond lines
    # and conics escaped the Bezout rules.  (Composites of a non-rational
    # pencil need no extra guard: vdim = selfint - genus + 1, so they land
    # at vdim <= 0 and terminate the chain as Exhausted.)
    if virtual_dim(reduced) >= 1 and self_intersection(reduced) < 0:
        warnings.append(
            f"system {reduced} has negative self-intersection after removing lines "
            "and conics; a higher-degree fixed component was probably missed"
        )
    pr = pencil_decompose(reduced)
    return ChainStep(
        input=L,
        raw_adjoint=raw,
        removed_fixed=removed,
        reduced=reduced,
        pencil_reduction=pr,
        warnings=tuple(warnings),
    )


def _classify_terminal(g: int, dim: int) -> Tuple[Classification, Optional[str]]:
    if g == 0 and dim == 1:
        return Classification.RATIONAL_PENCIL, None
    if g == 1 and dim == 1:
        return Classification.ELLIPTIC_PENCIL, None
    if g == 1 and dim == 2:
        return Classification.ELLIPTIC_NET, None
    if g == 0 and dim >= 2:
        return Classification.RATIONAL_SYSTEM, None
    return (
        Classification.EXHAUSTED,
        f"terminal system with genus {g} and dimension {dim} does not fit the "
        "rational/elliptic case split",
    )


def adjoint_chain(source: Union[PlaneCurveModel, LinSysData]) -> ChainReport:
    """Iterate the adjoint until the general member has genus <= 1.

    The chain starts from the numerical data of a curve (or system) of
    genus > 1, applies :func:`adjoint_step` repeatedly, and stops as soon
    as the current system is numerically empty (virtual dimension <= 0,
    classified Exhausted) or its member genus drops to 1 or 0, in which
    case the terminal is classified by (genus, dimension).
    """
    current = _numerical_data(source)
    if member_genus(current) <= 1:
        raise AdjointDoesNotExist(
            f"adjoint chain requires genus > 1, got genus {member_genus(current)}"
        )
    max_steps = current.degree // 3 + 1
    steps: List[ChainStep] = []
    warnings: List[str] = []
    while True:
        step = adjoint_step(current)
        steps.append(step)
        warnings.extend(step.warnings)
        current = step.output
        if virtual_dim(current) <= 0:
            classification = Classification.EXHAUSTED
            warnings.append(
                f"chain reached the numerically empty system {current} "
                f"(virtual dimension {virtual_dim(current)})"
            )
            break
        g = member_genus(current)
        if g > 1:
            if len(steps) > max_steps:
                raise AssertionError("adjoint chain failed to terminate")
            continue
        classification, note = _classify_terminal(g, virtual_dim(current))
        if note:
            warnings.append(note)
        break
    return ChainReport(
        steps=tuple(steps),
        terminal=current,
        classification=classification,
        warnings=tuple(warnings),
    )


# -- quadratic transformations -------------------------------------------------


def quadratic_transform(L: LinSysData, base: Sequence[str]) -> LinSysData:
    """Degree/multiplicity rules of a quadratic map based at three points.

    n' = 2n - mu1 - mu2 - mu3, and at the image of each base point the new
    multiplicity is n minus the other two base multiplicities.  Labels are
    preserved; base labels absent from the system count as multiplicity 0
    and may acquire positive multiplicity.
    """
    b = tuple(base)
    if len(b) != 3 or len(set(b)) != 3:
        raise ValueError("a quadratic transform needs three distinct base labels")
    mu = [L.mult(l) for l in b]
    s = sum(mu)
    n2 = 2 * L.degree - s
    if n2 < 0:
        raise NegativeDegree(
            f"base {b} is not admissible for {L}: transformed degree {n2} < 0"
        )
    new = L.as_dict()
    for i, label in enumerate(b):
        m2 = L.degree - (s - mu[i])
        if m2 < 0:
            raise NegativeMultiplicity(
                f"base {b} is not admissible for {L}: multiplicity {m2} < 0 at {label!r}"
            )
        new[label] = m2
    return LinSysData.of(n2, new)
