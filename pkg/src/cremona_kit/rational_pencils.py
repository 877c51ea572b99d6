"""Diophantine arithmetic of rational pencils of plane curves.

A degree-n pencil of rational curves with base multiplicities m_1..m_k
(points in the plane or infinitely near, treated as pure numbers here)
must satisfy two exact equations:

    (n-1)(n-2)/2 - sum m_i (m_i - 1)/2 = 0     (members are rational)
    (n+1)(n+2)/2 - sum m_i (m_i + 1)/2 = 2     (the system is a pencil)

Subtracting one from the other forces the linear relation
3n - sum m_i = 2.  Against a plane sextic whose only singularities are
ordinary double points, members of such a pencil meet the sextic in
6n - 2 sum n_i points away from the base points, where n_i is the pencil
multiplicity at each node; the linear relation bounds this below by 4.

Proximity inequalities between infinitely-near points are not enforced;
the two equations are the whole contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import EnumerationBoundExceeded, InvalidAssignment
from .linear_systems import LinSysData

DEFAULT_ENUM_LIMIT = 8


@dataclass(frozen=True)
class PencilType:
    """Numerical type (n; m_1, ..., m_k), multiplicities sorted descending."""

    degree: int
    mults: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"pencil degree must be >= 1, got {self.degree}")
        ms = tuple(sorted(self.mults, reverse=True))
        if ms and ms[-1] < 1:
            raise ValueError("base multiplicities must be >= 1")
        object.__setattr__(self, "mults", ms)

    def __str__(self) -> str:
        return f"({self.degree}; {', '.join(map(str, self.mults)) or '-'})"


@dataclass(frozen=True)
class PencilCheckReport:
    degree: int
    mults: Tuple[int, ...]
    genus_residual: int
    pencil_residual: int
    linear_residual: int
    valid: bool


def check_rational_pencil(n: int, mults: Iterable[int]) -> PencilCheckReport:
    """Evaluate both pencil equations exactly and report the residuals.

    When both hold, the linear relation 3n - sum(m) = 2 must follow by
    subtraction, and is asserted.
    """
    ms = tuple(sorted(mults, reverse=True))
    if n < 1:
        raise ValueError(f"pencil degree must be >= 1, got {n}")
    if any(m < 1 for m in ms):
        raise ValueError("base multiplicities must be >= 1")
    r_genus = (n - 1) * (n - 2) // 2 - sum(m * (m - 1) // 2 for m in ms)
    r_pencil = (n + 1) * (n + 2) // 2 - sum(m * (m + 1) // 2 for m in ms) - 2
    r_linear = 3 * n - sum(ms) - 2
    valid = r_genus == 0 and r_pencil == 0
    if valid:
        assert r_linear == 0, "linear relation must follow from the two equations"
    return PencilCheckReport(n, ms, r_genus, r_pencil, r_linear, valid)


def sextic_free_intersection_bound(p: PencilType, node_mults: Sequence[int]) -> int:
    """Free intersection 6n - 2 sum(n_i) with a nodal sextic; always >= 4.

    ``node_mults`` assigns the pencil's multiplicity at each double point
    of the sextic (zero where the node is not a base point); the total may
    not exceed the pencil's total base multiplicity.
    """
    report = check_rational_pencil(p.degree, p.mults)
    if not report.valid:
        raise ValueError(f"pencil type {p} does not satisfy the pencil equations")
    ns = tuple(node_mults)
    if any(not isinstance(v, int) or v < 0 for v in ns):
        raise InvalidAssignment("node multiplicities must be integers >= 0")
    if sum(ns) > sum(p.mults):
        raise InvalidAssignment(
            f"node multiplicities total {sum(ns)}, above the pencil's base total {sum(p.mults)}"
        )
    value = 6 * p.degree - 2 * sum(ns)
    assert value >= 4, "the linear relation bounds the free intersection below by 4"
    return value


def _partitions(total: int, square_total: int, max_part: int):
    """Non-increasing tuples of parts >= 1 with the given sum and square sum."""
    if total == 0:
        if square_total == 0:
            yield ()
        return
    top = min(max_part, total)
    for part in range(top, 0, -1):
        rest, rest_sq = total - part, square_total - part * part
        if rest_sq < 0:
            continue
        if rest > rest_sq:  # each remaining part m >= 1 has m <= m^2
            continue
        if rest_sq > rest * part:  # remaining parts are bounded by `part`
            continue
        for tail in _partitions(rest, rest_sq, part):
            yield (part,) + tail


def enumerate_pencil_types(
    n_max: int, limit: int = DEFAULT_ENUM_LIMIT
) -> Tuple[PencilType, ...]:
    """All valid pencil types with degree <= n_max, deterministically ordered.

    The two equations pin sum(m) = 3n - 2 and sum(m^2) = n^2, so the
    search is an exact bounded partition walk.  ``limit`` guards runtime;
    raise it explicitly for bigger searches.
    """
    if n_max > limit:
        raise EnumerationBoundExceeded(
            f"n_max {n_max} exceeds the enumeration bound {limit}"
        )
    out: List[PencilType] = []
    for n in range(1, n_max + 1):
        for parts in _partitions(3 * n - 2, n * n, n):
            out.append(PencilType(n, parts))
    return tuple(out)


def as_linear_system(p: PencilType, prefix: str = "b") -> LinSysData:
    """Read a pencil type as a linear system on general-position labels."""
    return LinSysData.of(p.degree, {f"{prefix}{i}": m for i, m in enumerate(p.mults)})
