"""Plane birational maps as coprime homogeneous triples.

A map is three homogeneous polynomials of one degree with no common
factor, kept in a canonical form (content removed, first nonzero
component scaled to lex-leading coefficient one) so identity testing is
a syntactic comparison.  Constructors cover three families:

* ``make_linear_G``  -- the linear maps (a x : y + b x : z + c x), which
  fix the line x = 0 pointwise;
* ``make_H_element`` -- (x, y) -> (x / (alpha(y) x + beta(y)), y) on the
  chart z = 1, fixing the same line and preserving the pencil of lines
  through (1 : 0 : 0);
* ``make_phi``       -- the quadratic involutions
  (-x (mu y + nu z) : y (x + mu y + nu z) : z (x + mu y + nu z)).

``fixes_curve_pointwise`` certifies that a map fixes a curve pointwise
(where defined) by exact divisibility of the 2x2 minors f_i x_j - f_j x_i
by the curve polynomial; exactness is what makes the certificate real.

Birationality of arbitrary triples is not verified; only triples coming
from the constructors are known maps, and foreign triples must be opted
in with ``trusted=True``.  Degrees are capped by the environment variable
CREMONA_KIT_MAX_DEGREE (default 24) to keep exact arithmetic bounded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .errors import DegreeCapExceeded, MapContractsPlane, UnverifiedMap
from .exact_algebra import (
    RatFunc,
    RationalLike,
    TRI_X,
    TRI_Y,
    TRI_Z,
    TriHomPoly,
    UniPoly,
    _frac,
    homogenize_uni,
    tri_content_gcd,
    tri_div_exact,
    tri_divides,
    uni_div_exact,
    uni_lcm,
)
from .linear_systems import LinSysData

DEFAULT_MAX_DEGREE = 24
_ENV_MAX_DEGREE = "CREMONA_KIT_MAX_DEGREE"


def max_degree_cap() -> int:
    raw = os.environ.get(_ENV_MAX_DEGREE)
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise DegreeCapExceeded(
            f"{_ENV_MAX_DEGREE} must be an integer, got {raw!r}"
        ) from None


def _check_cap(degree: int, context: str) -> None:
    cap = max_degree_cap()
    if degree > cap:
        raise DegreeCapExceeded(
            f"{context} needs degree {degree}, above the cap {cap} "
            f"(raise {_ENV_MAX_DEGREE} to allow it)"
        )


@dataclass(frozen=True)
class CremonaMap:
    """Birational self-map of the plane in canonical coprime form."""

    f0: TriHomPoly
    f1: TriHomPoly
    f2: TriHomPoly

    def __post_init__(self) -> None:
        if not (self.f0.degree == self.f1.degree == self.f2.degree):
            raise ValueError("map components must share one degree")
        if self.f0.is_zero and self.f1.is_zero and self.f2.is_zero:
            raise ValueError("map components are all zero")

    @property
    def degree(self) -> int:
        return self.f0.degree

    @property
    def components(self) -> Tuple[TriHomPoly, TriHomPoly, TriHomPoly]:
        return (self.f0, self.f1, self.f2)

    @classmethod
    def of(cls, f0: TriHomPoly, f1: TriHomPoly, f2: TriHomPoly) -> "CremonaMap":
        """Canonicalise a triple produced by this package's own constructors."""
        comps = [f0, f1, f2]
        if all(c.is_zero for c in comps):
            raise ValueError("map components are all zero")
        content = tri_content_gcd(f0, f1, f2)
        if content.degree > 0:
            comps = [
                TriHomPoly.zero(c.degree - content.degree)
                if c.is_zero
                else tri_div_exact(c, content)
                for c in comps
            ]
        lead = next(c for c in comps if not c.is_zero).lex_lead()[1]
        if lead != 1:
            comps = [c * (1 / lead) for c in comps]
        m = cls(*comps)
        if m.degree < 1:
            raise ValueError("map degenerates to a constant triple")
        _check_cap(m.degree, "map construction")
        return m

    @classmethod
    def from_components(
        cls,
        f0: TriHomPoly,
        f1: TriHomPoly,
        f2: TriHomPoly,
        *,
        trusted: bool = False,
    ) -> "CremonaMap":
        """Accept a user-supplied triple.

        Birationality is not checked (there is no general test here), so
        the caller must assert it with ``trusted=True``.
        """
        if not trusted:
            raise UnverifiedMap(
                "birationality of arbitrary triples is not verified; "
                "pass trusted=True to assert it"
            )
        return cls.of(f0, f1, f2)


def identity_map() -> CremonaMap:
    return CremonaMap.of(TRI_X, TRI_Y, TRI_Z)


def make_linear_G(a: RationalLike, b: RationalLike, c: RationalLike) -> CremonaMap:
    """The linear map (a x : y + b x : z + c x); requires a != 0."""
    a, b, c = _frac(a), _frac(b), _frac(c)
    if a == 0:
        raise ValueError("the x-scaling coefficient a must be nonzero")
    return CremonaMap.of(
        TriHomPoly.of({(1, 0, 0): a}),
        TriHomPoly.of({(0, 1, 0): Fraction(1), (1, 0, 0): b}, degree=1),
        TriHomPoly.of({(0, 0, 1): Fraction(1), (1, 0, 0): c}, degree=1),
    )


def linear_G_params(F: CremonaMap) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Membership test for the ``make_linear_G`` family.

    Returns the (a, b, c) parameters when F is projectively of the form
    (a x : y + b x : z + c x), else None.
    """
    if F.degree != 1:
        return None
    x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    if F.f0.coeff(y) != 0 or F.f0.coeff(z) != 0:
        return None
    if F.f1.coeff(z) != 0 or F.f2.coeff(y) != 0:
        return None
    p, q = F.f0.coeff(x), F.f1.coeff(y)
    if p == 0 or q == 0 or F.f2.coeff(z) != q:
        return None
    return (p / q, F.f1.coeff(x) / q, F.f2.coeff(x) / q)


def make_H_element(alpha: RatFunc, beta: RatFunc) -> CremonaMap:
    """(x, y) -> (x / (alpha(y) x + beta(y)), y) homogenised; beta != 0.

    alpha and beta are rational functions of the affine coordinate y.
    Clearing the shared denominator D gives x D(y) / (A(y) x + B(y)); the
    projective form is (z x D : y (x A + B) : z (x A + B)) with every
    univariate factor homogenised in (y, z).
    """
    alpha, beta = RatFunc.of(alpha), RatFunc.of(beta)
    if beta.is_zero:
        raise ValueError("beta must be nonzero")
    D = uni_lcm(alpha.den, beta.den)
    A = alpha.num * uni_div_exact(D, alpha.den)
    B = beta.num * uni_div_exact(D, beta.den)
    m = max(D.degree + 1, B.degree, A.degree + 1 if not A.is_zero else 1)
    _check_cap(m + 1, "homogenising the map")
    d_hom = homogenize_uni(D, 1, 2, m - 1)
    a_hom = homogenize_uni(A, 1, 2, m - 1)
    b_hom = homogenize_uni(B, 1, 2, m)
    den = TRI_X * a_hom + b_hom
    return CremonaMap.of(TRI_Z * TRI_X * d_hom, TRI_Y * den, TRI_Z * den)


def make_phi(mu: RationalLike, nu: RationalLike) -> CremonaMap:
    """The quadratic involution with parameters (mu, nu) != (0, 0).

    (x : y : z) -> (-x (mu y + nu z) : y (x + mu y + nu z) : z (x + mu y + nu z));
    it fixes the line x = 0 pointwise.
    """
    mu, nu = _frac(mu), _frac(nu)
    if mu == 0 and nu == 0:
        raise ValueError("mu and nu cannot both vanish")
    l = TriHomPoly.of({(0, 1, 0): mu, (0, 0, 1): nu}, degree=1)
    m = TRI_X + l
    return CremonaMap.of(-1 * (TRI_X * l), TRI_Y * m, TRI_Z * m)


def compose(F: CremonaMap, G: CremonaMap) -> CremonaMap:
    """F after G: substitute G's components into F, then remove content."""
    _check_cap(F.degree * G.degree, "composition")
    comps = [f.substitute(G.components) for f in F.components]
    if all(c.is_zero for c in comps):
        raise MapContractsPlane(
            "composition produced the zero triple; the second map contracts "
            "the locus the first map needs"
        )
    return CremonaMap.of(*comps)


def is_identity(F: CremonaMap) -> bool:
    return F == identity_map()


def fixes_curve_pointwise(F: CremonaMap, c: TriHomPoly) -> bool:
    """True iff c divides every minor f_i x_j - f_j x_i (i < j).

    Divisibility of all three minors says F(p) is projectively equal to p
    along the curve c = 0, i.e. the map fixes the curve pointwise wherever
    it is defined.
    """
    if c.is_zero:
        raise ValueError("curve polynomial must be nonzero")
    f0, f1, f2 = F.components
    minors = (
        f0 * TRI_Y - f1 * TRI_X,
        f0 * TRI_Z - f2 * TRI_X,
        f1 * TRI_Z - f2 * TRI_Y,
    )
    return all(tri_divides(c, m) for m in minors)


def free_intersection(
    L: LinSysData,
    M: LinSysData,
    shared: Optional[Iterable[Tuple[str, str]]] = None,
) -> int:
    """Intersection of general members away from shared base points.

    ``shared`` pairs a label of L with the label of M it coincides with;
    by default labels with equal names are identified.
    """
    if shared is None:
        common = sorted(set(L.labels()) & set(M.labels()))
        shared = [(l, l) for l in common]
    total = L.degree * M.degree
    for a, b in shared:
        total -= L.mult(a) * M.mult(b)
    return total
