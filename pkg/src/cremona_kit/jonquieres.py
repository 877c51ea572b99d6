"""The abelian matrix group [[a1, h a2], [a2, a1]] over Q(x).

For a squarefree h of even degree 2g + 2 >= 4, these matrices (with
nonzero determinant a1^2 - h a2^2) form a commutative group under matrix
product: the multiplicative group of the quadratic extension Q(x)[y] /
(y^2 - h).  Each element induces the plane map

    (x, y) -> (x, (a1 y + h a2) / (a2 y + a1)),

which preserves every vertical line x = const and fixes the hyperelliptic
curve y^2 = h(x) pointwise; the fixation is certified both by a symbolic
expansion over Q(x) and by the exact minor-divisibility test on the
homogenised curve.

Orders in the projective group are classified by lambda = trace^2 / det:
finite order forces lambda to be a constant among {4, 0, 1, 2, 3}
(orders 1, 2, 3, 4, 6); anything else, including every non-constant
lambda, has infinite order.  For elements of this group with a1 and a2
both nonzero, lambda = 4 a1^2 / (a1^2 - h a2^2) constant would force h
times a square to be constant, impossible for squarefree nonconstant h,
so only orders 1 (a2 = 0), 2 (a1 = 0) and infinity occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cremona_maps import CremonaMap, _check_cap
from .errors import GroupMismatch, InvalidElement
from .exact_algebra import (
    Mat2RF,
    RatFunc,
    TRI_X,
    TRI_Y,
    TRI_Z,
    TriHomPoly,
    UniPoly,
    homogenize_uni,
    is_squarefree,
    uni_div_exact,
    uni_lcm,
)

PGL_INFINITE = "infinite"

PglOrder = Union[int, str]


def _check_h(h: UniPoly) -> None:
    if h.is_zero:
        raise InvalidElement("h must be nonzero")
    if h.degree < 4 or h.degree % 2 != 0:
        raise InvalidElement(
            f"h must have even degree 2g + 2 with g >= 1, got degree {h.degree}"
        )
    if not is_squarefree(h):
        raise InvalidElement("h must be squarefree")


@dataclass(frozen=True)
class JonqElement:
    """Group element (a1, a2) over a fixed squarefree even-degree h."""

    a1: RatFunc
    a2: RatFunc
    h: UniPoly

    def __post_init__(self) -> None:
        _check_h(self.h)
        if self.a1.is_zero and self.a2.is_zero:
            raise InvalidElement("a1 and a2 cannot both vanish")
        if self.det().is_zero:
            raise InvalidElement("determinant a1^2 - h a2^2 vanishes")

    @classmethod
    def of(cls, h: UniPoly, a1, a2) -> "JonqElement":
        return cls(RatFunc.of(a1), RatFunc.of(a2), h)

    @classmethod
    def identity(cls, h: UniPoly) -> "JonqElement":
        return cls.of(h, 1, 0)

    @property
    def genus(self) -> int:
        return (self.h.degree - 2) // 2

    def det(self) -> RatFunc:
        hr = RatFunc.of(self.h)
        return self.a1 * self.a1 - hr * (self.a2 * self.a2)

    def matrix(self) -> Mat2RF:
        hr = RatFunc.of(self.h)
        return Mat2RF(self.a1, hr * self.a2, self.a2, self.a1)


def mul(u: JonqElement, v: JonqElement) -> JonqElement:
    """Matrix product inside the group: stays of the same shape."""
    if u.h != v.h:
        raise GroupMismatch("elements built over different polynomials h")
    hr = RatFunc.of(u.h)
    return JonqElement(
        u.a1 * v.a1 + hr * (u.a2 * v.a2),
        u.a1 * v.a2 + u.a2 * v.a1,
        u.h,
    )


def invert(u: JonqElement) -> JonqElement:
    """Inverse (a1 / det, -a2 / det); mul(u, invert(u)) is scalar."""
    d = u.det()
    return JonqElement(u.a1 / d, -u.a2 / d, u.h)


def pgl_order(m: Mat2RF) -> PglOrder:
    """Order of the image of m in the projective group over Q(x).

    Classified by lambda = trace^2 / det: non-constant lambda means
    infinite order; constant lambda 4 is the identity (if scalar) or a
    unipotent of infinite order; constants 0, 1, 2, 3 give orders
    2, 3, 4, 6; every other constant is infinite order.
    """
    tr = m.trace()
    lam = (tr * tr) / m.det()
    if not lam.is_constant:
        return PGL_INFINITE
    value = lam.constant_value
    if value == 4:
        return 1 if m.is_scalar() else PGL_INFINITE
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    return table.get(value, PGL_INFINITE)


@dataclass(frozen=True)
class OrderReport:
    """Outcome of the finite-order check for a group element."""

    order: PglOrder
    lam: RatFunc
    lam_constant: bool
    conclusion_holds: bool  # order landed in {1, 2, infinite}
    note: str


def leminv_check(u: JonqElement) -> OrderReport:
    """Classify the order of u and check it lands in {1, 2, infinite}.

    Orders 3, 4 and 6 would need lambda = trace^2/det to be a nonzero
    constant, which forces h (a2/a1)^2 constant, impossible when h is
    squarefree of positive degree; the report records lambda and the
    verdict.
    """
    m = u.matrix()
    tr = m.trace()
    lam = (tr * tr) / m.det()
    order = pgl_order(m)
    ok = order in (1, 2, PGL_INFINITE)
    if u.a1.is_zero:
        note = "a1 = 0: the element is the hyperelliptic involution, order 2"
    elif u.a2.is_zero:
        note = "a2 = 0: the element is scalar, projectively the identity"
    else:
        note = (
            "a1, a2 both nonzero: lambda = 4 a1^2 / (a1^2 - h a2^2) cannot be "
            "constant for squarefree nonconstant h, so the order is infinite"
        )
    return OrderReport(order, lam, lam.is_constant, ok, note)


def hyperelliptic_curve_poly(h: UniPoly) -> TriHomPoly:
    """Plane model of y^2 = h(x): the degree-(2g+2) form y^2 z^(2g) - H(x, z)."""
    _check_h(h)
    d = h.degree
    h_hom = homogenize_uni(h, 0, 2, d)
    y2 = TriHomPoly.monomial((0, 2, d - 2))
    return y2 - h_hom


def mat_to_cremona(m: Mat2RF) -> CremonaMap:
    """Homogenise (x, y) -> (x, (a11 y + a12) / (a21 y + a22)).

    All four entries are put over one monic denominator q, giving
    polynomial entries p_ij; with M large enough the projective map is
    (x (y P21 + P22) : z (y P11 + P12) : z (y P21 + P22)), every p_ij
    homogenised in (x, z).  Content removal then yields the coprime form.
    """
    q = uni_lcm(
        uni_lcm(m.a11.den, m.a12.den),
        uni_lcm(m.a21.den, m.a22.den),
    )
    p11 = m.a11.num * uni_div_exact(q, m.a11.den)
    p12 = m.a12.num * uni_div_exact(q, m.a12.den)
    p21 = m.a21.num * uni_div_exact(q, m.a21.den)
    p22 = m.a22.num * uni_div_exact(q, m.a22.den)
    deg = max(
        1,
        p11.degree + 1,
        p12.degree,
        p21.degree + 1,
        p22.degree,
    )
    _check_cap(deg + 1, "homogenising the map")
    num = TRI_Y * homogenize_uni(p11, 0, 2, deg - 1) + homogenize_uni(p12, 0, 2, deg)
    den = TRI_Y * homogenize_uni(p21, 0, 2, deg - 1) + homogenize_uni(p22, 0, 2, deg)
    return CremonaMap.of(TRI_X * den, TRI_Z * num, TRI_Z * den)


def to_cremona(u: JonqElement) -> CremonaMap:
    """The plane map induced by u; preserves the pencil of lines x = const."""
    return mat_to_cremona(u.matrix())


def fixes_hyperelliptic(u: JonqElement) -> bool:
    """Certify (a1 y + h a2)^2 - h (a2 y + a1)^2 = det * (y^2 - h) over Q(x).

    Both sides are expanded as quadratics in y with coefficients in Q(x)
    and compared exactly; the identity is why the induced map fixes the
    curve y^2 = h(x) pointwise.
    """
    hr = RatFunc.of(u.h)
    p, q = u.a1, hr * u.a2
    r, s = u.a2, u.a1
    lhs = (
        p * p - hr * (r * r),            # y^2
        2 * (p * q) - hr * (2 * (r * s)),  # y^1
        q * q - hr * (s * s),            # y^0
    )
    det = u.det()
    rhs = (det, RatFunc.of(0), -(det * hr))
    return lhs == rhs
