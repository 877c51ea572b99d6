"""Exact arithmetic tower used by every other module.

Four layers, all immutable and exact:

* ``Rational``   -- alias of :class:`fractions.Fraction` (arbitrary
  precision, always reduced, denominator positive).
* ``UniPoly``    -- dense univariate polynomials over the rationals.
* ``RatFunc``    -- reduced fractions of univariate polynomials with a
  monic denominator.
* ``TriHomPoly`` -- homogeneous polynomials in x, y, z stored as sparse
  maps from exponent triples to rationals.

The trivariate layer carries the GCD and exact-divisibility machinery the
birational-map code depends on.  GCDs are computed by stripping the common
power of z, dehomogenising to Q[x, y], and running a primitive
polynomial-remainder sequence on Q[y][x]; results are normalised so the
lexicographically leading term (x > y > z) has coefficient one.

No floating point is used anywhere; floats are rejected on sight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import SingularMatrix

Rational = Fraction

Exponents = Tuple[int, int, int]

RationalLike = Union[int, str, Fraction]


def _frac(value: RationalLike) -> Fraction:
    """Coerce to Fraction, refusing floats (exactness is the whole point)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over Q; ``coeffs[e]`` multiplies ``t**e``.

    Trailing zero coefficients are stripped, so the zero polynomial is the
    empty tuple and ``degree`` of zero is -1.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [_frac(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: RationalLike) -> "UniPoly":
        return cls(tuple(_frac(c) for c in coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> "UniPoly":
        return cls((_frac(value),))

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, e: int) -> Fraction:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return Fraction(0)

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lc = self.lead
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(out))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", RationalLike]) -> "UniPoly":
        if isinstance(other, UniPoly):
            if self.is_zero or other.is_zero:
                return UniPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UniPoly(tuple(out))
        scalar = _frac(other)
        return UniPoly(tuple(c * scalar for c in self.coeffs))

    def __rmul__(self, other: RationalLike) -> "UniPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(self.degree - other.degree + 1, 0)
        rem = list(self.coeffs)
        d, lc = other.degree, other.lead
        while len(rem) - 1 >= d and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            s = len(rem) - 1 - d
            f = rem[-1] / lc
            q[s] = f
            for i, c in enumerate(other.coeffs):
                rem[s + i] -= f * c
            rem.pop()
        return UniPoly(tuple(q)), UniPoly(tuple(rem))

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * e for e, c in enumerate(self.coeffs) if e >= 1))

    def __call__(self, value: RationalLike) -> Fraction:
        x = _frac(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return " + ".join(parts).replace("+ -", "- ")


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor; ``uni_gcd(0, 0)`` is zero."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def uni_div_exact(p: UniPoly, d: UniPoly) -> UniPoly:
    q, r = divmod(p, d)
    if not r.is_zero:
        raise ValueError("inexact univariate division")
    return q


def uni_lcm(p: UniPoly, q: UniPoly) -> UniPoly:
    if p.is_zero or q.is_zero:
        return UniPoly()
    return uni_div_exact(p * q, uni_gcd(p, q)).monic()


def is_squarefree(h: UniPoly) -> bool:
    """True iff gcd(h, h') is constant.  The zero polynomial is rejected."""
    if h.is_zero:
        raise ValueError("squarefree test on the zero polynomial")
    return uni_gcd(h, h.derivative()).degree <= 0


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatFunc:
    """Reduced fraction of univariate polynomials; denominator monic."""

    num: UniPoly = UniPoly()
    den: UniPoly = UniPoly.constant(1)

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = UniPoly(), UniPoly.constant(1)
        else:
            g = uni_gcd(num, den)
            if g.degree > 0:
                num = uni_div_exact(num, g)
                den = uni_div_exact(den, g)
            lc = den.lead
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: Union["RatFunc", UniPoly, RationalLike]) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, UniPoly):
            return cls(value)
        return cls(UniPoly.constant(_frac(value)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("rational function is not constant")
        if self.is_zero:
            return Fraction(0)
        return self.num.coeff(0)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        other = RatFunc.of(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-RatFunc.of(other))

    def __mul__(self, other: Union["RatFunc", UniPoly, RationalLike]) -> "RatFunc":
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __rmul__(self, other: RationalLike) -> "RatFunc":
        return self.__mul__(other)

    def __truediv__(self, other: Union["RatFunc", UniPoly, RationalLike]) -> "RatFunc":
        other = RatFunc.of(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __str__(self) -> str:
        if self.den == UniPoly.constant(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


# ---------------------------------------------------------------------------
# homogeneous trivariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriHomPoly:
    """Homogeneous polynomial in x, y, z over Q.

    ``terms`` maps exponent triples (i, j, k), with i + j + k equal to
    ``degree``, to nonzero coefficients.  The zero polynomial keeps its
    nominal degree so graded arithmetic stays well typed.
    """

    degree: int
    terms: Tuple[Tuple[Exponents, Fraction], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("homogeneous degree must be >= 0")
        acc: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms:
            i, j, k = exps
            if min(i, j, k) < 0 or i + j + k != self.degree:
                raise ValueError(f"monomial {exps} is not homogeneous of degree {self.degree}")
            c = _frac(coeff)
            if c != 0:
                acc[(i, j, k)] = acc.get((i, j, k), Fraction(0)) + c
        cleaned = tuple(sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def of(
        cls,
        terms: Mapping[Exponents, RationalLike],
        degree: Optional[int] = None,
    ) -> "TriHomPoly":
        items = [(tuple(e), _frac(c)) for e, c in terms.items()]
        if degree is None:
            nonzero = [e for e, c in items if c != 0]
            if not nonzero:
                raise ValueError("degree required for the zero polynomial")
            degree = sum(nonzero[0])
        return cls(degree, tuple(items))  # type: ignore[arg-type]

    @classmethod
    def zero(cls, degree: int) -> "TriHomPoly":
        return cls(degree, ())

    @classmethod
    def monomial(cls, exps: Exponents, coeff: RationalLike = 1) -> "TriHomPoly":
        return cls(sum(exps), ((tuple(exps), _frac(coeff)),))  # type: ignore[arg-type]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_dict(self) -> Dict[Exponents, Fraction]:
        return dict(self.terms)

    def coeff(self, exps: Exponents) -> Fraction:
        for e, c in self.terms:
            if e == exps:
                return c
        return Fraction(0)

    def lex_lead(self) -> Tuple[Exponents, Fraction]:
        """Leading (exponents, coefficient) in lex order with x > y > z."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def __add__(self, other: "TriHomPoly") -> "TriHomPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return TriHomPoly(self.degree, tuple(acc.items()))

    def __neg__(self) -> "TriHomPoly":
        return TriHomPoly(self.degree, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "TriHomPoly") -> "TriHomPoly":
        return self + (-other)

    def __mul__(self, other: Union["TriHomPoly", RationalLike]) -> "TriHomPoly":
        if isinstance(other, TriHomPoly):
            deg = self.degree + other.degree
            if self.is_zero or other.is_zero:
                return TriHomPoly.zero(deg)
            acc: Dict[Exponents, Fraction] = {}
            for (i1, j1, k1), c1 in self.terms:
                for (i2, j2, k2), c2 in other.terms:
                    e = (i1 + i2, j1 + j2, k1 + k2)
                    acc[e] = acc.get(e, Fraction(0)) + c1 * c2
            return TriHomPoly(deg, tuple(acc.items()))
        scalar = _frac(other)
        return TriHomPoly(self.degree, tuple((e, c * scalar) for e, c in self.terms))

    def __rmul__(self, other: RationalLike) -> "TriHomPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "TriHomPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = TriHomPoly.monomial((0, 0, 0), 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, axis: int) -> "TriHomPoly":
        """Formal partial derivative with respect to x, y or z (axis 0/1/2)."""
        deg = max(self.degree - 1, 0)
        acc: Dict[Exponents, Fraction] = {}
        for e, c in self.terms:
            if e[axis] == 0:
                continue
            new = list(e)
            new[axis] -= 1
            acc[tuple(new)] = c * e[axis]  # type: ignore[index]
        if self.degree == 0:
            return TriHomPoly.zero(0)
        return TriHomPoly(deg, tuple(acc.items()))

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        a, b, c = (_frac(v) for v in point)
        total = Fraction(0)
        for (i, j, k), coeff in self.terms:
            total += coeff * a**i * b**j * c**k
        return total

    def substitute(self, images: Sequence["TriHomPoly"]) -> "TriHomPoly":
        """Evaluate at three homogeneous polynomials of one common degree."""
        g0, g1, g2 = images
        if not (g0.degree == g1.degree == g2.degree):
            raise ValueError("substitution images must share one degree")
        e = g0.degree
        out_deg = self.degree * e
        if self.is_zero:
            return TriHomPoly.zero(out_deg)
        powers: List[Dict[int, TriHomPoly]] = [{}, {}, {}]

        def power(axis: int, n: int) -> TriHomPoly:
            cache = powers[axis]
            if n not in cache:
                cache[n] = (g0, g1, g2)[axis] ** n
            return cache[n]

        total = TriHomPoly.zero(out_deg)
        for (i, j, k), coeff in self.terms:
            term = power(0, i) * power(1, j) * power(2, k) * coeff
            total = total + term
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        names = "xyz"
        parts = []
        for (i, j, k), c in self.terms:
            mono = "".join(
                f"{names[a]}^{e}" if e > 1 else names[a]
                for a, e in enumerate((i, j, k))
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


TRI_X = TriHomPoly.monomial((1, 0, 0))
TRI_Y = TriHomPoly.monomial((0, 1, 0))
TRI_Z = TriHomPoly.monomial((0, 0, 1))


def homogenize_uni(p: UniPoly, main_axis: int, aux_axis: int, degree: int) -> TriHomPoly:
    """Turn sum(c_e t^e) into sum(c_e main^e aux^(degree-e)), homogeneous."""
    if main_axis == aux_axis:
        raise ValueError("homogenisation axes must differ")
    if p.is_zero:
        return TriHomPoly.zero(degree)
    if degree < p.degree:
        raise ValueError("target degree below the degree of the polynomial")
    acc: Dict[Exponents, Fraction] = {}
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        exps = [0, 0, 0]
        exps[main_axis] = e
        exps[aux_axis] = degree - e
        acc[tuple(exps)] = c  # type: ignore[index]
    return TriHomPoly(degree, tuple(acc.items()))


# -- lex division and divisibility ------------------------------------------


def tri_divrem(f: TriHomPoly, c: TriHomPoly) -> Tuple[TriHomPoly, TriHomPoly]:
    """Single-divisor division in lex order: f = q*c + r, no term of r
    divisible by the leading monomial of c."""
    if c.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    qdeg = max(f.degree - c.degree, 0)
    if f.is_zero or f.degree < c.degree:
        return TriHomPoly.zero(qdeg), f
    (ce, cc) = c.lex_lead()
    cdict = c.as_dict()
    p = f.as_dict()
    q: Dict[Exponents, Fraction] = {}
    r: Dict[Exponents, Fraction] = {}
    while p:
        e = max(p)
        coeff = p.pop(e)
        if coeff == 0:
            continue
        if e[0] >= ce[0] and e[1] >= ce[1] and e[2] >= ce[2]:
            m = (e[0] - ce[0], e[1] - ce[1], e[2] - ce[2])
            s = coeff / cc
            q[m] = q.get(m, Fraction(0)) + s
            for de, dc in cdict.items():
                if de == ce:
                    continue
                t = (m[0] + de[0], m[1] + de[1], m[2] + de[2])
                p[t] = p.get(t, Fraction(0)) - s * dc
                if p[t] == 0:
                    del p[t]
        else:
            r[e] = coeff
    return (
        TriHomPoly(qdeg, tuple(q.items())),
        TriHomPoly(f.degree, tuple(r.items())),
    )


def tri_divides(c: TriHomPoly, f: TriHomPoly) -> bool:
    """True iff f = c*q for some homogeneous q.  Requires c != 0."""
    if c.is_zero:
        raise ZeroDivisionError("divisibility by the zero polynomial")
    if f.is_zero:
        return True
    if f.degree < c.degree:
        return False
    _, r = tri_divrem(f, c)
    return r.is_zero


def tri_div_exact(f: TriHomPoly, c: TriHomPoly) -> TriHomPoly:
    q, r = tri_divrem(f, c)
    if not r.is_zero:
        raise ValueError("inexact trivariate division")
    return q


# -- gcd via dehomogenisation to Q[y][x] -------------------------------------
#
# A homogeneous f factors as z^a * g with z not dividing g; g corresponds
# bijectively (and multiplicatively) to its dehomogenisation g(x, y, 1),
# so gcds reduce to bivariate gcds plus the shared power of z.  Bivariate
# polynomials are handled as polynomials in x whose coefficients live in
# Q[y]: split off the content (a univariate gcd), then run a primitive
# pseudo-remainder sequence on the primitive parts.

_XPoly = List[UniPoly]  # coefficient i multiplies x**i


def _xp_trim(a: _XPoly) -> _XPoly:
    while a and a[-1].is_zero:
        a.pop()
    return a


def _xp_deg(a: _XPoly) -> int:
    return len(a) - 1


def _xp_sub(a: _XPoly, b: _XPoly) -> _XPoly:
    out = [UniPoly()] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _xp_trim(out)

def _xp_mul_uni(a: _XPoly, u: UniPoly) -> _XPoly:
    return _xp_trim([c * u for c in a])


def _xp_content(a: _XPoly) -> UniPoly:
    g = UniPoly()
    for c in a:
        g = uni_gcd(g, c)
    return g


def _xp_primitive(a: _XPoly) -> _XPoly:
    if not a:
        return a
    cont = _xp_content(a)
    if cont.degree <= 0:
        lead = a[-1].lead
        return [c * (1 / lead) for c in a] if lead != 1 else list(a)
    return [uni_div_exact(c, cont) for c in a]


def _xp_prem(a: _XPoly, b: _XPoly) -> _XPoly:
    """Pseudo-remainder of a by b (b nonzero) over Q[y][x]; division-free."""
    r = list(a)
    db, lb = _xp_deg(b), b[-1]
    while r and _xp_deg(r) >= db:
        s = _xp_deg(r) - db
        lr = r[-1]
        scaled = [c * lb for c in r]
        shifted = [UniPoly()] * s + [c * lr for c in b]
        r = _xp_sub(scaled, shifted)
    return r


def _xp_gcd(a: _XPoly, b: _XPoly) -> _XPoly:
    """Bivariate gcd (up to a rational scalar) of two nonzero x-polynomials."""
    ca, cb = _xp_content(a), _xp_content(b)
    cont = uni_gcd(ca, cb)
    pa, pb = _xp_primitive(a), _xp_primitive(b)
    if _xp_deg(pa) < _xp_deg(pb):
        pa, pb = pb, pa
    while pb:
        r = _xp_prem(pa, pb)
        pa, pb = pb, _xp_primitive(r)
    return _xp_mul_uni(pa, cont)


def _tri_to_xp(f: TriHomPoly) -> Tuple[_XPoly, int]:
    """Strip the z-power, set z = 1, return (x-polynomial over Q[y], zpow)."""
    zpow = min(k for (_, _, k), _ in f.terms)
    coeffs: Dict[int, Dict[int, Fraction]] = {}
    for (i, j, _), c in f.terms:
        coeffs.setdefault(i, {})[j] = c
    out: _XPoly = []
    for i in range(max(coeffs) + 1):
        ys = coeffs.get(i, {})
        if ys:
            size = max(ys) + 1
            out.append(UniPoly(tuple(ys.get(e, Fraction(0)) for e in range(size))))
        else:
            out.append(UniPoly())
    return _xp_trim(out), zpow


def _xp_to_tri(a: _XPoly) -> TriHomPoly:
    """Homogenise a bivariate polynomial with z up to its total degree."""
    total = max(i + c.degree for i, c in enumerate(a) if not c.is_zero)
    acc: Dict[Exponents, Fraction] = {}
    for i, c in enumerate(a):
        for j, v in enumerate(c.coeffs):
            if v != 0:
                acc[(i, j, total - i - j)] = v
    return TriHomPoly(total, tuple(acc.items()))


def lex_normalized(f: TriHomPoly) -> TriHomPoly:
    """Scale so the lex-leading coefficient (x > y > z) equals one."""
    if f.is_zero:
        return f
    _, lc = f.lex_lead()
    return f * (1 / lc) if lc != 1 else f


def _gcd_pair(f: TriHomPoly, g: TriHomPoly) -> TriHomPoly:
    if f.is_zero:
        return lex_normalized(g)
    if g.is_zero:
        return lex_normalized(f)
    fx, za = _tri_to_xp(f)
    gx, zb = _tri_to_xp(g)
    d = _xp_gcd(fx, gx)
    result = _xp_to_tri(d)
    zshared = min(za, zb)
    if zshared:
        result = result * TriHomPoly.monomial((0, 0, zshared))
    return lex_normalized(result)


def tri_content_gcd(f: TriHomPoly, g: TriHomPoly, k: TriHomPoly) -> TriHomPoly:
    """GCD of three homogeneous polynomials, lex-normalised; rejects (0,0,0)."""
    polys = [p for p in (f, g, k) if not p.is_zero]
    if not polys:
        raise ValueError("gcd of three zero polynomials")
    acc = polys[0]
    for p in polys[1:]:
        if acc.degree == 0:
            break
        acc = _gcd_pair(acc, p)
    return lex_normalized(acc)


# ---------------------------------------------------------------------------
# 2x2 matrices over the rational function field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mat2RF:
    """Invertible 2x2 matrix with entries in Q(x)."""

    a11: RatFunc
    a12: RatFunc
    a21: RatFunc
    a22: RatFunc

    def __post_init__(self) -> None:
        if self.det().is_zero:
            raise SingularMatrix("matrix over the function field is singular")

    @classmethod
    def of(cls, a11, a12, a21, a22) -> "Mat2RF":
        return cls(RatFunc.of(a11), RatFunc.of(a12), RatFunc.of(a21), RatFunc.of(a22))

    def det(self) -> RatFunc:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> RatFunc:
        return self.a11 + self.a22

    def is_scalar(self) -> bool:
        return self.a12.is_zero and self.a21.is_zero and self.a11 == self.a22

    def __matmul__(self, other: "Mat2RF") -> "Mat2RF":
        return Mat2RF(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )
