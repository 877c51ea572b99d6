import random
from fractions import Fraction

import pytest
import sympy

from cremona_kit.errors import SingularMatrix
from cremona_kit.exact_algebra import (
    Mat2RF,
    RatFunc,
    TRI_X,
    TRI_Y,
    TRI_Z,
    TriHomPoly,
    UniPoly,
    homogenize_uni,
    is_squarefree,
    lex_normalized,
    tri_content_gcd,
    tri_div_exact,
    tri_divides,
    tri_divrem,
    uni_gcd,
    uni_lcm,
)

from _util import (
    SX,
    SY,
    SZ,
    ST,
    rand_ratfunc,
    rand_trihom,
    rand_unipoly,
    sympy_to_tri,
    tri_to_sympy,
    uni_to_sympy,
)

T = UniPoly.variable()
ONE = UniPoly.constant(1)


class TestUniPoly:
    def test_zero_normal_form(self):
        assert UniPoly.of(0, 0, 0).is_zero
        assert UniPoly.of(1, 2, 0, 0).degree == 1

    def test_gcd_shared_root(self):
        assert uni_gcd(T * T - ONE, T - ONE) == T - ONE

    def test_gcd_with_zero_is_monic(self):
        p = UniPoly.of(2, 0, 4)  # 4t^2 + 2
        assert uni_gcd(p, UniPoly()) == UniPoly.of(Fraction(1, 2), 0, 1)
        assert uni_gcd(UniPoly(), UniPoly()).is_zero

    def test_gcd_coprime(self):
        # Euclid by hand: x^2+1 = (x^2-1) + 2, so the gcd is constant.
        assert uni_gcd(T * T + ONE, T * T - ONE) == ONE

    def test_gcd_divides_both_and_cofactors_coprime(self):
        rng = random.Random(101)
        for _ in range(50):
            p = rand_unipoly(rng, 4, nonzero=True)
            q = rand_unipoly(rng, 4, nonzero=True)
            g = uni_gcd(p, q)
            assert (p % g).is_zero and (q % g).is_zero
            assert uni_gcd(p // g, q // g).degree == 0

    def test_gcd_matches_sympy(self):
        rng = random.Random(202)
        for _ in range(40):
            c = rand_unipoly(rng, 2, nonzero=True)
            p = rand_unipoly(rng, 3, nonzero=True) * c
            q = rand_unipoly(rng, 3, nonzero=True) * c
            ours = uni_gcd(p, q)
            theirs = sympy.gcd(uni_to_sympy(p), uni_to_sympy(q), ST)
            theirs = sympy.Poly(theirs, ST).monic()
            assert sympy.expand(uni_to_sympy(ours) - theirs.as_expr()) == 0

    def test_squarefree(self):
        assert is_squarefree(T**4 - ONE)
        assert not is_squarefree((T - ONE) * (T - ONE))
        assert is_squarefree(T**6 + T + ONE)
        with pytest.raises(ValueError):
            is_squarefree(UniPoly())

    def test_divmod_roundtrip(self):
        rng = random.Random(303)
        for _ in range(40):
            a = rand_unipoly(rng, 5)
            b = rand_unipoly(rng, 3, nonzero=True)
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree

    def test_lcm(self):
        assert uni_lcm(T - ONE, T + ONE) == T * T - ONE

    def test_eval(self):
        p = UniPoly.of(1, -2, 1)  # (t-1)^2
        assert p(1) == 0 and p(3) == 4


class TestRatFunc:
    def test_normalization_idempotent(self):
        rng = random.Random(404)
        for _ in range(50):
            f = rand_ratfunc(rng, 3)
            again = RatFunc(f.num, f.den)
            assert again == f
            assert f.den.is_zero or f.den.lead == 1

    def test_reduction(self):
        f = RatFunc((T - ONE) * (T + ONE), (T - ONE) * UniPoly.constant(2))
        assert f.num == UniPoly.of(Fraction(1, 2), Fraction(1, 2))
        assert f.den == ONE

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(ONE, UniPoly())

    def test_field_ops(self):
        rng = random.Random(505)
        for _ in range(30):
            f = rand_ratfunc(rng, 2)
            g = rand_ratfunc(rng, 2)
            h = rand_ratfunc(rng, 2)
            assert (f + g) * h == f * h + g * h
            if not g.is_zero:
                assert (f / g) * g == f

    def test_constant_detection(self):
        assert RatFunc.of(Fraction(3, 4)).is_constant
        assert RatFunc.of(Fraction(3, 4)).constant_value == Fraction(3, 4)
        assert not RatFunc(T, ONE).is_constant


class TestTriHomPoly:
    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            TriHomPoly(2, (((1, 0, 0), Fraction(1)),))

    def test_homogeneity_of_products(self):
        rng = random.Random(606)
        for _ in range(40):
            a = rand_trihom(rng, rng.randint(0, 4))
            b = rand_trihom(rng, rng.randint(0, 4))
            assert (a * b).degree == a.degree + b.degree

    def test_distributivity(self):
        rng = random.Random(707)
        for _ in range(70):
            d = rng.randint(1, 3)
            p = rand_trihom(rng, d)
            q = rand_trihom(rng, d)
            r = rand_trihom(rng, rng.randint(1, 3))
            assert (p + q) * r == p * r + q * r

    def test_uni_distributivity(self):
        rng = random.Random(708)
        for _ in range(70):
            p, q, r = (rand_unipoly(rng, 4) for _ in range(3))
            assert (p + q) * r == p * r + q * r

    def test_ratfunc_distributivity(self):
        rng = random.Random(709)
        for _ in range(70):
            p, q, r = (rand_ratfunc(rng, 2) for _ in range(3))
            assert (p + q) * r == p * r + q * r

    def test_evaluate_matches_sympy(self):
        rng = random.Random(808)
        for _ in range(20):
            f = rand_trihom(rng, 3)
            pt = (rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 3))
            expected = tri_to_sympy(f).subs({SX: pt[0], SY: pt[1], SZ: pt[2]})
            assert f.evaluate(pt) == Fraction(int(expected.p), int(expected.q))

    def test_substitute_matches_sympy(self):
        rng = random.Random(909)
        for _ in range(10):
            f = rand_trihom(rng, 2)
            images = [rand_trihom(rng, 2, nonzero=True) for _ in range(3)]
            ours = f.substitute(images)
            subs = {
                SX: tri_to_sympy(images[0]),
                SY: tri_to_sympy(images[1]),
                SZ: tri_to_sympy(images[2]),
            }
            theirs = sympy.expand(tri_to_sympy(f).subs(subs, simultaneous=True))
            assert sympy.expand(tri_to_sympy(ours) - theirs) == 0

    def test_lex_lead(self):
        f = TRI_X * TRI_Y + TRI_Z * TRI_Z * 3
        assert f.lex_lead() == ((1, 1, 0), Fraction(1))


class TestDivisibility:
    def test_trivial_cases(self):
        assert tri_divides(TRI_X, TRI_X * TRI_X * TRI_Y)
        assert tri_divides(TRI_X + TRI_Y, TRI_X * TRI_X - TRI_Y * TRI_Y)
        assert not tri_divides(TRI_X + TRI_Y, TRI_X * TRI_X + TRI_Y * TRI_Y)

    def test_product_always_divisible(self):
        rng = random.Random(111)
        for _ in range(60):
            c = rand_trihom(rng, rng.randint(1, 3))
            q = rand_trihom(rng, rng.randint(0, 3))
            assert tri_divides(c, c * q)
            if not q.is_zero:
                assert tri_div_exact(c * q, c) == q

    def test_divrem_invariant(self):
        rng = random.Random(222)
        for _ in range(40):
            f = rand_trihom(rng, 4)
            c = rand_trihom(rng, 2, nonzero=True)
            q, r = tri_divrem(f, c)
            assert q * c + r == f

    def test_matches_sympy(self):
        rng = random.Random(333)
        for _ in range(30):
            c = rand_trihom(rng, 2, nonzero=True)
            f = rand_trihom(rng, 4)
            ours = tri_divides(c, f)
            _, rem = sympy.div(tri_to_sympy(f), tri_to_sympy(c), SX, SY, SZ)
            assert ours == (sympy.expand(rem) == 0)


class TestTriGcd:
    def test_visible_common_factor(self):
        assert tri_content_gcd(TRI_X * TRI_Y, TRI_X * TRI_Z, TRI_X * TRI_X) == TRI_X

    def test_coprime_coordinates(self):
        one = TriHomPoly.monomial((0, 0, 0))
        assert tri_content_gcd(TRI_X, TRI_Y, TRI_Z) == one

    def test_gcd_divides_inputs(self):
        rng = random.Random(444)
        for _ in range(30):
            c = rand_trihom(rng, rng.randint(1, 2), nonzero=True)
            f = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            g = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            k = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            d = tri_content_gcd(f, g, k)
            assert tri_divides(d, f) and tri_divides(d, g) and tri_divides(d, k)
            assert tri_divides(c, d) or d.degree >= c.degree

    def test_matches_sympy(self):
        rng = random.Random(555)
        for _ in range(25):
            c = rand_trihom(rng, rng.randint(1, 2), nonzero=True)
            f = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            g = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            k = c * rand_trihom(rng, rng.randint(0, 2), nonzero=True)
            ours = tri_content_gcd(f, g, k)
            theirs = sympy.gcd(sympy.gcd(tri_to_sympy(f), tri_to_sympy(g)), tri_to_sympy(k))
            expected = lex_normalized(sympy_to_tri(theirs))
            assert ours == expected

    def test_normalization_is_lex_monic(self):
        f = (TRI_X + TRI_Y) * 6
        g = (TRI_X + TRI_Y) * TRI_Z * Fraction(1, 2)
        d = tri_content_gcd(f, g, TriHomPoly.zero(1))
        assert d == TRI_X + TRI_Y

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            tri_content_gcd(TriHomPoly.zero(1), TriHomPoly.zero(1), TriHomPoly.zero(1))

    def test_zero_arguments_are_skipped(self):
        assert tri_content_gcd(TriHomPoly.zero(2), TRI_X * TRI_Y, TRI_X * TRI_Z) == TRI_X


class TestHomogenize:
    def test_roundtrip_on_chart(self):
        p = UniPoly.of(1, 0, -2, 1)  # 1 - 2t^2 + t^3
        f = homogenize_uni(p, 0, 2, 5)
        assert f.degree == 5
        # setting z = 1 returns the coefficients
        assert f.evaluate((3, 0, 1)) == p(3)

    def test_degree_too_small(self):
        with pytest.raises(ValueError):
            homogenize_uni(UniPoly.of(0, 0, 1), 0, 2, 1)


class TestMat2RF:
    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            Mat2RF.of(1, 1, 1, 1)

    def test_det_trace(self):
        m = Mat2RF.of(1, 2, 0, 3)
        assert m.det() == RatFunc.of(3)
        assert m.trace() == RatFunc.of(4)
        assert not m.is_scalar()
        assert Mat2RF.of(5, 0, 0, 5).is_scalar()

    def test_matmul(self):
        t = RatFunc(UniPoly.variable())
        m = Mat2RF.of(0, t * t - RatFunc.of(1), 1, 0)
        sq = m @ m
        assert sq.is_scalar()
