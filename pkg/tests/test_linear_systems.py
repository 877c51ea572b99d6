import random
from itertools import combinations

import pytest

from cremona_kit.curve_model import curve_from_mults, genus
from cremona_kit.errors import (
    AdjointDoesNotExist,
    DegenerateSystem,
    NegativeDegree,
    NegativeMultiplicity,
)
from cremona_kit.linear_systems import (
    Classification,
    LinSysData,
    adjoint_chain,
    adjoint_raw,
    adjoint_step,
    member_genus,
    pencil_decompose,
    quadratic_transform,
    remove_fixed_components,
    remove_fixed_components_random_order,
    self_intersection,
    virtual_dim,
)

from _util import rand_curve, rand_system, rand_usable_system


def sysd(n, mults):
    return LinSysData.of(n, mults)


GEISER = sysd(6, {f"p{i}": 2 for i in range(7)})
BERTINI = sysd(9, {f"p{i}": 3 for i in range(8)})


class TestNumericalInvariants:
    def test_virtual_dim(self):
        assert virtual_dim(sysd(1, {"p": 1})) == 1
        assert virtual_dim(sysd(3, {f"p{i}": 1 for i in range(7)})) == 2
        assert virtual_dim(sysd(3, {f"p{i}": 1 for i in range(8)})) == 1

    def test_member_genus(self):
        assert member_genus(GEISER) == 3
        assert member_genus(sysd(6, {f"p{i}": 2 for i in range(8)})) == 2
        assert member_genus(sysd(2, {"p": 1, "q": 1})) == 0

    def test_self_intersection(self):
        assert self_intersection(sysd(1, {"p": 1})) == 0
        assert self_intersection(sysd(3, {f"p{i}": 1 for i in range(9)})) == 0
        assert self_intersection(sysd(2, {"p": 1, "q": 1})) == 2

    def test_zero_mults_dropped(self):
        L = sysd(3, {"a": 0, "b": 2})
        assert L.labels() == ("b",)
        assert L.mult("a") == 0

    def test_negative_rejected(self):
        with pytest.raises(DegenerateSystem):
            LinSysData(-1)
        with pytest.raises(DegenerateSystem):
            sysd(3, {"a": -1})


class TestAdjointRaw:
    def test_formula(self):
        assert adjoint_raw(sysd(6, {"p": 3, "q": 3})) == sysd(3, {"p": 2, "q": 2})
        assert adjoint_raw(BERTINI) == sysd(6, {f"p{i}": 2 for i in range(8)})
        assert adjoint_raw(sysd(5, {"p": 3})) == sysd(2, {"p": 2})

    def test_accepts_curve_models(self):
        c = curve_from_mults(6, [3, 3])
        assert adjoint_raw(c) == sysd(3, {"p0": 2, "p1": 2})

    def test_requires_genus_above_one(self):
        for bad in (sysd(3, {}), sysd(4, {"p": 3}), sysd(1, {})):
            assert member_genus(bad) <= 1
            with pytest.raises(AdjointDoesNotExist):
                adjoint_raw(bad)

    def test_canonical_dimension_identity(self):
        rng = random.Random(99)
        for _ in range(100):
            c = rand_curve(rng)
            assert virtual_dim(adjoint_raw(c)) == genus(c) - 1


class TestRemoveFixedComponents:
    def test_line_between_double_points(self):
        reduced, removed = remove_fixed_components(sysd(3, {"p": 2, "q": 2}))
        assert reduced == sysd(2, {"p": 1, "q": 1})
        assert len(removed) == 1
        assert removed[0].kind == "line"
        assert removed[0].labels == ("p", "q")
        assert removed[0].count == 1
        assert removed[0].system == sysd(1, {"p": 1, "q": 1})

    def test_no_fixed_part(self):
        L = sysd(3, {f"p{i}": 1 for i in range(7)})
        reduced, removed = remove_fixed_components(L)
        assert reduced == L and removed == ()

    def test_partial_line_removal(self):
        reduced, removed = remove_fixed_components(sysd(2, {"p": 2, "q": 1}))
        assert reduced == sysd(1, {"p": 1})
        assert [(r.kind, r.count) for r in removed] == [("line", 1)]

    def test_repeated_line(self):
        # quartics triple at two points contain the line twice
        reduced, removed = remove_fixed_components(sysd(4, {"p": 3, "q": 3}))
        assert removed[0].count == 2
        assert reduced == sysd(2, {"p": 1, "q": 1})

    def test_conic_rule(self):
        L = sysd(4, {"p0": 2, "p1": 2, "p2": 2, "p3": 2, "p4": 1})
        reduced, removed = remove_fixed_components(L)
        assert [(r.kind, r.count) for r in removed] == [("conic", 1)]
        assert removed[0].labels == ("p0", "p1", "p2", "p3", "p4")
        assert reduced == sysd(2, {f"p{i}": 1 for i in range(4)})

    def test_conic_removed_twice_when_degenerate(self):
        # (4; 2^5) is numerically empty: the conic through the five points
        # is forced out twice, leaving the constants.
        reduced, removed = remove_fixed_components(sysd(4, {f"p{i}": 2 for i in range(5)}))
        assert [(r.kind, r.count) for r in removed] == [("conic", 2)]
        assert reduced == sysd(0, {})

    def test_confluence_random_orders(self):
        # Confluence is guaranteed on usable systems (virtual dim >= 1).
        rng = random.Random(2718)
        for case in range(40):
            L = rand_usable_system(rng)
            expected = remove_fixed_components(L)
            for k in range(10):
                sub = random.Random(1000 * case + k)
                assert remove_fixed_components_random_order(L, sub) == expected


class TestPencilDecompose:
    def test_multiple_of_line_pencil(self):
        result = pencil_decompose(sysd(4, {"p": 4}))
        assert result is not None
        assert result.content == 4
        assert result.pencil == sysd(1, {"p": 1})

    def test_irreducible_net(self):
        assert pencil_decompose(sysd(3, {f"p{i}": 1 for i in range(7)})) is None

    def test_content_one(self):
        assert pencil_decompose(sysd(2, {"p": 1, "q": 1})) is None

    def test_content_without_pencil_structure(self):
        # (6; 2^8) has content 2 but its primitive part is an elliptic pencil
        assert pencil_decompose(sysd(6, {f"p{i}": 2 for i in range(8)})) is None

    def test_decomposed_pencils_are_rational_pencils(self):
        rng = random.Random(31415)
        for _ in range(50):
            t = rng.randint(2, 4)
            base = rng.choice(
                [
                    sysd(1, {"p": 1}),
                    sysd(2, {f"p{i}": 1 for i in range(4)}),
                    sysd(3, {"p": 2, **{f"q{i}": 1 for i in range(5)}}),
                ]
            )
            scaled = sysd(base.degree * t, {l: m * t for l, m in base.mults})
            result = pencil_decompose(scaled)
            assert result is not None
            P = result.pencil
            assert member_genus(P) == 0
            assert self_intersection(P) == 0
            assert virtual_dim(P) == 1


class TestAdjointStep:
    def test_two_triple_point_sextic(self):
        step = adjoint_step(sysd(6, {"p": 3, "q": 3}))
        assert step.raw_adjoint == sysd(3, {"p": 2, "q": 2})
        assert step.output == sysd(2, {"p": 1, "q": 1})

    def test_bertini_first_step(self):
        step = adjoint_step(BERTINI)
        assert step.output == sysd(6, {f"p{i}": 2 for i in range(8)})
        assert step.pencil_reduction is None

    def test_hyperelliptic_step_yields_pencil(self):
        step = adjoint_step(sysd(7, {"p": 5}))
        assert step.raw_adjoint == sysd(4, {"p": 4})
        assert step.pencil_reduction is not None
        assert step.pencil_reduction.content == 4
        assert step.output == sysd(1, {"p": 1})

    def test_degree_drops_by_three_before_removal(self):
        rng = random.Random(777)
        for _ in range(50):
            c = rand_curve(rng)
            report = adjoint_chain(c)
            for s in report.steps:
                assert s.raw_adjoint.degree == s.input.degree - 3

    def test_chain_length_bound(self):
        rng = random.Random(778)
        for _ in range(50):
            c = rand_curve(rng)
            report = adjoint_chain(c)
            assert len(report.steps) <= c.degree // 3 + 1


class TestAdjointChain:
    def test_hyperelliptic_models(self):
        for g in range(2, 7):
            report = adjoint_chain(curve_from_mults(g + 2, [g]))
            assert report.classification is Classification.RATIONAL_PENCIL
            assert report.terminal == sysd(1, {"p0": 1})
            assert len(report.steps) == 1

    def test_geiser_model(self):
        report = adjoint_chain(curve_from_mults(6, [2] * 7))
        assert report.classification is Classification.ELLIPTIC_NET
        assert report.terminal == sysd(3, {f"p{i}": 1 for i in range(7)})

    def test_bertini_model(self):
        report = adjoint_chain(curve_from_mults(9, [3] * 8))
        assert report.classification is Classification.ELLIPTIC_PENCIL
        assert [s.output for s in report.steps] == [
            sysd(6, {f"p{i}": 2 for i in range(8)}),
            sysd(3, {f"p{i}": 1 for i in range(8)}),
        ]

    def test_two_triple_point_sextic(self):
        report = adjoint_chain(curve_from_mults(6, [3, 3]))
        assert report.classification is Classification.RATIONAL_SYSTEM
        assert report.terminal == sysd(2, {"p0": 1, "p1": 1})

    def test_rejects_low_genus(self):
        with pytest.raises(AdjointDoesNotExist):
            adjoint_chain(curve_from_mults(3, []))

    def test_steps_are_arithmetically_consistent(self):
        rng = random.Random(779)
        for _ in range(30):
            report = adjoint_chain(rand_curve(rng))
            for a, b in zip(report.steps, report.steps[1:]):
                assert b.input == a.output
            assert report.terminal == report.steps[-1].output
            assert member_genus(report.terminal) <= 1 or virtual_dim(report.terminal) <= 0

    def test_smooth_quartic_gives_lines(self):
        report = adjoint_chain(curve_from_mults(4, []))
        assert report.terminal == sysd(1, {})
        assert report.classification is Classification.RATIONAL_SYSTEM

    def test_genus_one_dim_three_is_exhausted_with_warning(self):
        # six-node sextic: the cubics through the six points have genus-1
        # members and dimension 3, outside the rational/elliptic case split
        report = adjoint_chain(curve_from_mults(6, [2] * 6))
        assert report.terminal == sysd(3, {f"p{i}": 1 for i in range(6)})
        assert report.classification is Classification.EXHAUSTED
        assert report.warnings

    def test_dimension_identity(self):
        # vdim = selfint - genus + 1 holds identically for any system
        rng = random.Random(991)
        for _ in range(100):
            L = rand_system(rng)
            assert virtual_dim(L) == self_intersection(L) - member_genus(L) + 1


class TestQuadraticTransform:
    def test_geiser_class_invariant(self):
        labels = GEISER.labels()
        out = quadratic_transform(GEISER, labels[:3])
        assert out == GEISER

    def test_line_to_conic(self):
        out = quadratic_transform(sysd(1, {}), ("a", "b", "c"))
        assert out == sysd(2, {"a": 1, "b": 1, "c": 1})

    def test_conic_back_to_line(self):
        out = quadratic_transform(sysd(2, {"a": 1, "b": 1, "c": 1}), ("a", "b", "c"))
        assert out == sysd(1, {})

    def test_involutive(self):
        rng = random.Random(515)
        for _ in range(30):
            L = rand_system(rng, n_max=9, points=6)
            base = ("a", "b", "c")
            try:
                once = quadratic_transform(L, base)
            except (NegativeDegree, NegativeMultiplicity):
                continue
            assert quadratic_transform(once, base) == L

    def test_inadmissible_base(self):
        with pytest.raises(NegativeMultiplicity):
            quadratic_transform(sysd(3, {"a": 3, "b": 3}), ("a", "b", "c"))
        with pytest.raises(NegativeDegree):
            quadratic_transform(sysd(1, {"a": 1, "b": 1, "c": 1}), ("a", "b", "c"))

    def test_distinct_labels_required(self):
        with pytest.raises(ValueError):
            quadratic_transform(GEISER, ("p0", "p0", "p1"))

    def test_covariance_on_geiser(self):
        for base in combinations(GEISER.labels(), 3):
            lhs = quadratic_transform(adjoint_step(GEISER).output, base)
            rhs = adjoint_step(quadratic_transform(GEISER, base)).output
            assert lhs == rhs

    def test_covariance_on_bertini(self):
        for base in combinations(BERTINI.labels(), 3):
            lhs = quadratic_transform(adjoint_step(BERTINI).output, base)
            rhs = adjoint_step(quadratic_transform(BERTINI, base)).output
            assert lhs == rhs
