import json
import random
from fractions import Fraction

import pytest

from cremona_kit import serialization as ser
from cremona_kit.curve_model import PlaneCurveModel, PointSpec, SingularityData, curve_from_mults
from cremona_kit.cremona_maps import make_phi
from cremona_kit.errors import SchemaError
from cremona_kit.exact_algebra import RatFunc, TriHomPoly, UniPoly
from cremona_kit.jonquieres import JonqElement, leminv_check
from cremona_kit.linear_systems import LinSysData, adjoint_chain

from _util import H4, rand_jonq, rand_trihom, rand_unipoly


class TestRational:
    def test_accepts_ints_and_strings(self):
        assert ser.decode_rational(5, ()) == Fraction(5)
        assert ser.decode_rational("-7/3", ()) == Fraction(-7, 3)

    def test_rejects_floats(self):
        with pytest.raises(SchemaError):
            ser.decode_rational(0.5, ())

    def test_rejects_booleans_and_garbage(self):
        for bad in (True, "1.5", "a/b", "1/0", None):
            with pytest.raises(SchemaError):
                ser.decode_rational(bad, ())

    def test_roundtrip(self):
        for q in (Fraction(3), Fraction(-1, 2), Fraction(0)):
            assert ser.decode_rational(ser.encode_rational(q), ()) == q


class TestPolynomials:
    def test_unipoly_roundtrip(self):
        rng = random.Random(3)
        for _ in range(20):
            p = rand_unipoly(rng, 5)
            assert ser.decode_unipoly(ser.encode_unipoly(p), ()) == p

    def test_trihom_roundtrip(self):
        rng = random.Random(5)
        for _ in range(20):
            f = rand_trihom(rng, rng.randint(0, 4), nonzero=False)
            if f.is_zero:
                continue
            assert ser.decode_trihom(ser.encode_trihom(f), ()) == f

    def test_trihom_rejects_mixed_degrees(self):
        with pytest.raises(SchemaError):
            ser.decode_trihom([[[1, 0, 0], "1"], [[2, 0, 0], "1"]], ())

    def test_trihom_duplicate_monomial(self):
        with pytest.raises(SchemaError):
            ser.decode_trihom([[[1, 0, 0], "1"], [[1, 0, 0], "2"]], ())

    def test_error_paths(self):
        try:
            ser.decode_trihom([[[1, 0], "1"]], ("poly",))
        except SchemaError as e:
            assert e.path == "$.poly[0][0]"
        else:
            raise AssertionError("expected a schema error")

    def test_ratfunc_roundtrip(self):
        f = RatFunc(UniPoly.of(1, 2), UniPoly.of(0, 0, 3))
        assert ser.decode_ratfunc(ser.encode_ratfunc(f), ()) == f


class TestCurve:
    def test_roundtrip(self):
        poly = TriHomPoly.of(
            {(3, 3, 0): 1, (3, 1, 2): -1, (1, 3, 2): -1, (1, 1, 4): 1, (0, 0, 6): 1}
        )
        model = PlaneCurveModel(
            6,
            (
                SingularityData(PointSpec("p", (Fraction(1), Fraction(0), Fraction(0))), 3),
                SingularityData(PointSpec("q", (Fraction(0), Fraction(1), Fraction(0))), 3),
            ),
            poly,
        )
        again = ser.decode_curve(ser.encode_curve(model))
        assert again == model

    def test_missing_field_path(self):
        with pytest.raises(SchemaError) as err:
            ser.decode_curve({"degree": 6})
        assert "singularities" in str(err.value)

    def test_mult_below_two(self):
        with pytest.raises(SchemaError):
            ser.decode_curve(
                {"degree": 6, "singularities": [{"label": "p", "mult": 1, "coords": None}]}
            )


class TestSystemsAndReports:
    def test_linsys_roundtrip(self):
        L = LinSysData.of(6, {"a": 2, "b": 3})
        assert ser.decode_linsys(ser.encode_linsys(L)) == L

    def test_chain_report_reparses(self):
        report = adjoint_chain(curve_from_mults(9, [3] * 8))
        encoded = ser.encode_chain_report(report)
        text = ser.dumps(encoded)
        again = json.loads(text)
        assert again == encoded
        assert ser.decode_linsys(again["terminal"]) == report.terminal
        for step in again["steps"]:
            ser.decode_linsys(step["input"])
            ser.decode_linsys(step["raw"])
            ser.decode_linsys(step["output"])

    def test_dumps_deterministic(self):
        report = adjoint_chain(curve_from_mults(6, [2] * 7))
        a = ser.dumps(ser.encode_chain_report(report))
        b = ser.dumps(ser.encode_chain_report(adjoint_chain(curve_from_mults(6, [2] * 7))))
        assert a == b


class TestMapAndGroupElements:
    def test_map_roundtrip(self):
        F = make_phi(Fraction(1, 2), -3)
        again = ser.decode_map(ser.encode_map(F))
        assert again == F

    def test_map_needs_three_components(self):
        with pytest.raises(SchemaError):
            ser.decode_map({"deg": 1, "components": [[[[1, 0, 0], "1"]]]})

    def test_jonq_roundtrip(self):
        rng = random.Random(7)
        for _ in range(10):
            u = rand_jonq(rng, H4)
            assert ser.decode_jonq(ser.encode_jonq(u)) == u

    def test_order_report_encodes(self):
        rep = leminv_check(JonqElement.of(H4, 0, 1))
        data = ser.encode_order_report(rep)
        assert data["order"] == 2
        assert data["conclusion_holds"] is True
        rep = leminv_check(JonqElement.of(H4, UniPoly.variable(), 1))
        assert ser.encode_order_report(rep)["order"] == "infinite"
