from fractions import Fraction

import pytest

from toricbound.bounded import BasicSet, BinomialSet, LaurentPoly, Tentacle
from toricbound.cones import RationalCone
from toricbound.fans import make_fan
from toricbound.serialize import (
    SchemaError,
    cone_from_json,
    cone_to_json,
    fan_from_json,
    fan_to_json,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    problem_from_json,
    problem_to_json,
    semigroup_to_json,
)
from toricbound.hilbert import SemigroupBasis
from toricbound.linalg import SymmetricRationalMatrix

ORTHANT = RationalCone.from_generators([(1, 0), (0, 1)], 2, "N")


class TestConeRoundtrip:
    def test_roundtrip(self):
        obj = cone_to_json(ORTHANT)
        assert obj["generators"] == [["0", "1"], ["1", "0"]]
        assert cone_from_json(obj) == ORTHANT

    def test_generators_only(self):
        assert cone_from_json(
            {"rank": 2, "side": "N", "generators": [["1", "0"]]}
        ).generators == ((1, 0),)

    def test_inequalities_only(self):
        cone = cone_from_json({"rank": 2, "side": "N", "inequalities": [["1", "0"]]})
        assert not cone.is_pointed()

    def test_inconsistent_pair_rejected(self):
        with pytest.raises(SchemaError, match="different cones"):
            cone_from_json(
                {
                    "rank": 2,
                    "side": "N",
                    "generators": [["1", "0"]],
                    "inequalities": [["1", "0"]],
                }
            )

    def test_side_mismatch(self):
        with pytest.raises(SchemaError, match="side"):
            cone_from_json({"rank": 2, "side": "M", "generators": []}, side="N")

    def test_bad_coordinate(self):
        with pytest.raises(SchemaError, match=r"generators\[0\]\[1\]"):
            cone_from_json({"rank": 2, "side": "N", "generators": [["1", "x"]]})


class TestFanRoundtrip:
    def test_roundtrip(self):
        fan = make_fan([(1, 0), (0, 1), (-1, -1)])
        obj = fan_to_json(fan)
        assert obj["complete"] is True
        assert fan_from_json(obj) == fan

    def test_complete_flag_checked(self):
        with pytest.raises(SchemaError, match="complete"):
            fan_from_json({"rays": [["1", "0"]], "complete": True})


class TestMatrixRoundtrip:
    def test_roundtrip(self):
        mat = SymmetricRationalMatrix([[Fraction(-3), 1], [1, Fraction(1, 2)]])
        obj = matrix_to_json(mat)
        assert obj == [["-3", "1"], ["1", "1/2"]]
        assert matrix_from_json(obj) == mat

    def test_asymmetric_rejected(self):
        with pytest.raises(SchemaError, match="symmetric"):
            matrix_from_json([["0", "1"], ["2", "0"]])


class TestProblemRoundtrip:
    def test_binomial(self):
        s = BinomialSet(2, ((2, 1),), (Fraction(1, 3),))
        obj = problem_to_json(ORTHANT, s)
        sigma, back = problem_from_json(obj)
        assert sigma == ORTHANT and back == s

    def test_tentacle(self):
        s = Tentacle(2, (-1, -1))
        sigma, back = problem_from_json(problem_to_json(ORTHANT, s))
        assert back == s

    def test_basic(self):
        f = LaurentPoly(2, {(1, 0): 1, (0, 1): Fraction(-1, 2)})
        s = BasicSet(2, (f,))
        sigma, back = problem_from_json(problem_to_json(ORTHANT, s))
        assert back == s

    def test_unknown_type(self):
        with pytest.raises(SchemaError, match="type"):
            problem_from_json({"sigma": cone_to_json(ORTHANT), "set": {"type": "nope"}})

    def test_poly_roundtrip(self):
        f = LaurentPoly(2, {(-1, 3): Fraction(5, 7)})
        assert poly_from_json(poly_to_json(f), "$", 2) == f

    def test_zero_poly_rejected(self):
        with pytest.raises(SchemaError, match="nonzero"):
            poly_from_json({"terms": []}, "$", 2)


class TestSemigroupJson:
    def test_shape(self):
        basis = SemigroupBasis(2, "M", ((1, 0),), ((0, 1),))
        assert semigroup_to_json(basis) == {
            "generators": [["1", "0"]],
            "lineality": [["0", "1"]],
        }
