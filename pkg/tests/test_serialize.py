"""JSON round trips for algebras, tensors, spectral tensors, and reports."""

import json
import random

from helpers import rand_tensor2
from yangbaxter import serialize
from yangbaxter.algebra import diagonal_algebra, direct_sum, mat_algebra
from yangbaxter.bd import BDTriple
from yangbaxter.checks import is_ybe
from yangbaxter.scalars import OMEGA, Q, ratq
from yangbaxter.solutions import drinfeld_jimbo
from yangbaxter.spectral import baxterize, yang_matrix
from yangbaxter.tensors import embed12, tensor2


class TestAlgebraRoundTrip:
    def test_standard_algebras(self):
        for alg in (mat_algebra(3), diagonal_algebra(4),
                    direct_sum(mat_algebra(2), diagonal_algebra(2), -1)):
            data = json.loads(json.dumps(serialize.algebra_to_json(alg)))
            assert serialize.algebra_from_json(data) == alg


class TestTensorRoundTrip:
    def test_dj_matrices(self):
        for n in (1, 2, 3):
            t = drinfeld_jimbo(n)
            data = json.loads(json.dumps(serialize.tensor2_to_json(t)))
            assert serialize.tensor2_from_json(data) == t

    def test_random_tensors(self):
        rng = random.Random(61)
        alg = direct_sum(mat_algebra(2), diagonal_algebra(3))
        for _ in range(10):
            t = rand_tensor2(rng, alg, 6)
            data = json.loads(json.dumps(serialize.tensor2_to_json(t)))
            assert serialize.tensor2_from_json(data) == t

    def test_tensor3(self):
        t3 = embed12(drinfeld_jimbo(2))
        data = json.loads(json.dumps(serialize.tensor3_to_json(t3)))
        assert serialize.tensor3_from_json(data) == t3


class TestSpectralRoundTrip:
    def test_baxterized(self):
        rf = baxterize(drinfeld_jimbo(2))
        data = json.loads(json.dumps(serialize.spectral_to_json(rf)))
        assert serialize.spectral_from_json(data) == rf

    def test_yang(self):
        rf = yang_matrix(2, 1)
        data = json.loads(json.dumps(serialize.spectral_to_json(rf)))
        assert serialize.spectral_from_json(data) == rf


class TestReports:
    def test_passing_report(self):
        rep = is_ybe(drinfeld_jimbo(2))
        data = serialize.report_to_json(rep)
        assert data == {"identity": "ybe", "passed": True, "residual_terms": []}

    def test_failing_report_residual(self):
        bad = drinfeld_jimbo(2) + tensor2(mat_algebra(2), {("m:1,1", "m:1,2"): Q})
        data = serialize.report_to_json(is_ybe(bad))
        assert data["passed"] is False
        assert data["residual_terms"]
        for entry in data["residual_terms"]:
            assert len(entry["index"]) == 3


class TestBDSpec:
    def test_parse(self):
        data = {"n": 3, "gamma1": [1], "gamma2": [2], "tau": [[1, 2]],
                "diag_signs": {"1": "+"}}
        bd = serialize.bd_from_json(data)
        assert bd == BDTriple.make(3, {1}, {2}, {1: 2})
        assert serialize.bd_signs_from_json(data) == {1: "+"}

    def test_tau_as_mapping(self):
        data = {"n": 4, "gamma1": [1, 2], "gamma2": [2, 3], "tau": {"1": 2, "2": 3}}
        assert serialize.bd_from_json(data) == \
            BDTriple.make(4, {1, 2}, {2, 3}, {1: 2, 2: 3})

    def test_twist_b(self):
        data = {"n": 2, "gamma1": [], "gamma2": [], "tau": [],
                "twist_b": [["1", "2"], ["(1)/(2)", "1"]]}
        b = serialize.bd_twist_b_from_json(data)
        assert b[0][1] == ratq(2)
        assert b[1][0] * b[0][1] == ratq(1)
