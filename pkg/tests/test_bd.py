"""The Belavin-Drinfeld quantization pipeline."""

import random
from fractions import Fraction

import pytest

from yangbaxter.algebra import mat_algebra
from yangbaxter.bd import (BDTriple, BigAlgebraData, assemble_bd_R,
                           bd_canonical_element, build_big_triple,
                           classical_limit, cremmer_gervais, diagonal_basis,
                           positive_roots, prec_pairs, projected_closed_form,
                           root_m1, root_m2, tau_root, validate_bd)
from yangbaxter.checks import find_hecke_constant, is_cybe, is_hecke, is_ybe
from yangbaxter.errors import (EvaluationPole, InvalidBDTriple, NoClassicalLimit,
                               TooSmall)
from yangbaxter.scalars import OMEGA, OMEGA_INV, ONE, Q, ZERO, eval_q, ratq
from yangbaxter.solutions import DiagonalHeckeParams, drinfeld_jimbo
from yangbaxter.tensors import tensor2, unit_tensor2
from yangbaxter.triples import permutation_element, validate_triple

CORPUS = {
    "empty2": BDTriple.make(2, set(), set(), {}),
    "empty3": BDTriple.make(3, set(), set(), {}),
    "empty4": BDTriple.make(4, set(), set(), {}),
    "arrow3": BDTriple.make(3, {1}, {2}, {1: 2}),
    "arrow4": BDTriple.make(4, {1}, {2}, {1: 2}),
    "cg3": BDTriple.make(3, {1}, {2}, {1: 2}),
    "cg4": BDTriple.make(4, {1, 2}, {2, 3}, {1: 2, 2: 3}),
    "twocomp5": BDTriple.make(5, {1, 3}, {2, 4}, {1: 2, 3: 4}),
}

_ASSEMBLED = {}
_TRIPLES = {}


def assembled(name):
    """assemble_bd_R is pure; cache per corpus entry across tests."""
    if name not in _ASSEMBLED:
        _ASSEMBLED[name] = assemble_bd_R(CORPUS[name])
    return _ASSEMBLED[name]


def corpus_triple(name):
    if name not in _TRIPLES:
        _TRIPLES[name] = build_big_triple(CORPUS[name])
    return _TRIPLES[name]


class TestValidateBD:
    def test_single_arrow_idempotent_data(self):
        rep = validate_bd(CORPUS["arrow3"])
        assert rep.passed
        idem = rep.idempotent_data
        assert set(idem.gamma1_hat) == {1, 2}
        assert set(idem.gamma2_hat) == {2, 3}
        assert idem.tau_hat_map == {1: 2, 2: 3}
        assert idem.m_map == {1: 2, 2: 1}

    def test_empty_triple(self):
        rep = validate_bd(CORPUS["empty3"])
        assert rep.passed
        assert not rep.idempotent_data.gamma1_hat
        assert not rep.idempotent_data.m_map

    def test_fixed_point_rejected(self):
        rep = validate_bd(BDTriple.make(3, {1}, {1}, {1: 1}))
        assert not rep.passed
        assert "NotNilpotent" in rep.failures

    def test_orientation_breaking_rejected(self):
        # component {1,2} mapped order-reversing
        rep = validate_bd(BDTriple.make(4, {1, 2}, {2, 3}, {1: 3, 2: 2}))
        assert not rep.passed
        assert "BreaksOrientation" in rep.failures

    def test_adjacency_breaking_rejected(self):
        # adjacent roots mapped to non-adjacent ones
        rep = validate_bd(BDTriple.make(5, {1, 2}, {2, 4}, {1: 2, 2: 4}))
        assert not rep.passed
        assert "BreaksAdjacency" in rep.failures

    def test_non_bijective_rejected(self):
        rep = validate_bd(BDTriple.make(4, {1, 2}, {3}, {1: 3, 2: 3}))
        assert not rep.passed
        assert "NotBijective" in rep.failures

    def test_idempotent_orbit_chains_across_components(self):
        rep = validate_bd(CORPUS["twocomp5"])
        assert rep.passed
        assert rep.idempotent_data.m_map == {1: 4, 2: 3, 3: 2, 4: 1}

    def test_whole_corpus_validates(self):
        for name, bd in CORPUS.items():
            assert validate_bd(bd).passed, name


class TestRootCombinatorics:
    def test_tau_on_roots(self):
        bd = CORPUS["cg4"]
        idem = validate_bd(bd).idempotent_data
        assert tau_root(bd, idem, (1, 2)) == (2, 3)
        assert tau_root(bd, idem, (1, 3)) == (2, 4)
        assert tau_root(bd, idem, (1, 4)) is None  # constituent alpha_3 outside

    def test_m_numbers(self):
        bd = CORPUS["cg3"]
        idem = validate_bd(bd).idempotent_data
        assert root_m1(bd, idem, (1, 2)) == 1
        assert root_m1(bd, idem, (2, 3)) == 0
        assert root_m2(bd, idem, (2, 3)) == 1

    def test_prec_is_strict_partial_order(self):
        for name, bd in CORPUS.items():
            idem = validate_bd(bd).idempotent_data
            pairs = set(prec_pairs(bd, idem))
            for sigma, gamma in pairs:
                assert sigma != gamma  # irreflexive
            for a, b in pairs:
                for c, d in pairs:
                    if b == c:
                        assert (a, d) in pairs  # transitive

    def test_cg3_single_prec_pair(self):
        bd = CORPUS["cg3"]
        idem = validate_bd(bd).idempotent_data
        assert prec_pairs(bd, idem) == [((1, 2), (2, 3))]


class TestBigTriple:
    @pytest.mark.parametrize("name,expected_dim", [
        ("empty2", 10), ("cg3", 19), ("arrow4", 34), ("cg4", 33), ("twocomp5", 51),
    ])
    def test_dimensions(self, name, expected_dim):
        t = corpus_triple(name)
        assert t.algebra.dim == expected_dim

    def test_all_corpus_triples_validate(self):
        for name in CORPUS:
            report = validate_triple(corpus_triple(name))
            assert report.passed, (name, report.conditions)

    def test_invalid_bd_raises(self):
        with pytest.raises(InvalidBDTriple):
            build_big_triple(BDTriple.make(3, {1}, {1}, {1: 1}))

    def test_canonical_element_families(self):
        # empty n=2: explicit root and diagonal families
        bd = CORPUS["empty2"]
        q = bd_canonical_element(bd)
        data = BigAlgebraData(bd, validate_bd(bd).idempotent_data)
        a = data.algebra
        expected = {}
        # (0 + e12 + 0) x (0 + e21 + e21)
        expected[(a.index("s1:m:1,2"), a.index("s1:m:2,1"))] = ONE
        expected[(a.index("s1:m:1,2"), a.index("s2:m:2,1"))] = ONE
        # -(0 + 0 + e21) x (0 + e12 + e12)
        expected[(a.index("s2:m:2,1"), a.index("s1:m:1,2"))] = -ONE
        expected[(a.index("s2:m:2,1"), a.index("s2:m:1,2"))] = -ONE
        # -(eta + 0 + eta) x (0 + eta + eta)
        for eta in (1, 2):
            for left in (f"s0:d:{eta}", f"s2:m:{eta},{eta}"):
                for right in (f"s1:m:{eta},{eta}", f"s2:m:{eta},{eta}"):
                    expected[(a.index(left), a.index(right))] = -ONE
        assert q == tensor2(a, expected)

    def test_canonical_element_ybe_small(self):
        for name in ("empty2", "empty3", "cg3"):
            q = bd_canonical_element(CORPUS[name])
            assert is_ybe(q).passed, name

    def test_duality_gram_identity(self):
        for name in ("empty2", "cg3", "cg4"):
            bd = CORPUS[name]
            data = BigAlgebraData(bd, validate_bd(bd).idempotent_data)
            plus = data.plus_family()
            minus = data.minus_family()
            alg = data.algebra
            for i, va in enumerate(plus):
                for j, vb in enumerate(minus):
                    assert alg.pair(va, vb) == (ONE if i == j else ZERO), name


class TestDiagonalBasis:
    def test_empty_triple_vectors(self):
        bd = CORPUS["empty2"]
        rows = diagonal_basis(bd)
        data = BigAlgebraData(bd, validate_bd(bd).idempotent_data)
        a = data.algebra
        assert len(rows) == 2
        for eta, v in zip((1, 2), rows):
            nonzeros = {a.basis[i] for i, c in enumerate(v) if c}
            assert nonzeros == {f"s0:d:{eta}", f"s1:m:{eta},{eta}", f"s2:m:{eta},{eta}"}

    def test_cg3_single_vector(self):
        rows = diagonal_basis(CORPUS["cg3"])
        assert len(rows) == 1
        bd = CORPUS["cg3"]
        data = BigAlgebraData(bd, validate_bd(bd).idempotent_data)
        a = data.algebra
        nonzeros = {a.basis[i] for i, c in enumerate(rows[0]) if c}
        assert nonzeros == {"s0:d:1"} | {f"s1:m:{e},{e}" for e in (1, 2, 3)} \
            | {f"s2:m:{e},{e}" for e in (1, 2, 3)}
        # self-pairing 1 + 3 - 3 = 1 through the signed trace
        assert a.pair(rows[0], rows[0]) == ONE

    def test_corpus_orthonormal_and_full_rank(self):
        for name, bd in CORPUS.items():
            diagonal_basis(bd)  # raises InternalInconsistency on any failure


class TestAssembly:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_empty_triple_reproduces_drinfeld_jimbo(self, n):
        res = assemble_bd_R(BDTriple.make(n, set(), set(), {}))
        assert res.r_proj == drinfeld_jimbo(n)

    def test_big_ybe_small_corpus(self):
        for name in ("empty2", "empty3", "arrow3", "cg3"):
            res = assembled(name)
            assert res.reports["ybe_big"].passed, name
            assert res.reports["ybe_proj"].passed, name

    def test_projection_ybe_whole_corpus(self):
        for name in CORPUS:
            res = assembled(name)
            assert res.reports["ybe_proj"].passed, name

    def test_mixed_signs_pass_ybe_but_lose_the_limit(self):
        bd = CORPUS["empty2"]
        res = assemble_bd_R(bd, signs={1: "+", 2: "-"})
        assert res.reports["ybe_proj"].passed
        with pytest.raises((NoClassicalLimit, EvaluationPole)):
            classical_limit(res.r_proj)

    def test_twist_b_parameter(self):
        bd = CORPUS["empty2"]
        res = assemble_bd_R(bd, b=[[ONE, ratq(2)], [ratq(Fraction(1, 2)), ONE]])
        assert res.reports["ybe_proj"].passed
        assert res.r_proj.terms[(res.r_proj.algebra.index("m:1,1"),
                                 res.r_proj.algebra.index("m:2,2"))] == ratq(2)

    def test_closed_form_route_matches(self):
        # assemble_bd_R already compares the two routes; also check the
        # closed-form builder standalone against the projected big tensor
        for name in ("cg3", "twocomp5"):
            bd = CORPUS[name]
            idem = validate_bd(bd).idempotent_data
            params = DiagonalHeckeParams.standard(
                bd.n - len(idem.gamma1_hat))
            direct = projected_closed_form(bd, idem, params, mat_algebra(bd.n))
            res = assembled(name)
            assert direct.scale(OMEGA) == res.r_proj


class TestCremmerGervais:
    def test_n3_closed_formula(self):
        # lambda (1 x 1) + sum e_g (x) f_g - sum_{k>=1} eta (x) tauhat^k eta
        # + the single wedge pair
        lam = Q * OMEGA_INV
        r = cremmer_gervais(3, lam)
        a = r.algebra
        expected = {}
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                expected[(f"m:{i},{i}", f"m:{j},{j}")] = lam
        for (i, j) in ((1, 2), (1, 3), (2, 3)):
            expected[(f"m:{i},{j}", f"m:{j},{i}")] = \
                expected.get((f"m:{i},{j}", f"m:{j},{i}"), ZERO) + ONE
        expected[("m:1,1", "m:2,2")] = expected[("m:1,1", "m:2,2")] - ONE
        expected[("m:1,1", "m:3,3")] = expected[("m:1,1", "m:3,3")] - ONE
        expected[("m:2,2", "m:3,3")] = expected[("m:2,2", "m:3,3")] - ONE
        expected[("m:2,3", "m:2,1")] = ONE
        expected[("m:2,1", "m:2,3")] = -ONE
        assert r == tensor2(a, expected)

    @pytest.mark.parametrize("n", [3, 4])
    def test_ybe_at_special_lambda(self, n):
        assert is_ybe(cremmer_gervais(n, Q * OMEGA_INV)).passed

    def test_lambda_zero_is_ybe(self):
        assert is_ybe(cremmer_gervais(3, 0)).passed

    def test_hecke_constant_recorded(self):
        r = cremmer_gervais(3, Q * OMEGA_INV)
        c = find_hecke_constant(r, permutation_element(mat_algebra(3)))
        assert c == OMEGA_INV ** 2
        assert is_hecke(r, permutation_element(mat_algebra(3)), c).passed

    def test_too_small(self):
        with pytest.raises(TooSmall):
            cremmer_gervais(2, ONE)


class TestClassicalLimit:
    def test_dj2_limit(self):
        r = classical_limit(drinfeld_jimbo(2))
        a = r.algebra
        expected = tensor2(a, {("m:1,1", "m:1,1"): 1, ("m:2,2", "m:2,2"): 1,
                               ("m:1,2", "m:2,1"): 2})
        assert r == expected
        assert is_cybe(r).passed

    def test_unit_limit_zero(self):
        r = classical_limit(unit_tensor2(mat_algebra(2)))
        assert r.is_zero()

    def test_rejects_non_unit_value(self):
        with pytest.raises(NoClassicalLimit):
            classical_limit(unit_tensor2(mat_algebra(2)).scale(ratq(2)))

    def test_pole_detected(self):
        with pytest.raises(EvaluationPole):
            classical_limit(unit_tensor2(mat_algebra(2)).scale(OMEGA_INV))

    def test_cg_rescaled_limit_satisfies_cybe(self):
        r = cremmer_gervais(3, Q * OMEGA_INV).scale(OMEGA)
        rc = classical_limit(r)
        assert is_cybe(rc).passed

    @pytest.mark.parametrize("name", ["empty2", "empty3", "arrow3", "cg3"])
    def test_bd_projected_limits_satisfy_cybe(self, name):
        res = assembled(name)
        rc = classical_limit(res.r_proj)
        assert is_cybe(rc).passed
