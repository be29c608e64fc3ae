"""Checkers against spec examples and the independent dense-matrix oracle."""

import random
from fractions import Fraction

import pytest

import oracle
from helpers import rand_tensor2, unit_vec
from yangbaxter.algebra import Subspace, diagonal_algebra, direct_sum, mat_algebra
from yangbaxter.bd import classical_limit
from yangbaxter.checks import (find_hecke_constant, hecke_obstruction, is_cybe,
                               is_hecke, is_unitary, is_ybe, is_ybe_sampled,
                               scalar_multiple_of_unit)
from yangbaxter.scalars import OMEGA, OMEGA_INV, ONE, Q, QINV, ZERO, ratq
from yangbaxter.solutions import DiagonalHeckeParams, diagonal_hecke, drinfeld_jimbo
from yangbaxter.tensors import Tensor2, tensor2, unit_tensor2, vec_tensor2
from yangbaxter.triples import PairedSubspaces, canonical_pair_element, permutation_element


def oracle_says_ybe(t, points=(Fraction(2), Fraction(-5, 3))) -> bool:
    """Independent dense check: empty residual matrix at every sample point."""
    return all(not oracle.ybe_residual_oracle(t, q0) for q0 in points)


class TestYbe:
    def test_permutation_passes(self):
        for alg in (mat_algebra(2), mat_algebra(3), diagonal_algebra(3)):
            sigma = permutation_element(alg)
            rep = is_ybe(sigma)
            assert rep.passed
            assert oracle_says_ybe(sigma)

    def test_unit_passes(self):
        assert is_ybe(unit_tensor2(mat_algebra(2))).passed

    def test_perturbed_permutation_fails(self):
        a = mat_algebra(2)
        bad = permutation_element(a) + tensor2(a, {("m:1,1", "m:1,2"): 1})
        rep = is_ybe(bad)
        assert not rep.passed
        assert not rep.residual.is_zero()
        assert not oracle_says_ybe(bad)

    def test_residual_matches_oracle_matrix(self):
        # the residual tensor itself maps to the oracle's residual matrix
        a = mat_algebra(2)
        bad = drinfeld_jimbo(2) + tensor2(a, {("m:2,1", "m:1,1"): Q})
        rep = is_ybe(bad)
        for q0 in (Fraction(2), Fraction(7, 3)):
            assert oracle.tensor3_matrix(rep.residual, q0) == \
                oracle.ybe_residual_oracle(bad, q0)

    def test_sampled_prefilter_agrees(self):
        rng = random.Random(31)
        a = mat_algebra(2)
        for _ in range(8):
            t = rand_tensor2(rng, a, 4, laurent_only=True)
            exact = is_ybe(t).passed
            sampled = all(is_ybe_sampled(t, q0) for q0 in (Fraction(2), Fraction(5, 7)))
            if exact:
                assert sampled
        assert not is_ybe_sampled(drinfeld_jimbo(2) + tensor2(a, {("m:1,1", "m:1,2"): 1}),
                                  Fraction(2))


class TestIntertwining:
    def test_permutation_intertwines_all_basis_elements(self):
        for alg in (mat_algebra(2), mat_algebra(3), diagonal_algebra(4),
                    direct_sum(mat_algebra(2), mat_algebra(2), -1)):
            sigma = permutation_element(alg)
            for i in range(alg.dim):
                left = tensor2(alg, {(i, j): c for j, c in enumerate(alg.unit) if c})
                right = tensor2(alg, {(j, i): c for j, c in enumerate(alg.unit) if c})
                assert left * sigma == sigma * right
                assert right * sigma == sigma * left


class TestCybe:
    def test_zero_passes(self):
        assert is_cybe(Tensor2(mat_algebra(2), {})).passed

    def test_dj_classical_limit_passes(self):
        r = classical_limit(drinfeld_jimbo(2))
        rep = is_cybe(r)
        assert rep.passed
        for q0 in (Fraction(2), Fraction(-3, 2)):
            assert not oracle.cybe_residual_oracle(r, q0)

    def test_square_zero_leg_passes(self):
        # every commutator carries an e^1_2 e^1_2 = 0 factor in some leg,
        # confirmed by the independent oracle
        a = mat_algebra(2)
        r = tensor2(a, {("m:1,2", "m:1,2"): 1})
        assert is_cybe(r).passed
        assert not oracle.cybe_residual_oracle(r, Fraction(2))

    def test_mixed_nilpotent_term_fails(self):
        a = mat_algebra(2)
        r = tensor2(a, {("m:1,2", "m:2,1"): 1})
        rep = is_cybe(r)
        assert not rep.passed
        assert oracle.cybe_residual_oracle(r, Fraction(2))


class TestHecke:
    def test_dj2_normalized(self):
        a = mat_algebra(2)
        s = drinfeld_jimbo(2).scale(OMEGA_INV)
        assert is_hecke(s, permutation_element(a), OMEGA_INV ** 2).passed

    def test_diagonal_solution(self):
        s = diagonal_hecke(DiagonalHeckeParams.standard(2))
        sigma = permutation_element(diagonal_algebra(2))
        assert is_hecke(s, sigma, OMEGA_INV ** 2).passed

    def test_unit_fails(self):
        a = mat_algebra(2)
        rep = is_hecke(unit_tensor2(a), permutation_element(a), ONE)
        assert not rep.passed

    def test_flip_invariance(self):
        # the condition is invariant under simultaneous leg flip of S and sigma
        rng = random.Random(33)
        a = diagonal_algebra(3)
        sigma = permutation_element(a)
        for _ in range(6):
            s = rand_tensor2(rng, a, 4)
            c = OMEGA_INV ** 2
            assert is_hecke(s, sigma, c).passed == \
                is_hecke(s.flip(), sigma.flip(), c).passed

    def test_find_hecke_constant(self):
        s = drinfeld_jimbo(3).scale(OMEGA_INV)
        c = find_hecke_constant(s, permutation_element(mat_algebra(3)))
        assert c == OMEGA_INV ** 2
        assert find_hecke_constant(unit_tensor2(mat_algebra(2)),
                                   permutation_element(mat_algebra(2))) is None


class TestHeckeObstruction:
    def test_dj_pairing_obstruction_vanishes(self):
        # Q = sum_{i<n} e^i_n (x) e^n_i against the block-diagonal permutation
        for n in (2, 3):
            a = mat_algebra(n)
            q = tensor2(a, {(f"m:{i},{n}", f"m:{n},{i}"): 1 for i in range(1, n)})
            sigma_d = tensor2(a, {(f"m:{i},{j}", f"m:{j},{i}"): 1
                                  for i in range(1, n) for j in range(1, n)})
            sigma_d = sigma_d + tensor2(a, {(f"m:{n},{n}", f"m:{n},{n}"): 1})
            assert hecke_obstruction(q, sigma_d).is_zero()

    def test_zero_q(self):
        a = mat_algebra(2)
        assert hecke_obstruction(Tensor2(a, {}), permutation_element(a)).is_zero()

    def test_permutation_obstruction_is_twice_unit(self):
        a = mat_algebra(2)
        sigma = permutation_element(a)
        assert hecke_obstruction(sigma, sigma) == unit_tensor2(a).scale(ratq(2))


class TestUnitarity:
    def test_permutation_unitary(self):
        assert is_unitary(permutation_element(mat_algebra(2))).passed

    def test_balanced_diagonal_unitary(self):
        a = mat_algebra(2)
        s = tensor2(a, {("m:1,1", "m:1,1"): 1, ("m:2,2", "m:2,2"): 1,
                        ("m:1,1", "m:2,2"): 2, ("m:2,2", "m:1,1"): Fraction(1, 2)})
        assert is_unitary(s).passed

    def test_scaled_unit_fails(self):
        a = mat_algebra(2)
        assert not is_unitary(unit_tensor2(a).scale(Q)).passed


class TestEqFourDeformation:
    def test_manin_like_disjoint_pairing(self):
        # Mat_2 tensored with the 2-dim algebra u, x (x^2 = 0, t(u) = 0,
        # t(x) = 1): N+ = Mat_2 (x) x and N- = Mat_2 (x) u are complementary
        # dual isotropic subalgebras, a finite truncation of the
        # Laurent-polynomial degree pairing.
        from yangbaxter.algebra import Algebra, tensor_product
        nilp = Algebra(["u", "x"],
                       {(0, 0): ((0, ONE),), (0, 1): ((1, ONE),),
                        (1, 0): ((1, ONE),)},
                       [ONE, ZERO], [ZERO, ONE])
        big = tensor_product(mat_algebra(2), nilp)
        n_plus = Subspace(big, [unit_vec(big, f"m:{i},{j}*x")
                                for i in (1, 2) for j in (1, 2)])
        n_minus = Subspace(big, [unit_vec(big, f"m:{i},{j}*u")
                                 for i in (1, 2) for j in (1, 2)])
        # both sides isotropic, in duality
        for a in n_plus.rows:
            for b in n_plus.rows:
                assert big.pair(a, b) == ZERO
        for a in n_minus.rows:
            for b in n_minus.rows:
                assert big.pair(a, b) == ZERO
        paired = PairedSubspaces.build(big, n_plus, n_minus)
        q = canonical_pair_element(paired)
        assert is_ybe(q).passed
        assert is_cybe(q).passed
        unit = unit_tensor2(big)
        for lam in (ratq(1), ratq(-2), ratq(Fraction(7, 3))):
            assert is_ybe(unit + q.scale(lam)).passed

    def test_identity_permutation_pairing(self):
        a = mat_algebra(2)
        sub_p = Subspace(a, [unit_vec(a, "m:1,1"), unit_vec(a, "m:2,2")])
        paired = PairedSubspaces.build(a, sub_p, sub_p)
        q = canonical_pair_element(paired)
        unit = unit_tensor2(a)
        for lam in (ratq(1), ratq(5), OMEGA):
            assert is_ybe(unit + q.scale(lam)).passed


class TestScalarMultipleOfUnit:
    def test_detects_multiples(self):
        a = mat_algebra(2)
        assert scalar_multiple_of_unit(unit_tensor2(a).scale(OMEGA)) == OMEGA
        assert scalar_multiple_of_unit(permutation_element(a)) is None
        assert scalar_multiple_of_unit(Tensor2(a, {})) == ZERO
