"""Shared test utilities: seeded random scalars, tensors, and subspaces."""

from __future__ import annotations

import random
from fractions import Fraction

from yangbaxter.algebra import Algebra
from yangbaxter.scalars import ONE, ZERO, RatQ, q_power, ratq
from yangbaxter.tensors import Tensor2, Tensor3


def rand_ratq(rng: random.Random, laurent_only: bool = False) -> RatQ:
    """Small random rational function (Laurent by default shape)."""
    out = ratq(0)
    for _ in range(rng.randint(1, 3)):
        c = rng.randint(-4, 4)
        if c:
            out = out + c * q_power(rng.randint(-2, 2))
    if not laurent_only and rng.random() < 0.3:
        den = ratq(0)
        while not den:
            den = ratq(rng.randint(-3, 3)) + rng.randint(0, 2) * q_power(1)
        out = out / den
    return out


def rand_nonzero_ratq(rng: random.Random) -> RatQ:
    x = rand_ratq(rng)
    while not x:
        x = rand_ratq(rng)
    return x


def rand_tensor2(rng: random.Random, alg: Algebra, nterms: int = 4,
                 laurent_only: bool = False) -> Tensor2:
    terms = {}
    for _ in range(nterms):
        key = (rng.randrange(alg.dim), rng.randrange(alg.dim))
        terms[key] = rand_ratq(rng, laurent_only)
    return Tensor2(alg, {k: c for k, c in terms.items() if c})


def rand_tensor3(rng: random.Random, alg: Algebra, nterms: int = 4) -> Tensor3:
    terms = {}
    for _ in range(nterms):
        key = (rng.randrange(alg.dim), rng.randrange(alg.dim), rng.randrange(alg.dim))
        terms[key] = rand_ratq(rng)
    return Tensor3(alg, {k: c for k, c in terms.items() if c})


def unit_vec(alg: Algebra, label: str):
    return tuple(ONE if b == label else ZERO for b in alg.basis)


def sample_points():
    return [Fraction(2), Fraction(3, 2), Fraction(-5, 3)]
