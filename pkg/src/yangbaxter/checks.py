"""Exact verification of the identities every construction must satisfy.

Every checker returns a :class:`CheckReport` carrying the full residual
tensor, not just a boolean: residual localization is the main debugging tool
for the quantization pipeline.  A report passes exactly when its residual is
zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from yangbaxter.algebra import Algebra
from yangbaxter.scalars import ONE, RatQ, ratq
from yangbaxter.tensors import (Tensor2, Tensor3, embed12, embed13, embed23,
                                unit_tensor2, ybe_lhs, ybe_rhs)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check; passed iff the residual vanishes."""

    identity: str
    passed: bool
    residual: Optional[Union[Tensor2, Tensor3]] = None

    def __bool__(self):
        return self.passed


def _report(identity: str, residual) -> CheckReport:
    return CheckReport(identity, residual.is_zero(), residual)


def is_ybe(r: Tensor2) -> CheckReport:
    """R12 R13 R23 = R23 R13 R12 in the tensor cube."""
    residual = ybe_lhs(r, r, r) - ybe_rhs(r, r, r)
    return _report("ybe", residual)


def is_cybe(r: Tensor2) -> CheckReport:
    """[r12, r13] + [r12, r23] + [r13, r23] = 0."""
    r12 = embed12(r)
    r13 = embed13(r)
    r23 = embed23(r)
    residual = (r12 * r13 - r13 * r12) \
        + (r12 * r23 - r23 * r12) \
        + (r13 * r23 - r23 * r13)
    return _report("cybe", residual)


def is_hecke(s: Tensor2, sigma: Tensor2, c) -> CheckReport:
    """Hecke condition: flip(S) S - sigma S = c * (1 x 1).

    sigma is the permutation element of the relevant (sub)algebra embedded in
    the ambient tensor square; the right-hand constant c is supplied by the
    caller and can be recovered with :func:`scalar_multiple_of_unit`.
    """
    c = ratq(c)
    residual = s.flip() * s - sigma * s - unit_tensor2(s.algebra).scale(c)
    return _report("hecke", residual)


def hecke_obstruction(q: Tensor2, sigma_d: Tensor2) -> Tensor2:
    """sigma_D Q + Q^2.

    When S satisfies the Hecke condition on the diagonal, S + Q inherits it
    exactly when this obstruction vanishes.
    """
    return sigma_d * q + q * q


def is_unitary(s: Tensor2) -> CheckReport:
    """Unitarity: S flip(S) = 1 x 1."""
    residual = s * s.flip() - unit_tensor2(s.algebra)
    return _report("unitary", residual)


def scalar_multiple_of_unit(t: Tensor2) -> Optional[RatQ]:
    """The scalar c with t = c * (1 x 1), or None if t is not such a multiple."""
    unit = unit_tensor2(t.algebra)
    if t.is_zero():
        return ratq(0)
    key, c0 = next(iter(t.terms.items()))
    u0 = unit.terms.get(key)
    if not u0:
        return None
    c = c0 / u0
    if (unit.scale(c) - t).is_zero():
        return c
    return None


def find_hecke_constant(s: Tensor2, sigma: Tensor2) -> Optional[RatQ]:
    """The constant c for which the Hecke condition holds, if any."""
    return scalar_multiple_of_unit(s.flip() * s - sigma * s)


def conventional_hecke_report(r: Tensor2, perm: Tensor2, omega) -> CheckReport:
    """(R P)^2 = omega (R P) + 1x1 with P the permutation element."""
    rp = r * perm
    residual = rp * rp - rp.scale(ratq(omega)) - unit_tensor2(r.algebra)
    return _report("conventional_hecke", residual)


def is_ybe_sampled(r: Tensor2, q0) -> bool:
    """Fast pre-filter: the YBE residual evaluated at a rational point q0.

    A False answer disproves the identity; True only means the sample point
    saw a zero residual, so the exact check still decides.
    """
    from fractions import Fraction

    q0 = Fraction(q0)
    alg = r.algebra
    struct = {ij: tuple((k, c.evaluate(q0)) for k, c in terms)
              for ij, terms in alg.struct_raw().items()}
    terms = {key: c.evaluate(q0) for key, c in r.terms.items()}

    def mul12_13(at, bt):
        out = {}
        for (i1, j1), ca in at.items():
            for (i2, j2), cb in bt.items():
                for m, s in struct.get((i1, i2), ()):
                    key = (m, j1, j2)
                    out[key] = out.get(key, 0) + ca * cb * s
        return out

    def mul23_13(at, bt):
        out = {}
        for (i1, j1), ca in at.items():
            for (i2, j2), cb in bt.items():
                for m, s in struct.get((j1, j2), ()):
                    key = (i2, i1, m)
                    out[key] = out.get(key, 0) + ca * cb * s
        return out

    def mul3_23(at, bt):
        out = {}
        for (a, b, c), ca in at.items():
            for (u, v), cb in bt.items():
                for m2, s2 in struct.get((b, u), ()):
                    for m3, s3 in struct.get((c, v), ()):
                        key = (a, m2, m3)
                        out[key] = out.get(key, 0) + ca * cb * s2 * s3
        return out

    def mul3_12(at, bt):
        out = {}
        for (a, b, c), ca in at.items():
            for (u, v), cb in bt.items():
                for m1, s1 in struct.get((a, u), ()):
                    for m2, s2 in struct.get((b, v), ()):
                        key = (m1, m2, c)
                        out[key] = out.get(key, 0) + ca * cb * s1 * s2
        return out

    lhs = mul3_23(mul12_13(terms, terms), terms)
    rhs = mul3_12(mul23_13(terms, terms), terms)
    for key in set(lhs) | set(rhs):
        if lhs.get(key, 0) != rhs.get(key, 0):
            return False
    return True
