"""Spectral-parameter R-matrices as exact polynomial identities.

Baxterization turns a constant solution R of the conventional Hecke
condition (R P)^2 = omega (R P) + 1 into the one-parameter family

    R(z, u) = z R - u flip(R)^-1,   with   omega P = R - flip(R)^-1,

and the Yang matrix is the denominator-cleared (z - u)(1 x 1) + lambda P.
All spectral statements here are finite polynomial identities: denominators
are cleared before storage, so verifying the Yang-Baxter equation with
parameters (z, u), (z, v), (u, v) is an exact trivariate polynomial check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from yangbaxter.algebra import Algebra, mat_algebra
from yangbaxter.checks import CheckReport, conventional_hecke_report, is_unitary, is_ybe
from yangbaxter.errors import CheckFailed, NotHecke, ShapeError
from yangbaxter.scalars import OMEGA, ONE, ZERO, RatQ, ratq
from yangbaxter.tensors import Tensor2, unit_tensor2
from yangbaxter.triples import permutation_element

PolyTerms = Dict[Tuple[int, ...], RatQ]


class SpectralPoly:
    """Polynomial in named spectral parameters with RatQ coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Tuple[str, ...], terms: Mapping[Tuple[int, ...], RatQ]):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean: PolyTerms = {}
        for exps, c in terms.items():
            if len(exps) != nv or any(e < 0 for e in exps):
                raise ShapeError(f"bad exponent tuple {exps}")
            c = ratq(c)
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), ZERO) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, variables, c) -> "SpectralPoly":
        c = ratq(c)
        if not c:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name, coeff=ONE) -> "SpectralPoly":
        exps = [0] * len(variables)
        exps[tuple(variables).index(name)] = 1
        return cls(variables, {tuple(exps): ratq(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SpectralPoly"):
        if self.variables != other.variables:
            raise ShapeError("spectral polynomials in different variables")

    def __add__(self, other: "SpectralPoly") -> "SpectralPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return SpectralPoly(self.variables, out)

    def __neg__(self) -> "SpectralPoly":
        return SpectralPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SpectralPoly") -> "SpectralPoly":
        return self + (-other)

    def __mul__(self, other: "SpectralPoly") -> "SpectralPoly":
        self._check(other)
        out: PolyTerms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                acc = out.get(e)
                out[e] = v if acc is None else acc + v
        return SpectralPoly(self.variables, out)

    def scale(self, c) -> "SpectralPoly":
        c = ratq(c)
        if not c:
            return SpectralPoly(self.variables, {})
        return SpectralPoly(self.variables, {e: c * v for e, v in self.terms.items()})

    def remap(self, variables: Tuple[str, ...], positions: Tuple[int, ...]) -> "SpectralPoly":
        """Re-express in a larger variable tuple; positions[i] is the slot of
        the i-th current variable."""
        out: PolyTerms = {}
        for e, c in self.terms.items():
            exps = [0] * len(variables)
            for val, pos in zip(e, positions):
                exps[pos] = val
            out[tuple(exps)] = c
        return SpectralPoly(variables, out)

    def specialize(self, values: Mapping[str, RatQ]) -> RatQ:
        out = ZERO
        for e, c in self.terms.items():
            term = c
            for name, exp in zip(self.variables, e):
                if exp:
                    term = term * (ratq(values[name]) ** exp)
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, SpectralPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"SpectralPoly({self.variables}, {len(self.terms)} terms)"


class SpectralTensor2:
    """Two-leg tensor whose coefficients are spectral polynomials."""

    __slots__ = ("algebra", "params", "terms")

    def __init__(self, algebra: Algebra, params: Tuple[str, ...],
                 terms: Mapping[Tuple[int, int], SpectralPoly]):
        self.algebra = algebra
        self.params = tuple(params)
        clean = {}
        for key, poly in terms.items():
            if poly.variables != self.params:
                raise ShapeError("coefficient polynomial in wrong variables")
            if not poly.is_zero():
                clean[key] = poly
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, SpectralTensor2):
            return NotImplemented
        return (self.algebra == other.algebra and self.params == other.params
                and self.terms == other.terms)

    __hash__ = None

    def specialize(self, values: Mapping[str, RatQ]) -> Tensor2:
        return Tensor2(self.algebra,
                       {key: poly.specialize(values) for key, poly in self.terms.items()})

    def __repr__(self):
        return f"SpectralTensor2(params={self.params}, {len(self.terms)} terms)"


def from_constant(t: Tensor2, params: Tuple[str, ...] = ()) -> SpectralTensor2:
    return SpectralTensor2(t.algebra, params,
                           {k: SpectralPoly.constant(params, c) for k, c in t.terms.items()})


# ---------------------------------------------------------------------------
# baxterization


def hecke_flipped_inverse(r: Tensor2) -> Tensor2:
    """flip(R)^-1 = R - omega P for a conventional-Hecke R over Mat_n.

    Raises NotHecke when (R P)^2 != omega (R P) + 1 x 1; the result is
    verified to be a two-sided inverse of flip(R).
    """
    perm = permutation_element(r.algebra)
    rep = conventional_hecke_report(r, perm, OMEGA)
    if not rep.passed:
        raise NotHecke("R does not satisfy (RP)^2 = omega RP + 1")
    result = r - perm.scale(OMEGA)
    unit = unit_tensor2(r.algebra)
    flipped = r.flip()
    if (flipped * result - unit).is_zero() and (result * flipped - unit).is_zero():
        return result
    raise NotHecke("R - omega P is not inverse to flip(R)")


def baxterize(r: Tensor2, params: Tuple[str, str] = ("z", "u")) -> SpectralTensor2:
    """R(z, u) = z R - u flip(R)^-1, degree one in each parameter."""
    r_inv = hecke_flipped_inverse(r)
    z, u = params
    terms: Dict[Tuple[int, int], SpectralPoly] = {}
    for key, c in r.terms.items():
        terms[key] = SpectralPoly(params, {(1, 0): c})
    for key, c in r_inv.terms.items():
        add = SpectralPoly(params, {(0, 1): -c})
        terms[key] = terms[key] + add if key in terms else add
    return SpectralTensor2(r.algebra, params, terms)


# ---------------------------------------------------------------------------
# spectral YBE


def _spectral_mul_legs(at, bt, struct, variables, mode):
    """Leg-specialized products with SpectralPoly coefficients; mode as in
    the constant-tensor kernels."""
    out: Dict[tuple, SpectralPoly] = {}

    def accum(key, poly):
        acc = out.get(key)
        out[key] = poly if acc is None else acc + poly

    if mode == "12x13":
        for (i1, j1), ca in at.items():
            for (i2, j2), cb in bt.items():
                leg1 = struct.get((i1, i2))
                if not leg1:
                    continue
                c0 = ca * cb
                for m, s in leg1:
                    accum((m, j1, j2), c0.scale(s))
    elif mode == "23x13":
        for (i1, j1), ca in at.items():
            for (i2, j2), cb in bt.items():
                leg3 = struct.get((j1, j2))
                if not leg3:
                    continue
                c0 = ca * cb
                for m, s in leg3:
                    accum((i2, i1, m), c0.scale(s))
    elif mode == "3x23":
        for (a, b, c), ca in at.items():
            for (u, v), cb in bt.items():
                leg2 = struct.get((b, u))
                if not leg2:
                    continue
                leg3 = struct.get((c, v))
                if not leg3:
                    continue
                c0 = ca * cb
                for m2, s2 in leg2:
                    c1 = c0.scale(s2)
                    for m3, s3 in leg3:
                        accum((a, m2, m3), c1.scale(s3))
    elif mode == "3x12":
        for (a, b, c), ca in at.items():
            for (u, v), cb in bt.items():
                leg1 = struct.get((a, u))
                if not leg1:
                    continue
                leg2 = struct.get((b, v))
                if not leg2:
                    continue
                c0 = ca * cb
                for m1, s1 in leg1:
                    c1 = c0.scale(s1)
                    for m2, s2 in leg2:
                        accum((m1, m2, c), c1.scale(s2))
    else:
        raise ValueError(mode)
    return {k: p for k, p in out.items() if not p.is_zero()}


@dataclass(frozen=True)
class SpectralCheckReport:
    """Spectral YBE outcome; residual is a map index -> trivariate poly."""

    identity: str
    passed: bool
    residual: dict

    def __bool__(self):
        return self.passed


def spectral_ybe(rf: SpectralTensor2,
                 triple_vars: Tuple[str, str, str] = ("z", "u", "v")) -> SpectralCheckReport:
    """Exact trivariate check of
    R12(z,u) R13(z,v) R23(u,v) = R23(u,v) R13(z,v) R12(z,u)."""
    if len(rf.params) not in (0, 2):
        raise ShapeError("spectral YBE needs 0 or 2 parameters")
    struct = rf.algebra.struct_raw()

    def instance(slots):
        if not rf.params:
            return {k: p.remap(triple_vars, ()) for k, p in rf.terms.items()}
        return {k: p.remap(triple_vars, slots) for k, p in rf.terms.items()}

    t12 = instance((0, 1))
    t13 = instance((0, 2))
    t23 = instance((1, 2))
    lhs = _spectral_mul_legs(_spectral_mul_legs(t12, t13, struct, triple_vars, "12x13"),
                             t23, struct, triple_vars, "3x23")
    rhs = _spectral_mul_legs(_spectral_mul_legs(t23, t13, struct, triple_vars, "23x13"),
                             t12, struct, triple_vars, "3x12")
    residual = dict(lhs)
    for k, p in rhs.items():
        d = residual.get(k)
        d = (-p) if d is None else d - p
        if d.is_zero():
            residual.pop(k, None)
        else:
            residual[k] = d
    return SpectralCheckReport("spectral_ybe", not residual, residual)


# ---------------------------------------------------------------------------
# Yang matrix and its unitary deformations


def yang_matrix(n: int, lam, params: Tuple[str, str] = ("z", "u")) -> SpectralTensor2:
    """Denominator-cleared Yang matrix (z - u)(1 x 1) + lambda P over Mat_n."""
    alg = mat_algebra(n)
    lam = ratq(lam)
    z, u = params
    terms: Dict[Tuple[int, int], SpectralPoly] = {}
    zu = SpectralPoly(params, {(1, 0): ONE, (0, 1): -ONE})
    for key, c in unit_tensor2(alg).terms.items():
        terms[key] = zu.scale(c)
    if lam:
        for key, c in permutation_element(alg).terms.items():
            add = SpectralPoly.constant(params, lam * c)
            terms[key] = terms[key] + add if key in terms else add
    return SpectralTensor2(alg, params, terms)


def unitary_deform_yang(n: int, s: Tensor2, lam,
                        params: Tuple[str, str] = ("z", "u")) -> SpectralTensor2:
    """Cleared deformation (z - u) S + lambda P for unitary YBE solutions S.

    Preconditions: S solves YBE and S flip(S) = 1 x 1.  The spectral YBE is
    verified on the output.
    """
    alg = mat_algebra(n)
    if s.algebra != alg:
        raise ShapeError("S must live over Mat_n")
    ybe_rep = is_ybe(s)
    if not ybe_rep.passed:
        raise CheckFailed(ybe_rep)
    uni_rep = is_unitary(s)
    if not uni_rep.passed:
        raise CheckFailed(uni_rep)
    lam = ratq(lam)
    zu = SpectralPoly(params, {(1, 0): ONE, (0, 1): -ONE})
    terms: Dict[Tuple[int, int], SpectralPoly] = {}
    for key, c in s.terms.items():
        terms[key] = zu.scale(c)
    if lam:
        for key, c in permutation_element(alg).terms.items():
            add = SpectralPoly.constant(params, lam * c)
            terms[key] = terms[key] + add if key in terms else add
    out = SpectralTensor2(alg, params, terms)
    rep = spectral_ybe(out)
    if not rep.passed:
        raise CheckFailed(CheckReport("spectral_ybe", False, None))
    return out
