"""Named R-matrix families: diagonal Hecke solutions, Drinfeld-Jimbo, twists.

The diagonal family lives on the commutative algebra C^k and solves the
Hecke condition through the coefficient system

    a^ii + a^ik a^ki = (a^ii)^2,   a^ik a^ki = a^im a^mi   (k, m != i),

satisfied by a^ii = +-q^(+-1)/omega and a^ik = b^ik/omega with
b^ik b^ki = 1.  The Drinfeld-Jimbo matrix over Mat_n is both given in closed
form and rebuilt by the block recursion; diagonal twists F conjugate a
solution to an equivalent one when F commutes with the canonical element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from yangbaxter import linalg
from yangbaxter.algebra import Algebra, diagonal_algebra, mat_algebra
from yangbaxter.checks import is_ybe
from yangbaxter.errors import BadTwistData, CheckFailed, TwistIncompatible
from yangbaxter.scalars import OMEGA, OMEGA_INV, ONE, Q, QINV, ZERO, RatQ, ratq
from yangbaxter.tensors import Tensor2, tensor2, unit_tensor2, vec_tensor2


@dataclass(frozen=True)
class DiagonalHeckeParams:
    """k dimensions, a +/- sign per index, and a balanced coefficient matrix b."""

    k: int
    signs: Sequence[str]
    b: Sequence[Sequence[RatQ]]

    @classmethod
    def standard(cls, k: int, signs: Optional[Sequence[str]] = None,
                 b: Optional[Sequence[Sequence]] = None) -> "DiagonalHeckeParams":
        signs = tuple(signs) if signs is not None else ("+",) * k
        if b is None:
            b = [[ONE] * k for _ in range(k)]
        b = tuple(tuple(ratq(c) for c in row) for row in b)
        return cls(k, signs, b)

    def validate(self):
        if len(self.signs) != self.k or any(s not in "+-" for s in self.signs):
            raise BadTwistData("signs must be '+' or '-' per index")
        if len(self.b) != self.k or any(len(r) != self.k for r in self.b):
            raise BadTwistData("b must be k x k")
        for i in range(self.k):
            if self.b[i][i] != ONE:
                raise BadTwistData("b must have unit diagonal")
            for j in range(self.k):
                if self.b[i][j] * self.b[j][i] != ONE:
                    raise BadTwistData(f"b[{i}][{j}] * b[{j}][{i}] != 1")


def hecke_coefficients(params: DiagonalHeckeParams) -> List[List[RatQ]]:
    """The coefficient matrix a^ik of the diagonal solution."""
    params.validate()
    a = []
    for i in range(params.k):
        row = []
        for j in range(params.k):
            if i == j:
                row.append(Q * OMEGA_INV if params.signs[i] == "+"
                           else -(QINV * OMEGA_INV))
            else:
                row.append(params.b[i][j] * OMEGA_INV)
        a.append(row)
    return a


def diagonal_hecke(params: DiagonalHeckeParams) -> Tensor2:
    """S = sum a^ik e_i (x) e_k over the diagonal algebra C^k."""
    alg = diagonal_algebra(params.k)
    a = hecke_coefficients(params)
    return Tensor2(alg, {(i, j): a[i][j] for i in range(params.k)
                         for j in range(params.k) if a[i][j]})


# ---------------------------------------------------------------------------
# Drinfeld-Jimbo


def drinfeld_jimbo(n: int) -> Tensor2:
    """Closed form over Mat_n:

    R_n = q sum_i e^i_i (x) e^i_i + sum_{i != j} e^i_i (x) e^j_j
        + omega sum_{i < j} e^i_j (x) e^j_i.
    """
    alg = mat_algebra(n)
    entries = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                entries[(f"m:{i},{i}", f"m:{i},{i}")] = Q
            else:
                entries[(f"m:{i},{i}", f"m:{j},{j}")] = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(f"m:{i},{j}", f"m:{j},{i}")] = OMEGA
    return tensor2(alg, entries)


def drinfeld_jimbo_recursive(n: int) -> Tensor2:
    """Block recursion: omega S = R_{n-1} + R_1 + P_{n-1} (x) P_1
    + P_1 (x) P_{n-1}, then R_n = omega (S + Q) with
    Q = sum_{i < n} e^i_n (x) e^n_i."""
    alg = mat_algebra(n)
    if n == 1:
        return tensor2(alg, {("m:1,1", "m:1,1"): Q})
    prev = drinfeld_jimbo_recursive(n - 1)
    entries = {}
    # embed R_{n-1} from Mat_{n-1} labels into Mat_n
    prev_alg = prev.algebra
    for (i, j), c in prev.terms.items():
        entries[(prev_alg.basis[i], prev_alg.basis[j])] = c
    omega_s = tensor2(alg, entries)
    r1 = tensor2(alg, {(f"m:{n},{n}", f"m:{n},{n}"): Q})
    p_block = tuple(ONE if lab in {f"m:{i},{i}" for i in range(1, n)} else ZERO
                    for lab in alg.basis)
    p_last = tuple(ONE if lab == f"m:{n},{n}" else ZERO for lab in alg.basis)
    omega_s = omega_s + r1 + vec_tensor2(alg, p_block, p_last) \
        + vec_tensor2(alg, p_last, p_block)
    q_part = tensor2(alg, {(f"m:{i},{n}", f"m:{n},{i}"): ONE for i in range(1, n)})
    # R_n = omega * (S + Q) = (omega S) + omega Q
    return omega_s + q_part.scale(OMEGA)


# ---------------------------------------------------------------------------
# twists


@dataclass(frozen=True)
class TwistF:
    """An invertible two-tensor over the diagonal subalgebra, with the
    canonical element it must commute with (when applicable)."""

    f: Tensor2
    q: Optional[Tensor2] = None


def _invert_in_span(f: Tensor2, span_rows) -> Tensor2:
    """Solve F X = 1 (x) 1 for X in the span of the given two-leg basis."""
    alg = f.algebra
    d = alg.dim
    basis_tensors = []
    cols = []
    for v in span_rows:
        t = Tensor2(alg, {tuple(divmod(i, d)): c for i, c in enumerate(v) if c})
        basis_tensors.append(t)
        ft = f * t
        col = [ZERO] * (d * d)
        for (i, j), c in ft.terms.items():
            col[i * d + j] = c
        cols.append(col)
    rhs = [ZERO] * (d * d)
    for (i, j), c in unit_tensor2(alg).terms.items():
        rhs[i * d + j] = c
    rows = [tuple(cols[b][k] for b in range(len(cols))) for k in range(d * d)]
    x = linalg.solve(rows, tuple(rhs))
    if x is None:
        raise BadTwistData("twist tensor is not invertible")
    out = Tensor2(alg, {})
    for coef, t in zip(x, basis_tensors):
        if coef:
            out = out + t.scale(coef)
    # two-sided inverse in a finite-dimensional algebra
    if not (f * out - unit_tensor2(alg)).is_zero() or \
       not (out * f - unit_tensor2(alg)).is_zero():
        raise BadTwistData("twist tensor is not invertible")
    return out


def invert_tensor2(f: Tensor2, diagonal_rows=None) -> Tensor2:
    """Inverse of F in the two-leg tensor algebra.

    When diagonal_rows is given, the solve is restricted to D (x) D, which is
    where a twist and its inverse live.
    """
    alg = f.algebra
    if diagonal_rows is None:
        d = alg.dim
        span = []
        for i in range(d):
            for j in range(d):
                v = [ZERO] * (d * d)
                v[i * d + j] = ONE
                span.append(tuple(v))
        return _invert_in_span(f, span)
    d = alg.dim
    span = []
    for a in diagonal_rows:
        for b in diagonal_rows:
            v = [ZERO] * (d * d)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            v[i * d + j] = x * y
            span.append(tuple(v))
    return _invert_in_span(f, span)


def twist(r: Tensor2, f: Tensor2, q: Optional[Tensor2] = None,
          diagonal_rows=None) -> Tensor2:
    """Conjugate R to F R flip(F)^-1.

    Checks invertibility of F (BadTwistData) and, when the canonical element
    Q is supplied, the compatibility F Q flip(F)^-1 = Q (TwistIncompatible).
    The twisted tensor is verified to solve YBE.
    """
    f_inv_flipped = invert_tensor2(f.flip(), diagonal_rows)
    if q is not None:
        if not (f * q * f_inv_flipped - q).is_zero():
            raise TwistIncompatible("F Q flip(F)^-1 != Q")
    twisted = f * r * f_inv_flipped
    report = is_ybe(twisted)
    if not report.passed:
        raise CheckFailed(report)
    return twisted
