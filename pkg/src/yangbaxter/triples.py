"""Associative triples and canonical elements of paired subspaces.

A triple is a decomposition M = N- + D + N+ of a Frobenius algebra into
subalgebras where N+ and N- are dual isotropic D-bimodules and D (the
diagonal) is orthogonal to their sum.  The canonical element Q of the
(N+, N-) pairing solves the Yang-Baxter equation, and R = S + Q solves it
whenever S in D (x) D solves it together with the Hecke condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from yangbaxter import linalg
from yangbaxter.algebra import (Algebra, BilinearForm, LinearMap, Subspace,
                                direct_sum, dual_basis, tensor_product)
from yangbaxter.checks import CheckReport, is_hecke, is_ybe
from yangbaxter.errors import (CheckFailed, DegenerateForm, InvalidTriple,
                               NotPaired, SingularMatrix)
from yangbaxter.scalars import ONE, ZERO, RatQ, ratq
from yangbaxter.tensors import Tensor2, vec_tensor2


def permutation_element(algebra: Algebra) -> Tensor2:
    """Canonical element sum_i b_i (x) b^i of the full dual-basis pairing.

    For a matrix algebra with the trace form this is the flip operator
    sum e^i_j (x) e^j_i.  Raises DegenerateForm when the trace form is
    singular.
    """
    form = BilinearForm(algebra)
    try:
        inv = linalg.invert_matrix(form.gram)
    except SingularMatrix as exc:
        raise DegenerateForm("trace form is degenerate") from exc
    terms = {}
    d = algebra.dim
    for i in range(d):
        for j in range(d):
            c = inv[j][i]
            if c:
                terms[(i, j)] = c
    return Tensor2(algebra, terms)


@dataclass
class PairedSubspaces:
    """Two subspaces in duality under the cyclic inner product."""

    algebra: Algebra
    form: BilinearForm
    n_plus: Subspace
    n_minus: Subspace
    plus_basis: List[tuple] = field(default_factory=list)
    minus_dual: List[tuple] = field(default_factory=list)

    @classmethod
    def build(cls, algebra: Algebra, n_plus: Subspace, n_minus: Subspace,
              form: Optional[BilinearForm] = None) -> "PairedSubspaces":
        form = form or BilinearForm(algebra)
        plus, dual = dual_basis(form, n_plus, n_minus)
        return cls(algebra, form, n_plus, n_minus, plus, dual)


def canonical_pair_element(paired: PairedSubspaces) -> Tensor2:
    """Q = sum_a alpha_a (x) beta^a over the dual bases of the pairing."""
    q = Tensor2(paired.algebra, {})
    for a, b in zip(paired.plus_basis, paired.minus_dual):
        q = q + vec_tensor2(paired.algebra, a, b)
    return q


def projectors(paired: PairedSubspaces) -> Tuple[LinearMap, LinearMap]:
    """The projectors pi+ : mu -> alpha_a (mu, beta^a) and its form-adjoint pi-."""
    alg = paired.algebra
    d = alg.dim
    rows_p = []
    rows_m = []
    for j in range(d):
        bj = alg.basis_vector(j)
        vp = [ZERO] * d
        vm = [ZERO] * d
        for a, b in zip(paired.plus_basis, paired.minus_dual):
            cp = alg.pair(bj, b)
            if cp:
                for t, x in enumerate(a):
                    if x:
                        vp[t] = vp[t] + cp * x
            cm = alg.pair(a, bj)
            if cm:
                for t, x in enumerate(b):
                    if x:
                        vm[t] = vm[t] + cm * x
        rows_p.append(tuple(vp))
        rows_m.append(tuple(vm))
    return LinearMap(alg, rows_p), LinearMap(alg, rows_m)


def compatibility_subspaces(paired: PairedSubspaces) -> Tuple[Subspace, Subspace]:
    """Solve the linear conditions pi(a1 mu) a2 = a1 pi(mu a2) for both signs.

    These spaces contain the normalizers of N+ and N- and can be strictly
    larger; the canonical element solves the Yang-Baxter equation whenever
    the two of them together span the whole algebra.
    """
    pi_plus, pi_minus = projectors(paired)
    m_plus = _compatibility_space(paired, pi_plus, paired.n_plus)
    m_minus = _compatibility_space(paired, pi_minus, paired.n_minus)
    return m_plus, m_minus


def _compatibility_space(paired: PairedSubspaces, pi: LinearMap, n: Subspace) -> Subspace:
    alg = paired.algebra
    d = alg.dim
    rows = []
    basis_vectors = [alg.basis_vector(j) for j in range(d)]
    for a1 in n.rows:
        for a2 in n.rows:
            # columns of the condition map mu -> pi(a1 mu) a2 - a1 pi(mu a2)
            cols = []
            for bj in basis_vectors:
                left = alg.mul_vec(pi.apply(alg.mul_vec(a1, bj)), a2)
                right = alg.mul_vec(a1, pi.apply(alg.mul_vec(bj, a2)))
                cols.append(linalg.vec_sub(left, right))
            for k in range(d):
                row = tuple(cols[j][k] for j in range(d))
                if not linalg.vec_is_zero(row):
                    rows.append(row)
    if not rows:
        return Subspace(alg, basis_vectors)
    return Subspace(alg, linalg.nullspace(rows, d), reduce=False)


@dataclass(frozen=True)
class SplitReport:
    """Outcome of the paired-split sufficiency check for a canonical element."""

    covers: bool
    ybe: CheckReport

    @property
    def passed(self) -> bool:
        return self.covers and self.ybe.passed


def check_pair_split(paired: PairedSubspaces) -> SplitReport:
    """Verify M+ + M- spans the algebra and the canonical element solves YBE."""
    m_plus, m_minus = compatibility_subspaces(paired)
    covers = m_plus.sum(m_minus).dim == paired.algebra.dim
    q = canonical_pair_element(paired)
    return SplitReport(covers, is_ybe(q))


# ---------------------------------------------------------------------------
# associative triples


@dataclass
class AssocTriple:
    """M with subalgebras M+ and M-, diagonal D = M+ cap M-, N+- derived."""

    algebra: Algebra
    form: BilinearForm
    m_plus: Subspace
    m_minus: Subspace
    diagonal: Subspace
    n_plus: Subspace
    n_minus: Subspace

    @classmethod
    def build(cls, algebra: Algebra, m_plus_vectors, m_minus_vectors) -> "AssocTriple":
        form = BilinearForm(algebra)
        m_plus = Subspace(algebra, m_plus_vectors)
        m_minus = Subspace(algebra, m_minus_vectors)
        diagonal = m_plus.intersect(m_minus)
        n_plus = diagonal.orthogonal_complement_in(m_plus.rows)
        n_minus = diagonal.orthogonal_complement_in(m_minus.rows)
        return cls(algebra, form, m_plus, m_minus, diagonal, n_plus, n_minus)

    def paired(self) -> PairedSubspaces:
        return PairedSubspaces.build(self.algebra, self.n_plus, self.n_minus, self.form)

    def canonical_element(self) -> Tensor2:
        return canonical_pair_element(self.paired())

    def diagonal_permutation(self) -> Tensor2:
        """Canonical element of the form restricted to the diagonal."""
        basis, dual = dual_basis(self.form, self.diagonal, self.diagonal)
        sigma = Tensor2(self.algebra, {})
        for a, b in zip(basis, dual):
            sigma = sigma + vec_tensor2(self.algebra, a, b)
        return sigma

    def is_trivial(self) -> bool:
        return self.n_plus.dim == 0 and self.n_minus.dim == 0


@dataclass(frozen=True)
class TripleReport:
    """Named validation conditions for an associative triple."""

    conditions: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())

    def failures(self):
        return [k for k, ok in self.conditions.items() if not ok]


def validate_triple(t: AssocTriple) -> TripleReport:
    """Check duality, bimodule, orthogonality, isotropy, decomposition, and
    nondegeneracy of the form on the diagonal."""
    alg = t.algebra
    cond: Dict[str, bool] = {}
    cond["m_plus_subalgebra"] = t.m_plus.is_subalgebra()
    cond["m_minus_subalgebra"] = t.m_minus.is_subalgebra()

    try:
        PairedSubspaces.build(alg, t.n_plus, t.n_minus, t.form)
        cond["duality"] = True
    except NotPaired:
        cond["duality"] = False

    ok = True
    for dvec in t.diagonal.rows:
        for nvec in t.n_plus.rows:
            if not (t.n_plus.contains(alg.mul_vec(dvec, nvec))
                    and t.n_plus.contains(alg.mul_vec(nvec, dvec))):
                ok = False
        for nvec in t.n_minus.rows:
            if not (t.n_minus.contains(alg.mul_vec(dvec, nvec))
                    and t.n_minus.contains(alg.mul_vec(nvec, dvec))):
                ok = False
    cond["bimodule"] = ok

    n_sum = t.n_plus.sum(t.n_minus)
    cond["orthogonal"] = all(not alg.pair(d, n)
                             for d in t.diagonal.rows for n in n_sum.rows)
    cond["isotropic_plus"] = all(not alg.pair(a, b)
                                 for a in t.n_plus.rows for b in t.n_plus.rows)
    cond["isotropic_minus"] = all(not alg.pair(a, b)
                                  for a in t.n_minus.rows for b in t.n_minus.rows)

    total = t.n_plus.dim + t.diagonal.dim + t.n_minus.dim
    full = t.n_plus.sum(t.diagonal).sum(t.n_minus)
    cond["decomposition"] = (total == alg.dim and full.dim == alg.dim)

    if t.diagonal.dim == 0:
        cond["diagonal_nondegenerate"] = True
    else:
        gram = t.form.restricted_gram(t.diagonal.rows, t.diagonal.rows)
        cond["diagonal_nondegenerate"] = bool(linalg.det(gram))
    return TripleReport(cond)


def _require_valid(t: AssocTriple) -> AssocTriple:
    report = validate_triple(t)
    if not report.passed:
        raise InvalidTriple(report.failures())
    return t


def assemble_r_matrix(t: AssocTriple, s: Tensor2, hecke_c) -> Tensor2:
    """R = S + Q, validated: S solves YBE and the Hecke condition on the
    diagonal, and the assembled R is verified to solve YBE.

    Raises CheckFailed carrying the failing report when a precondition or the
    postcondition does not hold.
    """
    alg = t.algebra
    if not _supported_on(s, _tensor_square_rows(alg, t.diagonal)):
        raise CheckFailed(CheckReport("s_in_diagonal", False, s))
    ybe_s = is_ybe(s)
    if not ybe_s.passed:
        raise CheckFailed(ybe_s)
    hecke_s = is_hecke(s, t.diagonal_permutation(), ratq(hecke_c))
    if not hecke_s.passed:
        raise CheckFailed(hecke_s)
    r = s + canonical_pair_element(t.paired())
    ybe_r = is_ybe(r)
    if not ybe_r.passed:
        raise CheckFailed(ybe_r)
    return r


def _tensor_square_rows(alg: Algebra, sub: Subspace):
    d = alg.dim
    rows = []
    for a in sub.rows:
        for b in sub.rows:
            v = [ZERO] * (d * d)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            v[i * d + j] = x * y
            rows.append(tuple(v))
    return rows


def _supported_on(s: Tensor2, rows) -> bool:
    d = s.algebra.dim
    v = [ZERO] * (d * d)
    for (i, j), c in s.terms.items():
        v[i * d + j] = c
    stacked, _ = linalg.rref(list(rows) + [tuple(v)], d * d)
    base_rank = linalg.rank(rows, d * d) if rows else 0
    return len(stacked) == base_rank


# ---------------------------------------------------------------------------
# category operations


def triple_transpose(t: AssocTriple) -> AssocTriple:
    """Swap M+ and M-; the trace is unchanged."""
    out = AssocTriple.build(t.algebra, t.m_minus.rows, t.m_plus.rows)
    return _require_valid(out)


def triple_sum(t1: AssocTriple, t2: AssocTriple, sign: int = 1) -> AssocTriple:
    """Componentwise sum over the direct-sum algebra, trace t1 + sign * t2."""
    big = direct_sum(t1.algebra, t2.algebra, sign)
    d1 = t1.algebra.dim
    plus = [_embed_sum(v, 0, big.dim) for v in t1.m_plus.rows] + \
           [_embed_sum(v, d1, big.dim) for v in t2.m_plus.rows]
    minus = [_embed_sum(v, 0, big.dim) for v in t1.m_minus.rows] + \
            [_embed_sum(v, d1, big.dim) for v in t2.m_minus.rows]
    return _require_valid(AssocTriple.build(big, plus, minus))


def triple_product_trivial(a0: Algebra, t: AssocTriple) -> AssocTriple:
    """Tensor with a trivial triple: (A0 (x) M, A0 (x) M+, A0 (x) M-)."""
    big = tensor_product(a0, t.algebra)
    db = t.algebra.dim
    plus = [_kron_basis(i, v, a0.dim, db) for i in range(a0.dim) for v in t.m_plus.rows]
    minus = [_kron_basis(i, v, a0.dim, db) for i in range(a0.dim) for v in t.m_minus.rows]
    return _require_valid(AssocTriple.build(big, plus, minus))


def _embed_sum(v, offset: int, total: int):
    out = [ZERO] * total
    for i, c in enumerate(v):
        out[offset + i] = c
    return tuple(out)


def _kron_basis(i: int, v, da: int, db: int):
    out = [ZERO] * (da * db)
    for j, c in enumerate(v):
        out[i * db + j] = c
    return tuple(out)
