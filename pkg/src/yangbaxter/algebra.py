"""Finite-dimensional unital associative algebras with trace functionals.

An :class:`Algebra` is an ordered basis of string labels, sparse structure
constants b_i b_j = sum_k c_ijk b_k over RatQ, the coordinates of the unit,
and optionally a trace functional t.  Construction validates associativity
on every basis triple, the two-sided unit law, and trace cyclicity
t(ab) = t(ba); downstream code relies on that certificate.

The induced bilinear form (a, b) = t(ab) is symmetric and cyclic,
(a1 a2, a3) = (a2, a3 a1); with a nondegenerate form the algebra is
Frobenius and carries a canonical permutation element (see triples).

Label conventions: matrix units are tagged "m:i,j", diagonal idempotents
"d:i", direct summands get "s0:", "s1:", ... prefixes, and tensor-product
basis labels are "left*right".
"""

from __future__ import annotations

from typing import Optional, Sequence

from yangbaxter import linalg
from yangbaxter.errors import AlgebraError, DegenerateForm, NotPaired, ShapeError
from yangbaxter.scalars import ONE, ZERO, RatQ, ratq


class Algebra:
    """Unital associative algebra given by labeled basis and structure constants."""

    __slots__ = ("basis", "unit", "trace", "_mul", "_index", "_hash")

    def __init__(self, basis, structure, unit, trace=None, _validate=True):
        self.basis = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise AlgebraError("duplicate basis labels")
        self._index = {lab: i for i, lab in enumerate(self.basis)}
        mul = {}
        for (i, j), terms in structure.items():
            cleaned = tuple((k, c) for k, c in terms if c)
            if cleaned:
                mul[(i, j)] = cleaned
        self._mul = mul
        self.unit = tuple(unit)
        if len(self.unit) != len(self.basis):
            raise ShapeError("unit vector has wrong length")
        self.trace = tuple(trace) if trace is not None else None
        if self.trace is not None and len(self.trace) != len(self.basis):
            raise ShapeError("trace vector has wrong length")
        self._hash = None
        if _validate:
            self._validate()

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        return self._index[label]

    def mul_basis(self, i: int, j: int):
        """Sparse product b_i b_j as a tuple of (k, coefficient)."""
        return self._mul.get((i, j), ())

    def struct_raw(self):
        """The structure table in kernel form (shared, do not mutate)."""
        return self._mul

    def mul_vec(self, v, w):
        """Product of two coordinate vectors."""
        out = [ZERO] * self.dim
        for i, a in enumerate(v):
            if not a:
                continue
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in self.mul_basis(i, j):
                    out[k] = out[k] + ab * c
        return tuple(out)

    def trace_vec(self, v) -> RatQ:
        if self.trace is None:
            raise AlgebraError("algebra has no trace functional")
        return sum((c * t for c, t in zip(v, self.trace) if c), ZERO)

    def pair(self, v, w) -> RatQ:
        """The cyclic inner product (v, w) = t(vw)."""
        out = ZERO
        for i, a in enumerate(v):
            if not a:
                continue
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in self.mul_basis(i, j):
                    tk = self.trace[k]
                    if tk:
                        out = out + ab * c * tk
        return out

    def basis_vector(self, i: int):
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    # -- validation ---------------------------------------------------------

    def _validate(self):
        d = self.dim
        for i in range(d):
            vi = self.basis_vector(i)
            if self.mul_vec(self.unit, vi) != vi or self.mul_vec(vi, self.unit) != vi:
                raise AlgebraError(f"unit law fails on basis element {self.basis[i]}")
        for i in range(d):
            for j in range(d):
                ij = self._mul.get((i, j), ())
                for k in range(d):
                    left = {}
                    for m, c in ij:
                        for p, c2 in self._mul.get((m, k), ()):
                            left[p] = left.get(p, ZERO) + c * c2
                    right = {}
                    for m, c in self._mul.get((j, k), ()):
                        for p, c2 in self._mul.get((i, m), ()):
                            right[p] = right.get(p, ZERO) + c * c2
                    for p in set(left) | set(right):
                        if left.get(p, ZERO) != right.get(p, ZERO):
                            raise AlgebraError(
                                f"associativity fails on ({self.basis[i]}, "
                                f"{self.basis[j]}, {self.basis[k]})")
        if self.trace is not None:
            for i in range(d):
                for j in range(d):
                    tij = sum((c * self.trace[k] for k, c in self._mul.get((i, j), ())), ZERO)
                    tji = sum((c * self.trace[k] for k, c in self._mul.get((j, i), ())), ZERO)
                    if tij != tji:
                        raise AlgebraError(
                            f"trace not cyclic on ({self.basis[i]}, {self.basis[j]})")

    # -- equality -----------------------------------------------------------

    def _key(self):
        return (self.basis,
                tuple(sorted((ij, self._mul[ij]) for ij in self._mul)),
                self.unit, self.trace)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis=[{', '.join(self.basis[:4])}{', ...' if self.dim > 4 else ''}])"


# ---------------------------------------------------------------------------
# constructors


def mat_algebra(n: int) -> Algebra:
    """Full matrix algebra Mat_n with matrix units e^i_j and the matrix trace."""
    if n < 1:
        raise ShapeError("matrix algebra needs n >= 1")
    labels = [f"m:{i},{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    idx = {(i, j): (i - 1) * n + (j - 1) for i in range(1, n + 1) for j in range(1, n + 1)}
    structure = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                structure[(a, b)] = ((idx[(i, l)], ONE),)
    unit = [ZERO] * (n * n)
    trace = [ZERO] * (n * n)
    for i in range(1, n + 1):
        unit[idx[(i, i)]] = ONE
        trace[idx[(i, i)]] = ONE
    return Algebra(labels, structure, unit, trace)


def diagonal_algebra(k: int) -> Algebra:
    """Commutative algebra C^k with idempotents e_i e_j = delta_ij e_i, t(e_i) = 1."""
    if k < 1:
        raise ShapeError("diagonal algebra needs k >= 1")
    labels = [f"d:{i}" for i in range(1, k + 1)]
    structure = {(i, i): ((i, ONE),) for i in range(k)}
    unit = [ONE] * k
    trace = [ONE] * k
    return Algebra(labels, structure, unit, trace)


def direct_sum_many(parts: Sequence[Algebra], signs: Sequence[int]) -> Algebra:
    """Direct sum of algebras; summand traces weighted by the given signs."""
    if len(parts) != len(signs):
        raise ShapeError("one sign per summand")
    labels = []
    offsets = []
    off = 0
    for s, a in enumerate(parts):
        offsets.append(off)
        labels.extend(f"s{s}:{lab}" for lab in a.basis)
        off += a.dim
    structure = {}
    for s, a in enumerate(parts):
        o = offsets[s]
        for (i, j), terms in a.struct_raw().items():
            structure[(o + i, o + j)] = tuple((o + k, c) for k, c in terms)
    unit = []
    trace = []
    for s, a in enumerate(parts):
        unit.extend(a.unit)
        if a.trace is None:
            raise AlgebraError("direct sum needs traces on all summands")
        sgn = ratq(signs[s])
        trace.extend(sgn * t for t in a.trace)
    return Algebra(labels, structure, unit, trace)


def direct_sum(a: Algebra, b: Algebra, sign: int = 1) -> Algebra:
    """A + B with trace t_A on the first summand and sign * t_B on the second."""
    return direct_sum_many([a, b], [1, sign])


def tensor_product(a: Algebra, b: Algebra) -> Algebra:
    """Tensor product algebra with componentwise structure and product trace."""
    if a.trace is None or b.trace is None:
        raise AlgebraError("tensor product needs traces on both factors")
    db = b.dim
    labels = [f"{la}*{lb}" for la in a.basis for lb in b.basis]
    structure = {}
    for (i1, j1), terms_a in a.struct_raw().items():
        for (i2, j2), terms_b in b.struct_raw().items():
            out = tuple((k1 * db + k2, c1 * c2)
                        for k1, c1 in terms_a for k2, c2 in terms_b)
            structure[(i1 * db + i2, j1 * db + j2)] = out
    unit = [ua * ub for ua in a.unit for ub in b.unit]
    trace = [ta * tb for ta in a.trace for tb in b.trace]
    return Algebra(labels, structure, unit, trace)


# ---------------------------------------------------------------------------
# bilinear form and subspaces


class BilinearForm:
    """Gram matrix G_ij = t(b_i b_j) of the cyclic inner product."""

    __slots__ = ("algebra", "gram")

    def __init__(self, algebra: Algebra):
        if algebra.trace is None:
            raise AlgebraError("bilinear form needs a trace")
        self.algebra = algebra
        d = algebra.dim
        gram = []
        for i in range(d):
            row = [ZERO] * d
            for j in range(d):
                row[j] = sum((c * algebra.trace[k] for k, c in algebra.mul_basis(i, j)), ZERO)
            gram.append(tuple(row))
        self.gram = gram

    def is_nondegenerate(self) -> bool:
        return bool(linalg.det(self.gram))

    def pair(self, v, w) -> RatQ:
        return self.algebra.pair(v, w)

    def restricted_gram(self, rows_p, rows_m):
        """Gram matrix of the pairing between two lists of vectors."""
        return [tuple(self.algebra.pair(p, m) for m in rows_m) for p in rows_p]


class Subspace:
    """Subspace of an algebra, stored as canonical reduced row echelon basis."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: Algebra, vectors, reduce: bool = True):
        self.algebra = algebra
        if reduce:
            rows, _ = linalg.rref(vectors, algebra.dim)
            self.rows = tuple(rows)
        else:
            self.rows = tuple(tuple(v) for v in vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        stacked, _ = linalg.rref(list(self.rows) + [tuple(v)], self.algebra.dim)
        return len(stacked) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        _check_same_algebra(self, other)
        return Subspace(self.algebra, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        _check_same_algebra(self, other)
        rows = linalg.intersect_rowspaces(self.rows, other.rows, self.algebra.dim)
        return Subspace(self.algebra, rows, reduce=False)

    def is_subalgebra(self) -> bool:
        """Closed under multiplication (unit not required)."""
        for v in self.rows:
            for w in self.rows:
                if not self.contains(self.algebra.mul_vec(v, w)):
                    return False
        return True

    def orthogonal_complement_in(self, ambient_rows) -> "Subspace":
        """Vectors of the given space orthogonal to this subspace."""
        alg = self.algebra
        if not ambient_rows:
            return Subspace(alg, [])
        rows = [tuple(alg.pair(r, x) for x in ambient_rows) for r in self.rows]
        coeffs = linalg.nullspace(rows, len(ambient_rows))
        vecs = []
        for c in coeffs:
            v = [ZERO] * alg.dim
            for coef, base in zip(c, ambient_rows):
                if coef:
                    for t, b in enumerate(base):
                        if b:
                            v[t] = v[t] + coef * b
            vecs.append(tuple(v))
        return Subspace(alg, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra == other.algebra and self.rows == other.rows

    def __hash__(self):
        return hash((id(self.algebra), self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.algebra.dim})"


def _check_same_algebra(a, b):
    if a.algebra != b.algebra:
        raise ShapeError("subspaces live in different algebras")


class LinearMap:
    """Linear endomorphism of an algebra in basis coordinates (row action)."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: Algebra, matrix):
        self.algebra = algebra
        self.matrix = [tuple(r) for r in matrix]
        if any(len(r) != algebra.dim for r in self.matrix) or len(self.matrix) != algebra.dim:
            raise ShapeError("linear map matrix must be dim x dim")

    def apply(self, v):
        # v_out[k] = sum_i v[i] * matrix[i][k]
        out = [ZERO] * self.algebra.dim
        for i, c in enumerate(v):
            if c:
                row = self.matrix[i]
                for k in range(self.algebra.dim):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        return tuple(out)

    def image(self) -> Subspace:
        return Subspace(self.algebra, self.matrix)

    def compose(self, other: "LinearMap") -> "LinearMap":
        rows = [other.apply(r) for r in self.matrix]
        return LinearMap(self.algebra, rows)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra == other.algebra and self.matrix == other.matrix

    __hash__ = None


# ---------------------------------------------------------------------------
# pairing and linear solving helpers


def dual_basis(form: BilinearForm, p: Subspace, m: Subspace):
    """A basis of P and the basis of M dual to it under the form.

    Raises NotPaired when dim P != dim M or the restricted Gram matrix is
    singular.
    """
    if p.dim != m.dim:
        raise NotPaired(f"dimensions differ: {p.dim} vs {m.dim}")
    if p.dim == 0:
        return [], []
    gram = form.restricted_gram(p.rows, m.rows)
    try:
        inv = linalg.invert_matrix(gram)
    except linalg.SingularMatrix as exc:
        raise NotPaired("restricted Gram matrix is singular") from exc
    dual = []
    for a in range(p.dim):
        # beta^a = sum_c inv[c][a] * m_c  so that (p_b, beta^a) = delta_ab
        v = [ZERO] * form.algebra.dim
        for c in range(m.dim):
            coef = inv[c][a]
            if coef:
                for t, x in enumerate(m.rows[c]):
                    if x:
                        v[t] = v[t] + coef * x
        dual.append(tuple(v))
    return [tuple(r) for r in p.rows], dual


def solve_linear(rows, algebra: Algebra) -> Subspace:
    """Solution space of a homogeneous system: each row is a functional."""
    if not rows:
        return Subspace(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])
    return Subspace(algebra, linalg.nullspace(rows, algebra.dim), reduce=False)


def left_mul_matrix(algebra: Algebra, v):
    """Matrix of x -> v x acting on coordinates (rows indexed by input basis)."""
    rows = []
    for j in range(algebra.dim):
        rows.append(algebra.mul_vec(v, algebra.basis_vector(j)))
    return rows


def right_mul_matrix(algebra: Algebra, v):
    """Matrix of x -> x v acting on coordinates."""
    rows = []
    for j in range(algebra.dim):
        rows.append(algebra.mul_vec(algebra.basis_vector(j), v))
    return rows


def require_nondegenerate(form: BilinearForm):
    if not form.is_nondegenerate():
        raise DegenerateForm("trace form is degenerate")
