"""Exact linear algebra over the rational-function field.

Vectors are tuples of RatQ, matrices are lists/tuples of row vectors.
Row reduction over the field is exact; determinants use fraction-free
Bareiss elimination on the denominator-cleared integer-polynomial matrix.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from yangbaxter import kernel as _k
from yangbaxter.errors import ShapeError, SingularMatrix
from yangbaxter.scalars import ONE, ZERO, RatQ

Vector = tuple
Matrix = list


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u: Vector, c: RatQ) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(not a for a in u)


def mat_vec(rows: Sequence[Sequence[RatQ]], v: Vector) -> Vector:
    return tuple(sum((r[j] * v[j] for j in range(len(v)) if v[j]), ZERO) for r in rows)


def rref(rows: Iterable[Sequence[RatQ]], ncols: int):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  The output is the
    canonical basis of the row space: pivots are 1 and pivot columns are
    cleared, so equal row spaces give identical outputs.
    """
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise ShapeError(f"row length {len(r)} != {ncols}")
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [inv * c for c in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return [tuple(r) for r in work[:rank]], pivots


def rank(rows: Iterable[Sequence[RatQ]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def nullspace(rows: Iterable[Sequence[RatQ]], ncols: int):
    """Basis of the right kernel {x : A x = 0}."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(red, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence[RatQ]], rhs: Vector):
    """One solution of A x = b, or None if inconsistent."""
    ncols = len(rows[0]) if rows else len(rhs)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in zip(red, pivots):
        x[p] = r[ncols]
    return tuple(x)


def invert_matrix(rows: Sequence[Sequence[RatQ]]):
    """Inverse of a square matrix; SingularMatrix if not invertible."""
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    return [tuple(r[n:]) for r in red[:n]]


def det(rows: Sequence[Sequence[RatQ]]) -> RatQ:
    """Exact determinant via fraction-free Bareiss elimination.

    Each row is cleared to a common integer-polynomial denominator first, so
    the elimination runs entirely in Z[q] with exact divisions.
    """
    n = len(rows)
    if n == 0:
        return ONE
    work = []
    scale_den = ONE
    for r in rows:
        if len(r) != n:
            raise ShapeError("determinant of a non-square matrix")
        lcm = (1,)
        for c in r:
            g = _k.pz_gcd(lcm, c.den)
            lcm = _k.pz_mul(_k.pz_divexact(lcm, g), c.den)
        scale_den = scale_den * RatQ._raw(_k.rq_norm(lcm, (1,)))
        work.append([_k.pz_mul(c.num, _k.pz_divexact(lcm, c.den)) for c in r])

    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if not work[k][k]:
            swap = None
            for i in range(k + 1, n):
                if work[i][k]:
                    swap = i
                    break
            if swap is None:
                return ZERO
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _k.pz_sub(_k.pz_mul(work[i][j], work[k][k]),
                                _k.pz_mul(work[i][k], work[k][j]))
                work[i][j] = _k.pz_divexact(num, prev) if num else ()
            work[i][k] = ()
        prev = work[k][k]
    d = RatQ._raw(_k.rq_norm(work[n - 1][n - 1], (1,)))
    if sign < 0:
        d = -d
    return d / scale_den


def intersect_rowspaces(u_rows, v_rows, ncols: int):
    """Basis of the intersection of two row spaces (Zassenhaus)."""
    block = []
    for r in u_rows:
        block.append(list(r) + list(r))
    for r in v_rows:
        block.append(list(r) + [ZERO] * ncols)
    red, _ = rref(block, 2 * ncols)
    out = []
    for r in red:
        if all(not c for c in r[:ncols]):
            tail = r[ncols:]
            if not vec_is_zero(tail):
                out.append(tuple(tail))
    reduced, _ = rref(out, ncols)
    return reduced
