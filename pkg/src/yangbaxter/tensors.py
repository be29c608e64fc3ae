"""Sparse elements of A (x) A and A (x) A (x) A with exact coefficients.

Terms are dicts keyed by basis-index tuples; multiplication is leg-wise
algebra multiplication through the structure-constant table.  The embeddings
into three legs fill the missing leg with the unit's coordinate expansion.
Yang-Baxter products are also available through leg-specialized loops that
use the unit law directly instead of expanding unit coordinates; both routes
agree and the fast one backs the checkers.
"""

from __future__ import annotations

from typing import Mapping, Tuple

from yangbaxter import kernel as _k
from yangbaxter.algebra import Algebra
from yangbaxter.errors import AlgebraMismatch, ShapeError
from yangbaxter.scalars import ONE, ZERO, RatQ, ratq


def _wrap(raw: dict) -> dict:
    return {key: RatQ._raw(v) for key, v in raw.items()}


class _TensorBase:
    __slots__ = ("algebra", "terms")
    legs = 0

    def __init__(self, algebra: Algebra, terms: Mapping[tuple, RatQ]):
        self.algebra = algebra
        d = algebra.dim
        clean = {}
        for key, c in terms.items():
            if len(key) != self.legs or any(not 0 <= i < d for i in key):
                raise ShapeError(f"bad index {key}")
            c = ratq(c)
            if c:
                clean[key] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("tensors over different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return type(self)(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.algebra, _wrap(_k.terms_sub(self.terms, other.terms)))

    def __neg__(self):
        return type(self)(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "_TensorBase":
        c = ratq(c)
        if not c:
            return type(self)(self.algebra, {})
        return type(self)(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, RatQ)):
            return self.scale(other)
        return NotImplemented

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({len(self.terms)} terms over dim {self.algebra.dim})"


class Tensor2(_TensorBase):
    """Sparse element of A (x) A."""

    __slots__ = ()
    legs = 2

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            self._check(other)
            raw = _k.t2_mul_terms(self.terms, other.terms, self.algebra.struct_raw())
            return Tensor2(self.algebra, _wrap(raw))
        if isinstance(other, (int, RatQ)):
            return self.scale(other)
        return NotImplemented

    def flip(self) -> "Tensor2":
        """Transpose the two legs: (i, j) -> (j, i)."""
        return Tensor2(self.algebra, {(j, i): c for (i, j), c in self.terms.items()})


class Tensor3(_TensorBase):
    """Sparse element of A (x) A (x) A."""

    __slots__ = ()
    legs = 3

    def __mul__(self, other):
        if isinstance(other, Tensor3):
            self._check(other)
            raw = _k.t3_mul_terms(self.terms, other.terms, self.algebra.struct_raw())
            return Tensor3(self.algebra, _wrap(raw))
        if isinstance(other, (int, RatQ)):
            return self.scale(other)
        return NotImplemented


# ---------------------------------------------------------------------------
# constructors


def tensor2(algebra: Algebra, entries) -> Tensor2:
    """Build from {(label_i, label_j): coeff} or {(i, j): coeff}."""
    terms = {}
    for key, c in entries.items():
        i, j = key
        if isinstance(i, str):
            i = algebra.index(i)
        if isinstance(j, str):
            j = algebra.index(j)
        c = ratq(c)
        if c:
            terms[(i, j)] = terms.get((i, j), ZERO) + c
    return Tensor2(algebra, terms)


def unit_tensor2(algebra: Algebra) -> Tensor2:
    """1 (x) 1 in coordinates."""
    terms = {}
    for i, a in enumerate(algebra.unit):
        if a:
            for j, b in enumerate(algebra.unit):
                if b:
                    terms[(i, j)] = a * b
    return Tensor2(algebra, terms)


def vec_tensor2(algebra: Algebra, v, w) -> Tensor2:
    """v (x) w from two coordinate vectors."""
    terms = {}
    for i, a in enumerate(v):
        if a:
            for j, b in enumerate(w):
                if b:
                    terms[(i, j)] = terms.get((i, j), ZERO) + a * b
    return Tensor2(algebra, terms)


# ---------------------------------------------------------------------------
# embeddings into three legs


def _embed(t: Tensor2, positions: Tuple[int, int]) -> Tensor3:
    alg = t.algebra
    missing = ({0, 1, 2} - set(positions)).pop()
    out = {}
    for key2, c in t.terms.items():
        for u, cu in enumerate(alg.unit):
            if not cu:
                continue
            key = [0, 0, 0]
            key[positions[0]] = key2[0]
            key[positions[1]] = key2[1]
            key[missing] = u
            k = tuple(key)
            v = c * cu
            out[k] = out.get(k, ZERO) + v
    return Tensor3(alg, out)


def embed12(t: Tensor2) -> Tensor3:
    """x (x) y -> x (x) y (x) 1."""
    return _embed(t, (0, 1))


def embed13(t: Tensor2) -> Tensor3:
    """x (x) y -> x (x) 1 (x) y."""
    return _embed(t, (0, 2))


def embed23(t: Tensor2) -> Tensor3:
    """x (x) y -> 1 (x) x (x) y."""
    return _embed(t, (1, 2))


# ---------------------------------------------------------------------------
# Yang-Baxter products (fast route)


def ybe_lhs(r: Tensor2, s: Tensor2, u: Tensor2) -> Tensor3:
    """R12 S13 U23 computed without expanding unit legs."""
    struct = r.algebra.struct_raw()
    t = _k.mul_12_13(r.terms, s.terms, struct)
    return Tensor3(r.algebra, _wrap(_k.t3_mul_23(t, u.terms, struct)))


def ybe_rhs(r: Tensor2, s: Tensor2, u: Tensor2) -> Tensor3:
    """U23 S13 R12 computed without expanding unit legs."""
    struct = r.algebra.struct_raw()
    t = _k.mul_23_13(u.terms, s.terms, struct)
    return Tensor3(r.algebra, _wrap(_k.t3_mul_12(t, r.terms, struct)))


def ybe_residual(r: Tensor2) -> Tensor3:
    """R12 R13 R23 - R23 R13 R12."""
    return ybe_lhs(r, r, r) - ybe_rhs(r, r, r)


def project_tensor2(t: Tensor2, index_map, target: Algebra) -> Tensor2:
    """Push a tensor through a basis-index partial map (algebra morphism).

    index_map sends ambient basis indices to target indices or None.
    """
    out = {}
    for (i, j), c in t.terms.items():
        ti = index_map(i)
        tj = index_map(j)
        if ti is None or tj is None:
            continue
        key = (ti, tj)
        out[key] = out.get(key, ZERO) + c
    return Tensor2(target, out)
