"""Quantization of type-A Belavin-Drinfeld triples.

A BD triple (Gamma1, Gamma2, tau) consists of two subsets of the simple
roots alpha_1..alpha_{n-1} of the n x n matrix algebra and a bijection
tau: Gamma1 -> Gamma2 that preserves adjacency and Dynkin orientation and is
nilpotent (every tau-orbit leaves Gamma1).  The pipeline here:

1. validate the triple and derive its idempotent data: the sets Gammahat_i
   of diagonal idempotents spanned by the components of Gamma_i, the shifted
   bijection tauhat, and for every eta in Gammahat_1 the smallest m(eta)
   with tauhat^m(eta) outside Gammahat_1;
2. build the big Frobenius algebra M = d2 (+) Mat_n (+) Mat_n, where d2 is
   the commutative algebra on Gammahat minus Gammahat_2 and the trace is
   t_{d2} (+) Tr (-) Tr, together with the explicit dual families spanning
   N+ and N- and the orthonormal diagonal basis;
3. assemble R = S + Q with S a diagonal Hecke solution on the diagonal
   basis, and project to an n^2 x n^2 R-matrix over Mat_n, recomputing the
   projection independently from closed formulas (root pairs e_gamma (x)
   f_gamma, the partial-order wedge terms e_gamma ^ f_sigma, and the
   idempotent orbit sums) and comparing the two routes exactly.

The empty triple reproduces the Drinfeld-Jimbo matrix; the maximal-shift
triple gives the Cremmer-Gervais matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from yangbaxter import linalg
from yangbaxter.algebra import (Algebra, Subspace, direct_sum_many, mat_algebra)
from yangbaxter.checks import CheckReport, is_ybe
from yangbaxter.errors import (CheckFailed, InternalInconsistency, InvalidBDTriple,
                               InvalidTriple, NoClassicalLimit, TooSmall)
from yangbaxter.scalars import OMEGA, ONE, ZERO, RatQ, ratq
from yangbaxter.solutions import DiagonalHeckeParams, hecke_coefficients
from yangbaxter.tensors import Tensor2, project_tensor2, unit_tensor2, vec_tensor2
from yangbaxter.triples import AssocTriple, canonical_pair_element, validate_triple


@dataclass(frozen=True)
class BDTriple:
    """Combinatorial datum (n, Gamma1, Gamma2, tau) on simple-root indices."""

    n: int
    gamma1: FrozenSet[int]
    gamma2: FrozenSet[int]
    tau: Tuple[Tuple[int, int], ...]

    @classmethod
    def make(cls, n: int, gamma1, gamma2, tau) -> "BDTriple":
        if isinstance(tau, dict):
            tau = tuple(sorted(tau.items()))
        else:
            tau = tuple(sorted(tuple(p) for p in tau))
        return cls(n, frozenset(gamma1), frozenset(gamma2), tau)

    @property
    def tau_map(self) -> Dict[int, int]:
        return dict(self.tau)


@dataclass(frozen=True)
class IdempotentData:
    """Diagonal-idempotent shadow of a BD triple."""

    gamma1_hat: FrozenSet[int]
    gamma2_hat: FrozenSet[int]
    tau_hat: Tuple[Tuple[int, int], ...]
    m: Tuple[Tuple[int, int], ...]

    @property
    def tau_hat_map(self) -> Dict[int, int]:
        return dict(self.tau_hat)

    @property
    def m_map(self) -> Dict[int, int]:
        return dict(self.m)

    def m_of(self, eta: int) -> int:
        """m(eta), with the convention m = 0 outside Gammahat_1."""
        return self.m_map.get(eta, 0)


@dataclass(frozen=True)
class BDReport:
    """validate_bd outcome; failures are named conditions."""

    passed: bool
    failures: Tuple[str, ...]
    idempotent_data: Optional[IdempotentData]

    def __bool__(self):
        return self.passed


def _components(indices: FrozenSet[int]) -> List[List[int]]:
    """Maximal runs of consecutive indices, sorted."""
    out: List[List[int]] = []
    for i in sorted(indices):
        if out and out[-1][-1] == i - 1:
            out[-1].append(i)
        else:
            out.append([i])
    return out


def validate_bd(bd: BDTriple) -> BDReport:
    """Check bijectivity, adjacency, orientation, nilpotency, and the
    existence of m(eta) for every idempotent in Gammahat_1."""
    failures: List[str] = []
    n = bd.n
    tau = bd.tau_map
    simple = set(range(1, n))
    if n < 2 or not bd.gamma1 <= simple or not bd.gamma2 <= simple \
            or set(tau) != set(bd.gamma1) or set(tau.values()) != set(bd.gamma2) \
            or len(set(tau.values())) != len(tau):
        failures.append("NotBijective")
        return BDReport(False, tuple(failures), None)

    for i in bd.gamma1:
        for j in bd.gamma1:
            if (abs(i - j) == 1) != (abs(tau[i] - tau[j]) == 1):
                failures.append("BreaksAdjacency")
                break
        else:
            continue
        break

    if "BreaksAdjacency" not in failures:
        for i in bd.gamma1:
            if i + 1 in bd.gamma1 and tau[i + 1] != tau[i] + 1:
                failures.append("BreaksOrientation")
                break

    for a in bd.gamma1:
        seen = set()
        x = a
        while x in bd.gamma1:
            if x in seen:
                failures.append("NotNilpotent")
                break
            seen.add(x)
            x = tau[x]
        if "NotNilpotent" in failures:
            break

    if failures:
        return BDReport(False, tuple(failures), None)

    # idempotent shadow: component {a..b} spans idempotents {a..b+1}
    g1_hat = set()
    tau_hat: Dict[int, int] = {}
    for comp in _components(bd.gamma1):
        a, b = comp[0], comp[-1]
        c = tau[a]
        for t in range(b - a + 2):
            g1_hat.add(a + t)
            tau_hat[a + t] = c + t
    g2_hat = set()
    for comp in _components(bd.gamma2):
        a, b = comp[0], comp[-1]
        g2_hat.update(range(a, b + 2))

    m: Dict[int, int] = {}
    for eta in sorted(g1_hat):
        k = 0
        x = eta
        seen = set()
        while x in g1_hat:
            if x in seen:
                failures.append("IdempotentOrbitStuck")
                break
            seen.add(x)
            x = tau_hat[x]
            k += 1
        if "IdempotentOrbitStuck" in failures:
            break
        m[eta] = k

    if failures:
        return BDReport(False, tuple(failures), None)
    idem = IdempotentData(frozenset(g1_hat), frozenset(g2_hat),
                          tuple(sorted(tau_hat.items())), tuple(sorted(m.items())))
    return BDReport(True, (), idem)


def _require_valid_bd(bd: BDTriple) -> IdempotentData:
    report = validate_bd(bd)
    if not report.passed:
        raise InvalidBDTriple(report.failures)
    return report.idempotent_data


# ---------------------------------------------------------------------------
# type-A root combinatorics


def positive_roots(n: int) -> List[Tuple[int, int]]:
    """Positive roots eps_i - eps_j as pairs (i, j), i < j."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def root_in_subsystem(root: Tuple[int, int], gamma: FrozenSet[int]) -> bool:
    """All simple constituents alpha_i..alpha_{j-1} lie in gamma."""
    i, j = root
    return all(t in gamma for t in range(i, j))


def tau_root(bd: BDTriple, idem: IdempotentData, root: Tuple[int, int]):
    """tau on roots generated by Gamma1; None when not applicable."""
    if not root_in_subsystem(root, bd.gamma1):
        return None
    th = idem.tau_hat_map
    return (th[root[0]], th[root[1]])


def tau_root_inv(bd: BDTriple, idem: IdempotentData, root: Tuple[int, int]):
    if not root_in_subsystem(root, bd.gamma2):
        return None
    inv = {v: k for k, v in idem.tau_hat_map.items()}
    return (inv[root[0]], inv[root[1]])


def root_m1(bd: BDTriple, idem: IdempotentData, root) -> int:
    """Smallest k >= 1 with tau^k(root) outside the Gamma1 subsystem; 0 when
    the root is outside it."""
    if not root_in_subsystem(root, bd.gamma1):
        return 0
    k = 0
    x = root
    while root_in_subsystem(x, bd.gamma1):
        x = tau_root(bd, idem, x)
        k += 1
    return k


def root_m2(bd: BDTriple, idem: IdempotentData, root) -> int:
    if not root_in_subsystem(root, bd.gamma2):
        return 0
    k = 0
    x = root
    while root_in_subsystem(x, bd.gamma2):
        x = tau_root_inv(bd, idem, x)
        k += 1
    return k


def prec_pairs(bd: BDTriple, idem: IdempotentData) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """All (sigma, gamma) with sigma < gamma in the tau-order:
    tau^k(sigma) = gamma for some k > 0."""
    out = []
    for sigma in positive_roots(bd.n):
        x = sigma
        while root_in_subsystem(x, bd.gamma1):
            x = tau_root(bd, idem, x)
            out.append((sigma, x))
    return out


# ---------------------------------------------------------------------------
# the big algebra and its triple


class BigAlgebraData:
    """The algebra d2 (+) Mat_n (+) Mat_n with index helpers and the explicit
    dual spanning families."""

    def __init__(self, bd: BDTriple, idem: IdempotentData):
        self.bd = bd
        self.idem = idem
        n = bd.n
        self.reps = [eta for eta in range(1, n + 1) if eta not in idem.gamma2_hat]
        d2 = _diagonal_with_labels([f"d:{eta}" for eta in self.reps])
        self.algebra = direct_sum_many([d2, mat_algebra(n), mat_algebra(n)], [1, 1, -1])
        self._i0 = {eta: self.algebra.index(f"s0:d:{eta}") for eta in self.reps}
        self._i1 = {}
        self._i2 = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                self._i1[(i, j)] = self.algebra.index(f"s1:m:{i},{j}")
                self._i2[(i, j)] = self.algebra.index(f"s2:m:{i},{j}")

    def vector(self, slot0=(), slot1=(), slot2=()):
        """Coordinate vector from (eta, coeff) and ((i, j), coeff) term lists."""
        v = [ZERO] * self.algebra.dim
        for eta, c in slot0:
            v[self._i0[eta]] = v[self._i0[eta]] + ratq(c)
        for ij, c in slot1:
            v[self._i1[ij]] = v[self._i1[ij]] + ratq(c)
        for ij, c in slot2:
            v[self._i2[ij]] = v[self._i2[ij]] + ratq(c)
        return tuple(v)

    def orbit(self, eta: int) -> List[int]:
        """eta, tauhat(eta), ..., tauhat^m(eta)(eta)."""
        th = self.idem.tau_hat_map
        out = [eta]
        for _ in range(self.idem.m_of(eta)):
            out.append(th[out[-1]])
        return out

    def plus_family(self) -> List[tuple]:
        """Basis of N+: root vectors A_gamma and B_gamma, diagonal C_eta."""
        bd, idem = self.bd, self.idem
        inv = {v: k for k, v in idem.tau_hat_map.items()}
        out = []
        for gamma in positive_roots(bd.n):
            tg = tau_root(bd, idem, gamma)
            slot2 = [((tg[0], tg[1]), ONE)] if tg else []
            out.append(self.vector(slot1=[(gamma, ONE)], slot2=slot2))
        for gamma in positive_roots(bd.n):
            f = (gamma[1], gamma[0])
            tginv = tau_root_inv(bd, idem, gamma)
            slot1 = [((tginv[1], tginv[0]), ONE)] if tginv else []
            out.append(self.vector(slot1=slot1, slot2=[(f, ONE)]))
        for eta in range(1, bd.n + 1):
            if eta not in idem.gamma2_hat:
                out.append(self.vector(slot0=[(eta, ONE)], slot2=[((eta, eta), ONE)]))
            else:
                p = inv[eta]
                out.append(self.vector(slot1=[((p, p), ONE)], slot2=[((eta, eta), ONE)]))
        return out

    def minus_family(self) -> List[tuple]:
        """Dual basis of N-: with the plus family ordering, the pairing Gram
        matrix is the identity."""
        bd, idem = self.bd, self.idem
        out = []
        for gamma in positive_roots(bd.n):
            pairs = []
            x = gamma
            for _ in range(root_m2(bd, idem, gamma) + 1):
                f = (x[1], x[0])
                pairs.append((f, ONE))
                x = tau_root_inv(bd, idem, x) or x
            out.append(self.vector(slot1=pairs, slot2=pairs))
        for gamma in positive_roots(bd.n):
            pairs = []
            x = gamma
            for _ in range(root_m1(bd, idem, gamma) + 1):
                pairs.append((x, -ONE))
                x = tau_root(bd, idem, x) or x
            out.append(self.vector(slot1=pairs, slot2=pairs))
        for eta in range(1, bd.n + 1):
            pairs = [((x, x), -ONE) for x in self.orbit(eta)]
            out.append(self.vector(slot1=pairs, slot2=pairs))
        return out

    def diagonal_family(self) -> List[tuple]:
        """Orthonormal diagonal vectors d_eta = (eta, s_eta, s_eta) with
        s_eta the orbit sum, one per eta outside Gammahat_2."""
        out = []
        for eta in self.reps:
            pairs = [((x, x), ONE) for x in self.orbit(eta)]
            out.append(self.vector(slot0=[(eta, ONE)], slot1=pairs, slot2=pairs))
        return out

    def canonical_element(self) -> Tensor2:
        q = Tensor2(self.algebra, {})
        for a, b in zip(self.plus_family(), self.minus_family()):
            q = q + vec_tensor2(self.algebra, a, b)
        return q

    def projection_map(self):
        """Index map of the algebra morphism onto the first Mat_n copy."""
        target = mat_algebra(self.bd.n)
        back = {v: target.index(f"m:{i},{j}")
                for (i, j), v in self._i1.items()}

        def index_map(k):
            return back.get(k)

        return index_map, target


def _diagonal_with_labels(labels: Sequence[str]) -> Algebra:
    k = len(labels)
    structure = {(i, i): ((i, ONE),) for i in range(k)}
    return Algebra(labels, structure, [ONE] * k, [ONE] * k)


def build_big_triple(bd: BDTriple) -> AssocTriple:
    """The associative triple on d2 (+) Mat_n (+) Mat_n; validated."""
    idem = _require_valid_bd(bd)
    data = BigAlgebraData(bd, idem)
    d_rows = data.diagonal_family()
    plus = data.plus_family()
    minus = data.minus_family()
    triple = AssocTriple.build(data.algebra, d_rows + plus, d_rows + minus)
    report = validate_triple(triple)
    if not report.passed:
        raise InvalidTriple(report.failures())
    return triple


def bd_canonical_element(bd: BDTriple) -> Tensor2:
    """The canonical element assembled from the explicit dual families,
    asserted equal to the generic canonical element of the derived pairing."""
    idem = _require_valid_bd(bd)
    data = BigAlgebraData(bd, idem)
    q = data.canonical_element()
    gram_identity = _pairing_is_identity(data)
    if not gram_identity:
        raise InternalInconsistency("explicit dual families do not pair to identity")
    triple = build_big_triple(bd)
    q_generic = canonical_pair_element(triple.paired())
    if not (q - q_generic).is_zero():
        raise InternalInconsistency("explicit canonical element != generic one")
    return q


def _pairing_is_identity(data: BigAlgebraData) -> bool:
    alg = data.algebra
    plus = data.plus_family()
    minus = data.minus_family()
    for a, va in enumerate(plus):
        for b, vb in enumerate(minus):
            expected = ONE if a == b else ZERO
            if alg.pair(va, vb) != expected:
                return False
    return True


def diagonal_basis(bd: BDTriple) -> List[tuple]:
    """The orthonormal diagonal basis; asserts orthonormality, membership in
    M+ cap M-, and full rank of both diagonal-sector projections."""
    idem = _require_valid_bd(bd)
    data = BigAlgebraData(bd, idem)
    rows = data.diagonal_family()
    alg = data.algebra
    for a, va in enumerate(rows):
        for b, vb in enumerate(rows):
            if alg.pair(va, vb) != (ONE if a == b else ZERO):
                raise InternalInconsistency("diagonal basis is not orthonormal")
    triple = build_big_triple(bd)
    for v in rows:
        if not triple.diagonal.contains(v):
            raise InternalInconsistency("diagonal vector outside M+ cap M-")
    # projections onto the two diagonal sectors have full rank n - m
    nm = len(data.reps)
    proj0 = [[v[alg.index(f"s0:d:{eta}")] for eta in data.reps] for v in rows]
    if linalg.rank(proj0, nm) != nm:
        raise InternalInconsistency("projection to the d2 sector is rank-deficient")
    others = [eta for eta in range(1, bd.n + 1) if eta not in idem.gamma1_hat]
    proj1 = [[v[alg.index(f"s1:m:{eta},{eta}")] for eta in others] for v in rows]
    if linalg.rank(proj1, len(others)) != nm:
        raise InternalInconsistency("projection to the d1 sector is rank-deficient")
    return rows


# ---------------------------------------------------------------------------
# assembly and projection


@dataclass
class BDResult:
    """Everything the quantization pipeline produces for one triple."""

    bd: BDTriple
    idempotent_data: IdempotentData
    triple: AssocTriple
    q_big: Tensor2
    s_big: Tensor2
    r_big: Tensor2
    r_proj: Tensor2
    reports: Dict[str, CheckReport] = field(default_factory=dict)


def _sign_b_params(bd: BDTriple, idem: IdempotentData, reps, signs, b) -> DiagonalHeckeParams:
    k = len(reps)
    if signs is None:
        sign_seq = ("+",) * k
    elif isinstance(signs, dict):
        sign_seq = tuple(signs.get(eta, "+") for eta in reps)
    else:
        sign_seq = tuple(signs)
    return DiagonalHeckeParams.standard(k, sign_seq, b)


def assemble_bd_R(bd: BDTriple, signs=None, b=None,
                  check_big_ybe: Optional[bool] = None) -> BDResult:
    """Run the full pipeline: R_big = S + Q over the big algebra and the
    omega-scaled projected R over Mat_n, with the projection recomputed from
    the closed formulas and compared exactly.

    check_big_ybe defaults to n <= 3 (the full tensor-cube check on the big
    algebra; quadratic data makes it expensive for n = 4 and up).
    """
    idem = _require_valid_bd(bd)
    data = BigAlgebraData(bd, idem)
    reports: Dict[str, CheckReport] = {}

    q_big = bd_canonical_element(bd)
    triple = build_big_triple(bd)
    d_rows = diagonal_basis(bd)
    params = _sign_b_params(bd, idem, data.reps, signs, b)
    coeffs = hecke_coefficients(params)
    alg = data.algebra
    s_big = Tensor2(alg, {})
    for a, va in enumerate(d_rows):
        for c, vc in enumerate(d_rows):
            if coeffs[a][c]:
                s_big = s_big + vec_tensor2(alg, va, vc).scale(coeffs[a][c])
    r_big = s_big + q_big

    if check_big_ybe is None:
        check_big_ybe = bd.n <= 3
    if check_big_ybe:
        rep = is_ybe(r_big)
        reports["ybe_big"] = rep
        if not rep.passed:
            raise CheckFailed(rep)

    index_map, target = data.projection_map()
    r_proj = project_tensor2(r_big, index_map, target).scale(OMEGA)

    r_proj2 = projected_closed_form(bd, idem, params, target).scale(OMEGA)
    if not (r_proj - r_proj2).is_zero():
        raise InternalInconsistency("projection routes disagree")

    rep = is_ybe(r_proj)
    reports["ybe_proj"] = rep
    if not rep.passed:
        raise CheckFailed(rep)
    return BDResult(bd, idem, triple, q_big, s_big, r_big, r_proj, reports)


def projected_closed_form(bd: BDTriple, idem: IdempotentData,
                          params: DiagonalHeckeParams, target: Algebra) -> Tensor2:
    """The projected S + Q directly from the closed formulas."""
    n = bd.n
    th = idem.tau_hat_map
    reps = [eta for eta in range(1, n + 1) if eta not in idem.gamma2_hat]
    coeffs = hecke_coefficients(params)

    def diag_vec(etas):
        return tuple(ONE if target.basis[t] in {f"m:{e},{e}" for e in etas} else ZERO
                     for t in range(target.dim))

    def orbit(eta):
        out = [eta]
        for _ in range(idem.m_of(eta)):
            out.append(th[out[-1]])
        return out

    s_proj = Tensor2(target, {})
    for a, ea in enumerate(reps):
        va = diag_vec(orbit(ea))
        for c, ec in enumerate(reps):
            if coeffs[a][c]:
                s_proj = s_proj + vec_tensor2(target, va, diag_vec(orbit(ec))).scale(coeffs[a][c])

    q_terms: Dict[Tuple[int, int], RatQ] = {}

    def add(lab_i, lab_j, c):
        key = (target.index(lab_i), target.index(lab_j))
        q_terms[key] = q_terms.get(key, ZERO) + c

    for eta in sorted(idem.gamma1_hat):
        x = eta
        for _ in range(idem.m_of(eta)):
            x = th[x]
            add(f"m:{eta},{eta}", f"m:{x},{x}", -ONE)
    for (i, j) in positive_roots(n):
        add(f"m:{i},{j}", f"m:{j},{i}", ONE)
    for sigma, gamma in prec_pairs(bd, idem):
        add(f"m:{gamma[0]},{gamma[1]}", f"m:{sigma[1]},{sigma[0]}", ONE)
        add(f"m:{sigma[1]},{sigma[0]}", f"m:{gamma[0]},{gamma[1]}", -ONE)

    return s_proj + Tensor2(target, q_terms)


def cremmer_gervais(n: int, lam) -> Tensor2:
    """lambda (1 x 1) + projected canonical element of the maximal-shift
    triple Gammahat_1 = {eta_1..eta_{n-1}}, tauhat(eta_i) = eta_{i+1}."""
    if n < 3:
        raise TooSmall("Cremmer-Gervais needs n >= 3")
    bd = BDTriple.make(n, range(1, n - 1), range(2, n), {i: i + 1 for i in range(1, n - 1)})
    idem = _require_valid_bd(bd)
    data = BigAlgebraData(bd, idem)
    q_big = bd_canonical_element(bd)
    index_map, target = data.projection_map()
    q_proj = project_tensor2(q_big, index_map, target)
    return unit_tensor2(target).scale(ratq(lam)) + q_proj


# ---------------------------------------------------------------------------
# classical limits


def classical_limit(r: Tensor2) -> Tensor2:
    """Coefficient-wise d/dq at q = 1 of a family with R(1) = 1 x 1.

    Raises EvaluationPole if a coefficient has a pole at q = 1 and
    NoClassicalLimit if R(1) != 1 x 1.  The result has constant rational
    coefficients; feed it to is_cybe.
    """
    from fractions import Fraction

    values = {key: c.evaluate(Fraction(1)) for key, c in r.terms.items()}
    unit = unit_tensor2(r.algebra)
    for key, c in unit.terms.items():
        if values.pop(key, Fraction(0)) != c.evaluate(Fraction(1)):
            raise NoClassicalLimit("R(1) != 1 x 1")
    if any(v != 0 for v in values.values()):
        raise NoClassicalLimit("R(1) != 1 x 1")
    terms = {}
    for key, c in r.terms.items():
        d = c.derivative_at_one()
        if d:
            terms[key] = RatQ.from_fraction(d)
    return Tensor2(r.algebra, terms)
