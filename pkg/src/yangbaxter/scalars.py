"""Exact scalars: rational functions in the deformation parameter q.

``RatQ`` is a quotient num/den of integer-coefficient polynomials in q, kept
in a canonical form (gcd divided out, positive leading denominator
coefficient), so equality is tuple equality and values hash.  Laurent
polynomials are the special case of a monomial denominator q**k; they are
built with :meth:`RatQ.from_laurent` and recovered with
:func:`laurent_terms`.  Plain rationals ride along as degree-zero fractions,
with :class:`fractions.Fraction` as the exact coefficient type at the
boundaries (evaluation, classical limits).

String form (used by every JSON artifact)::

    laurent  := "0" | term ("+" term)*
    term     := int | int "*q^" int | "q^" int
    rational := laurent | "(" laurent ")/(" laurent ")"

Whitespace is insignificant; negative coefficients appear as terms with a
negative int, e.g. ``q^1 + -1*q^-1`` for omega = q - 1/q.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Mapping, Union

from yangbaxter import kernel as _k
from yangbaxter.errors import EvaluationPole, ScalarParseError

ScalarLike = Union["RatQ", int, Fraction]


class RatQ(tuple):
    """A rational function in q over the integers, in canonical form.

    Instances are immutable pairs (num, den) of dense coefficient tuples and
    support field arithmetic through the usual operators.  ints and
    Fractions coerce on either side.
    """

    __slots__ = ()

    def __new__(cls, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        return tuple.__new__(cls, _k.rq_norm(num, den))

    @classmethod
    def _raw(cls, pair):
        """Wrap an already-canonical (num, den) pair without re-normalizing."""
        return tuple.__new__(cls, pair)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "RatQ":
        return cls._raw(((() if fr.numerator == 0 else (fr.numerator,)),
                         (fr.denominator,)))

    @classmethod
    def from_laurent(cls, terms: Mapping[int, Union[int, Fraction]]) -> "RatQ":
        """Build sum of c_k * q**k from an exponent -> coefficient map."""
        shift = min((k for k in terms), default=0)
        shift = min(shift, 0)
        den_lcm = 1
        for c in terms.values():
            if isinstance(c, Fraction):
                den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
        coeffs = {}
        for k, c in terms.items():
            fr = Fraction(c) * den_lcm
            if fr:
                coeffs[k - shift] = coeffs.get(k - shift, 0) + int(fr)
        if not coeffs:
            return ZERO
        num = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            num[k] = c
        den = [0] * (-shift) + [den_lcm]
        return cls._raw(_k.rq_norm(_k.pz_trim(num), tuple(den)))

    @property
    def num(self):
        return self[0]

    @property
    def den(self):
        return self[1]

    def is_zero(self) -> bool:
        return not self[0]

    def is_one(self) -> bool:
        return self[0] == (1,) and self[1] == (1,)

    def __bool__(self) -> bool:
        return bool(self[0])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_add(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_sub(self, other))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_sub(other, self))

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_mul(self, other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_div(self, other))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatQ._raw(_k.rq_div(other, self))

    def __neg__(self):
        return RatQ._raw(_k.rq_neg(self))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "RatQ":
        return RatQ._raw(_k.rq_inv(self))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if isinstance(other, tuple):
            return tuple.__eq__(self, other)
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = tuple.__hash__

    def evaluate(self, q0) -> Fraction:
        """Exact value at a rational point; EvaluationPole at a denominator zero."""
        q0 = Fraction(q0)
        den = _poly_eval(self[1], q0)
        if den == 0:
            raise EvaluationPole(f"pole at q = {q0}")
        return _poly_eval(self[0], q0) / den

    def derivative_at_one(self) -> Fraction:
        """d/dq at q = 1; EvaluationPole if the denominator vanishes there."""
        num, den = self
        d1 = _poly_eval(den, Fraction(1))
        if d1 == 0:
            raise EvaluationPole("pole at q = 1")
        n1 = _poly_eval(num, Fraction(1))
        dn1 = _poly_eval(_k.pz_deriv(num), Fraction(1))
        dd1 = _poly_eval(_k.pz_deriv(den), Fraction(1))
        return (dn1 * d1 - n1 * dd1) / (d1 * d1)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"RatQ({format_scalar(self)!r})"


def _as_poly(x):
    if isinstance(x, RatQ):
        raise TypeError("pass RatQ values through arithmetic, not the constructor")
    if isinstance(x, tuple):
        return _k.pz_trim(x)
    if isinstance(x, int):
        return (x,) if x else ()
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, RatQ):
        return x
    if isinstance(x, int):
        return ((x,) if x else (), (1,))
    if isinstance(x, Fraction):
        return ((() if x.numerator == 0 else (x.numerator,)), (x.denominator,))
    return NotImplemented


def ratq(x: ScalarLike) -> RatQ:
    """Coerce an int, Fraction or RatQ to RatQ."""
    if isinstance(x, RatQ):
        return x
    pair = _coerce(x)
    if pair is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to RatQ")
    return RatQ._raw(pair)


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


ZERO = RatQ._raw(_k.RQ_ZERO)
ONE = RatQ._raw(_k.RQ_ONE)


def q_power(k: int) -> RatQ:
    """q**k for any integer k."""
    if k >= 0:
        return RatQ._raw(((0,) * k + (1,), (1,)))
    return RatQ._raw(((1,), (0,) * (-k) + (1,)))


Q = q_power(1)
QINV = q_power(-1)
OMEGA = Q - QINV          # omega = q - 1/q
OMEGA_INV = OMEGA.inverse()


def eval_q(a: RatQ, q0) -> Fraction:
    """Exact evaluation of a at a rational point q0."""
    return a.evaluate(q0)


def derivative_at_one(a: RatQ) -> Fraction:
    return a.derivative_at_one()


def is_laurent(a: RatQ) -> bool:
    """True when the denominator is a plain power of q."""
    den = a.den
    return den[-1] == 1 and not any(den[:-1])


def laurent_terms(a: RatQ) -> dict:
    """Exponent -> Fraction coefficient map.

    Requires a monomial denominator c*q**k; raises ValueError otherwise.
    """
    num, den = a
    if any(den[:-1]):
        raise ValueError("not a Laurent polynomial: non-monomial denominator")
    c = den[-1]
    shift = len(den) - 1
    return {i - shift: Fraction(numc, c) for i, numc in enumerate(num) if numc}


# ---------------------------------------------------------------------------
# string grammar

_TERM_RE = re.compile(r"^(?:(-?\d+)|(-?\d+)\*q\^(-?\d+)|q\^(-?\d+))$")


def _parse_laurent(s: str) -> RatQ:
    if s == "0":
        return ZERO
    out = ZERO
    for part in s.split("+"):
        m = _TERM_RE.match(part)
        if not m:
            raise ScalarParseError(f"bad term {part!r}")
        if m.group(1) is not None:
            out = out + int(m.group(1))
        elif m.group(2) is not None:
            out = out + int(m.group(2)) * q_power(int(m.group(3)))
        else:
            out = out + q_power(int(m.group(4)))
    return out


def parse_scalar(s: str) -> RatQ:
    """Parse the scalar string grammar."""
    compact = re.sub(r"\s+", "", s)
    if not compact:
        raise ScalarParseError("empty scalar string")
    m = re.match(r"^\((.*)\)/\((.*)\)$", compact)
    if m:
        num = _parse_laurent(m.group(1))
        den = _parse_laurent(m.group(2))
        if den.is_zero():
            raise ScalarParseError("zero denominator")
        return num / den
    return _parse_laurent(compact)


def _format_laurent(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        if k == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"q^{k}")
        else:
            parts.append(f"{c}*q^{k}")
    return " + ".join(parts)


def _poly_terms(coeffs) -> dict:
    return {i: c for i, c in enumerate(coeffs) if c}


def format_scalar(a: RatQ) -> str:
    """Canonical string form; the inverse of parse_scalar."""
    num, den = a
    if den == (1,):
        return _format_laurent(_poly_terms(num))
    if den[-1] == 1 and not any(den[:-1]):
        shift = len(den) - 1
        return _format_laurent({i - shift: c for i, c in enumerate(num) if c})
    return f"({_format_laurent(_poly_terms(num))})/({_format_laurent(_poly_terms(den))})"


def _format_laurent_latex(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        if k == 0:
            mono = ""
        elif k == 1:
            mono = "q"
        else:
            mono = f"q^{{{k}}}"
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def format_scalar_latex(a: RatQ) -> str:
    num, den = a
    if den == (1,):
        return _format_laurent_latex(_poly_terms(num))
    if den[-1] == 1 and not any(den[:-1]):
        shift = len(den) - 1
        return _format_laurent_latex({i - shift: c for i, c in enumerate(num) if c})
    return (r"\frac{" + _format_laurent_latex(_poly_terms(num)) + "}{"
            + _format_laurent_latex(_poly_terms(den)) + "}")
