"""Pure-Python arithmetic kernels.

Dense univariate polynomials over the integers are tuples of ints, index =
exponent of q, with no trailing zeros; () is the zero polynomial.  A rational
function is a pair (num, den) of such tuples with den nonzero, gcd(num, den)
trivial and a positive leading denominator coefficient; zero is ((,), (1,)) --
i.e. ``RQ_ZERO`` below.

On top of the scalar layer sit the sparse product loops for two- and
three-fold tensors: term maps keyed by basis-index tuples with (num, den)
coefficient pairs, multiplied leg-wise through a structure-constant table
``struct[(i, j)] = ((k, coeff), ...)``.

The compiled twin ``_kernel_cy.pyx`` implements the same interface; the
active backend is chosen in ``yangbaxter.kernel``.
"""

from math import gcd as _int_gcd

BACKEND = "py"

RQ_ZERO = ((), (1,))
RQ_ONE = ((1,), (1,))


# ---------------------------------------------------------------------------
# dense polynomials over Z


def pz_trim(coeffs):
    """Drop trailing zeros and return a tuple."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def pz_add(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return pz_trim(out)


def pz_neg(a):
    return tuple(-c for c in a)


def pz_sub(a, b):
    if not b:
        return a
    if len(a) < len(b):
        out = [-c for c in b]
        for i in range(len(a)):
            out[i] += a[i]
    else:
        out = list(a)
        for i in range(len(b)):
            out[i] -= b[i]
    return pz_trim(out)


def pz_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return pz_trim(out)


def pz_mul_int(a, n):
    if not n:
        return ()
    return tuple(c * n for c in a)


def pz_content(a):
    """Positive gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in a:
        if c:
            g = _int_gcd(g, abs(c))
            if g == 1:
                return 1
    return g


def pz_divexact_int(a, n):
    return tuple(c // n for c in a)


def pz_divexact(a, b):
    """Exact division in Z[q]; raises ArithmeticError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(a) < len(b):
        raise ArithmeticError("inexact polynomial division")
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1]
        if c:
            cq, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = cq
            for i, bc in enumerate(b):
                r[k + i] -= cq * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return pz_trim(q)


def pz_pseudo_rem(a, b):
    """Pseudo-remainder of a by b (b nonzero), up to a power of lead(b)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[k + i] -= lr * bc
        del r[-1]
        while r and not r[-1]:
            del r[-1]
    return tuple(r)


def pz_primitive(a):
    """Primitive part (content divided out); keeps the leading sign."""
    c = pz_content(a)
    if c <= 1:
        return a
    return pz_divexact_int(a, c)


def pz_gcd(a, b):
    """gcd in Z[q], normalized to a positive leading coefficient.

    Content and primitive parts are handled separately; the primitive gcd
    uses a primitive pseudo-remainder sequence (exact, no fractions).
    """
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = pz_content(a), pz_content(b)
        pa, pb = pz_primitive(a), pz_primitive(b)
        while pb:
            r = pz_pseudo_rem(pa, pb)
            pa, pb = pb, pz_primitive(r)
        g = pz_mul_int(pz_primitive(pa), _int_gcd(ca, cb))
    if g and g[-1] < 0:
        g = pz_neg(g)
    return g


def pz_deriv(a):
    return pz_trim([i * a[i] for i in range(1, len(a))])


# ---------------------------------------------------------------------------
# rational functions: canonical (num, den) pairs


def rq_norm(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RQ_ZERO
    g = pz_gcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = pz_divexact(num, g)
        den = pz_divexact(den, g)
    if den[-1] < 0:
        num = pz_neg(num)
        den = pz_neg(den)
    return (num, den)


def rq_add(x, y):
    xn, xd = x
    yn, yd = y
    if not xn:
        return y
    if not yn:
        return x
    if xd == yd:
        return rq_norm(pz_add(xn, yn), xd)
    return rq_norm(pz_add(pz_mul(xn, yd), pz_mul(yn, xd)), pz_mul(xd, yd))


def rq_neg(x):
    return (pz_neg(x[0]), x[1])


def rq_sub(x, y):
    xn, xd = x
    yn, yd = y
    if not yn:
        return x
    if not xn:
        return (pz_neg(yn), yd)
    if xd == yd:
        return rq_norm(pz_sub(xn, yn), xd)
    return rq_norm(pz_sub(pz_mul(xn, yd), pz_mul(yn, xd)), pz_mul(xd, yd))


def rq_mul(x, y):
    xn, xd = x
    yn, yd = y
    if not xn or not yn:
        return RQ_ZERO
    g1 = pz_gcd(xn, yd)
    if len(g1) > 1 or g1[0] != 1:
        xn = pz_divexact(xn, g1)
        yd = pz_divexact(yd, g1)
    g2 = pz_gcd(yn, xd)
    if len(g2) > 1 or g2[0] != 1:
        yn = pz_divexact(yn, g2)
        xd = pz_divexact(xd, g2)
    return (pz_mul(xn, yn), pz_mul(xd, yd))


def rq_inv(x):
    num, den = x
    if not num:
        raise ZeroDivisionError("inverse of zero")
    if num[-1] < 0:
        return (pz_neg(den), pz_neg(num))
    return (den, num)


def rq_div(x, y):
    return rq_mul(x, rq_inv(y))


# ---------------------------------------------------------------------------
# sparse tensor products
#
# Term maps: dict[(i, j)] or dict[(i, j, k)] -> (num, den) pair.
# struct: dict[(i, j)] -> tuple of (k, (num, den)); absent key means zero.


def _clean(out):
    return {k: v for k, v in out.items() if v[0]}


def t2_mul_terms(at, bt, struct):
    """Product of two 2-leg term maps: leg-wise algebra multiplication."""
    out = {}
    get = struct.get
    for (i1, j1), ca in at.items():
        for (i2, j2), cb in bt.items():
            leg1 = get((i1, i2))
            if not leg1:
                continue
            leg2 = get((j1, j2))
            if not leg2:
                continue
            c0 = rq_mul(ca, cb)
            for k1, s1 in leg1:
                c1 = rq_mul(c0, s1)
                for k2, s2 in leg2:
                    key = (k1, k2)
                    v = rq_mul(c1, s2)
                    acc = out.get(key)
                    out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def t3_mul_terms(at, bt, struct):
    """Product of two 3-leg term maps."""
    out = {}
    get = struct.get
    for (i1, j1, k1), ca in at.items():
        for (i2, j2, k2), cb in bt.items():
            leg1 = get((i1, i2))
            if not leg1:
                continue
            leg2 = get((j1, j2))
            if not leg2:
                continue
            leg3 = get((k1, k2))
            if not leg3:
                continue
            c0 = rq_mul(ca, cb)
            for m1, s1 in leg1:
                c1 = rq_mul(c0, s1)
                for m2, s2 in leg2:
                    c2 = rq_mul(c1, s2)
                    for m3, s3 in leg3:
                        key = (m1, m2, m3)
                        v = rq_mul(c2, s3)
                        acc = out.get(key)
                        out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def mul_12_13(at, bt, struct):
    """A embedded on legs (1,2) times B on legs (1,3); third legs are units."""
    out = {}
    get = struct.get
    for (i1, j1), ca in at.items():
        for (i2, j2), cb in bt.items():
            leg1 = get((i1, i2))
            if not leg1:
                continue
            c0 = rq_mul(ca, cb)
            for m, s in leg1:
                key = (m, j1, j2)
                v = rq_mul(c0, s)
                acc = out.get(key)
                out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def mul_23_13(at, bt, struct):
    """A embedded on legs (2,3) times B on legs (1,3)."""
    out = {}
    get = struct.get
    for (i1, j1), ca in at.items():
        for (i2, j2), cb in bt.items():
            leg3 = get((j1, j2))
            if not leg3:
                continue
            c0 = rq_mul(ca, cb)
            for m, s in leg3:
                key = (i2, i1, m)
                v = rq_mul(c0, s)
                acc = out.get(key)
                out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def t3_mul_23(at, bt, struct):
    """3-leg term map times B embedded on legs (2,3)."""
    out = {}
    get = struct.get
    for (a, b, c), ca in at.items():
        for (u, v), cb in bt.items():
            leg2 = get((b, u))
            if not leg2:
                continue
            leg3 = get((c, v))
            if not leg3:
                continue
            c0 = rq_mul(ca, cb)
            for m2, s2 in leg2:
                c1 = rq_mul(c0, s2)
                for m3, s3 in leg3:
                    key = (a, m2, m3)
                    w = rq_mul(c1, s3)
                    acc = out.get(key)
                    out[key] = w if acc is None else rq_add(acc, w)
    return _clean(out)


def t3_mul_12(at, bt, struct):
    """3-leg term map times B embedded on legs (1,2)."""
    out = {}
    get = struct.get
    for (a, b, c), ca in at.items():
        for (u, v), cb in bt.items():
            leg1 = get((a, u))
            if not leg1:
                continue
            leg2 = get((b, v))
            if not leg2:
                continue
            c0 = rq_mul(ca, cb)
            for m1, s1 in leg1:
                c1 = rq_mul(c0, s1)
                for m2, s2 in leg2:
                    key = (m1, m2, c)
                    w = rq_mul(c1, s2)
                    acc = out.get(key)
                    out[key] = w if acc is None else rq_add(acc, w)
    return _clean(out)


def terms_sub(at, bt):
    """Difference of two term maps of equal leg count."""
    out = dict(at)
    for key, cb in bt.items():
        acc = out.get(key)
        v = rq_neg(cb) if acc is None else rq_sub(acc, cb)
        if v[0]:
            out[key] = v
        elif acc is not None:
            del out[key]
    return out
