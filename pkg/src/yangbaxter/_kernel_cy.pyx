# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels; same interface and semantics as _kernel_py.

Coefficients stay arbitrary-precision Python ints; the win over the pure
twin is compiled loop and call overhead in the polynomial layer and the
sparse tensor product loops.
"""

from math import gcd as _int_gcd

BACKEND = "cy"

RQ_ZERO = ((), (1,))
RQ_ONE = ((1,), (1,))


# ---------------------------------------------------------------------------
# dense polynomials over Z


cpdef tuple pz_trim(coeffs):
    cdef Py_ssize_t n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


cpdef tuple pz_add(tuple a, tuple b):
    cdef Py_ssize_t i
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return pz_trim(out)


cpdef tuple pz_neg(tuple a):
    return tuple([-c for c in a])


cpdef tuple pz_sub(tuple a, tuple b):
    cdef Py_ssize_t i
    cdef list out
    if not b:
        return a
    if len(a) < len(b):
        out = [-c for c in b]
        for i in range(len(a)):
            out[i] = out[i] + a[i]
    else:
        out = list(a)
        for i in range(len(b)):
            out[i] = out[i] - b[i]
    return pz_trim(out)


cpdef tuple pz_mul(tuple a, tuple b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return ()
    cdef list out = [0] * (la + lb - 1)
    cdef object ca, cb
    for i in range(la):
        ca = a[i]
        if ca:
            for j in range(lb):
                cb = b[j]
                if cb:
                    out[i + j] = out[i + j] + ca * cb
    return pz_trim(out)


cpdef tuple pz_mul_int(tuple a, n):
    if not n:
        return ()
    return tuple([c * n for c in a])


cpdef object pz_content(tuple a):
    cdef object g = 0
    for c in a:
        if c:
            g = _int_gcd(g, abs(c))
            if g == 1:
                return 1
    return g


cpdef tuple pz_divexact_int(tuple a, n):
    return tuple([c // n for c in a])


cpdef tuple pz_divexact(tuple a, tuple b):
    cdef Py_ssize_t k, i, la, lb
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    la = len(a)
    lb = len(b)
    if la < lb:
        raise ArithmeticError("inexact polynomial division")
    cdef object lbc = b[lb - 1]
    cdef list r = list(a)
    cdef list q = [0] * (la - lb + 1)
    cdef object c, cq, rem
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        if c:
            cq, rem = divmod(c, lbc)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = cq
            for i in range(lb):
                r[k + i] = r[k + i] - cq * b[i]
    for c in r:
        if c:
            raise ArithmeticError("inexact polynomial division")
    return pz_trim(q)


cpdef tuple pz_pseudo_rem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, k, i
    cdef object lb = b[db], lr
    cdef list r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[len(r) - 1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[k + i] = r[k + i] - lr * b[i]
        del r[len(r) - 1]
        while r and not r[len(r) - 1]:
            del r[len(r) - 1]
    return tuple(r)


cpdef tuple pz_primitive(tuple a):
    c = pz_content(a)
    if c <= 1:
        return a
    return pz_divexact_int(a, c)


cpdef tuple pz_gcd(tuple a, tuple b):
    cdef tuple g, pa, pb, r
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca = pz_content(a)
        cb = pz_content(b)
        pa = pz_primitive(a)
        pb = pz_primitive(b)
        while pb:
            r = pz_pseudo_rem(pa, pb)
            pa = pb
            pb = pz_primitive(r)
        g = pz_mul_int(pz_primitive(pa), _int_gcd(ca, cb))
    if g and g[len(g) - 1] < 0:
        g = pz_neg(g)
    return g


cpdef tuple pz_deriv(tuple a):
    cdef Py_ssize_t i
    return pz_trim([i * a[i] for i in range(1, len(a))])


# ---------------------------------------------------------------------------
# rational functions


cpdef tuple rq_norm(object num_in, object den_in):
    cdef tuple num = <tuple> num_in
    cdef tuple den = <tuple> den_in
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RQ_ZERO
    cdef tuple g = pz_gcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = pz_divexact(num, g)
        den = pz_divexact(den, g)
    if den[len(den) - 1] < 0:
        num = pz_neg(num)
        den = pz_neg(den)
    return (num, den)


cpdef tuple rq_add(object x, object y):
    cdef tuple tx = <tuple> x, ty = <tuple> y
    cdef tuple xn = <tuple> tx[0], xd = <tuple> tx[1]
    cdef tuple yn = <tuple> ty[0], yd = <tuple> ty[1]
    if not xn:
        return ty
    if not yn:
        return tx
    if xd == yd:
        return rq_norm(pz_add(xn, yn), xd)
    return rq_norm(pz_add(pz_mul(xn, yd), pz_mul(yn, xd)), pz_mul(xd, yd))


cpdef tuple rq_neg(object x):
    cdef tuple tx = <tuple> x
    return (pz_neg(<tuple> tx[0]), tx[1])


cpdef tuple rq_sub(object x, object y):
    cdef tuple tx = <tuple> x, ty = <tuple> y
    cdef tuple xn = <tuple> tx[0], xd = <tuple> tx[1]
    cdef tuple yn = <tuple> ty[0], yd = <tuple> ty[1]
    if not yn:
        return tx
    if not xn:
        return (pz_neg(yn), yd)
    if xd == yd:
        return rq_norm(pz_sub(xn, yn), xd)
    return rq_norm(pz_sub(pz_mul(xn, yd), pz_mul(yn, xd)), pz_mul(xd, yd))


cpdef tuple rq_mul(object x, object y):
    cdef tuple tx = <tuple> x, ty = <tuple> y
    cdef tuple xn = <tuple> tx[0], xd = <tuple> tx[1]
    cdef tuple yn = <tuple> ty[0], yd = <tuple> ty[1]
    cdef tuple g1, g2
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


cpdef tuple rq_inv(object x):
    cdef tuple tx = <tuple> x
    cdef tuple num = <tuple> tx[0], den = <tuple> tx[1]
    if not num:
        raise ZeroDivisionError("inverse of zero")
    if num[len(num) - 1] < 0:
        return (pz_neg(den), pz_neg(num))
    return (den, num)


cpdef tuple rq_div(object x, object y):
    return rq_mul(x, rq_inv(y))


# ---------------------------------------------------------------------------
# sparse tensor products


cdef dict _clean(dict out):
    cdef dict res = {}
    for k, v in out.items():
        if (<tuple> v)[0]:
            res[k] = v
    return res


def t2_mul_terms(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, c1, v, acc
    cdef object leg1, leg2
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg1 = struct.get((ka[0], kb[0]))
            if leg1 is None:
                continue
            leg2 = struct.get((ka[1], kb[1]))
            if leg2 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for k1, s1 in <tuple> leg1:
                c1 = rq_mul(c0, <tuple> s1)
                for k2, s2 in <tuple> leg2:
                    key = (k1, k2)
                    v = rq_mul(c1, <tuple> s2)
                    acc = <tuple> out.get(key)
                    out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def t3_mul_terms(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, c1, c2, v, acc
    cdef object leg1, leg2, leg3
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg1 = struct.get((ka[0], kb[0]))
            if leg1 is None:
                continue
            leg2 = struct.get((ka[1], kb[1]))
            if leg2 is None:
                continue
            leg3 = struct.get((ka[2], kb[2]))
            if leg3 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for m1, s1 in <tuple> leg1:
                c1 = rq_mul(c0, <tuple> s1)
                for m2, s2 in <tuple> leg2:
                    c2 = rq_mul(c1, <tuple> s2)
                    for m3, s3 in <tuple> leg3:
                        key = (m1, m2, m3)
                        v = rq_mul(c2, <tuple> s3)
                        acc = <tuple> out.get(key)
                        out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def mul_12_13(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, v, acc
    cdef object leg1
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg1 = struct.get((ka[0], kb[0]))
            if leg1 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for m, s in <tuple> leg1:
                key = (m, ka[1], kb[1])
                v = rq_mul(c0, <tuple> s)
                acc = <tuple> out.get(key)
                out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def mul_23_13(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, v, acc
    cdef object leg3
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg3 = struct.get((ka[1], kb[1]))
            if leg3 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for m, s in <tuple> leg3:
                key = (kb[0], ka[0], m)
                v = rq_mul(c0, <tuple> s)
                acc = <tuple> out.get(key)
                out[key] = v if acc is None else rq_add(acc, v)
    return _clean(out)


def t3_mul_23(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, c1, w, acc
    cdef object leg2, leg3
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg2 = struct.get((ka[1], kb[0]))
            if leg2 is None:
                continue
            leg3 = struct.get((ka[2], kb[1]))
            if leg3 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for m2, s2 in <tuple> leg2:
                c1 = rq_mul(c0, <tuple> s2)
                for m3, s3 in <tuple> leg3:
                    key = (ka[0], m2, m3)
                    w = rq_mul(c1, <tuple> s3)
                    acc = <tuple> out.get(key)
                    out[key] = w if acc is None else rq_add(acc, w)
    return _clean(out)


def t3_mul_12(dict at, dict bt, dict struct):
    cdef dict out = {}
    cdef tuple ka, kb, c0, c1, w, acc
    cdef object leg1, leg2
    for ka, ca in at.items():
        for kb, cb in bt.items():
            leg1 = struct.get((ka[0], kb[0]))
            if leg1 is None:
                continue
            leg2 = struct.get((ka[1], kb[1]))
            if leg2 is None:
                continue
            c0 = rq_mul(<tuple> ca, <tuple> cb)
            for m1, s1 in <tuple> leg1:
                c1 = rq_mul(c0, <tuple> s1)
                for m2, s2 in <tuple> leg2:
                    key = (m1, m2, ka[2])
                    w = rq_mul(c1, <tuple> s2)
                    acc = <tuple> out.get(key)
                    out[key] = w if acc is None else rq_add(acc, w)
    return _clean(out)


def terms_sub(dict at, dict bt):
    cdef dict out = dict(at)
    cdef tuple v, acc
    for key, cb in bt.items():
        acc = <tuple> out.get(key)
        if acc is None:
            v = rq_neg(<tuple> cb)
        else:
            v = rq_sub(acc, <tuple> cb)
        if v[0]:
            out[key] = v
        elif acc is not None:
            del out[key]
    return out
