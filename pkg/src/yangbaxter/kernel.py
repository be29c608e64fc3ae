"""Kernel backend selection.

The compiled Cython kernel is used when built; the pure-Python twin is the
fallback.  Set YANGBAXTER_KERNEL=py (or =cy) to force a backend, e.g. for the
benchmark in benchmarks/bench_kernels.py.
"""

import os

_forced = os.environ.get("YANGBAXTER_KERNEL", "").strip().lower()

if _forced == "py":
    from yangbaxter import _kernel_py as _impl
elif _forced == "cy":
    from yangbaxter import _kernel_cy as _impl  # type: ignore[attr-defined]
else:
    try:
        from yangbaxter import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from yangbaxter import _kernel_py as _impl

BACKEND = _impl.BACKEND

RQ_ZERO = _impl.RQ_ZERO
RQ_ONE = _impl.RQ_ONE

pz_trim = _impl.pz_trim
pz_add = _impl.pz_add
pz_neg = _impl.pz_neg
pz_sub = _impl.pz_sub
pz_mul = _impl.pz_mul
pz_mul_int = _impl.pz_mul_int
pz_content = _impl.pz_content
pz_divexact = _impl.pz_divexact
pz_primitive = _impl.pz_primitive
pz_gcd = _impl.pz_gcd
pz_deriv = _impl.pz_deriv

rq_norm = _impl.rq_norm
rq_add = _impl.rq_add
rq_neg = _impl.rq_neg
rq_sub = _impl.rq_sub
rq_mul = _impl.rq_mul
rq_inv = _impl.rq_inv
rq_div = _impl.rq_div

t2_mul_terms = _impl.t2_mul_terms
t3_mul_terms = _impl.t3_mul_terms
mul_12_13 = _impl.mul_12_13
mul_23_13 = _impl.mul_23_13
t3_mul_23 = _impl.t3_mul_23
t3_mul_12 = _impl.t3_mul_12
terms_sub = _impl.terms_sub
