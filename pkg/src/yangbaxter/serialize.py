"""JSON encodings for algebras, tensors, reports, and BD triple specs.

Scalars are strings in the scalar grammar, basis elements are referenced by
label, and tensor dumps embed the full algebra dump so that every emitted
JSON re-parses to an identical in-memory value.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from yangbaxter.algebra import Algebra
from yangbaxter.bd import BDTriple
from yangbaxter.errors import ScalarParseError
from yangbaxter.scalars import RatQ, format_scalar, parse_scalar
from yangbaxter.spectral import SpectralPoly, SpectralTensor2
from yangbaxter.tensors import Tensor2, Tensor3


def algebra_to_json(alg: Algebra) -> dict:
    structure = []
    for (i, j), terms in sorted(alg.struct_raw().items()):
        structure.append({
            "i": alg.basis[i],
            "j": alg.basis[j],
            "out": {alg.basis[k]: format_scalar(c) for k, c in terms},
        })
    out = {
        "basis": list(alg.basis),
        "unit": {alg.basis[i]: format_scalar(c)
                 for i, c in enumerate(alg.unit) if c},
        "structure": structure,
    }
    if alg.trace is not None:
        out["trace"] = {alg.basis[i]: format_scalar(c)
                        for i, c in enumerate(alg.trace) if c}
    return out


def algebra_from_json(data: dict) -> Algebra:
    basis = list(data["basis"])
    index = {lab: i for i, lab in enumerate(basis)}
    structure = {}
    for entry in data["structure"]:
        i, j = index[entry["i"]], index[entry["j"]]
        structure[(i, j)] = tuple((index[k], parse_scalar(s))
                                  for k, s in entry["out"].items())
    unit = [parse_scalar(data["unit"].get(lab, "0")) for lab in basis]
    trace = None
    if "trace" in data:
        trace = [parse_scalar(data["trace"].get(lab, "0")) for lab in basis]
    return Algebra(basis, structure, unit, trace)


def tensor2_to_json(t: Tensor2, algebra_inline: bool = True) -> dict:
    alg = t.algebra
    out = {
        "terms": [{"i": alg.basis[i], "j": alg.basis[j], "c": format_scalar(c)}
                  for (i, j), c in sorted(t.terms.items())],
    }
    out["algebra"] = algebra_to_json(alg) if algebra_inline else f"dim{alg.dim}"
    return out


def tensor2_from_json(data: dict, algebra: Optional[Algebra] = None) -> Tensor2:
    alg = algebra if algebra is not None else algebra_from_json(data["algebra"])
    terms = {}
    for entry in data["terms"]:
        key = (alg.index(entry["i"]), alg.index(entry["j"]))
        terms[key] = terms.get(key, parse_scalar("0")) + parse_scalar(entry["c"])
    return Tensor2(alg, terms)


def tensor3_to_json(t: Tensor3, algebra_inline: bool = True) -> dict:
    alg = t.algebra
    out = {
        "terms": [{"i": alg.basis[i], "j": alg.basis[j], "k": alg.basis[k],
                   "c": format_scalar(c)}
                  for (i, j, k), c in sorted(t.terms.items())],
    }
    out["algebra"] = algebra_to_json(alg) if algebra_inline else f"dim{alg.dim}"
    return out


def tensor3_from_json(data: dict, algebra: Optional[Algebra] = None) -> Tensor3:
    alg = algebra if algebra is not None else algebra_from_json(data["algebra"])
    terms = {}
    for entry in data["terms"]:
        key = (alg.index(entry["i"]), alg.index(entry["j"]), alg.index(entry["k"]))
        terms[key] = terms.get(key, parse_scalar("0")) + parse_scalar(entry["c"])
    return Tensor3(alg, terms)


def spectral_to_json(t: SpectralTensor2) -> dict:
    alg = t.algebra
    terms = []
    for (i, j), poly in sorted(t.terms.items()):
        terms.append({
            "i": alg.basis[i],
            "j": alg.basis[j],
            "poly": [{"e": list(e), "c": format_scalar(c)}
                     for e, c in sorted(poly.terms.items())],
        })
    return {"algebra": algebra_to_json(alg), "params": list(t.params), "terms": terms}


def spectral_from_json(data: dict) -> SpectralTensor2:
    alg = algebra_from_json(data["algebra"])
    params = tuple(data["params"])
    terms = {}
    for entry in data["terms"]:
        key = (alg.index(entry["i"]), alg.index(entry["j"]))
        poly = SpectralPoly(params, {tuple(m["e"]): parse_scalar(m["c"])
                                     for m in entry["poly"]})
        terms[key] = poly
    return SpectralTensor2(alg, params, terms)


def report_to_json(report) -> dict:
    out = {"identity": report.identity, "passed": report.passed}
    residual = getattr(report, "residual", None)
    if residual is None:
        out["residual_terms"] = []
    elif isinstance(residual, (Tensor2, Tensor3)):
        alg = residual.algebra
        out["residual_terms"] = [
            {"index": [alg.basis[t] for t in key], "c": format_scalar(c)}
            for key, c in sorted(residual.terms.items())]
    elif isinstance(residual, dict):  # spectral residual
        out["residual_terms"] = [
            {"index": list(key),
             "poly": [{"e": list(e), "c": format_scalar(c)}
                      for e, c in sorted(p.terms.items())]}
            for key, p in sorted(residual.items())]
    else:
        out["residual_terms"] = []
    return out


def bd_from_json(data: dict) -> BDTriple:
    tau = data.get("tau", [])
    if isinstance(tau, dict):
        tau = {int(k): int(v) for k, v in tau.items()}
    else:
        tau = {int(a): int(b) for a, b in tau}
    return BDTriple.make(int(data["n"]), [int(x) for x in data.get("gamma1", [])],
                         [int(x) for x in data.get("gamma2", [])], tau)


def bd_signs_from_json(data: dict) -> Optional[Dict[int, str]]:
    raw = data.get("diag_signs")
    if raw is None:
        return None
    out = {}
    for k, v in raw.items():
        if v not in "+-":
            raise ScalarParseError(f"bad sign {v!r}")
        out[int(k)] = v
    return out


def bd_twist_b_from_json(data: dict) -> Optional[List[List[RatQ]]]:
    raw = data.get("twist_b")
    if raw is None:
        return None
    return [[parse_scalar(s) for s in row] for row in raw]
