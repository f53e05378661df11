"""JSON forms for every on-disk object.

Readers validate field presence and type and raise ValueError naming the
offending field; writers emit plain dicts whose numbers round-trip (Python's
float repr).
"""

from __future__ import annotations

import json

import numpy as np

from .associated import HankelMatrix, PlaneTensor
from .core import HankelTensor
from .vandermonde import DiscreteMeasure, VandermondeDecomposition


def _require(doc, name, kinds, where):
    if not isinstance(doc, dict):
        raise ValueError(f"{where}: expected a JSON object")
    if name not in doc:
        raise ValueError(f"{where}: missing field '{name}'")
    val = doc[name]
    if isinstance(val, bool) or not isinstance(val, kinds):
        raise ValueError(f"{where}: field '{name}' has the wrong type")
    return val


def _number_list(doc, name, where):
    val = _require(doc, name, list, where)
    out = []
    for i, x in enumerate(val):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ValueError(f"{where}: field '{name}' entry {i} is not a number")
        out.append(float(x))
    return np.array(out)


def tensor_to_dict(a):
    return {"order": a.order, "dim": a.dim, "gen": np.asarray(a.gen).tolist()}


def tensor_from_dict(doc):
    order = _require(doc, "order", int, "tensor")
    dim = _require(doc, "dim", int, "tensor")
    gen = _number_list(doc, "gen", "tensor")
    return HankelTensor(order, dim, gen)


def matrix_to_dict(hm):
    return {
        "size": hm.size,
        "w": np.asarray(hm.w).tolist(),
        "completion": hm.completion,
    }


def matrix_from_dict(doc):
    size = _require(doc, "size", int, "matrix")
    w = _number_list(doc, "w", "matrix")
    completion = doc.get("completion")
    if completion is not None and (isinstance(completion, bool) or not isinstance(completion, (int, float))):
        raise ValueError("matrix: field 'completion' has the wrong type")
    return HankelMatrix(size, w, None if completion is None else float(completion))


def plane_to_dict(p):
    return {"degree": p.degree, "p": np.asarray(p.coeffs).tolist()}


def plane_from_dict(doc):
    degree = _require(doc, "degree", int, "plane")
    coeffs = _number_list(doc, "p", "plane")
    return PlaneTensor(degree, coeffs)


def decomposition_to_dict(d):
    return {
        "terms": [
            {"node": float(u), "coeff": float(c)}
            for u, c in zip(np.asarray(d.nodes), np.asarray(d.coeffs))
        ]
    }


def decomposition_from_dict(doc):
    terms = _require(doc, "terms", list, "decomposition")
    nodes, coeffs = [], []
    for i, term in enumerate(terms):
        where = f"decomposition terms[{i}]"
        nodes.append(float(_require(term, "node", (int, float), where)))
        coeffs.append(float(_require(term, "coeff", (int, float), where)))
    return VandermondeDecomposition(np.array(nodes), np.array(coeffs))


def measure_to_dict(mu):
    return {"nodes": np.asarray(mu.nodes).tolist(), "weights": np.asarray(mu.weights).tolist()}


def measure_from_dict(doc):
    nodes = _number_list(doc, "nodes", "measure")
    weights = _number_list(doc, "weights", "measure")
    return DiscreteMeasure(nodes, weights)


def eigenpair_to_dict(pair):
    return {
        "kind": pair.kind,
        "value": pair.value,
        "vector": np.asarray(pair.vector).tolist(),
        "converged": pair.converged,
        "residual": pair.residual,
    }


def report_to_dict(report):
    return {
        "copositive": report.is_copositive,
        "witness_t": report.witness_t,
        "min_phi": report.min_phi,
        "critical_points": [float(t) for t in report.critical_points],
    }


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc
