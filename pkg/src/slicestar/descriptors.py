"""JSON wire formats: function descriptors, quaternions, lift points, paths.

Function descriptor grammar (the ``fn`` value of a function file):

    {"kind": "poly",  "coeffs": [[q0,q1,q2,q3], ...]}
    {"kind": "const", "value": [q0,q1,q2,q3]}
    {"kind": "add",   "args": [<descriptor>, ...]}
    {"kind": "mul",   "args": [<descriptor>, ...]}
    {"kind": "exp",   "arg": <descriptor>}

A function file is {"fn": <descriptor>, "domain": {"center": [re,im],
"radius": r, "realIntersecting": bool}}.  Quaternions are arrays
[q0,q1,q2,q3]; elements of the complexified algebra are
[[re,im],[re,im],[re,im],[re,im]]; sampled paths are
{"samples": [{"t": t, "w0": [re,im], "w1": [re,im], "s": [[re,im]x3]}]}.
"""

from __future__ import annotations

import json
from typing import Any

from .covering import LiftPoint, PathSample, SampledPath
from .cquaternion import CQuaternion
from .quaternion import Quaternion
from .slicefn import Domain, SliceFunction, constant, polynomial
from .starlog import star_exp


def quaternion_from_json(obj) -> Quaternion:
    if not isinstance(obj, (list, tuple)) or len(obj) != 4:
        raise ValueError(f"quaternion JSON must be a 4-array, got {obj!r}")
    return Quaternion(*(float(x) for x in obj))


def quaternion_to_json(q: Quaternion) -> list:
    return [q.q0, q.q1, q.q2, q.q3]


def _complex_from_json(obj) -> complex:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ValueError(f"complex JSON must be [re, im], got {obj!r}")
    return complex(float(obj[0]), float(obj[1]))


def _complex_to_json(z: complex) -> list:
    return [z.real, z.imag]


def cq_from_json(obj) -> CQuaternion:
    if not isinstance(obj, (list, tuple)) or len(obj) != 4:
        raise ValueError(f"algebra-element JSON must be a 4-array of pairs, got {obj!r}")
    return CQuaternion(*(_complex_from_json(c) for c in obj))


def cq_to_json(z: CQuaternion) -> list:
    return [_complex_to_json(c) for c in z.components()]


def _vector_from_json(obj) -> CQuaternion:
    if not isinstance(obj, (list, tuple)) or len(obj) != 3:
        raise ValueError(f"vector JSON must be 3 pairs, got {obj!r}")
    v1, v2, v3 = (_complex_from_json(c) for c in obj)
    return CQuaternion(0j, v1, v2, v3)


def _vector_to_json(s: CQuaternion) -> list:
    return [_complex_to_json(s.z1), _complex_to_json(s.z2), _complex_to_json(s.z3)]


def lift_point_from_json(obj: dict) -> LiftPoint:
    return LiftPoint(_complex_from_json(obj["u0"]), _complex_from_json(obj["u1"]),
                     _vector_from_json(obj["s"]))


def lift_point_to_json(p: LiftPoint) -> dict:
    return {"u0": _complex_to_json(p.u0), "u1": _complex_to_json(p.u1),
            "s": _vector_to_json(p.s)}


def path_from_json(obj: dict) -> SampledPath:
    samples = []
    for s in obj["samples"]:
        samples.append(PathSample(float(s["t"]), _complex_from_json(s["w0"]),
                                  _complex_from_json(s["w1"]),
                                  _vector_from_json(s["s"])))
    return SampledPath(tuple(samples))


def path_to_json(path: SampledPath) -> dict:
    return {"samples": [{"t": p.t, "w0": _complex_to_json(p.w0),
                         "w1": _complex_to_json(p.w1), "s": _vector_to_json(p.s)}
                        for p in path.samples]}


def build_function(desc: dict, domain: Domain) -> SliceFunction:
    """Build a slice function from a descriptor node on the given domain."""
    kind = desc.get("kind")
    if kind == "poly":
        coeffs = [quaternion_from_json(c) for c in desc["coeffs"]]
        return polynomial(coeffs, domain)
    if kind == "const":
        return constant(quaternion_from_json(desc["value"]), domain)
    if kind == "add":
        parts = [build_function(d, domain) for d in desc["args"]]
        out = parts[0]
        for p in parts[1:]:
            out = out + p
        return out
    if kind == "mul":
        parts = [build_function(d, domain) for d in desc["args"]]
        out = parts[0]
        for p in parts[1:]:
            out = out.star(p)
        return out
    if kind == "exp":
        return star_exp(build_function(desc["arg"], domain))
    raise ValueError(f"unknown descriptor kind {kind!r}")


def function_from_obj(obj: dict) -> SliceFunction:
    if "fn" not in obj or "domain" not in obj:
        raise ValueError('function file needs "fn" and "domain" keys')
    return build_function(obj["fn"], Domain.from_json(obj["domain"]))


def load_function(path: str) -> SliceFunction:
    with open(path) as fh:
        return function_from_obj(json.load(fh))


def function_to_obj(f: SliceFunction) -> dict[str, Any]:
    if f.node is None:
        raise ValueError("function has no closed-form descriptor")
    return {"fn": f.node, "domain": f.domain.to_json()}
