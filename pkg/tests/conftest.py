"""Shared helpers: random generators and independent oracles."""

from __future__ import annotations

import math

import numpy as np
import pytest

from slicestar import (CQuaternion, Domain, Quaternion, constant, cq_mul,
                       polynomial, quat_mul)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_quat(rng, scale=1.0) -> Quaternion:
    return Quaternion(*(scale * rng.standard_normal(4)))


def rand_cq(rng, scale=1.0) -> CQuaternion:
    v = scale * (rng.standard_normal(4) + 1j * rng.standard_normal(4))
    return CQuaternion(*v)


def rand_unit_axis(rng):
    from slicestar import ImagUnit
    v = rng.standard_normal(3)
    return ImagUnit.from_vector(*v)


def quat_exp_series(q: Quaternion, terms: int = 40) -> Quaternion:
    """Truncated series sum q^n / n!, an oracle independent of quat_exp."""
    acc = Quaternion.one()
    power = Quaternion.one()
    fact = 1.0
    for n in range(1, terms):
        power = quat_mul(power, q)
        fact *= n
        acc = acc + power / fact
    return acc


def cq_exp_series(z: CQuaternion, terms: int = 60) -> CQuaternion:
    acc = CQuaternion.one()
    power = CQuaternion.one()
    fact = 1.0
    for n in range(1, terms):
        power = cq_mul(power, z)
        fact *= n
        acc = acc + power / fact
    return acc


def left_mul_matrix(p: Quaternion) -> np.ndarray:
    """4x4 real matrix of left multiplication by p."""
    return np.array([
        [p.q0, -p.q1, -p.q2, -p.q3],
        [p.q1, p.q0, -p.q3, p.q2],
        [p.q2, p.q3, p.q0, -p.q1],
        [p.q3, -p.q2, p.q1, p.q0],
    ])


def poly_eval_direct(coeffs, q: Quaternion) -> Quaternion:
    """sum q^n a_n by repeated quaternion multiplication."""
    acc = Quaternion.zero()
    power = Quaternion.one()
    for a in coeffs:
        acc = acc + quat_mul(power, a)
        power = quat_mul(power, q)
    return acc


def poly_convolve(a_coeffs, b_coeffs):
    """Coefficients of the *-product of two right-coefficient polynomials."""
    out = [Quaternion.zero() for _ in range(len(a_coeffs) + len(b_coeffs) - 1)]
    for n, a in enumerate(a_coeffs):
        for m, b in enumerate(b_coeffs):
            out[n + m] = out[n + m] + quat_mul(a, b)
    return out


def rand_poly(rng, dom: Domain, scale=0.6, deg=1, extra=0.15):
    coeffs = [rand_quat(rng, scale)]
    for _ in range(deg):
        coeffs.append(rand_quat(rng, extra * scale))
    return polynomial(coeffs, dom)


def generic_poly(rng, dom: Domain, deg=2, tries=60):
    """Random polynomial whose stem stays clear of V_-1 and V_inf."""
    for _ in range(tries):
        base = rand_quat(rng, 1.0)
        base = Quaternion(base.q0, *(v + math.copysign(0.6, v)
                                     for v in (base.q1, base.q2, base.q3)))
        f = constant(base, dom) + rand_poly(rng, dom, scale=1.0, deg=deg,
                                            extra=0.08) * 0.2
        vals = [f.stem_at(z) for z in dom.mesh_points(80)]
        if min(abs(v.csym()) for v in vals) > 0.05 and \
           min(abs(v.vec_norm2()) for v in vals) > 0.05:
            return f
    raise RuntimeError("no generic polynomial found")
