"""Products of *-exponentials (closed-form BCH) and the derivative of exp_*.

For quaternions, exp(p)exp(q) = exp(w) with w0 = p0 + q0 and w_v solved
from the cos/sin system of the product; the same closed form holds
verbatim in C (x) H with |.| replaced by sqrt of the vector
symmetrization.  At stem level, with (cf, sf) = even_trig(f_v^s) and
(cg, sg) = even_trig(g_v^s), the product of the exponential stems is
e^{f0+g0} (C + W) where

    C = cf*cg - sf*sg*<f_v, g_v>_*
    W = cf*sg*g_v + cg*sf*f_v + sf*sg*(f_v ^ g_v),

and C^2 + n(W) = 1 identically.  A *-logarithm branch of the product is
h = f0 + g0 + W / sincr(theta^2) with a continuous angle theta solving
cos(theta) = C, recovered by arccos continuation from the domain anchor.
The product fails to be a *-exponential exactly where the branch-free
obstruction

    Theta = (cf*sg*<f_v,g_v>_* + cg*sf*f_v^s)^2 + sg^2 * f_v^s * (g_perp)_v^s

vanishes (Theta equals f_v^s e^{-2(f0+g0)} (exp_* f * exp_* g)_v^s).

The slice derivative of exp_*(f) has the closed form

    d(exp_* f) = exp_*(f) * { df + A(w) [<f_v, df_v>_* f_v - w df_v]
                                   - B(w) (f_v ^ df_v) },   w = f_v^s,

with the entire coefficients A(w) = (1 - sin(2 sqrt w)/(2 sqrt w))/w and
B(w) = (1 - cos(2 sqrt w))/(2w); A(0) = 2/3 and B(0) = 1 reproduce the
degenerate-point formula, so the expression is smooth across f_v^s = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

from .continuation import BranchContinuation
from .cquaternion import (CQuaternion, cq_dot, cq_exp, cq_mul, cq_wedge,
                          even_trig)
from .errors import (BadExampleInput, DegenerateAngle, NotExponential,
                     VanishingVectorPart)
from .quaternion import J_UNIT, Quaternion
from .slicefn import SliceFunction, constant, idempotent_plus, induce_value
from .starlog import _anchor, star_exp

#: admissibility threshold on the obstruction value
TAU_BCH = 1e-8

#: |f_v^s| below which the derivative reports the degenerate regime
TAU_DEG = 1e-6

#: clearance required of f_v^s, g_v^s from the lattice {n^2 pi^2}
TAU_LATTICE = 1e-8

#: points of the deterministic condition scan
CONDITION_SAMPLES = 64


@dataclass
class BCHReport:
    """Outcome of the exponential-product admissibility scan."""

    points: list[complex]
    values: list[complex]
    min_abs: float
    lattice_ok: bool
    commuting: bool
    admissible: bool
    tol: float = TAU_BCH
    h: Optional[SliceFunction] = field(default=None, repr=False)


def _lattice_distance(v: complex) -> float:
    """Distance of v from the real lattice {n^2 pi^2 : n = 0, 1, 2, ...}."""
    best = abs(v)
    if v.real > 0:
        n = round(math.sqrt(v.real) / math.pi)
        for k in (n - 1, n, n + 1):
            if k >= 0:
                best = min(best, abs(v - (k * math.pi) ** 2))
    return best


def product_vsym(f: SliceFunction, g: SliceFunction, q: Quaternion, *,
                 decomposition=None) -> complex:
    """(f*g)_v^s at q in closed form:

        (f0 g1 + g0)^2 f_v^s + f^s (g_perp)_v^s,

    with g = g1 f_v + g_perp the orthogonal split along f_v.  Equals the
    directly computed (f*g)_v^s; needs f_v^s(q) != 0.
    """
    from .slicefn import orth_decompose
    z = f.slice_point(q)
    fz = f.stem_at(z)
    gz = g.stem_at(z)
    fvs = fz.vec_norm2()
    if abs(fvs) < 1e-12:
        raise VanishingVectorPart(f"f_v^s({q}) ~ 0; decomposition undefined")
    if decomposition is None:
        decomposition = orth_decompose(f, g)
    g1, _ = decomposition
    g1z = g1.scalar_value(z)
    perp = gz.vec() - g1z * fz.vec()
    return (fz.z0 * g1z + gz.z0) ** 2 * fvs + fz.csym() * perp.vec_norm2()


def vanishing_vsym_partner(f: SliceFunction) -> SliceFunction:
    """Build g with (f*g)_v^s identically zero but g^s != 0.

    Requires a domain off R and f preserving the slice C_i, i.e.
    f = f0 + f1 i with f0^2 + f1^2 != 0 != f1; then g = -f^c + l_+ * j
    works because (f * l_+ * j) has zero-divisor symmetrization.
    """
    dom = f.domain
    if dom.real_intersecting:
        raise BadExampleInput("the construction needs a domain off the real axis")
    pts = dom.mesh_points(80)
    vals = [f.stem_at(z) for z in pts]
    scale = max(v.norm() for v in vals) or 1.0
    if max(abs(v.z2) + abs(v.z3) for v in vals) > 1e-10 * scale:
        raise BadExampleInput("f must be C_i-preserving (components j, k vanish)")
    if max(abs(v.z1) for v in vals) < 1e-10 * scale:
        raise BadExampleInput("f must have non-vanishing i component")
    if min(abs(v.csym()) for v in vals) < 1e-10 * scale ** 2:
        raise BadExampleInput("f^s must not vanish")
    return -f.conj() + idempotent_plus(dom).star(constant(J_UNIT, dom))


def _condition_data(f: SliceFunction, g: SliceFunction, z: complex):
    fz = f.stem_at(z)
    gz = g.stem_at(z)
    fvs = fz.vec_norm2()
    gvs = gz.vec_norm2()
    if abs(fvs) < 1e-12:
        raise VanishingVectorPart(f"f_v^s ~ 0 at z = {z}")
    ef = even_trig(fvs)
    eg = even_trig(gvs)
    dot = cq_dot(fz, gz)
    perp = gz.vec() - (dot / fvs) * fz.vec()
    theta = ((ef.cosr * eg.sincr * dot + eg.cosr * ef.sincr * fvs) ** 2
             + eg.sincr ** 2 * fvs * perp.vec_norm2())
    return theta, fvs, gvs, cq_wedge(fz, gz).norm(), max(fz.norm(), gz.norm())


def bch_condition(f: SliceFunction, g: SliceFunction, *,
                  tol: float = TAU_BCH,
                  samples: int = CONDITION_SAMPLES) -> BCHReport:
    """Scan the obstruction Theta; the product of the *-exponentials is a
    *-exponential when Theta stays away from zero (and the vector
    symmetrizations keep clear of the lattice {n^2 pi^2})."""
    f._require_same_domain(g)
    pts = f.domain.mesh_points(samples)
    values = []
    lattice_ok = True
    wedge_max = 0.0
    scale_max = 1.0
    for z in pts:
        theta, fvs, gvs, wedge, scale = _condition_data(f, g, z)
        values.append(theta)
        wedge_max = max(wedge_max, wedge)
        scale_max = max(scale_max, scale)
        if min(_lattice_distance(fvs), _lattice_distance(gvs)) < TAU_LATTICE:
            lattice_ok = False
    min_abs = min(abs(v) for v in values)
    commuting = wedge_max < 1e-12 * scale_max ** 2
    return BCHReport(points=pts, values=values, min_abs=min_abs,
                     lattice_ok=lattice_ok, commuting=commuting,
                     admissible=lattice_ok and min_abs >= tol, tol=tol)


def bch_combine(f: SliceFunction, g: SliceFunction, *,
                report: Optional[BCHReport] = None) -> SliceFunction:
    """Solve exp_*(f) * exp_*(g) = exp_*(h) for h.

    Commuting pairs (f_v ^ g_v = 0) give h = f + g.  Otherwise h0 = f0+g0
    and h_v = W / sincr(theta^2) with theta the continued solution of
    cos(theta) = C; the angle branch is seeded with the principal arccos
    at the domain anchor, which is real on domains meeting R, so the
    result is a stem function.
    """
    f._require_same_domain(g)
    if report is None:
        report = bch_condition(f, g)
    if report.commuting:
        h = f + g
        report.h = h
        return h
    if not report.admissible:
        raise NotExponential(
            f"obstruction reaches {report.min_abs:.3e} (tol {report.tol:.1e}); "
            "the product is not a *-exponential on this domain")

    dom = f.domain
    fstem, gstem = f._stem, g._stem

    def cw(z: complex) -> tuple[complex, CQuaternion]:
        fz = fstem(z)
        gz = gstem(z)
        ef = even_trig(fz.vec_norm2())
        eg = even_trig(gz.vec_norm2())
        c = ef.cosr * eg.cosr - ef.sincr * eg.sincr * cq_dot(fz, gz)
        w = (gz.vec() * (ef.cosr * eg.sincr) + fz.vec() * (eg.cosr * ef.sincr)
             + cq_wedge(fz, gz) * (ef.sincr * eg.sincr))
        return c, w

    anchor = _anchor(dom, dom.center)
    seed = cmath.acos(cw(anchor)[0])

    def stepper(z0: complex, th0: complex, z1: complex):
        c1 = cw(z1)[0]
        base = cmath.acos(c1)
        best = None
        for sign in (1.0, -1.0):
            for k in range(-2, 3):
                cand = sign * base + 2 * math.pi * k
                if best is None or abs(cand - th0) < abs(best - th0):
                    best = cand
        if abs(best - th0) > 0.5:
            return None
        return best

    cont = BranchContinuation(anchor, seed, stepper,
                              center=dom.component_center(anchor),
                              radius=dom.radius, error=DegenerateAngle)

    def upper_stem(z: complex) -> CQuaternion:
        c, w = cw(z)
        theta = cont.at(z)
        ratio = even_trig(theta * theta).sincr   # sin(theta)/theta
        if abs(ratio) < 1e-9:
            raise DegenerateAngle(
                f"sin(theta)/theta ~ 0 at z = {z}; vector part not recoverable")
        hv = w / ratio
        h0 = fstem(z).z0 + gstem(z).z0
        return CQuaternion(h0 + hv.z0, hv.z1, hv.z2, hv.z3)

    if dom.two_sided:
        def stem(z: complex) -> CQuaternion:
            if z.imag < 0:
                return upper_stem(z.conjugate()).bar()
            return upper_stem(z)
    else:
        stem = upper_stem

    h = SliceFunction(stem, dom)
    report.h = h
    return h


# -- derivative of the *-exponential -----------------------------------------


def _coeff_a(w: complex) -> complex:
    """(1 - sin(2 sqrt w)/(2 sqrt w))/w, entire; A(0) = 2/3."""
    if abs(w) < 1.0:
        total = 0j
        term = 2.0 / 3.0          # h = 1: 4/3! = 2/3
        for h in range(1, 30):
            total += term
            term *= -4.0 * w / ((2 * h + 2) * (2 * h + 3))
            if abs(term) < 1e-18:
                break
        return total
    r = cmath.sqrt(w)
    return (1 - cmath.sin(2 * r) / (2 * r)) / w


def _coeff_b(w: complex) -> complex:
    """(1 - cos(2 sqrt w))/(2w), entire; B(0) = 1."""
    if abs(w) < 1.0:
        total = 0j
        term = 1.0                # h = 1: 2/2! = 1
        for h in range(1, 30):
            total += term
            term *= -4.0 * w / ((2 * h + 1) * (2 * h + 2))
            if abs(term) < 1e-18:
                break
        return total
    r = cmath.sqrt(w)
    return (1 - cmath.cos(2 * r)) / (2 * w)


def exp_derivative_bracket(fz: CQuaternion, dz: CQuaternion) -> CQuaternion:
    """The bracket { df + A(w)[<f_v,df_v> f_v - w df_v] - B(w) f_v ^ df_v }."""
    w = fz.vec_norm2()
    dot = cq_dot(fz, dz)
    a = _coeff_a(w)
    b = _coeff_b(w)
    radial = fz.vec() * (a * dot) - dz.vec() * (a * w)
    return dz + radial - cq_wedge(fz, dz) * b


def star_exp_derivative_stem(f: SliceFunction, z: complex) -> CQuaternion:
    """Stem value of the slice derivative of exp_*(f) at z (closed form)."""
    fz = f.stem_at(z)
    dz = f.stem_derivative_at(z)
    return cq_mul(cq_exp(fz), exp_derivative_bracket(fz, dz))


def star_exp_derivative(f: SliceFunction, q: Quaternion) -> Quaternion:
    """Slice derivative of exp_*(f) at q, via the closed commutator form.

    The coefficient functions are evaluated through even series in
    w = f_v^s, so the formula is branch-free and smooth across w = 0,
    where it reduces to df - f_v ^ df_v + (2/3) <f_v, df_v>_* f_v.
    """
    z = f.slice_point(q)
    return induce_value(star_exp_derivative_stem(f, z), q)


def degenerate_regime(f: SliceFunction, q: Quaternion, tol: float = TAU_DEG) -> bool:
    """Whether q sits in the degenerate band |f_v^s| < tol of the derivative."""
    z = f.slice_point(q)
    return abs(f.stem_at(z).vec_norm2()) < tol
