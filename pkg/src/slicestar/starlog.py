"""*-exponential, the two-parameter family of *-logarithms, and *-roots.

exp_*(f) is induced by z -> cq_exp(F(z)) and equals the *-power series
sum f^{*n}/n!.  When F avoids the loci V_-1 and V_inf (equivalently
f^s != 0 != f_v^s), the exponential of the algebra is a covering map with
Z^2 monodromy, so f has a two-parameter family of *-logarithms indexed by
BranchIndex (h1, h2): writing the fiber coordinates alpha = F0 + i m and
beta = F0 - i m with m a continuous branch of sqrt(f_v^s), the branch
(h1, h2) continues log(alpha) + 2 pi i h1 and log(beta) + 2 pi i h2 from
the anchor and induces

    G = u0 + (u1/m) * vec F,   u0 = (la + lb)/2,  u1 = (la - lb)/(2i).

On a domain meeting R the anchor is real, forcing h2 = -h1 (one-parameter
family, real values on R); on a domain off R the lift is built on the
upper component and mirrored to the lower one by G(z) = bar(G(conj z)),
which makes the result a stem function by construction.  Any two branches
differ by the translation

    g  ->  g + [(h1+h2) * (q_v/|q_v|) + (h1-h2) * g_v/sqrt(g_v^s)] * pi,

and the n-th *-root is exp_*(log_*(f)/n); branches congruent mod n give
the same root.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .continuation import BranchContinuation
from .covering import BranchIndex
from .cquaternion import CQuaternion, Locus, classify, cq_exp
from .errors import (BranchObstruction, HitsVLocus, JNotDefined, OutOfDomain,
                     PathTooWild)
from .slicefn import Domain, SliceFunction, slice_preserving

#: number of deterministic scan points for locus preconditions
SCAN_POINTS = 160


@dataclass(frozen=True)
class LogBranch:
    """Branch selector for *-logarithms: monodromy index plus anchor basepoint.

    ``real_constraint`` marks branches meant for domains meeting R, where
    only h2 = -h1 produces real values on the real axis.
    """

    h1: int
    h2: int
    basepoint: complex
    real_constraint: bool = False

    def __post_init__(self):
        if self.real_constraint and self.h1 + self.h2 != 0:
            raise JNotDefined(
                "on a domain meeting R only branches with h2 = -h1 exist")

    def index(self) -> BranchIndex:
        return BranchIndex(self.h1, self.h2)


def _anchor(domain: Domain, basepoint: complex) -> complex:
    """Continuation anchor: nearest real point for domains meeting R,
    otherwise the basepoint reflected into the upper component."""
    if not domain.contains(basepoint):
        raise OutOfDomain(f"basepoint {basepoint} outside the domain")
    if domain.real_intersecting:
        return domain.real_anchor(basepoint.real)
    return basepoint if basepoint.imag > 0 else basepoint.conjugate()


def star_exp(f: SliceFunction) -> SliceFunction:
    """exp_*(f), induced by the algebra exponential of the stem."""
    stem = f._stem
    node = {"kind": "exp", "arg": f.node} if f.node is not None else None
    return SliceFunction(lambda z: cq_exp(stem(z)), f.domain, node)


def sqrt_vsym(f: SliceFunction, basepoint: complex, sign: int = +1) -> SliceFunction:
    """Continuous branch of sqrt(f_v^s), slice preserving.

    The branch takes the value sign * principal_sqrt(f_v^s(basepoint)) at
    the basepoint (reflected to the upper component on domains off R,
    where the lower component is filled in by conjugate symmetry).
    Requires f_v^s to avoid 0 on the domain.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    dom = f.domain
    anchor = _anchor(dom, basepoint)
    stem = f._stem

    def value(z: complex) -> complex:
        return stem(z).vec_norm2()

    vals = [abs(value(z)) for z in dom.mesh_points(SCAN_POINTS)]
    scale = max(vals)
    if scale < 1e-14 or min(vals) < 1e-12 * scale:
        raise BranchObstruction("f_v^s vanishes (or nearly) on the domain; "
                                "no continuous square root")

    seed = sign * cmath.sqrt(value(anchor))

    def stepper(z0: complex, v0: complex, z1: complex):
        r = cmath.sqrt(value(z1))
        cand = r if abs(r - v0) <= abs(r + v0) else -r
        if abs(cand - v0) > 0.3 * (abs(cand) + abs(v0)):
            return None
        return cand

    cont = BranchContinuation(anchor, seed, stepper,
                              center=dom.component_center(anchor),
                              radius=dom.radius, error=BranchObstruction)

    if dom.two_sided:
        def scalar(z: complex) -> complex:
            if z.imag < 0:
                return cont.at(z.conjugate()).conjugate()
            return cont.at(z)
    else:
        scalar = cont.at

    return slice_preserving(scalar, dom)


def _check_off_loci(f: SliceFunction, extra: list[complex]) -> None:
    for z in f.domain.mesh_points(SCAN_POINTS) + extra:
        if classify(f.stem_at(z)) is not Locus.GENERIC:
            raise HitsVLocus(
                f"f^s or f_v^s vanishes near z = {z}; no *-logarithm branch")


def star_log(f: SliceFunction, branch: LogBranch) -> SliceFunction:
    """The (h1, h2) branch of the *-logarithm: exp_*(result) = f.

    Preconditions: the stem avoids V_-1 and V_inf on the whole domain
    (checked on a deterministic scan), and on domains meeting R only
    h2 = -h1 is admissible.
    """
    dom = f.domain
    anchor = _anchor(dom, branch.basepoint)
    if dom.real_intersecting and branch.h1 + branch.h2 != 0:
        raise JNotDefined("on a domain meeting R only branches with h2 = -h1 exist")
    _check_off_loci(f, [anchor, branch.basepoint])

    m = sqrt_vsym(f, branch.basepoint, +1)
    m_scalar = m.scalar_value
    stem = f._stem

    def fiber_pair(z: complex) -> tuple[complex, complex]:
        f0 = stem(z).z0
        mz = m_scalar(z)
        alpha = f0 + 1j * mz
        beta = f0 - 1j * mz
        if abs(alpha) < 1e-13 or abs(beta) < 1e-13:
            raise HitsVLocus(f"f^s vanishes near z = {z}")
        return alpha, beta

    a0, b0 = fiber_pair(anchor)
    seed = (cmath.log(a0) + 2j * math.pi * branch.h1,
            cmath.log(b0) + 2j * math.pi * branch.h2)

    def stepper(z0: complex, v0: tuple[complex, complex], z1: complex):
        a_prev, b_prev = fiber_pair(z0)
        a_next, b_next = fiber_pair(z1)
        da = cmath.log(a_next / a_prev)
        db = cmath.log(b_next / b_prev)
        if max(abs(da), abs(db)) >= math.pi / 2:
            return None
        return v0[0] + da, v0[1] + db

    cont = BranchContinuation(anchor, seed, stepper,
                              center=dom.component_center(anchor),
                              radius=dom.radius, error=PathTooWild)

    def upper_stem(z: complex) -> CQuaternion:
        la, lb = cont.at(z)
        u0 = (la + lb) / 2
        u1 = (la - lb) / 2j
        fv = stem(z)
        c = u1 / m_scalar(z)
        return CQuaternion(u0, c * fv.z1, c * fv.z2, c * fv.z3)

    if dom.two_sided:
        def log_stem(z: complex) -> CQuaternion:
            if z.imag < 0:
                return upper_stem(z.conjugate()).bar()
            return upper_stem(z)
    else:
        log_stem = upper_stem

    return SliceFunction(log_stem, dom)


def log_translate(g: SliceFunction, h1: int, h2: int) -> SliceFunction:
    """Translate a *-logarithm to another branch:

        g + [(h1+h2) * (q_v/|q_v|) + (h1-h2) * g_v/sqrt(g_v^s)] * pi.

    exp_* of the result equals exp_*(g).  On domains meeting R the
    unit-vector function does not exist, so h1 + h2 must vanish there;
    the square-root branch is anchored at the domain center.
    """
    dom = g.domain
    if h1 == 0 and h2 == 0:
        return g
    t1 = (h1 + h2) * math.pi
    t2 = (h1 - h2) * math.pi
    if dom.real_intersecting and t1 != 0.0:
        raise JNotDefined("on a domain meeting R only translations with h2 = -h1 exist")
    mg = sqrt_vsym(g, dom.center, +1)
    mg_scalar = mg.scalar_value
    stem = g._stem

    def translated(z: complex) -> CQuaternion:
        val = stem(z)
        factor = 1.0 + (t2 / mg_scalar(z) if t2 != 0.0 else 0.0)
        z0 = val.z0
        if t1 != 0.0:
            z0 = z0 + t1 * (1j if z.imag > 0 else -1j)
        return CQuaternion(z0, factor * val.z1, factor * val.z2, factor * val.z3)

    return SliceFunction(translated, dom)


def star_root(f: SliceFunction, n: int, branch: LogBranch) -> SliceFunction:
    """n-th *-root exp_*(log_*(f)/n); its n-th *-power gives back f.

    Branch indices congruent mod n (componentwise) give the same root.
    """
    if n < 1:
        raise ValueError(f"root order must be a positive integer, got {n}")
    return star_exp(star_log(f, branch) / n)
