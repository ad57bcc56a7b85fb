"""Stem functions, slice functions, the *-product and first-order operators.

A slice function f on a circular quaternionic domain is induced by a stem
function F : U -> C (x) H with the conjugate symmetry F(conj z) = bar(F(z)),
via

    f(alpha + I*beta) = F_ev(alpha + i beta) + I * F_od(alpha + i beta),

where F = F_ev + sqrt(-1) F_od splits into the componentwise real and
imaginary (quaternion-valued) parts.  The *-product is the pointwise
product of stems, the regular conjugate f^c comes from z -> F(z)^c, the
symmetrization f^s = f * f^c is slice preserving and multiplicative, and
the slice derivative is induced by dF/dz, here computed with trapezoidal
Cauchy quadrature on a circle (spectrally accurate for holomorphic F).

Stems are closed-form evaluators built from a small node algebra
(quaternion constants, the identity z, sums, products, exponentials, the
unit-vector function on domains off R), never grids, so holomorphy and
conjugate symmetry are inherited by construction.

Domains are "basic": a single disk centered on R, or the union of two
conjugate disks that avoid R.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .cquaternion import CQuaternion, cq_dot, cq_mul
from .errors import (DegenerateUnits, DomainMismatch, JNotDefined,
                     NearBoundary, NonIsolatedZero, OutOfDomain, RealAxis,
                     VanishingVectorPart)
from .quaternion import ImagUnit, Quaternion, quat_mul

#: trapezoid points for Cauchy quadrature of stem derivatives
QUAD_POINTS = 32

#: quadrature radius cap; the effective radius is min of this and half the
#: distance to the domain boundary
QUAD_RADIUS = 0.1

#: minimum boundary distance at which derivatives are still attempted
BOUNDARY_FLOOR = 1e-6


@dataclass(frozen=True)
class Domain:
    """Conjugate-symmetric basic domain in C: one disk centered on R, or a
    pair of conjugate disks off R (center stored with Im >= 0)."""

    center: complex
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("domain radius must be positive")
        c = complex(self.center)
        if c.imag < 0:
            c = c.conjugate()
        object.__setattr__(self, "center", c)
        if c.imag != 0.0 and c.imag <= self.radius:
            raise ValueError(
                "off-axis domain must clear the real axis: need Im(center) > radius")

    @property
    def real_intersecting(self) -> bool:
        return self.center.imag == 0.0

    @property
    def two_sided(self) -> bool:
        """True when the domain is a pair of conjugate disks off R."""
        return not self.real_intersecting

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        d = min(abs(z - self.center), abs(z - self.center.conjugate()))
        return d < self.radius - margin

    def boundary_distance(self, z: complex) -> float:
        """Distance from z to the boundary of its nearest component (can be < 0)."""
        d = min(abs(z - self.center), abs(z - self.center.conjugate()))
        return self.radius - d

    def component_center(self, z: complex) -> complex:
        """Center of the component nearest to z."""
        if abs(z - self.center) <= abs(z - self.center.conjugate()):
            return self.center
        return self.center.conjugate()

    def matches(self, other: "Domain", tol: float = 1e-12) -> bool:
        return (abs(self.center - other.center) <= tol
                and abs(self.radius - other.radius) <= tol)

    def mesh_points(self, n: int = 160, margin_frac: float = 0.08) -> list[complex]:
        """Deterministic points covering the domain (rings around each center)."""
        pts: list[complex] = []
        centers = [self.center]
        if self.two_sided:
            centers.append(self.center.conjugate())
        per = max(1, n // len(centers))
        rings = max(1, int(math.sqrt(per / 4)))
        rmax = self.radius * (1.0 - margin_frac)
        for c in centers:
            pts.append(c)
            remaining = per - 1
            for i in range(rings):
                r = rmax * (i + 1) / rings
                m = max(4, remaining // (rings - i)) if i < rings - 1 else remaining
                m = max(4, m)
                for k in range(m):
                    th = 2 * math.pi * (k + 0.5 * (i % 2)) / m
                    pts.append(c + r * cmath.exp(1j * th))
                remaining -= m
        if self.real_intersecting:
            # make sure the real trace is represented
            for t in (-0.9, -0.45, 0.0, 0.45, 0.9):
                pts.append(complex(self.center.real + t * rmax, 0.0))
        return pts

    def sample_points(self, rng, n: int, margin_frac: float = 0.05) -> list[complex]:
        """n random points, uniform in each component (both components used)."""
        rmax = self.radius * (1.0 - margin_frac)
        out = []
        for _ in range(n):
            r = rmax * math.sqrt(rng.uniform())
            th = rng.uniform() * 2 * math.pi
            z = self.center + r * cmath.exp(1j * th)
            if self.two_sided and rng.uniform() < 0.5:
                z = z.conjugate()
            out.append(z)
        return out

    def real_anchor(self, hint: float = 0.0, pull: float = 0.1) -> complex:
        """Real point of the domain nearest to ``hint``, kept off the boundary."""
        if not self.real_intersecting:
            raise RealAxis("domain does not meet the real axis")
        lo = self.center.real - (1.0 - pull) * self.radius
        hi = self.center.real + (1.0 - pull) * self.radius
        return complex(min(max(hint, lo), hi), 0.0)

    def to_json(self) -> dict:
        return {"center": [self.center.real, self.center.imag],
                "radius": self.radius,
                "realIntersecting": self.real_intersecting}

    @staticmethod
    def from_json(obj: dict) -> "Domain":
        c = complex(obj["center"][0], obj["center"][1])
        dom = Domain(c, float(obj["radius"]))
        if "realIntersecting" in obj and bool(obj["realIntersecting"]) != dom.real_intersecting:
            raise ValueError("realIntersecting flag inconsistent with center/radius")
        return dom


def induce_value(value: CQuaternion, q: Quaternion) -> Quaternion:
    """Evaluate the slice function with stem value ``value`` at q = alpha + I*beta."""
    beta = q.vec_norm()
    if beta == 0.0:
        return value.real_part()
    axis = q.vec() / beta
    return value.real_part() + quat_mul(axis, value.imag_part())


class SliceFunction:
    """Slice function induced by a holomorphic stem evaluator on a basic domain."""

    __slots__ = ("_stem", "domain", "node")

    def __init__(self, stem: Callable[[complex], CQuaternion], domain: Domain,
                 node: Optional[dict] = None):
        self._stem = stem
        self.domain = domain
        self.node = node

    # -- evaluation ------------------------------------------------------

    def stem_at(self, z: complex) -> CQuaternion:
        if not self.domain.contains(z, margin=-1e-12):
            raise OutOfDomain(f"{z} outside domain "
                              f"(center {self.domain.center}, radius {self.domain.radius})")
        return self._stem(z)

    def slice_point(self, q: Quaternion) -> complex:
        alpha, beta, _ = q.slice_coords()
        return complex(alpha, beta)

    def __call__(self, q: Quaternion) -> Quaternion:
        z = self.slice_point(q)
        return induce_value(self.stem_at(z), q)

    # -- algebra ---------------------------------------------------------

    def _binary_node(self, kind: str, other: "SliceFunction") -> Optional[dict]:
        if self.node is not None and other.node is not None:
            return {"kind": kind, "args": [self.node, other.node]}
        return None

    def _require_same_domain(self, other: "SliceFunction") -> None:
        if not self.domain.matches(other.domain):
            raise DomainMismatch("slice functions live on different domains")

    def __add__(self, other: "SliceFunction") -> "SliceFunction":
        self._require_same_domain(other)
        f, g = self._stem, other._stem
        return SliceFunction(lambda z: f(z) + g(z), self.domain,
                             self._binary_node("add", other))

    def __sub__(self, other: "SliceFunction") -> "SliceFunction":
        return self + (-other)

    def __neg__(self) -> "SliceFunction":
        f = self._stem
        return SliceFunction(lambda z: -f(z), self.domain)

    def star(self, other: "SliceFunction") -> "SliceFunction":
        """*-product: the slice function induced by the pointwise stem product."""
        self._require_same_domain(other)
        f, g = self._stem, other._stem
        return SliceFunction(lambda z: cq_mul(f(z), g(z)), self.domain,
                             self._binary_node("mul", other))

    def __mul__(self, other):
        if isinstance(other, SliceFunction):
            return self.star(other)
        return self.scale(float(other))

    def __rmul__(self, other) -> "SliceFunction":
        return self.scale(float(other))

    def __truediv__(self, scalar) -> "SliceFunction":
        return self.scale(1.0 / float(scalar))

    def scale(self, r: float) -> "SliceFunction":
        f = self._stem
        return SliceFunction(lambda z: f(z) * r, self.domain)

    def star_pow(self, n: int) -> "SliceFunction":
        if n < 1:
            raise ValueError("star power needs n >= 1")
        out = self
        for _ in range(n - 1):
            out = out.star(self)
        return out

    # -- derived functions -------------------------------------------------

    def conj(self) -> "SliceFunction":
        """Regular conjugate f^c, induced by z -> F(z)^c."""
        f = self._stem
        return SliceFunction(lambda z: f(z).conj(), self.domain)

    def scalar_part(self) -> "SliceFunction":
        f = self._stem
        return SliceFunction(lambda z: CQuaternion(f(z).z0, 0j, 0j, 0j), self.domain)

    def vector_part(self) -> "SliceFunction":
        f = self._stem
        return SliceFunction(lambda z: f(z).vec(), self.domain)

    def sym(self) -> "SliceFunction":
        """Symmetrization f^s = f * f^c (slice preserving)."""
        f = self._stem
        return SliceFunction(lambda z: CQuaternion(f(z).csym(), 0j, 0j, 0j), self.domain)

    def vsym(self) -> "SliceFunction":
        """Vector-part symmetrization f_v^s = F1^2 + F2^2 + F3^2 (slice preserving)."""
        f = self._stem
        return SliceFunction(lambda z: CQuaternion(f(z).vec_norm2(), 0j, 0j, 0j),
                             self.domain)

    def star_dot(self, other: "SliceFunction") -> "SliceFunction":
        """<f, g>_* = f1 g1 + f2 g2 + f3 g3, equal to (f*g^c + g*f^c)/2."""
        self._require_same_domain(other)
        f, g = self._stem, other._stem
        return SliceFunction(lambda z: CQuaternion(cq_dot(f(z), g(z)), 0j, 0j, 0j),
                             self.domain)

    def star_wedge(self, other: "SliceFunction") -> "SliceFunction":
        """f ^ g = [f, g]/2, the formal cross product of the vector parts."""
        self._require_same_domain(other)
        f, g = self._stem, other._stem
        from .cquaternion import cq_wedge
        return SliceFunction(lambda z: cq_wedge(f(z), g(z)), self.domain)

    def scalar_value(self, z: complex) -> complex:
        """Stem z0-component; the natural value of a slice-preserving function."""
        return self.stem_at(z).z0

    # -- derivatives -------------------------------------------------------

    def stem_derivative_at(self, z: complex, npts: int = QUAD_POINTS) -> CQuaternion:
        """dF/dz by trapezoidal Cauchy quadrature on a safe circle around z."""
        d = self.domain.boundary_distance(z)
        if d <= BOUNDARY_FLOOR:
            raise NearBoundary(f"{z} too close to the domain boundary for quadrature")
        r = min(QUAD_RADIUS, d / 2)
        acc = CQuaternion.zero()
        for k in range(npts):
            th = 2 * math.pi * k / npts
            w = cmath.exp(1j * th)
            acc = acc + self.stem_at(z + r * w) * w.conjugate()
        return acc / (npts * r)

    def derivative(self) -> "SliceFunction":
        """Slice derivative as a slice function (quadrature-backed stem)."""
        return SliceFunction(self.stem_derivative_at, self.domain)

    def derivative_at(self, q: Quaternion) -> Quaternion:
        z = self.slice_point(q)
        return induce_value(self.stem_derivative_at(z), q)

    def spherical_derivative_at(self, q: Quaternion) -> Quaternion:
        """F_od(alpha + i beta)/beta; constant on spheres, undefined on R."""
        beta = q.vec_norm()
        if beta == 0.0:
            raise RealAxis("spherical derivative undefined on the real axis")
        z = complex(q.q0, beta)
        return self.stem_at(z).imag_part() / beta


# -- constructors -----------------------------------------------------------


def constant(c: Quaternion, domain: Domain) -> SliceFunction:
    value = CQuaternion.from_quaternion(c)
    return SliceFunction(lambda z: value, domain,
                         {"kind": "const", "value": list(c.components())})


def polynomial(coeffs: Sequence[Quaternion], domain: Domain) -> SliceFunction:
    """Polynomial q -> sum q^n a_n with right quaternion coefficients a_n."""
    cs = [CQuaternion.from_quaternion(a) for a in coeffs]
    if not cs:
        cs = [CQuaternion.zero()]

    def stem(z: complex) -> CQuaternion:
        acc = cs[-1]
        for a in reversed(cs[:-1]):
            acc = acc * z + a
        return acc

    return SliceFunction(stem, domain,
                         {"kind": "poly", "coeffs": [list(a.components()) for a in coeffs]})


def identity(domain: Domain) -> SliceFunction:
    return polynomial([Quaternion.zero(), Quaternion.one()], domain)


def slice_preserving(fn: Callable[[complex], complex], domain: Domain,
                     node: Optional[dict] = None) -> SliceFunction:
    """Slice-preserving function from a scalar stem with f(conj z) = conj f(z)."""
    return SliceFunction(lambda z: CQuaternion(fn(z), 0j, 0j, 0j), domain, node)


def unit_vector_part(domain: Domain) -> SliceFunction:
    """The slice-preserving function q -> q_v/|q_v| (value I on each C_I^+).

    Its stem is (i*sign(Im z), 0, 0, 0), locally constant, so the domain
    must avoid the real axis.
    """
    if domain.real_intersecting:
        raise JNotDefined("q -> q_v/|q_v| needs a domain avoiding the real axis")

    def stem(z: complex) -> CQuaternion:
        return CQuaternion(1j if z.imag > 0 else -1j, 0j, 0j, 0j)

    return SliceFunction(stem, domain)


def _idempotent(domain: Domain, sign: float) -> SliceFunction:
    if domain.real_intersecting:
        raise JNotDefined("idempotents need a domain avoiding the real axis")

    def stem(z: complex) -> CQuaternion:
        s = 1.0 if z.imag > 0 else -1.0
        return CQuaternion(0.5 + 0j, sign * s * -0.5j, 0j, 0j)

    return SliceFunction(stem, domain)


def idempotent_plus(domain: Domain) -> SliceFunction:
    """(1 - J*i)/2 where J = q_v/|q_v|; a slice regular idempotent zero divisor."""
    return _idempotent(domain, +1.0)


def idempotent_minus(domain: Domain) -> SliceFunction:
    """(1 + J*i)/2; the complementary idempotent (plus * minus = 0)."""
    return _idempotent(domain, -1.0)


# -- the classical operators --------------------------------------------------


def slice_eval(f: SliceFunction, q: Quaternion) -> Quaternion:
    return f(q)


def star_mul(f: SliceFunction, g: SliceFunction) -> SliceFunction:
    return f.star(g)


def slice_derivative(f: SliceFunction, q: Quaternion) -> Quaternion:
    return f.derivative_at(q)


def spherical_derivative(f: SliceFunction, q: Quaternion) -> Quaternion:
    return f.spherical_derivative_at(q)


def representation_formula(vJ: Quaternion, vK: Quaternion,
                           J: ImagUnit, K: ImagUnit, I: ImagUnit) -> Quaternion:
    """Reconstruct f(alpha + I beta) from f(alpha + J beta) and f(alpha + K beta):

        (I - K) (J - K)^{-1} vJ  -  (I - J) (J - K)^{-1} vK.
    """
    Jq, Kq, Iq = J.as_quaternion(), K.as_quaternion(), I.as_quaternion()
    diff = Jq - Kq
    if diff.norm() < 1e-12:
        raise DegenerateUnits("representation formula needs J != K")
    inv = diff.inverse()
    left = quat_mul(Iq - Kq, quat_mul(inv, vJ))
    right = quat_mul(Iq - Jq, quat_mul(inv, vK))
    return left - right


def star_decompose(f: SliceFunction):
    """The five derived functions (f0, f_v, f^c, f^s, f_v^s)."""
    return f.scalar_part(), f.vector_part(), f.conj(), f.sym(), f.vsym()


def stem_symmetry_defect(f: SliceFunction, points: Sequence[complex]) -> float:
    """max over points of |F(conj z) - bar(F(z))| (should vanish for stems)."""
    worst = 0.0
    for z in points:
        worst = max(worst, (f.stem_at(z.conjugate()) - f.stem_at(z).bar()).norm())
    return worst


# -- orthogonal decomposition along f_v ---------------------------------------


def _cluster(points: list[complex], spacing: float) -> list[complex]:
    centers: list[list] = []
    for z in points:
        for c in centers:
            if abs(z - c[0] / c[1]) < spacing:
                c[0] += z
                c[1] += 1
                break
        else:
            centers.append([z, 1])
    return [c[0] / c[1] for c in centers]


def orth_decompose(f: SliceFunction, g: SliceFunction, *,
                   scan: int = 200, rel_tol: float = 1e-8):
    """Split g = g1 * f_v + g_perp with g1 slice preserving and <f_v, g_perp>_* = 0.

    g1 = <g_v, f_v>_* / f_v^s wherever f_v^s != 0; across isolated zeros of
    f_v^s the value is recovered by the Cauchy mean over a small circle.
    Requires f_v^s not identically zero on any component; then the wedge
    identity (f_v ^ g_perp)^s = f_v^s * g_perp_v^s holds.
    """
    f._require_same_domain(g)
    dom = f.domain
    fs = f._stem
    gs = g._stem

    pts = dom.mesh_points(scan)
    vals = [fs(z).vec_norm2() for z in pts]
    scale = max(abs(v) for v in vals)
    if scale < 1e-14:
        raise VanishingVectorPart("f_v^s vanishes identically (within tolerance)")

    zero_thresh = rel_tol * scale
    spacing = 4.0 * dom.radius / math.sqrt(max(len(pts), 1))
    zeros = _cluster([z for z, v in zip(pts, vals) if abs(v) < math.sqrt(zero_thresh * scale)],
                     spacing)

    def raw_g1(z: complex) -> complex:
        fz = fs(z)
        return cq_dot(gs(z), fz) / fz.vec_norm2()

    def g1_value(z: complex) -> complex:
        if abs(fs(z).vec_norm2()) > zero_thresh:
            return raw_g1(z)
        # Cauchy mean on a circle that stays clear of the other zeros
        others = [abs(z - z0) for z0 in zeros if abs(z - z0) > spacing / 2]
        eps = min([dom.boundary_distance(z) / 2, QUAD_RADIUS] + [d / 2 for d in others])
        for _ in range(6):
            ring = [z + eps * cmath.exp(2j * math.pi * k / QUAD_POINTS)
                    for k in range(QUAD_POINTS)]
            if all(abs(fs(w).vec_norm2()) > zero_thresh for w in ring):
                return sum(raw_g1(w) for w in ring) / QUAD_POINTS
            eps /= 2
        raise NonIsolatedZero(f"no isolated-zero circle around {z}")

    g1 = slice_preserving(g1_value, dom)
    g_perp = g - g1.star(f.vector_part())
    return g1, g_perp
