"""The complexified algebra C (x) H, identified with C^4.

Elements z = z0 + z1*i + z2*j + z3*k with complex coordinates multiply by
the same scalar/vector formula as quaternions.  Two commuting conjugations
exist: z^c negates the vector part, bar(z) conjugates each component.
The scalar z*z^c = z0^2 + n(z) with n(z) = z1^2 + z2^2 + z3^2 plays the
role of the squared norm and is multiplicative:

    (zw)(zw)^c = (z z^c)(w w^c).

Unlike H, the algebra has zero divisors; they live on the quadric loci
V_-1 = {z0^2 + n(z) = 0} and V_inf = {n(z) = 0}, which are exactly the
values the exponential cannot take.

All trigonometric evaluations of sqrt(n(z)) go through the even pair
(cos(sqrt w), sin(sqrt w)/sqrt w), which depends on w only, so no square
root branch is ever chosen.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .quaternion import Quaternion

#: absolute tolerance for membership in the V_-1 / V_inf loci
TAU_CLASSIFY = 1e-10

#: |w| below which the even trig pair is summed as a series
_SERIES_RADIUS = 1.0
_SERIES_MAX_TERMS = 25


@dataclass(frozen=True)
class CQuaternion:
    z0: complex
    z1: complex
    z2: complex
    z3: complex

    # -- algebra -------------------------------------------------------

    def __add__(self, other: "CQuaternion") -> "CQuaternion":
        return CQuaternion(self.z0 + other.z0, self.z1 + other.z1,
                           self.z2 + other.z2, self.z3 + other.z3)

    def __sub__(self, other: "CQuaternion") -> "CQuaternion":
        return CQuaternion(self.z0 - other.z0, self.z1 - other.z1,
                           self.z2 - other.z2, self.z3 - other.z3)

    def __neg__(self) -> "CQuaternion":
        return CQuaternion(-self.z0, -self.z1, -self.z2, -self.z3)

    def __mul__(self, other):
        if isinstance(other, CQuaternion):
            return cq_mul(self, other)
        return CQuaternion(self.z0 * other, self.z1 * other,
                           self.z2 * other, self.z3 * other)

    def __rmul__(self, other) -> "CQuaternion":
        return CQuaternion(self.z0 * other, self.z1 * other,
                           self.z2 * other, self.z3 * other)

    def __truediv__(self, scalar: complex) -> "CQuaternion":
        return CQuaternion(self.z0 / scalar, self.z1 / scalar,
                           self.z2 / scalar, self.z3 / scalar)

    # -- conjugations and invariants ------------------------------------

    def conj(self) -> "CQuaternion":
        """Quaternionic conjugation z^c = z0 - vec(z)."""
        return CQuaternion(self.z0, -self.z1, -self.z2, -self.z3)

    def bar(self) -> "CQuaternion":
        """Componentwise complex conjugation."""
        return CQuaternion(self.z0.conjugate(), self.z1.conjugate(),
                           self.z2.conjugate(), self.z3.conjugate())

    def scalar(self) -> complex:
        return self.z0

    def vec(self) -> "CQuaternion":
        return CQuaternion(0j, self.z1, self.z2, self.z3)

    def vec_norm2(self) -> complex:
        """n(z) = z1^2 + z2^2 + z3^2 (a complex scalar, not a norm)."""
        return self.z1 * self.z1 + self.z2 * self.z2 + self.z3 * self.z3

    def csym(self) -> complex:
        """z z^c = z0^2 + n(z)."""
        return self.z0 * self.z0 + self.vec_norm2()

    def norm(self) -> float:
        """Euclidean norm of C^4, used for all tolerances."""
        return math.sqrt(abs(self.z0) ** 2 + abs(self.z1) ** 2
                         + abs(self.z2) ** 2 + abs(self.z3) ** 2)

    def components(self) -> tuple[complex, complex, complex, complex]:
        return (self.z0, self.z1, self.z2, self.z3)

    # -- embedding of H --------------------------------------------------

    @staticmethod
    def from_quaternion(q: Quaternion) -> "CQuaternion":
        return CQuaternion(complex(q.q0), complex(q.q1), complex(q.q2), complex(q.q3))

    def real_part(self) -> Quaternion:
        return Quaternion(self.z0.real, self.z1.real, self.z2.real, self.z3.real)

    def imag_part(self) -> Quaternion:
        return Quaternion(self.z0.imag, self.z1.imag, self.z2.imag, self.z3.imag)

    @staticmethod
    def zero() -> "CQuaternion":
        return CQuaternion(0j, 0j, 0j, 0j)

    @staticmethod
    def one() -> "CQuaternion":
        return CQuaternion(1 + 0j, 0j, 0j, 0j)


def cq_mul(z: CQuaternion, w: CQuaternion) -> CQuaternion:
    """Product in C (x) H (formally the quaternion product over C)."""
    return CQuaternion(
        z.z0 * w.z0 - z.z1 * w.z1 - z.z2 * w.z2 - z.z3 * w.z3,
        z.z0 * w.z1 + z.z1 * w.z0 + z.z2 * w.z3 - z.z3 * w.z2,
        z.z0 * w.z2 - z.z1 * w.z3 + z.z2 * w.z0 + z.z3 * w.z1,
        z.z0 * w.z3 + z.z1 * w.z2 - z.z2 * w.z1 + z.z3 * w.z0,
    )


def cq_dot(z: CQuaternion, w: CQuaternion) -> complex:
    """Formal Euclidean product of the vector parts: z1 w1 + z2 w2 + z3 w3."""
    return z.z1 * w.z1 + z.z2 * w.z2 + z.z3 * w.z3


def cq_wedge(z: CQuaternion, w: CQuaternion) -> CQuaternion:
    """Formal cross product of the vector parts (a pure vector element)."""
    return CQuaternion(
        0j,
        z.z2 * w.z3 - z.z3 * w.z2,
        z.z3 * w.z1 - z.z1 * w.z3,
        z.z1 * w.z2 - z.z2 * w.z1,
    )


class Locus(Enum):
    GENERIC = "generic"
    V_MINUS1 = "v_minus1"
    V_INF = "v_inf"
    BOTH = "both"


def classify(z: CQuaternion, tol: float = TAU_CLASSIFY) -> Locus:
    """Membership of z in the zero-divisor loci V_-1 and V_inf."""
    in_vm1 = abs(z.csym()) <= tol
    in_vinf = abs(z.vec_norm2()) <= tol
    if in_vm1 and in_vinf:
        return Locus.BOTH
    if in_vm1:
        return Locus.V_MINUS1
    if in_vinf:
        return Locus.V_INF
    return Locus.GENERIC


@dataclass(frozen=True)
class EvenTrigPair:
    """Values of cos(sqrt w) and sin(sqrt w)/sqrt w; satisfies cosr^2 + w*sincr^2 = 1."""

    cosr: complex
    sincr: complex


def even_trig(w: complex) -> EvenTrigPair:
    """Branch-free evaluation of (cos(sqrt w), sin(sqrt w)/sqrt w).

    Both functions are even in sqrt(w), hence single-valued in w.  Near
    w = 0 the power series avoids the 0/0 cancellation of sin(sqrt w)/sqrt w.
    """
    w = complex(w)
    if abs(w) < _SERIES_RADIUS:
        cosr = 1 + 0j
        sincr = 1 + 0j
        term_c = 1 + 0j
        term_s = 1 + 0j
        for m in range(1, _SERIES_MAX_TERMS + 1):
            term_c *= -w / ((2 * m - 1) * (2 * m))
            term_s *= -w / ((2 * m) * (2 * m + 1))
            cosr += term_c
            sincr += term_s
            if abs(term_c) < 1e-18 and abs(term_s) < 1e-18:
                break
        return EvenTrigPair(cosr, sincr)
    r = cmath.sqrt(w)
    return EvenTrigPair(cmath.cos(r), cmath.sin(r) / r)


def cq_pow(z: CQuaternion, n: int) -> CQuaternion:
    """n-th power of z in C (x) H, via the two-term polynomial recurrence.

    z^m = p0 + p1 * vec(z) with p0, p1 polynomials in (z0, n(z)); the
    recurrence p0' = z0*p0 - n(z)*p1, p1' = p0 + z0*p1 follows from
    z^{m+1} = z * z^m and is numerically stable.
    """
    if n < 1:
        raise ValueError(f"power must be a positive integer, got {n}")
    x = z.z0
    w = z.vec_norm2()
    p0, p1 = 1 + 0j, 0j
    for _ in range(n):
        p0, p1 = x * p0 - w * p1, p0 + x * p1
    return CQuaternion(p0, p1 * z.z1, p1 * z.z2, p1 * z.z3)


def cq_exp(z: CQuaternion) -> CQuaternion:
    """Exponential of C (x) H: e^{z0} (cos(sqrt n(z)) + sin(sqrt n(z))/sqrt n(z) * vec z).

    Restricts to quat_exp on real-embedded inputs and is invariant under
    adding 2*pi*1j to z0 (the scalar deck shift).
    """
    et = even_trig(z.vec_norm2())
    e0 = cmath.exp(z.z0)
    c = e0 * et.cosr
    s = e0 * et.sincr
    return CQuaternion(c, s * z.z1, s * z.z2, s * z.z3)


def cq_sinc(z: CQuaternion) -> CQuaternion:
    """The entire function sum_m (-1)^m z^m / (2m+1)! on the algebra.

    On complex scalars this is sin(sqrt z)/sqrt z; on the algebra it
    satisfies cq_sinc(z*z) * z = sin(z), the power-series sine.  Summed
    through the same scalar/vector recurrence as cq_pow, so no branch of
    sqrt is involved; cq_sinc(0) = 1.
    """
    x = z.z0
    w = z.vec_norm2()
    a, b = 1 + 0j, 0j            # z^m = a + b*vec(z)
    coeff = 1.0                  # (-1)^m / (2m+1)!
    sum_a, sum_b = 1 + 0j, 0j
    scale = max(1.0, abs(x) + math.sqrt(abs(w)))
    for m in range(1, 90):
        a, b = x * a - w * b, a + x * b
        coeff /= -((2 * m) * (2 * m + 1))
        ta = coeff * a
        tb = coeff * b
        sum_a += ta
        sum_b += tb
        if (abs(ta) + abs(tb) * scale) < 1e-18:
            break
    return CQuaternion(sum_a, sum_b * z.z1, sum_b * z.z2, sum_b * z.z3)
