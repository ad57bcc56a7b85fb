"""Real quaternion algebra H, its exponential, and the strata where exp is regular.

Quaternions q = q0 + q1*i + q2*j + q3*k are stored as four 64-bit floats.
The product follows the scalar/vector split

    pq = p0*q0 - <p_v, q_v> + p0*q_v + q0*p_v + p_v ^ q_v,

from which |pq| = |p||q| and q_v^2 = -|q_v|^2.  exp is slice preserving:
exp(q) = e^{q0} (cos|q_v| + sinc(|q_v|) q_v), and restricted to the open
strata k*pi < |q_v| < (k+1)*pi it is a diffeomorphism onto H \\ R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RealAxis

#: absolute tolerance for detecting |q_v| on the singular lattice h*pi
TAU_STRATUM = 1e-9

#: below this vector norm, sin(t)/t and cos(t) switch to Taylor series
_SMALL_ANGLE = 1e-4


@dataclass(frozen=True)
class Quaternion:
    q0: float
    q1: float
    q2: float
    q3: float

    # -- algebra -------------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return Quaternion(self.q0 * other, self.q1 * other,
                          self.q2 * other, self.q3 * other)

    def __rmul__(self, other) -> "Quaternion":
        # scalar * q; quaternion * quaternion is handled by __mul__
        return Quaternion(self.q0 * other, self.q1 * other,
                          self.q2 * other, self.q3 * other)

    def __truediv__(self, scalar: float) -> "Quaternion":
        return Quaternion(self.q0 / scalar, self.q1 / scalar,
                          self.q2 / scalar, self.q3 / scalar)

    # -- structure -----------------------------------------------------

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def scalar(self) -> float:
        return self.q0

    def vec(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def vec_norm(self) -> float:
        return math.sqrt(self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3)

    def norm2(self) -> float:
        return (self.q0 * self.q0 + self.q1 * self.q1
                + self.q2 * self.q2 + self.q3 * self.q3)

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return self.conj() / n2

    def components(self) -> tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    def is_real(self, tol: float = 0.0) -> bool:
        return self.vec_norm() <= tol

    # -- slice form q = alpha + I*beta ----------------------------------

    def slice_coords(self) -> tuple[float, float, "ImagUnit | None"]:
        """Return (alpha, beta, I) with beta = |q_v| >= 0; I is None for real q."""
        beta = self.vec_norm()
        if beta == 0.0:
            return self.q0, 0.0, None
        return self.q0, beta, ImagUnit(self.q1 / beta, self.q2 / beta, self.q3 / beta)

    @staticmethod
    def from_slice_coords(alpha: float, beta: float, axis: "ImagUnit") -> "Quaternion":
        return Quaternion(alpha, beta * axis.x1, beta * axis.x2, beta * axis.x3)

    @staticmethod
    def zero() -> "Quaternion":
        return Quaternion(0.0, 0.0, 0.0, 0.0)

    @staticmethod
    def one() -> "Quaternion":
        return Quaternion(1.0, 0.0, 0.0, 0.0)


I_UNIT = Quaternion(0.0, 1.0, 0.0, 0.0)
J_UNIT = Quaternion(0.0, 0.0, 1.0, 0.0)
K_UNIT = Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class ImagUnit:
    """Point of the sphere S = {I in H | I^2 = -1} of imaginary units."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        n2 = self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
        if abs(n2 - 1.0) > 1e-9:
            raise ValueError(f"imaginary unit must have unit norm, got |I|^2 = {n2}")

    @staticmethod
    def from_vector(x1: float, x2: float, x3: float) -> "ImagUnit":
        n = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector to an imaginary unit")
        return ImagUnit(x1 / n, x2 / n, x3 / n)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x1, self.x2, self.x3)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Quaternion product p*q (scalar/vector form; |pq| = |p||q|)."""
    return Quaternion(
        p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
        p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


def _sinc(t: float) -> float:
    # sin(t)/t, Taylor below the cancellation threshold
    if abs(t) < _SMALL_ANGLE:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


def _cos_small(t: float) -> float:
    if abs(t) < _SMALL_ANGLE:
        t2 = t * t
        return 1.0 - t2 / 2.0 + t2 * t2 / 24.0
    return math.cos(t)


def quat_exp(q: Quaternion) -> Quaternion:
    """exp(q) = e^{q0} (cos|q_v| + sinc(|q_v|) q_v); smooth across the real axis."""
    beta = q.vec_norm()
    ea = math.exp(q.q0)
    c = ea * _cos_small(beta)
    s = ea * _sinc(beta)
    return Quaternion(c, s * q.q1, s * q.q2, s * q.q3)


def exp_stratum(q: Quaternion, tol: float = TAU_STRATUM) -> int | None:
    """Stratum index of q for the exponential.

    Returns k with k*pi < |q_v| < (k+1)*pi when q lies in an open stratum,
    or None when |q_v| is within ``tol`` of h*pi for some integer h >= 0
    (the singular set of exp, which includes the real axis h = 0).
    """
    beta = q.vec_norm()
    h = round(beta / math.pi)
    if abs(beta - h * math.pi) <= tol:
        return None
    return int(math.floor(beta / math.pi))


def stratum_shift(q: Quaternion) -> Quaternion:
    """Map alpha + I*beta to alpha + I*(beta + pi) (stratum k -> k+1).

    Uses the canonical slice form with beta = |q_v| > 0.  Raises
    :class:`RealAxis` for real q, where the slice axis is undefined.
    """
    beta = q.vec_norm()
    if beta == 0.0:
        raise RealAxis("stratum shift undefined for real quaternions")
    scale = (beta + math.pi) / beta
    return Quaternion(q.q0, scale * q.q1, scale * q.q2, scale * q.q3)
