"""Boundary Cayley transform between the group and the octonionic sphere.

The sphere S is the unit sphere in O^2 = R^16; a point is a pair
(zeta1, zeta2) of octonions with |zeta1|^2 + |zeta2|^2 = 1.  All
octonion quotients A/B below are taken as left division B^-1 A; this
is the order under which the sphere distance transforms exactly into
the group distance (the right-division variant fails that identity
already in the associative subalgebra).
"""

from __future__ import annotations

import math

import numpy as np

from . import octonion as oc
from .nilgroup import Q, GroupElement
from .octonion import Octonion

__all__ = [
    "SpherePoint",
    "cayley",
    "cayley_inv",
    "jac_cayley",
    "jac_cayley_sphere",
    "sdist",
    "sdist_arrays",
    "hermitian_pairing",
    "lift_function",
    "lower_function",
    "NORTH_POLE",
    "SOUTH_POLE",
]


class SpherePoint:
    """Unit vector in O^2, stored as two octonions."""

    __slots__ = ("zeta1", "zeta2")

    def __init__(self, zeta1: Octonion, zeta2: Octonion, check: bool = True):
        self.zeta1 = zeta1
        self.zeta2 = zeta2
        if check:
            r = zeta1.norm() ** 2 + zeta2.norm() ** 2
            if abs(r - 1.0) > 1e-10:
                raise ValueError(f"not a unit vector: |zeta|^2 = {r}")

    @classmethod
    def from_vector(cls, v, check=True):
        v = np.asarray(v, dtype=float)
        return cls(Octonion(v[:8]), Octonion(v[8:]), check=check)

    def as_vector(self):
        return np.concatenate([self.zeta1.c, self.zeta2.c])

    def __repr__(self):
        return f"SpherePoint({self.zeta1.c.tolist()}, {self.zeta2.c.tolist()})"


NORTH_POLE = SpherePoint(Octonion.zero(), Octonion.unit(0))
SOUTH_POLE = SpherePoint(Octonion.zero(), -Octonion.unit(0))


def cayley(u: GroupElement) -> SpherePoint:
    """Map a group element to the sphere minus the south pole."""
    z2 = u.z.norm() ** 2
    t = u.t.as_octonion()
    w = Octonion.from_real(1.0 + z2) - t  # 1 + |z|^2 - t, real part >= 1
    winv = w.inv()
    zeta1 = winv * (2.0 * u.z)
    zeta2 = winv * (Octonion.from_real(1.0 - z2) + t)
    return SpherePoint(zeta1, zeta2)


def cayley_inv(zeta: SpherePoint) -> GroupElement:
    """Inverse boundary transform; the south pole is the point at infinity."""
    one_plus = Octonion.from_real(1.0) + zeta.zeta2
    if one_plus.norm() < 1e-14:
        raise ZeroDivisionError("Cayley inverse undefined at the south pole")
    q = one_plus.inv()
    z = q * zeta.zeta1
    t = -(q * (Octonion.from_real(1.0) - zeta.zeta2)).im()
    return GroupElement(z, t)


def jac_cayley(u: GroupElement) -> float:
    """Jacobian determinant of the transform, 2^(Q-7) ((1+|z|^2)^2 + |t|^2)^(-Q/2)."""
    w = (1.0 + u.z.norm() ** 2) ** 2 + u.t.norm() ** 2
    return 2.0 ** (Q - 7) * w ** (-Q / 2)


def jac_cayley_sphere(zeta: SpherePoint) -> float:
    """The same Jacobian in sphere coordinates, 2^-7 |1 + zeta2|^Q."""
    return 2.0 ** (-7) * (Octonion.from_real(1.0) + zeta.zeta2).norm() ** Q


def hermitian_pairing(zeta: SpherePoint, eta: SpherePoint) -> Octonion:
    """The component-wise pairing zeta1 conj(eta1) + zeta2 conj(eta2).

    Its modulus and real part give the polar angles used by the zonal
    calculus.  Because octonion multiplication is non-associative this
    plain sum is *not* the quantity entering the sphere distance for
    two generic points; see :func:`sdist`.
    """
    return zeta.zeta1 * eta.zeta1.conj() + zeta.zeta2 * eta.zeta2.conj()


def sdist(zeta: SpherePoint, eta: SpherePoint) -> float:
    """Sphere distance 2^(-1/2) |1 - zeta . conj(eta)|^(1/2).

    The product zeta . conj(eta) keeps each term bracketed with the
    unit phases a = conj(1+zeta2)/|1+zeta2| and b = (1+eta2)/|1+eta2|
    of the suppressed quotient denominators:

        1 - zeta . conj(eta)  :=  a b - (a zeta1)(conj(eta1) b)
                                      - (a zeta2)(conj(eta2) b).

    In an associative algebra the phases cancel and this reduces to
    1 - zeta1 conj(eta1) - zeta2 conj(eta2); for octonions only the
    bracketed form satisfies the exact exchange identity with the
    group distance, d_S = d_G(u,v) / (W(u) W(v))^(1/4) with
    W(u) = (1+|z|^2)^2 + |t|^2.  When either argument is a pole the
    continuous limit is used.  On the zonal slice (eta = north pole)
    the corrected and plain formulas coincide.
    """
    one = Octonion.from_real(1.0)
    oz = one + zeta.zeta2
    oe = one + eta.zeta2
    nz, ne = oz.norm(), oe.norm()
    if nz < 1e-14:
        return math.sqrt((one + eta.zeta2.conj()).norm() / 2.0)
    if ne < 1e-14:
        return math.sqrt((one + zeta.zeta2.conj()).norm() / 2.0)
    a = (1.0 / nz) * oz.conj()
    b = (1.0 / ne) * oe
    w = (
        a * b
        - (a * zeta.zeta1) * (eta.zeta1.conj() * b)
        - (a * zeta.zeta2) * (eta.zeta2.conj() * b)
    )
    return math.sqrt(w.norm() / 2.0)


def sdist_arrays(zv, ev):
    """Batched sphere distance for point arrays of shape (..., 16).

    Same phase-corrected pairing as :func:`sdist`; inputs on the exact
    south pole are not supported (measure zero for sampled points).
    """
    zv = np.asarray(zv, dtype=float)
    ev = np.asarray(ev, dtype=float)
    one = np.zeros(8)
    one[0] = 1.0
    oz = one + zv[..., 8:]
    oe = one + ev[..., 8:]
    a = oc.conj(oz) / np.linalg.norm(oz, axis=-1, keepdims=True)
    b = oe / np.linalg.norm(oe, axis=-1, keepdims=True)
    pair = oc.mul(oc.mul(a, zv[..., :8]), oc.mul(oc.conj(ev[..., :8]), b)) + oc.mul(
        oc.mul(a, zv[..., 8:]), oc.mul(oc.conj(ev[..., 8:]), b)
    )
    pair = oc.mul(a, b) - pair
    return np.sqrt(np.linalg.norm(pair, axis=-1) / 2.0)


def lift_function(f, p):
    """Lift a group function to the sphere: f~(zeta) = f(C^-1 zeta) |J_C^-1|^(1/p).

    ``p`` may be ``math.inf`` for the plain-composition limit.  The lift
    preserves the L^p norm.  Evaluation at the south pole raises.
    """
    if not (p > 1):
        raise ValueError("exponent p must exceed 1")

    def ftilde(zeta: SpherePoint) -> float:
        u = cayley_inv(zeta)
        if math.isinf(p):
            return f(u)
        return f(u) * (1.0 / jac_cayley(u)) ** (1.0 / p)

    return ftilde


def lower_function(ftilde, p):
    """Inverse of :func:`lift_function`: f(u) = f~(C u) |J_C(u)|^(1/p)."""
    if not (p > 1):
        raise ValueError("exponent p must exceed 1")

    def f(u: GroupElement) -> float:
        zeta = cayley(u)
        if math.isinf(p):
            return ftilde(zeta)
        return ftilde(zeta) * jac_cayley(u) ** (1.0 / p)

    return f
