"""Walk through the geometry layer: octonions, the nilpotent group, and
the boundary transform to the sphere.

Run:  python3 demos/group_geometry.py
"""

import numpy as np

from octhls import cayley, nilgroup as ng
from octhls import octonion as oc
from octhls.nilgroup import GroupElement, Q
from octhls.octonion import basis_table_text

rng = np.random.default_rng(0)


def main():
    print("octonion basis products (row times column):")
    print(basis_table_text())

    x, y = rng.standard_normal((2, 8))
    print("\ncomposition law |xy| - |x||y| =", end=" ")
    print(np.linalg.norm(oc.mul(x, y)) - np.linalg.norm(x) * np.linalg.norm(y))
    z = rng.standard_normal(8)
    assoc = oc.mul(oc.mul(x, y), z) - oc.mul(x, oc.mul(y, z))
    print("associator norm for three generic octonions:", np.linalg.norm(assoc))
    print("(nonzero: the algebra is alternative, not associative)")

    print(f"\nhomogeneous dimension Q = {Q}")
    u = GroupElement.from_arrays(rng.standard_normal(8), rng.standard_normal(7))
    v = GroupElement.from_arrays(rng.standard_normal(8), rng.standard_normal(7))
    w = GroupElement.from_arrays(rng.standard_normal(8), rng.standard_normal(7))
    print("d(u, v)                  =", ng.gdist(u, v))
    print("d(wu, wv) (left transl.) =", ng.gdist(ng.gmul(w, u), ng.gmul(w, v)))
    delta = 2.0
    print(
        "homogeneity |delta.u| / (delta |u|) =",
        ng.hnorm(ng.dilate(delta, u)) / (delta * ng.hnorm(u)),
    )

    print("\nboundary transform to the unit sphere of R^16:")
    zeta = cayley.cayley(u)
    print("|zeta|^2 =", zeta.zeta1.norm() ** 2 + zeta.zeta2.norm() ** 2)
    back = cayley.cayley_inv(zeta)
    print(
        "round-trip residual =",
        max(np.abs(back.z.c - u.z.c).max(), np.abs(back.t.v - u.t.v).max()),
    )
    print("Jacobian, group side :", cayley.jac_cayley(u))
    print("Jacobian, sphere side:", cayley.jac_cayley_sphere(zeta))

    lhs = cayley.sdist(cayley.cayley(u), cayley.cayley(v))
    rhs = (
        2.0 ** (7.0 / Q - 1.0)
        * (cayley.jac_cayley(u) * cayley.jac_cayley(v)) ** (1.0 / (2 * Q))
        * ng.gdist(u, v)
    )
    print("\nexchange of distances:")
    print("  sphere distance          =", lhs)
    print("  weighted group distance  =", rhs)
    print("  residual                 =", abs(lhs - rhs))
    print(
        "(the sphere distance keeps the quotient phases bracketed; with the\n"
        " plain term-by-term pairing the identity fails at the 1e-2 level\n"
        " because octonion multiplication is not associative)"
    )


if __name__ == "__main__":
    main()
