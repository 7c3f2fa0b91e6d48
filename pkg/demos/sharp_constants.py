"""The sharp constants of the inequality family and the identities tying
them to the spectral side.

Run:  python3 demos/sharp_constants.py
"""

import numpy as np

from octhls import constants, functional as fn, spectra
from octhls.nilgroup import Q


def main():
    print("sharp constants (gamma-ratio closed forms):\n")
    print(" lambda    group side        sphere side")
    for lam in (12.0, 14.0, 16.0, 20.0):
        print(
            f"  {lam:4.0f}   {constants.C_hls_group(lam): .8e}   "
            f"{constants.C_hls_sphere(lam): .8e}"
        )

    print("\nspectral identity: sphere constant = 2^(lam/2) lambda_00 |S|^((lam-Q)/Q)")
    for lam in (12.0, 16.0):
        spectral = (
            2.0 ** (lam / 2.0)
            * spectra.eig_K1(0, 0, lam / 4.0)
            * constants.sphere_measure() ** ((lam - Q) / Q)
        )
        print(
            f"  lambda={lam:4.0f}: {spectral:.10e} vs "
            f"{constants.C_hls_sphere(lam):.10e}"
        )

    print("\nthe quotient at the constant function equals the sharp constant:")
    one = fn.AxisZonalFunction(lambda th, ph: np.ones_like(th))
    for lam in (12.0, 16.0):
        print(f"  lambda={lam:4.0f}: quotient {fn.hls_quotient(one, lam, jmax=2):.10e}")

    print("\nMonte Carlo oracle for the bilinear form at f = g = 1, lambda = 12:")
    proj = fn.project_bispherical(one, jmax=2)
    spectral = fn.hls_spectral(proj, 12.0)
    est, err = fn.hls_mc(
        lambda p: np.ones(len(p)), lambda p: np.ones(len(p)), 12.0, 100000, seed=0
    )
    print(f"  spectral {spectral:.6e},  MC {est:.6e} +/- {err:.1e}")

    print("\ndegree-d Sobolev constants (0 < d < Q - 12):")
    for d in (2.0, 6.0, 9.0):
        print(f"  d={d:3.0f}: {constants.C_sobolev(d):.8e}")
    print("  d=10 endpoint: constant degenerates to", constants.C_sobolev(10.0))

    print("\nendpoint (log-Sobolev) constant:", constants.C_logsobolev())


if __name__ == "__main__":
    main()
