#!/usr/bin/env python3
"""Grid-refinement study for the three quadrature-verified group identities.

Prints residuals at a ladder of grid sizes together with successive ratios;
second-order stencils and trapezoid quadrature should show ratios near 4.
"""

import argparse

import numpy as np

from lie2 import su2
from lie2 import su2grid as sg
from lie2.paths import LOOP, random_path


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--k", type=float, default=1.0)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[64, 128, 256, 512])
    args = parser.parse_args()

    g = su2()
    rng = np.random.default_rng(args.seed)

    specs = [sg.random_loop_field_coeffs(rng, amplitude=0.8) for _ in range(3)]
    pspec = sg.random_group_path_coeffs(rng, amplitude=0.5)
    xi = 0.6 * random_path(g, rng, 4, LOOP)
    eta = 0.6 * random_path(g, rng, 4, LOOP)
    cspec = sg.random_group_path_coeffs(rng, amplitude=0.6)
    fspecs = [sg.random_loop_field_coeffs(rng, amplitude=0.8) for _ in range(2)]

    rows = {
        "double-integral cocycle": lambda n: sg.kappa_cocycle_residual(
            *(s.sample(n, n) for s in specs), args.k),
        "conjugation invariance ": lambda n: sg.ad_omega_identity_residual(
            pspec.sample(n), xi, eta, args.k),
        "exponentiated conj rule": lambda n: sg.kappa_conjugation_identity_residual(
            cspec.sample(n), *(s.sample(n, n) for s in fspecs), args.k),
    }

    header = "identity                 " + "".join(f"{n:>12d}" for n in args.sizes)
    print(header)
    print("-" * len(header))
    for label, evaluate in rows.items():
        residuals = [evaluate(n) for n in args.sizes]
        print(label + "  " + "".join(f"{r:>12.3e}" for r in residuals))
        ratios = [residuals[i] / residuals[i + 1] for i in range(len(residuals) - 1)]
        print("  ratios" + " " * 17
              + "".join(f"{r:>12.2f}" for r in ratios) + " " * 12)


if __name__ == "__main__":
    main()
