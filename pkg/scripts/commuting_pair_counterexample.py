"""Show that C T = T* J fails for commuting C != J, and what holds instead.

For T = T_phi with phi = z^2 + zbar^2, C = C_1 and J = C_-1, prints the
residuals of the relations between T, C and J at a range of truncations,
together with the bound ||CT - T*J||_F >= sigma_min(T) ||M_C - M_J||_F that
rules the relation out whenever T is injective and C != J.
"""
import argparse

import numpy as np

from csymop.conjugations import adjoint, canonical_conjugation, compose, family_conjugation, operator_distance
from csymop.hardy import frobenius_distance, smallest_singular_value
from csymop.symbols import parse_symbol
from csymop.toeplitz import csym_residual, toeplitz_matrix


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", type=int, nargs="+", default=[6, 8, 16, 32, 64])
    args = parser.parse_args()
    phi = parse_symbol("z^2 + zbar^2")
    header = ("n", "csym C1", "csym C-1", "[C1,C-1]", "CT-T*J", "CT-T*C", "T-C1T*C-1", "lower bound")
    print(" ".join(f"{h:>11}" for h in header))
    for n in args.dims:
        t = toeplitz_matrix(phi, n)
        c, j = canonical_conjugation(n), family_conjugation(1, -1, n)
        ts = adjoint(t)
        row = (
            csym_residual(t, c),
            csym_residual(t, j),
            operator_distance(compose(c, j), compose(j, c)),
            operator_distance(compose(c, t), compose(ts, j)),
            operator_distance(compose(c, t), compose(ts, c)),
            operator_distance(t, compose(c, ts, j)),
            smallest_singular_value(t) * frobenius_distance(c.matrix, j.matrix),
        )
        print(f"{n:>11} " + " ".join(f"{v:>11.4g}" for v in row))
    print("\n2*sqrt(n-2) for comparison:", [round(float(2 * np.sqrt(n - 2)), 4) for n in args.dims])


if __name__ == "__main__":
    main()
