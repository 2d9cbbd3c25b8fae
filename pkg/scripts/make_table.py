#!/usr/bin/env python3
"""Print the reference table (shape factors and power ratios) plus the
crossover speed of the spin-flip channel."""

import sys

from srq1.analysis import crossover_beta, table1


def main():
    print(f"{'beta':>4} {'f_b':>9} {'f_e':>9} {'k(-1)':>9} {'k(+1)':>9}")
    for row in table1():
        print(f"{row.beta:4.1f} {row.f_b:9.5f} {row.f_e:9.5f} "
              f"{row.k_minus:9.5f} {row.k_plus:9.5f}")
    beta0, gamma0 = crossover_beta()
    print(f"\ncrossover: beta0 = {beta0:.7f}, gamma0 = {gamma0:.7f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
