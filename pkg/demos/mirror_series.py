"""Match tropical cover counts against a Feynman-integral q-expansion.

Sums the refined propagator integrals over all trivalent genus-2
shapes and reads off the q-coefficients, then compares each one with
the corresponding tropical Hurwitz number of the elliptic curve.
"""

from tropica.elliptic_covers import enumerate_feynman_graphs
from tropica.feynman_series import mirror_check, refined_integral
from tropica.util import frac_str

GENUS, DMAX = 2, 4


def main():
    shapes = enumerate_feynman_graphs(GENUS)
    print(f"{len(shapes)} loop-free trivalent shape(s) in genus {GENUS}")
    shape = shapes[0]
    series = refined_integral(shape, (0, 1), 2)
    print("refined integral for the first shape, vertex order (0, 1), "
          "truncated at degree 2:")
    for (x_exps, q_exps), coeff in series.ordered_terms():
        print(f"  q^{q_exps} -> {frac_str(coeff)}")
    print()
    print(f"coefficient check up to degree {DMAX}:")
    for row in mirror_check(GENUS, DMAX):
        flag = "ok" if row.match else "MISMATCH"
        print(f"  d={row.degree}: tropical {frac_str(row.tropical):>3} "
              f"vs q^{row.q_power} coefficient "
              f"{frac_str(row.series):>3}  {flag}")


if __name__ == "__main__":
    main()
