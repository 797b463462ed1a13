"""Walk through a double Hurwitz count on the tropical line.

Enumerates the cover classes for a small ramification profile, prints
each class with its multiplicity breakdown, and confirms the total
against the dynamic-programming count and the symmetric-group oracle.
"""

from tropica.line_covers import (double_hurwitz_tropical,
                                 enumerate_line_covers, multiplicity)
from tropica.sym_oracle import hurwitz_line
from tropica.util import frac_str

GENUS = 1
MU = (2, 1)
NU = (2, 1)


def main():
    covers = enumerate_line_covers(GENUS, MU, NU)
    print(f"genus {GENUS} covers with profile {MU} over 0 and {NU} "
          f"over infinity:")
    total = 0
    for cover in covers:
        m = multiplicity(cover)
        total += m.value
        print(f"  {cover.canonical_text()}")
        print(f"    weight product {m.weight_product}, "
              f"{m.forks} fork(s), {m.wieners} wiener(s) "
              f"-> multiplicity {frac_str(m.value)}")
    print(f"sum of multiplicities: {frac_str(total)}")
    print(f"dynamic programming:   "
          f"{frac_str(double_hurwitz_tropical(GENUS, MU, NU))}")
    print(f"monodromy oracle:      "
          f"{frac_str(hurwitz_line(GENUS, MU, NU))}")


if __name__ == "__main__":
    main()
