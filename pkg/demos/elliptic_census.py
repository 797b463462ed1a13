"""Tabulate simple Hurwitz numbers of the elliptic curve.

Prints N_{d,g} for small degree and genus, computed by enumerating
tropical covers, then breaks one entry down by source graph shape,
comparing the quotient count against the orbit count of labeled
covers.
"""

from fractions import Fraction

from tropica.elliptic_covers import (enumerate_elliptic_covers,
                                     labeled_aggregate,
                                     simple_hurwitz_tropical)
from tropica.graphs import automorphism_group_order, serialize
from tropica.sym_oracle import hurwitz_elliptic
from tropica.util import frac_str

DEGREE, GENUS = 3, 2


def main():
    print("N_{d,g} for the elliptic curve (rows d, columns g):")
    print("  d \\ g     2       3")
    for d in range(1, 5):
        row = [simple_hurwitz_tropical(d, g) for g in (2, 3)]
        print(f"  {d}     {frac_str(row[0]):>5}   {frac_str(row[1]):>5}")
    print()
    print(f"breakdown of N_{{{DEGREE},{GENUS}}} by source shape:")
    total = Fraction(0)
    for shape, aut, labeled in labeled_aggregate(DEGREE, GENUS):
        part = Fraction(labeled, aut)
        total += part
        print("  " + serialize(shape.graph).strip().replace("\n", " / "))
        print(f"    |Aut| = {aut}, labeled covers {labeled}, "
              f"contribution {frac_str(part)}")
    print(f"total: {frac_str(total)}")
    direct = sum(c.multiplicity() for c in
                 enumerate_elliptic_covers(DEGREE, GENUS))
    print(f"direct enumeration: {frac_str(direct)}")
    print(f"monodromy oracle:   "
          f"{frac_str(hurwitz_elliptic(DEGREE, GENUS))}")
    aut_check = all(
        automorphism_group_order(s.graph) == a
        for s, a, _ in labeled_aggregate(DEGREE, GENUS))
    print(f"automorphism orders consistent: {aut_check}")


if __name__ == "__main__":
    main()
