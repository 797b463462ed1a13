"""Cross a wall in the genus-0 double Hurwitz chamber structure.

For profiles of length 2 over both branch points the parameter space
splits into four chambers along two walls.  The count is polynomial on
each chamber; this script prints the four polynomials and then walks a
path that crosses a wall, showing the count switching from one
polynomial to the other.
"""

from tropica.chambers import chamber_decomposition, chamber_polynomial, walls
from tropica.line_covers import double_hurwitz_tropical
from tropica.util import frac_str


def main():
    print("walls for profile lengths (2, 2):")
    for wall in walls(2, 2):
        print(f"  {wall.text()} = 0")
    print()
    chambers = chamber_decomposition(2, 2)
    for chamber in chambers:
        poly = chamber_polynomial(chamber)
        tag = "".join(chamber.signs)
        print(f"chamber [{tag}]  witness mu={chamber.witness_mu} "
              f"nu={chamber.witness_nu}")
        print(f"  H0(mu, nu) = {poly.text()}")
    print()
    print("walking mu = (m, 9 - m) against fixed nu = (5, 4):")
    nu = (5, 4)
    for m1 in (8, 7, 6, 3, 2, 1):
        mu = (m1, 9 - m1)
        count = double_hurwitz_tropical(
            0, tuple(sorted(mu, reverse=True)), nu)
        home = next((c for c in chambers if c.contains(mu, nu)), None)
        tag = "".join(home.signs) if home else "on a wall"
        print(f"  mu = {mu}: count {frac_str(count)}  (chamber [{tag}])")


if __name__ == "__main__":
    main()
