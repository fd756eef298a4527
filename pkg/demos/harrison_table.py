"""Harrison cohomology of Laurent rings, computed two ways.

The boundary of a cochain is an alternating product of cofaces; a
closed form predicts the answer slot by slot.  Both routes are run on a
sample cochain, then the cohomology table is derived degree by degree
from Smith normal forms of the integer coboundary matrices.
"""

from fractions import Fraction

from qbialg import HarrisonCochain, boundary, boundary_closed_form, cohomology


def main():
    c = HarrisonCochain.from_data(2, Fraction(5, 7), [[1, 0], [0, 3], [2, -1]])
    print("cochain:", c.to_dict())
    image = boundary(c)
    print("boundary (definition): ", image.to_dict())
    print("boundary (closed form):", boundary_closed_form(c).to_dict())
    print("boundary of the boundary is the identity cochain:",
          boundary(image) == HarrisonCochain.identity(2, 5))

    print("\ncohomology of k[Z^r]:")
    print("  " + "".join(f"{cell:<6}" for cell in [""] + [f"n={n}" for n in range(7)]))
    for rank in (1, 2, 3):
        row = [f"r={rank}"] + [str(cohomology(rank, n)) for n in range(7)]
        print("  " + "".join(f"{cell:<6}" for cell in row))


if __name__ == "__main__":
    main()
