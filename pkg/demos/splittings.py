"""Which pairs of defining sets are swapped by a unit multiplier.

The (0,0,0) and (1,1,1) codes of a family have complementary nonzero
defining sets. For D and V some unit swaps them; for U none does.

Run: python demos/splittings.py
"""

from cyclocodes.codes import family_code, family_splitting_sets, find_splitters, map_code

for n1, n2, q in ((7, 17, 2), (11, 13, 3), (5, 7, 4)):
    n = n1 * n2
    for kind in "UDV":
        E0, E1 = family_splitting_sets(kind, n1, n2)
        mus = find_splitters(E0, E1, n, q)
        print(f"({n1},{n2},{q}) {kind}: {len(mus):2d} swapping units {mus[:6]}")

c = family_code("D", 7, 17, 2, (0, 1, 1))
image = map_code(c, 3)
print(f"\nx -> x^3 sends D(0,1,1) to D{image.label.triple}")
