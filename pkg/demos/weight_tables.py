"""Exact minimum weights of the family codes, and the square-root bound on
odd-like weights.

Run: python demos/weight_tables.py           (binary and quaternary, about a minute)
     python demos/weight_tables.py ternary   (adds the [143,72] ternary codes, ~10 min)
"""

import sys
import time

from cyclocodes.codes import TRIPLES, family_code
from cyclocodes.weight import min_weight_bz, verify_square_root_bounds

cases = [(7, 17, 2), (5, 7, 4)] + ([(11, 13, 3)] if "ternary" in sys.argv[1:] else [])

for n1, n2, q in cases:
    print(f"\n(n1, n2, q) = ({n1}, {n2}, {q})")
    for kind in "UDV":
        row = []
        for t in TRIPLES:
            rep = min_weight_bz(family_code(kind, n1, n2, q, t))
            row.append(f"{rep.min_weight}{'' if rep.exact else '?'}")
        print(f"  {kind}: " + " ".join(f"{''.join(map(str, t))}:{w:>3s}" for t, w in zip(TRIPLES, row)))

# odd-like minimum weights of the D and V codes against d^2 >= n
print("\nodd-like weights, (7,17,2):")
for kind in "DV":
    for t in ((0, 0, 0), (1, 0, 0)):
        t0 = time.perf_counter()
        rep = min_weight_bz(family_code(kind, 7, 17, 2, t), odd_like=True)
        res = verify_square_root_bounds(rep, 7, 17)
        print(f"  {kind}{t}: min weight {rep.min_weight}, odd-like {rep.min_odd_like_weight} "
              f"({res.detail}), {time.perf_counter() - t0:.1f}s")
