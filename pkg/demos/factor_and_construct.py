"""Factor x^n - 1, build the eight codes of each family and bound their
minimum weights with the BCH bound.

Run: python demos/factor_and_construct.py
"""

from cyclocodes.codes import TRIPLES, bch_bound, census_count, family_code
from cyclocodes.polyring import class_polynomials, factor_labels, factor_xn_minus_1

for n1, n2, q in ((7, 17, 2), (5, 7, 4)):
    fs = factor_xn_minus_1(n1, n2, q)
    print(f"x^{n1 * n2} - 1 over GF({q}): {len(fs)} irreducible factors")
    for lab, f in zip(factor_labels(fs), fs):
        text = str(f)
        print(f"  {lab:6s} {text if len(text) < 70 else text[:67] + '...'}")
    print(f"  half-dimension cyclic codes: {census_count(n1, n2, q)}")

polys = class_polynomials(7, 17, 2, "U")
print("\nclass polynomials of the U partition, (7,17,2):")
for key, p in polys.items():
    print(f"  {key:6s} degree {p.degree:2d}, {p.weight()} terms")

print("\nBCH bounds of the eight U codes over GF(2):")
for t in TRIPLES:
    c = family_code("U", 7, 17, 2, t)
    b = bch_bound(c)
    print(f"  {t}: [{c.n},{c.k}] bound {b.bound} (run of {b.length} from {b.start}, step {b.step})")
