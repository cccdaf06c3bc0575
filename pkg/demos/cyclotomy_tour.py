"""Walk through the unit group of Z_119 and its three order-two partitions.

Run: python demos/cyclotomy_tour.py
"""

from cyclocodes.cyclotomy import (
    build_system,
    decompose,
    inconsistency_scan,
    is_difference_set,
    membership_predicates,
    minus_one_form,
    quadratic_class,
)

s = build_system(7, 17)
print(f"n = {s.n}, d = {s.d}, e = {s.e}, common primitive root g = {s.g}, nu = {s.nu}")

# every unit is g^s nu^i; the three partitions split on the parity of i, s, s + i
for x in (1, 2, 3, 52, 118):
    si, i = decompose(s, x)
    print(f"  {x:3d} = g^{si} nu^{i}   U{i % 2} D{si % 2} V{(si + i) % 2}")

for kind in "UDV":
    X0, _ = s.classes(kind)
    print(f"{kind}_0 has {len(X0)} elements, first ten {list(X0[:10])}")

branch, t = minus_one_form(s)
print("-1 =", f"g^{s.e // 2}" if branch == "A" else f"g^{t} nu^{s.d // 2}")

# 2 is a residue mod 7 and mod 17 and lies in all three X_0, so every family exists over GF(2)
print("q = 2 membership:", membership_predicates(s, 2))
print("quadratic class of 2 mod 7, 17:", quadratic_class(7, 2), quadratic_class(17, 2))

rep = inconsistency_scan(s)
print(f"units that are non-residues mod both primes: {len(rep.u1_both_qnr)} in U_1, "
      f"{len(rep.d1_both_qnr)} in D_1, {len(rep.v1_both_qnr)} in V_1")

# for twin primes, U_0 plus the multiples of n2 is a difference set
for n1, n2 in ((3, 5), (5, 7), (11, 13)):
    t = build_system(n1, n2)
    S = set(t.U[0]) | {j * n2 for j in range(n1)}
    print(f"({n1},{n2}): |S| = {len(S)}, difference set {is_difference_set(t.n, S)}")
