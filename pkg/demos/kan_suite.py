"""Finite Kan complexes: K(G,1), a twisted 2-group nerve, truncations, collapsibility."""
from linftykan.simpset import (cocycle_2group, cyclic_group, eilenberg_maclane, find_collapse, k_g1,
                               nerve_2group, nerve_round_trip_maps, pi_n, product, truncate_simpset,
                               two_group_equivalence, two_group_from_kan)

X = k_g1(cyclic_group(2), N=4)
print("K(Z/2,1):", X.sizes(), "Kan:", X.is_kan()[0], "unique fillers above 1:", X.unique_fillers_above(1))
print("  pi_1 order", pi_n(X, 1).n, "pi_2 order", pi_n(X, 2).n)

T = cocycle_2group(cyclic_group(2), 2, lambda a, b, c: a * b * c, name="twisted")
T.validate()
N = nerve_2group(T, 4)
print("\nnerve of the twisted 2-group:", N.sizes(), "unique fillers above 2:", N.unique_fillers_above(2))
T2 = two_group_from_kan(N)
J = two_group_equivalence(T2, T, *nerve_round_trip_maps(T, T2))
print("  round trip equivalent:", J is not None)

P = product(k_g1(cyclic_group(2), N=3), eilenberg_maclane(2, 2, N=3))
for n in (0, 1, 2):
    Tn = truncate_simpset(P, n)
    print(f"\ntau<={n}: sizes {Tn.sizes()}, |pi_1| = {pi_n(Tn, 1).n}, |pi_2| = {pi_n(Tn, 2).n}")

print("\nhorn Lambda[3,1]:", find_collapse([[0, 1, 2], [1, 2, 3], [0, 1, 3]]))
print("boundary of Delta[2]:", find_collapse([[0, 1], [0, 2], [1, 2]]))
