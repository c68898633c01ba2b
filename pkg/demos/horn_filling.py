"""Fill random horns of MC simplices for the Heisenberg algebra and check the composition law."""
import random

from linftykan.intl import (bch, compose_edges, edge_endpoint, fill_horn, horn_of, random_mc,
                            validate_mc)
from linftykan.linf import heisenberg

L = heisenberg()
rng = random.Random(1)

x = random_mc(L, 2, rng)
print("a random 2-simplex:")
for g, form in sorted(x.forms.items()):
    print(f"  alpha{list(g)} = {form}")

horn = horn_of(x, 1)
y = fill_horn(L, horn, 2, 1)
print("\nfiller of its horn Lambda[2,1]:")
for g, form in sorted(y.forms.items()):
    print(f"  alpha{list(g)} = {form}")
print("filler is MC:", validate_mc(L, y)[0], "| restricts to the horn:", horn_of(y, 1) == horn)
print("pinned filler returns the original:", fill_horn(L, horn, 2, 1, pin=x) == x)

a, b = random_mc(L, 1, rng), random_mc(L, 1, rng)
ea, eb = edge_endpoint(L, a), edge_endpoint(L, b)
ec = edge_endpoint(L, compose_edges(L, a, b))
print("\nendpoints:", [str(v) for v in ea], [str(v) for v in eb])
print("composite:", [str(v) for v in ec], "BCH:", [str(v) for v in bch(L, ea, eb)])
