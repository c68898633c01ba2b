"""Homotopy groups from the long exact sequence, and the discreteness test."""
from linftykan.gradedlin import parse_scalar
from linftykan.homot import BoundaryData, les_assemble, tvf_integrability
from linftykan.linf import build_end_example, homology_dims, string_lie2

for name, L in [("str(su2)", string_lie2()), ("end(1, sqrt2)", build_end_example(1, parse_scalar("sqrt2")))]:
    B = BoundaryData.from_algebra(L)
    print(f"{name}: H = {homology_dims(L)}")
    for p in les_assemble(B.H, B, 4):
        print(f"  pi_{p.n} = {p.describe()}")
    print("  truncation at 2 is a manifold:", tvf_integrability(B, 2))
