"""Homology of the complex of nondegenerate pairs over small prime fields."""

import time

from matpairs.homology import boundary, chain_basis, enumerate_classes, homology, presentation_h1, system_key
from matpairs.rings import F

print(" q  classes(n=1,2,3)  nondeg C1  nondeg C2   H0   H1   presented")
for q in (2, 3, 5, 7, 11, 13):
    t = time.perf_counter()
    counts = [len(enumerate_classes(q, n)) for n in (1, 2, 3)]
    h0, h1 = homology(q, 0), homology(q, 1)
    print(f"{q:2d}  {str(counts):17s} {len(chain_basis(q, 1)):9d} {len(chain_basis(q, 2)):10d}"
          f"   {str(h0):3s}  {str(h1):4s} {str(presentation_h1(q)):4s}  ({time.perf_counter() - t:.2f}s)")

ring = F(5)
c = system_key(ring, [[1, 2, 3]])
print("\nboundary of", c, "over F5:")
for key, coef in boundary(c).items():
    print(f"  {coef:+d} {key}")
