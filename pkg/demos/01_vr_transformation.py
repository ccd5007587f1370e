"""Turning a bifiltered flag complex into a semimetric space.

A 4-cycle whose sides appear at grade (1,1) and whose diagonals appear at
(2,2).  Along the path (1,1) <= (2,2) the loop is born at step 1 and filled
at step 2; the transformed distance matrix carries exactly that information.
"""
from pathpers import Path, edge_annotations_from_complex, pathwise_barcode, transform
from pathpers.oracle import barcode_from_filtration
from pathpers.semimetric import format_lower_distance
from pathpers.testing import explicit_chain, full_vertex_annotations

sides = [(0, 1), (1, 2), (2, 3), (0, 3)]
edges = edge_annotations_from_complex([(e, [(1, 1)]) for e in sides] +
                                      [((0, 2), [(2, 2), (1, 3)]), ((1, 3), [(2, 2)])])
nu = Path(((1, 1), (2, 2)))

# the diagonal {0,2} has two minimal grades; (2,2) is the first one the path reaches
d = transform(edges, nu, 4)
print("transformed matrix (lower triangle):")
print(format_lower_distance(d))

pb = pathwise_barcode(edges, 4, nu, max_dim=2, with_reps=True)
for b in pb.bars:
    flag = "" if pb.authoritative(b.dim) else "  (degree 0: not authoritative)"
    print(f"H{b.dim}: [{b.birth}, {b.death}){flag}", b.rep or "")

# brute-force check on the explicit complexes X_(1,1) <= X_(2,2)
chain = explicit_chain(nu, full_vertex_annotations(4, 2), edges, 3)
print("oracle H1:", barcode_from_filtration(chain, 1))

# a path that never reaches the diagonals keeps the loop alive
print("along (1,1) <= (1,2):", pathwise_barcode(edges, 4, Path(((1, 1), (1, 2)))).intervals(1))
