"""The persistence engine on spaces that break the triangle inequality."""
import math

import numpy as np

from pathpers import SemimetricMatrix, tighten_representative, vr_barcode
from pathpers.oracle import vr_barcode_oracle

# 4-cycle with unit sides; d(0,2) = inf and d(1,3) = 7 violate the triangle inequality
dense = np.array([[0, 1, math.inf, 1],
                  [1, 0, 1, 7],
                  [math.inf, 1, 0, 1],
                  [1, 7, 1, 0]])
d = SemimetricMatrix.from_dense(dense)

bc = vr_barcode(d, max_dim=2, with_reps=True)
for b in bc:
    print(f"H{b.dim} [{b.birth}, {b.death})", b.rep or "")
print("oracle:", vr_barcode_oracle(dense, 2))

# cut off at scale 3 the loop never dies
print("threshold 3:", vr_barcode(d, threshold=3).intervals(1))

# a detour through an extra point tightens back to the square
dense5 = np.full((5, 5), 2.0)
np.fill_diagonal(dense5, 0)
for u, v in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]:
    dense5[u, v] = dense5[v, u] = 1
detour = [(0, 4), (4, 1), (1, 2), (2, 3), (3, 0)]
print("tightened:", tighten_representative(detour, SemimetricMatrix.from_dense(dense5)))

# random spaces: agreement with brute force
rng = np.random.default_rng(0)
agree = 0
for _ in range(50):
    n = int(rng.integers(3, 9))
    vals = rng.integers(1, 5, size=n * (n - 1) // 2).astype(float)
    vals[rng.random(vals.size) < 0.2] = np.inf
    m = SemimetricMatrix(n, vals)
    got = vr_barcode(m, max_dim=2)
    agree += {k: sorted(got.intervals(k)) for k in range(3)} == vr_barcode_oracle(m.to_dense(), 2)
print(f"{agree}/50 random semimetric spaces agree with the oracle")
