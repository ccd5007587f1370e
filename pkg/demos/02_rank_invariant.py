"""The rank invariant of a random bifiltered complex, read off two-step paths."""
import numpy as np

from pathpers import rank_invariant_table
from pathpers.oracle import inclusion_rank
from pathpers.testing import complex_at, random_filtered_complex

rng = np.random.default_rng(33)
vertex, edges = random_filtered_complex(rng, 7, edge_prob=0.3, motif="cycle", cone=True)
grid = [(float(a), float(b)) for a in range(1, 5) for b in range(1, 5)]

table = rank_invariant_table(edges, 7, grid, 1)
print(len(table), "comparable pairs on the 4x4 grid")

# diagonal of the table = first Betti numbers of each X_p
print("betti_1 over the grid (rows a=1..4, cols b=1..4):")
print(np.array([[table[(a, b), (a, b)] for b in map(float, range(1, 5))] for a in map(float, range(1, 5))]))

nonzero = {k: r for k, r in table.items() if r and k[0] != k[1]}
print("strict pairs with a persisting class:", nonzero)

bad = [k for k, r in table.items()
       if r != inclusion_rank(complex_at(k[0], vertex, edges, 2), complex_at(k[1], vertex, edges, 2), 1)]
print("disagreements with the linear-algebra oracle:", bad)
