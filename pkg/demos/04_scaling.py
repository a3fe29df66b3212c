"""Empirical running time against the O(n^5) ceiling."""

from peeliso.bench import bench

result = bench([25, 50, 100, 200], samples=5, seed=0, p=0.1)
print(result.format())
print("ceiling exponent 5; measured", round(result.slope, 2))
