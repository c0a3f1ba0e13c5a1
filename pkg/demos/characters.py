"""Tabulate 2 rho_H - rho_G restricted to the torus of H, with dominance."""

from flagorbits.chars import dominance_character
from flagorbits.weyl import ModelSpec

for fam, n, r in [("A", 6, 2), ("B", 9, 4), ("C", 10, 1), ("C", 10, 3), ("C", 10, 5), ("D", 10, 4)]:
    mu, dom = dominance_character(ModelSpec(fam, n, r))
    print(f"{fam} n={n:2d} r={r}: weight={mu}  dominant={dom}")
