"""Independent brute-force oracles shared by the unit and acceptance suites."""

from itertools import product

from k3lattices.lattices import Lattice
from k3lattices.linalg import rational_inverse


def box_oracle(lat: Lattice, norm: int) -> set:
    """Naive complete enumeration: |x_i| <= sqrt(norm * (G^-1)_ii) by
    Cauchy-Schwarz against the dual basis vectors.  Vectorized with int64
    numpy (entries stay tiny, so the arithmetic is exact)."""
    import numpy as np

    inv = rational_inverse(lat.gram)
    bounds = []
    for i in range(lat.rank):
        b2 = norm * inv.entries[i][i]
        bound = 0
        while (bound + 1) ** 2 <= b2:
            bound += 1
        bounds.append(bound)
    gram = np.array(lat.gram.tolists(), dtype=np.int64)
    split = max(0, lat.rank - 5)
    tail_ranges = [np.arange(-b, b + 1, dtype=np.int64) for b in bounds[split:]]
    tails = np.stack(np.meshgrid(*tail_ranges, indexing="ij"), axis=-1).reshape(-1, lat.rank - split)
    g_tt = gram[split:, split:]
    tail_norms = np.einsum("ij,jk,ik->i", tails, g_tt, tails)
    hits = set()
    if split == 0:
        for row in tails[tail_norms == norm]:
            hits.add(tuple(int(x) for x in row))
        return hits
    g_hh = gram[:split, :split]
    g_ht = gram[:split, split:]
    for head in product(*[range(-b, b + 1) for b in bounds[:split]]):
        h = np.array(head, dtype=np.int64)
        total = int(h @ g_hh @ h) + 2 * (tails @ (g_ht.T @ h)) + tail_norms
        for row in tails[total == norm]:
            hits.add(head + tuple(int(x) for x in row))
    return hits


def rank2_reduced_oracle(max_disc: int) -> set:
    """Dumb scan of the reduced binary domain over a generous box."""
    hits = set()
    for a in range(1, 2 * max_disc + 1):
        for b in range(0, max_disc + 1):
            for c in range(1, 2 * max_disc + 1):
                if 0 <= 2 * b <= a <= c and 1 <= a * c - b * b <= max_disc:
                    hits.add(((a, b), (b, c)))
    return hits
