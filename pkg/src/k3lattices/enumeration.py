"""Bounded enumeration of reduced positive definite lattices.

Desk-scale finiteness: every positive definite class of rank <= 3 and
bounded discriminant has a reduced Gram representative inside an explicit
coefficient box, so the lists below are finite and exhaustive.  Rank 2 uses
the classical 0 <= 2b <= a <= c domain; rank 3 the Seeber-Eisenstein
conditions (boundary classes may appear through more than one reduced
matrix - the lists are deduplicated as matrices, not up to isometry).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .lattices import Lattice, LatticeEmbedding, is_primitive, orthogonal_complement
from .linalg import IntMatrix, det_exact


@dataclass(frozen=True)
class ReducedFormList:
    rank: int
    max_disc: int
    forms: tuple[IntMatrix, ...]
    even_only: bool = False

    def count(self) -> int:
        return len(self.forms)

    def discs(self) -> list[int]:
        return [det_exact(f) for f in self.forms]


def _rank2_reduced(max_disc: int):
    out = []
    a = 1
    while 3 * a * a <= 4 * max_disc:  # det >= (3/4) a^2 on the reduced domain
        for b in range(0, a // 2 + 1):
            c = a
            while a * c - b * b <= max_disc:
                out.append(IntMatrix([[a, b], [b, c]]))  # det >= 3a^2/4 >= 1 here
                c += 1
        a += 1
    return out


def _rank3_reduced(max_disc: int):
    """Seeber-Eisenstein reduced ternary forms with det <= max_disc.

    Gram [[a, t, s], [t, b, r], [s, r, c]] with a <= b <= c, the off-diagonal
    triple all positive or all nonpositive, 2|t|, 2|s| <= a, 2|r| <= b, and
    a + b + 2(r + s + t) >= 0; a*b*c <= 2*max_disc bounds the search.
    """
    out = []
    a = 1
    while a * a * a <= 2 * max_disc:
        b = a
        while a * b * b <= 2 * max_disc:
            c = b
            while a * b * c <= 2 * max_disc:
                for t in range(-(a // 2), a // 2 + 1):
                    for s in range(-(a // 2), a // 2 + 1):
                        for r in range(-(b // 2), b // 2 + 1):
                            offs = (r, s, t)
                            if not (all(x > 0 for x in offs) or all(x <= 0 for x in offs)):
                                continue
                            if a + b + 2 * (r + s + t) < 0:
                                continue
                            g = IntMatrix([[a, t, s], [t, b, r], [s, r, c]])
                            det = det_exact(g)
                            if not 1 <= det <= max_disc:
                                continue
                            if a * c - s * s <= 0 or a * b - t * t <= 0:
                                continue  # leading minors must stay positive
                            out.append(g)
                c += 1
            b += 1
        a += 1
    return out


def enumerate_lattices(rank: int, max_disc: int, even_only: bool = False) -> ReducedFormList:
    """All reduced positive definite Gram matrices of the given rank with
    determinant between 1 and max_disc."""
    if rank not in (1, 2, 3):
        raise ValueError("rank must be 1, 2, or 3")
    if max_disc < 0:
        raise ValueError("max_disc must be nonnegative")
    if rank == 1:
        forms = [IntMatrix([[a]]) for a in range(1, max_disc + 1)]
    elif rank == 2:
        forms = _rank2_reduced(max_disc)
    else:
        forms = _rank3_reduced(max_disc)
    if even_only:
        forms = [f for f in forms if all(f[i, i] % 2 == 0 for i in range(rank))]
    uniq = sorted(set(forms), key=lambda f: (det_exact(f), f.tolists()))
    return ReducedFormList(rank, max_disc, tuple(uniq), even_only)


def transcendental_invariants(pic: LatticeEmbedding) -> tuple[Lattice, int, int]:
    """Complement of a saturated sublattice of a unimodular ambient, with the
    matching discriminants (the unimodular complement identity)."""
    if not pic.target.is_unimodular():
        raise ValueError("ambient lattice must be unimodular")
    if not is_primitive(pic):
        raise ValueError("sublattice must be saturated; saturate it first")
    comp = orthogonal_complement(pic)
    disc_t = comp.source.disc()
    disc_pic = pic.source.disc()
    if disc_t != disc_pic:
        raise AssertionError(
            f"complement discriminant {disc_t} does not match sublattice {disc_pic}")
    return comp.source, disc_t, disc_pic


def bounded_picard_candidates(max_rank: int, max_disc: int) -> list[IntMatrix]:
    """Even hyperbolic Gram matrices of signature (1, rank-1), |disc| <= bound.

    Rank 1: <2>, <4>, ...  Rank 2: [[2a, b], [b, -2c]] with a <= c, all of
    a, c >= 0 and b >= 0 (coefficient normal form only; no isometry-class
    deduplication), where |disc| = 4ac + b^2.
    """
    if max_rank not in (1, 2):
        raise ValueError("max_rank must be 1 or 2")
    if max_disc < 0:
        raise ValueError("max_disc must be nonnegative")
    out: list[IntMatrix] = []
    for k in range(1, max_disc // 2 + 1):
        out.append(IntMatrix([[2 * k]]))
    if max_rank == 1:
        return out
    for b in range(0, isqrt(max_disc) + 1):
        a = 0
        while 4 * a * a + b * b <= max_disc:  # a <= c forces 4a^2 <= disc
            if a == 0:
                # [[0,b],[b,-2c]] ~ c mod b under a unipotent column move,
                # so only c in [0, b) are distinct normal forms
                c_range = range(0, b)
            else:
                c_range = range(a, (max_disc - b * b) // (4 * a) + 1)
            for c in c_range:
                disc = -(4 * a * c + b * b)
                if disc < 0:  # genuine signature (1,1)
                    out.append(IntMatrix([[2 * a, b], [b, -2 * c]]))
            a += 1
    return out
