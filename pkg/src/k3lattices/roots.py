"""Short-vector enumeration and the (-2)-wall test for polarization degrees.

`short_vectors` is an exact Fincke-Pohst: rational LDL^T plus depth-first
coordinate bounding with integer square roots, so the reported list is
provably complete.  On a hyperbolic lattice (signature (1, rank-1)) the
vectors w with w^2 = -2 orthogonal to a fixed v of positive square live in
the negative definite complement v-perp, which makes the wall test finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattices import Lattice, orthogonal_complement, sublattice_embedding
from .linalg import isqrt_floor_frac, ldlt

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ShortVectorReport:
    lattice: Lattice
    norm: int
    vectors: tuple[Vector, ...]
    complete: bool = True

    def count(self) -> int:
        return len(self.vectors)


def _coordinate_range(center: Fraction, budget: Fraction) -> range:
    """Integers t with (t + center)^2 <= budget, exactly."""
    if budget < 0:
        return range(0)
    root = isqrt_floor_frac(budget)
    lo = -root - center
    hi = root - center
    lo_int = lo.numerator // lo.denominator  # floor
    if lo_int < lo:
        lo_int += 1  # ceil
    hi_int = hi.numerator // hi.denominator
    # exact boundary fixups (floor-of-sqrt can be off by one unit in t)
    while (Fraction(hi_int + 1) + center) ** 2 <= budget:
        hi_int += 1
    while hi_int >= lo_int and (Fraction(hi_int) + center) ** 2 > budget:
        hi_int -= 1
    while (Fraction(lo_int - 1) + center) ** 2 <= budget:
        lo_int -= 1
    while lo_int <= hi_int and (Fraction(lo_int) + center) ** 2 > budget:
        lo_int += 1
    return range(lo_int, hi_int + 1)


def short_vectors(n: Lattice, target_norm: int) -> ShortVectorReport:
    """All v with v^T G v equal to target_norm in a positive definite lattice.

    Writing G = L D L^T, the norm is sum_i d_i (x_i + c_i)^2 with c_i a
    rational function of the later coordinates; enumerating coordinates from
    the last one down with exact interval bounds visits every candidate.
    """
    if target_norm <= 0:
        raise ValueError("target norm must be positive")
    if n.signature() != (n.rank, 0, 0):
        raise ValueError("short-vector enumeration needs a positive definite lattice")
    lower, diag = ldlt(n.gram)
    rank = n.rank
    budget_total = Fraction(target_norm)
    found: list[Vector] = []
    coords = [0] * rank

    def descend(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining == 0:
                found.append(tuple(coords))
            return
        center = sum((lower[j][i] * coords[j] for j in range(i + 1, rank)), Fraction(0))
        for t in _coordinate_range(center, remaining / diag[i]):
            coords[i] = t
            used = diag[i] * (t + center) ** 2
            descend(i - 1, remaining - used)
        coords[i] = 0

    descend(rank - 1, budget_total)
    return ShortVectorReport(n, target_norm, tuple(sorted(found)))


def minus_two_walls_through(n: Lattice, v: Sequence[int]) -> list[Vector]:
    """All w with w^2 = -2 and w.v = 0, for v of positive square.

    v-perp is negative definite under the Hodge-index signature, so negating
    its Gram turns the wall hunt into a finite norm-2 enumeration.
    """
    _require_hyperbolic(n)
    v = tuple(v)
    if n.norm(v) <= 0:
        raise ValueError("wall test needs v with positive square")
    if n.rank == 1:
        return []
    perp = orthogonal_complement(sublattice_embedding(n, [v]))
    flipped = Lattice(perp.source.rank, -perp.source.gram)
    report = short_vectors(flipped, 2)
    walls = [perp.matrix.apply(x) for x in report.vectors]
    return sorted(walls)


def in_cn(n: Lattice, v: Sequence[int]) -> bool:
    """Membership in the wall-avoiding positive cone: v^2 > 0 and no
    (-2)-vector is orthogonal to v."""
    _require_hyperbolic(n)
    v = tuple(v)
    if n.norm(v) <= 0:
        return False
    return not minus_two_walls_through(n, v)


def _require_hyperbolic(n: Lattice) -> None:
    if n.signature() != (1, n.rank - 1, 0):
        raise ValueError("lattice must have Hodge-index signature (1, rank-1)")


@dataclass(frozen=True)
class PolarizationSearchResult:
    lattice: Lattice
    upper_bound: int | None
    certificate: Vector | None
    searched_norm_limit: int
    searched_box: int
    exhaustive: bool


def _candidate_key(norm: int, vec: Vector):
    # deterministic order: by square, then componentwise with nonnegative
    # entries ranked before negative ones of the same magnitude
    return (norm, tuple((0, x) if x >= 0 else (1, -x) for x in vec))


def _box_candidates(n: Lattice, norm_limit: int, coeff_box: int) -> list[tuple[int, Vector]]:
    out = []

    def rec(i: int, acc: list[int]):
        if i == n.rank:
            vec = tuple(acc)
            q = n.norm(vec)
            if 0 < q <= norm_limit:
                out.append((q, vec))
            return
        for t in range(-coeff_box, coeff_box + 1):
            acc.append(t)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    out.sort(key=lambda item: _candidate_key(*item))
    return out


def min_polarization_degree(n: Lattice, norm_limit: int = 20, coeff_box: int = 10,
                            jobs: int = 1) -> PolarizationSearchResult:
    """Smallest v^2 over box candidates passing the wall test.

    Scans every v with |coordinates| <= coeff_box and 0 < v^2 <= norm_limit in
    increasing v^2 (deterministic tie-break) and returns the first member of
    the cone, a certified upper bound for the true minimal degree.  Exhaustive
    only in rank 1, where the generator settles the question.
    """
    _require_hyperbolic(n)
    if norm_limit <= 0 or coeff_box <= 0:
        raise ValueError("limits must be positive")
    candidates = _box_candidates(n, norm_limit, coeff_box)
    hit: tuple[int, Vector] | None = None
    if jobs > 1 and n.rank > 1:
        hit = _parallel_scan(n, candidates, jobs)
    else:
        for q, vec in candidates:
            if in_cn(n, vec):
                hit = (q, vec)
                break
    if hit is None:
        return PolarizationSearchResult(n, None, None, norm_limit, coeff_box, n.rank == 1)
    return PolarizationSearchResult(n, hit[0], hit[1], norm_limit, coeff_box, n.rank == 1)


def _parallel_scan(n: Lattice, candidates, jobs: int):
    """Split the ordered candidate list across processes; the merged result is
    the globally first hit because chunks preserve the order."""
    from concurrent.futures import ProcessPoolExecutor

    chunks = [candidates[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_scan_chunk, [(n, chunk) for chunk in chunks]))
    hits = [r for r in results if r is not None]
    if not hits:
        return None
    return min(hits, key=lambda item: _candidate_key(*item))


def _scan_chunk(args):
    n, chunk = args
    for q, vec in chunk:
        if in_cn(n, vec):
            return (q, vec)
    return None


def verify_certificate(n: Lattice, v: Sequence[int], claimed_degree: int) -> bool:
    """Exact independent recheck: v in n, v^2 = claimed degree, no wall hits."""
    v = tuple(v)
    if len(v) != n.rank:
        return False
    if n.norm(v) != claimed_degree:
        return False
    try:
        return in_cn(n, v)
    except ValueError:
        return False
