"""Integer lattices: named constructions, invariants, and isometries.

A lattice is a free Z-module of finite rank carrying an integer symmetric
bilinear pairing, represented entirely by its Gram matrix.  Sign convention
throughout: E8 is positive definite, the hyperbolic plane U has Gram
[[0,1],[1,0]], so E8^2+U^3 has signature (19,3) and e - d*f has square -2d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .linalg import (
    IntMatrix,
    RatMatrix,
    bezout_combination,
    content,
    det_exact,
    rational_inverse,
    rational_kernel,
    signature as matrix_signature,
    smith_normal_form,
    unimodular_inverse,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    rank: int
    gram: IntMatrix
    label: str | None = None

    def __post_init__(self):
        if self.gram.rows != self.rank or self.gram.cols != self.rank:
            raise ValueError("gram matrix shape does not match rank")
        if not self.gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(xi * gi for xi, gi in zip(x, self.gram.apply(y)))

    def norm(self, x: Sequence[int]) -> int:
        return self.pairing(x, x)

    def det(self) -> int:
        return det_exact(self.gram)

    def disc(self) -> int:
        """|det| of the Gram matrix (group order of the discriminant group)."""
        return abs(self.det())

    def signature(self) -> tuple[int, int, int]:
        return matrix_signature(self.gram)

    def is_unimodular(self) -> bool:
        return self.disc() == 1

    def is_nondegenerate(self) -> bool:
        return self.det() != 0

    def is_even(self) -> bool:
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def __repr__(self) -> str:
        name = self.label or f"rank-{self.rank} lattice"
        return f"Lattice({name})"


@dataclass(frozen=True)
class LatticeEmbedding:
    """Metric embedding source -> target, columns of `matrix` are the images."""

    source: Lattice
    target: Lattice
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.rank or self.matrix.cols != self.source.rank:
            raise ValueError("embedding matrix shape mismatch")
        induced = self.matrix.transpose() @ self.target.gram @ self.matrix
        if induced != self.source.gram:
            raise ValueError("matrix does not preserve the pairing")
        if len(rational_kernel(self.matrix)) != 0:
            raise ValueError("embedding columns are linearly dependent")

    def image_vectors(self) -> list[Vector]:
        return self.matrix.columns()


@dataclass(frozen=True)
class Isometry:
    lattice: Lattice
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.lattice.rank or self.matrix.cols != self.lattice.rank:
            raise ValueError("isometry matrix shape mismatch")
        if self.matrix.transpose() @ self.lattice.gram @ self.matrix != self.lattice.gram:
            raise ValueError("matrix does not preserve the pairing")
        if det_exact(self.matrix) not in (1, -1):
            raise ValueError("isometry must be unimodular")

    def apply(self, v: Sequence[int]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other (matrix product self.matrix @ other.matrix)."""
        if self.lattice.gram != other.lattice.gram:
            raise ValueError("isometries live on different lattices")
        return Isometry(self.lattice, self.matrix @ other.matrix)


@dataclass(frozen=True)
class DiscriminantForm:
    """The finite quadratic form on N^vee / N.

    Generators are lifted to rational vectors in the ambient coordinates of N;
    `bilinear` holds pairings of generators mod 1 and `quadratic` their norms
    mod 2, both as reduced nonnegative fractions.
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    bilinear: tuple[tuple[Fraction, ...], ...]
    quadratic: tuple[Fraction, ...]

    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


# ---------------------------------------------------------------------------
# constructions

_E8_GRAM = IntMatrix(
    [
        [2, 0, -1, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ]
)


def e8() -> Lattice:
    """Positive definite even unimodular rank-8 root lattice (Dynkin Gram)."""
    return Lattice(8, _E8_GRAM, "E8")


def hyperbolic_u() -> Lattice:
    return Lattice(2, IntMatrix([[0, 1], [1, 0]]), "U")


def rank_one(n: int) -> Lattice:
    return Lattice(1, IntMatrix([[n]]), f"<{n}>")


def direct_sum(*lattices: Lattice) -> Lattice:
    if not lattices:
        return Lattice(0, IntMatrix.zero(0, 0), "0")
    gram = lattices[0].gram
    for lat in lattices[1:]:
        gram = gram.block_diag(lat.gram)
    label = "+".join(l.label or "?" for l in lattices)
    return Lattice(gram.rows, gram, label)


def negate(a: Lattice) -> Lattice:
    return Lattice(a.rank, -a.gram, f"-({a.label})" if a.label else None)


def k3_lattice() -> Lattice:
    """E8^2 + U^3, rank 22: the second-cohomology lattice of a K3 surface."""
    lat = direct_sum(e8(), e8(), hyperbolic_u(), hyperbolic_u(), hyperbolic_u())
    return Lattice(lat.rank, lat.gram, "K3")


def l_d(d: int) -> Lattice:
    """E8^2 + U^2 + <2d>: primitive cohomology of a degree-2d polarized K3."""
    if d <= 0:
        raise ValueError("d must be >= 1")
    lat = direct_sum(e8(), e8(), hyperbolic_u(), hyperbolic_u(), rank_one(2 * d))
    return Lattice(lat.rank, lat.gram, f"L_{d}")


def big_l() -> Lattice:
    """E8^2 + U^2 + <1>^5: the rank-25 odd unimodular receiving lattice."""
    lat = direct_sum(
        e8(), e8(), hyperbolic_u(), hyperbolic_u(),
        rank_one(1), rank_one(1), rank_one(1), rank_one(1), rank_one(1),
    )
    return Lattice(lat.rank, lat.gram, "L")


# ---------------------------------------------------------------------------
# invariants

def discriminant_group(n: Lattice) -> DiscriminantForm:
    """Invariant factors and the torsion form of N^vee / N.

    With u G v = d in Smith form, the class of u^{-1} e_i generates a Z/d_i
    component of Z^r / G Z^r; pulling back through G gives rational lifts in
    N^vee whose pairings mod 1 (norms mod 2) are the discriminant form.
    """
    if not n.is_nondegenerate():
        raise ValueError("discriminant group needs a nondegenerate gram")
    snf = smith_normal_form(n.gram)
    ginv = rational_inverse(n.gram)
    uinv = unimodular_inverse(snf.u)
    factors: list[int] = []
    gens: list[tuple[Fraction, ...]] = []
    for i in range(n.rank):
        di = snf.d[i, i]
        if di > 1:
            factors.append(di)
            lift = ginv.apply(uinv.column(i))
            gens.append(tuple(lift))
    gram_rat = RatMatrix.from_int(n.gram)

    def pair(x, y):
        return sum((a * b for a, b in zip(x, gram_rat.apply(y))), Fraction(0))

    bilinear = tuple(tuple(pair(x, y) % 1 for y in gens) for x in gens)
    quadratic = tuple(pair(x, x) % 2 for x in gens)
    return DiscriminantForm(tuple(factors), tuple(gens), bilinear, quadratic)


# ---------------------------------------------------------------------------
# sublattice operations

def sublattice_embedding(target: Lattice, columns: Sequence[Sequence[int]],
                         label: str | None = None) -> LatticeEmbedding:
    """Embedding of the sublattice spanned by `columns` with its induced Gram."""
    mat = IntMatrix.from_columns([tuple(c) for c in columns], target.rank)
    induced = mat.transpose() @ target.gram @ mat
    src = Lattice(mat.cols, induced, label)
    return LatticeEmbedding(src, target, mat)


def saturate(sub: LatticeEmbedding) -> LatticeEmbedding:
    """Embedding of (Q-span of the image) intersected with the target.

    With u B v = d, the image spans the first r columns of u^{-1} over Q, and
    those columns are a basis of the saturation since u is unimodular.
    """
    snf = smith_normal_form(sub.matrix)
    r = len(snf.invariant_factors())
    uinv = unimodular_inverse(snf.u)
    cols = [uinv.column(j) for j in range(r)]
    return sublattice_embedding(sub.target, cols, sub.source.label)


def is_primitive(sub: LatticeEmbedding) -> bool:
    """True iff the cokernel of the embedding matrix is torsion-free."""
    return all(f == 1 for f in smith_normal_form(sub.matrix).invariant_factors())


def orthogonal_complement(sub: LatticeEmbedding) -> LatticeEmbedding:
    """The saturated sublattice of the target orthogonal to the image."""
    if not sub.target.is_nondegenerate():
        raise ValueError("orthogonal complement needs a nondegenerate target")
    pairings = sub.matrix.transpose() @ sub.target.gram
    basis = rational_kernel(pairings)
    return sublattice_embedding(sub.target, basis)


@dataclass(frozen=True)
class DiscComplementReport:
    disc_left: int
    disc_right: int
    index: int

    def triple(self) -> tuple[int, int, int]:
        return (self.disc_left, self.disc_right, self.index)


def check_disc_complement(n: LatticeEmbedding, nprime: LatticeEmbedding) -> DiscComplementReport:
    """For saturated orthogonal N, N' spanning a unimodular M up to finite
    index: |disc N| = [M : N + N'] = |disc N'|.  Computes all three and
    asserts they agree."""
    if n.target.gram != nprime.target.gram:
        raise ValueError("embeddings must share a common target")
    m = n.target
    if not m.is_unimodular():
        raise ValueError("common target must be unimodular")
    if n.source.rank + nprime.source.rank != m.rank:
        raise ValueError("ranks do not add up to the ambient rank")
    if not is_primitive(n) or not is_primitive(nprime):
        raise ValueError("both sublattices must be saturated")
    cross = n.matrix.transpose() @ m.gram @ nprime.matrix
    if any(cross[i, j] != 0 for i in range(cross.rows) for j in range(cross.cols)):
        raise ValueError("sublattices are not orthogonal")
    disc_left = n.source.disc()
    disc_right = nprime.source.disc()
    stacked = n.matrix.hstack(nprime.matrix)
    index = abs(det_exact(stacked))
    if not disc_left == disc_right == index:
        raise AssertionError(
            f"discriminant/index identity failed: ({disc_left}, {disc_right}, {index})")
    return DiscComplementReport(disc_left, disc_right, index)


# ---------------------------------------------------------------------------
# isometries

def reflection(w: Sequence[int], n: Lattice) -> Isometry:
    """Matrix of x -> x - (2(x.w)/w^2) w; requires integrality on the basis."""
    w = tuple(w)
    ww = n.norm(w)
    if ww == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    cols = []
    for j in range(n.rank):
        ej = n.basis_vector(j)
        num = 2 * n.pairing(ej, w)
        if num % ww != 0:
            raise ValueError(
                f"reflection in {w} is not integral: basis vector {j} has 2(x.w) = {num}, w^2 = {ww}")
        q = num // ww
        cols.append(tuple(ej[i] - q * w[i] for i in range(n.rank)))
    return Isometry(n, IntMatrix.from_columns(cols, n.rank))


def eichler_transvection(f: Sequence[int], a: Sequence[int], n: Lattice) -> Isometry:
    """E(f,a): x -> x + (x.f)a - (x.a)f - (a^2/2)(x.f)f for isotropic f, a._|_f.

    Integral whenever a^2 is even; otherwise every basis vector pairing oddly
    with f breaks integrality and is reported.
    """
    f = tuple(f)
    a = tuple(a)
    if n.norm(f) != 0:
        raise ValueError("f must be isotropic")
    if n.pairing(a, f) != 0:
        raise ValueError("a must be orthogonal to f")
    aa = n.norm(a)
    cols = []
    for j in range(n.rank):
        ej = n.basis_vector(j)
        xf = n.pairing(ej, f)
        xa = n.pairing(ej, a)
        twice_fcoeff = -2 * xa - aa * xf
        if twice_fcoeff % 2 != 0:
            raise ValueError(
                f"transvection not integral: a^2 = {aa} odd and basis vector {j} pairs oddly with f")
        fcoeff = twice_fcoeff // 2
        cols.append(tuple(ej[i] + xf * a[i] + fcoeff * f[i] for i in range(n.rank)))
    return Isometry(n, IntMatrix.from_columns(cols, n.rank))


def in_discriminant_kernel(g: Isometry) -> bool:
    """True iff g fixes every class of the discriminant group of its lattice."""
    n = g.lattice
    disc = discriminant_group(n)
    grat = RatMatrix.from_int(g.matrix)
    for gen in disc.generators:
        image = grat.apply(gen)
        if any((x - y).denominator != 1 for x, y in zip(image, gen)):
            return False
    return True


# ---------------------------------------------------------------------------
# moving primitive vectors with Eichler transvections

@dataclass(frozen=True)
class HyperbolicPairs:
    """Index pairs (e, f) of two orthogonal U-summands inside a lattice."""

    first: tuple[int, int]
    second: tuple[int, int]

    def all_indices(self) -> tuple[int, ...]:
        return self.first + self.second


def _check_marked_planes(n: Lattice, pairs: HyperbolicPairs) -> None:
    idx = pairs.all_indices()
    if len(set(idx)) != 4:
        raise ValueError("hyperbolic pair indices must be distinct")
    for (i, j) in (pairs.first, pairs.second):
        if not (n.gram[i, i] == 0 and n.gram[j, j] == 0 and n.gram[i, j] == 1):
            raise ValueError(f"columns {(i, j)} do not span a standard U-summand")
    for i in idx:
        for k in range(n.rank):
            if k not in idx and n.gram[i, k] != 0:
                raise ValueError("marked U-summands are not orthogonal to the rest")


@dataclass(frozen=True)
class MoveResult:
    isometry: Isometry
    image: Vector
    canonical: bool
    divisor: int


def move_primitive_vector(v: Sequence[int], n: Lattice, pairs: HyperbolicPairs) -> MoveResult:
    """Carry a primitive vector of nonzero even norm to e1 + (v^2/2) f1.

    Composes Eichler transvections built from two marked hyperbolic planes:
    first arrange gcd(v.f1, v.e1) = 1 (a Bezout combination against the
    complement realizes the content of the complement part; a bounded search
    then fixes the gcd modulo v.e1), then run 2x2 Smith reduction on the
    four plane pairings - each elementary row/column step is exactly one
    transvection with an isotropic plane vector - which drives v.f1 to +-1,
    and finish with a single transvection clearing everything outside the
    first plane.  For a unimodular even ambient this always canonicalizes;
    otherwise the reduced vector and its divisor are reported as-is.
    """
    v = tuple(int(x) for x in v)
    if len(v) != n.rank:
        raise ValueError("vector length mismatch")
    if content(v) != 1:
        raise ValueError("vector is not primitive")
    if not n.is_even():
        raise ValueError("ambient lattice must be even")
    _check_marked_planes(n, pairs)
    if n.norm(v) == 0:
        raise ValueError("vector must have nonzero norm")

    e1i, f1i = pairs.first
    e2i, f2i = pairs.second

    def unit(i: int) -> Vector:
        return n.basis_vector(i)

    e1, f1, e2, f2 = unit(e1i), unit(f1i), unit(e2i), unit(f2i)

    g = Isometry(n, IntMatrix.identity(n.rank))
    cur = v

    def pairings(w):
        return (n.pairing(w, f1), n.pairing(w, e1), n.pairing(w, f2), n.pairing(w, e2))

    def complement_part(w):
        # component of w outside the first plane, as a lattice vector
        return tuple(0 if k in (e1i, f1i) else w[k] for k in range(n.rank))

    def transvect(fvec, avec):
        nonlocal g, cur
        if all(x == 0 for x in avec):
            return
        t = eichler_transvection(fvec, avec, n)
        g, cur = t.compose(g), t.apply(cur)

    def content_move_vector(w):
        """c in the complement of plane 1 with w.c = ideal generator, or None."""
        k = complement_part(w)
        rest_idx = [i for i in range(n.rank) if i not in (e1i, f1i)]
        pair_values = [n.pairing(k, unit(i)) for i in rest_idx]
        t, coeffs = bezout_combination(pair_values)
        if t == 0:
            return None, 0
        c = [0] * n.rank
        for ci, i in zip(coeffs, rest_idx):
            c[i] = ci
        return tuple(c), t

    # stage 1: ensure (v.f1, v.e1) != (0, 0)
    a1, b1 = n.pairing(cur, f1), n.pairing(cur, e1)
    if a1 == 0 and b1 == 0:
        c0, t = content_move_vector(cur)
        if c0 is None:
            raise ValueError("vector is orthogonal to everything outside plane 1")
        transvect(e1, c0)

    # stage 2: make gcd(v.f1, v.e1) = 1
    for _ in range(8):
        a1, b1 = n.pairing(cur, f1), n.pairing(cur, e1)
        if gcd(a1, b1) == 1:
            break
        c0, t = content_move_vector(cur)
        if c0 is None:
            raise ValueError("primitive vector with trivial complement should have coprime plane pairings")
        if b1 == 0:
            transvect(f1, c0)
            if n.pairing(cur, e1) == 0:
                transvect(f1, c0)
            continue
        c0sq = n.norm(c0)
        found = None
        for lam in range(2 * abs(b1) + 3):
            cand = a1 - lam * t - (lam * lam * c0sq // 2) * b1
            if gcd(cand, b1) == 1:
                found = lam
                break
        if found is None:
            break  # divisor obstruction (non-unimodular ambient)
        transvect(e1, tuple(found * x for x in c0))
    a1, b1, a2, b2 = pairings(cur)

    # stage 3: 2x2 Smith reduction on Q = [[v.f1, v.e2], [-v.f2, v.e1]].
    # The four elementary integer row/column additions on Q are realized by
    # exactly one transvection each:
    #   row1 += q*row2 : E(e1, q f2)    row2 += q*row1 : E(f1, -q e2)
    #   col1 += q*col2 : E(e1, -q e2)   col2 += q*col1 : E(f1, q f2)
    # so ordinary 2x2 SNF (swaps emulated as three additions, nearest-integer
    # quotients) drives v.f1 to +-gcd of the four plane pairings, which is
    # +-1 once stage 2 succeeded.
    def q_state():
        a1_, b1_, a2_, b2_ = pairings(cur)
        return a1_, b2_, -a2_, b1_

    def row1_add(lam):
        transvect(e1, tuple(lam * x for x in f2))

    def row2_add(lam):
        transvect(f1, tuple(-lam * x for x in e2))

    def col1_add(lam):
        transvect(e1, tuple(-lam * x for x in e2))

    def col2_add(lam):
        transvect(f1, tuple(lam * x for x in f2))

    def rotate_cols():
        col1_add(1)
        col2_add(-1)
        col1_add(1)

    def rotate_rows():
        row1_add(1)
        row2_add(-1)
        row1_add(1)

    def nearest_quot(a, b):
        q, r = divmod(a, b)
        if 2 * abs(r) > abs(b):
            q += 1
        return q

    for _ in range(2000):
        q00, q01, q10, q11 = q_state()
        if q01 != 0:
            if q00 == 0 or abs(q00) > abs(q01):
                rotate_cols()
            else:
                col2_add(-nearest_quot(q01, q00))
            continue
        if q10 != 0:
            if q00 == 0 or abs(q00) > abs(q10):
                rotate_rows()
            else:
                row2_add(-nearest_quot(q10, q00))
            continue
        if q00 == 0 and q11 != 0:
            rotate_rows()
            continue
        if q00 == 0 or q11 == 0 or q11 % q00 == 0:
            break
        row1_add(1)  # fold the second diagonal entry in to repair divisibility
    else:
        raise AssertionError("2x2 Smith reduction did not terminate")

    a1, b1, a2, b2 = pairings(cur)
    divisor = gcd(gcd(a1, b1), gcd(a2, b2))

    canonical = False
    if a1 in (1, -1) and a2 == 0 and b2 == 0:
        # finisher: clear everything outside plane 1, then fix signs
        k = complement_part(cur)
        transvect(f1, tuple(-a1 * x for x in k))
        a1 = n.pairing(cur, f1)
        if a1 == -1:
            minus = Isometry(n, -IntMatrix.identity(n.rank))
            g, cur = minus.compose(g), minus.apply(cur)
        canonical = True

    expected = tuple(
        (1 if k == e1i else (n.norm(v) // 2 if k == f1i else 0)) for k in range(n.rank))
    if canonical and cur != expected:
        raise AssertionError("canonicalization reached an unexpected representative")
    if g.apply(v) != cur:
        raise AssertionError("isometry does not witness the move")
    return MoveResult(g, cur, canonical, abs(divisor) if divisor else 0)
