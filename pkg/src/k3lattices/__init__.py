"""Exact-arithmetic toolkit for integer quadratic lattices.

Everything is computed over arbitrary-precision integers and rationals:
the standard K3-adjacent lattices and their discriminant invariants, the
explicit primitive embeddings through Lagrange four-square witnesses,
Eichler transvections and orbit normalization of primitive vectors, exhaustive
short-vector and (-2)-wall enumeration, integral Clifford algebras with the
trace polarization pairing, and bounded lists of reduced definite forms.
"""

from .clifford import (
    CliffordElement,
    EndoMatrix,
    clifford_mul,
    conjugation_preserves_lattice,
    even_part,
    find_polarization_element,
    gspin_generator,
    is_even,
    left_mul_matrix,
    phi_a,
    phi_gram,
    project_endo_to_l,
    reversal,
    trace_pairing_identity,
)
from .embeddings import (
    FourSquareWitness,
    complement_of_ld_in_l,
    embed_2d_in_i5,
    embed_ld_in_l,
    four_squares,
    v_d_in_k3,
)
from .enumeration import (
    ReducedFormList,
    bounded_picard_candidates,
    enumerate_lattices,
    transcendental_invariants,
)
from .lattices import (
    DiscriminantForm,
    HyperbolicPairs,
    Isometry,
    Lattice,
    LatticeEmbedding,
    big_l,
    check_disc_complement,
    direct_sum,
    discriminant_group,
    e8,
    eichler_transvection,
    hyperbolic_u,
    in_discriminant_kernel,
    is_primitive,
    k3_lattice,
    l_d,
    move_primitive_vector,
    negate,
    orthogonal_complement,
    rank_one,
    reflection,
    saturate,
    sublattice_embedding,
)
from .linalg import IntMatrix, RatMatrix, SnfDecomposition, det_exact, rational_kernel, signature, smith_normal_form
from .roots import (
    PolarizationSearchResult,
    ShortVectorReport,
    in_cn,
    min_polarization_degree,
    minus_two_walls_through,
    short_vectors,
    verify_certificate,
)

__version__ = "0.1.0"
