"""Lie algebras from structure constants: core invariants, derivations, cohomology, structure."""

from lierig.lie.cohomology import (
    CochainSpace,
    CohomologyReport,
    cochain_space,
    differential_matrix,
    full_report,
    h_dim,
    is_algebraically_rigid,
)
from lierig.lie.core import (
    SolvabilityVerdict,
    StructureConstants,
    Subspace,
    ad,
    bracket,
    center,
    change_basis,
    complete_solvability,
    derived_series_dims,
    induced_algebra,
    is_completely_solvable,
    is_ideal,
    is_lie_algebra,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    jacobi_violations,
    killing_form,
    killing_signature,
    lower_central_dims,
)
from lierig.lie.derivations import (
    DerivationSpace,
    NonConjugacyCertificate,
    Torus,
    derivation_space,
    diagonal_derivations,
    inner_derivations,
    is_derivation,
    is_real_diagonalizable,
    is_semisimple,
    is_split_torus,
    is_torus,
    make_torus,
    nonconjugacy_certificate,
    outer_derivations,
)
from lierig.lie.structure import (
    Fingerprint,
    Verdict,
    direct_sum,
    distinguish,
    fingerprint,
    nilradical,
    nilradical_algebra,
    semidirect_sum,
)
