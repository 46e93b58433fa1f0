"""Exact computations with finite-dimensional hom-Lie algebras over Q."""

from homlie.algebra import (
    Counterexample, HomLieAlgebra, LinearMap, VerificationReport, alpha_power, bracket, center,
    direct_sum, graph_is_subalgebra, is_morphism, is_multiplicative, is_regular, is_subalgebra,
    verify_hom_jacobi,
)
from homlie.cochains import Cochain
from homlie.cohomology import (
    CohomologyResult, HomCochainSpace, coboundary_apply, coboundary_matrix, cohomology,
    d_squared_is_zero, hom_cochain_space, is_hom_cochain,
)
from homlie.deformations import (
    DeformationDatum, NijenhuisCandidate, check_trivializes, deformed_bracket_at,
    generates_deformation, is_hom_nijenhuis, nijenhuis_bracket,
)
from homlie.derivations import (
    GradedDerivationSpace, commutator, derivation_extension, derivation_space,
    inner_derivation_space, is_derivation,
)
from homlie.linalg import Matrix, Subspace, fixed_space, inverse, kernel, quotient_dim, rank
from homlie.representations import (
    Representation, adjoint_representation, central_extension, central_extension_isomorphism,
    is_representation, semidirect_product, trivial_representation,
)

__version__ = "0.1.0"
