//! Exact-arithmetic workbench for finite-dimensional Leibniz algebras
//! equipped with averaging operators.
//!
//! The crate validates the defining identities (with counterexample
//! witnesses), builds induced brackets and representations, assembles the
//! three cochain differentials and their mapping cone, computes cohomology
//! dimensions by exact linear algebra, and checks truncated formal
//! deformations, cocycles, equivalences, and rigidity.
//!
//! Everything is generic over an exact [`scalar::Scalar`]; the intended
//! instantiation is arbitrary-precision rationals, aliased as [`Rat`] with
//! matrices as [`RatMatrix`]. There are no tolerances anywhere: every
//! comparison is exact, so floating-point scalars would make the validators
//! report spurious witnesses.

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod matrix;
pub mod report;
pub mod representation;
pub mod scalar;

pub use algebra::{
    check_morphism, induced_algebra, validate_averaging, validate_leibniz, AveragingOperator,
    Convention, InducedMode, LeibnizAlgebra,
};
pub use cochain::{
    basis_tuples, chain_map_residual, cone_differential, delta, matrix_of, partial_avg, phi,
    ConeCochain, DifferentialOp, MultilinearMap, MAX_ARITY, MAX_DEGREE,
};
pub use cohomology::{
    betti, cohomology_report, complex_audit, differential_matrix, CohomologyReport, ComplexKind,
    ComplexSpec, DegreeAudit, DegreeReport,
};
pub use deformation::{
    bracket_cochain, check_cocycle, check_deformation_order, check_equivalence, find_trivializer,
    rigidity_report, FormalIsomorphism, RigidityVerdict, TruncatedDeformation, Trivializer,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{MorphismReport, ValidationReport, Witness};
pub use representation::{
    induced_representation, self_representation, validate_averaging_representation,
    validate_representation, Representation,
};
pub use scalar::{format_rat, parse_rat, Scalar};

/// Arbitrary-precision rational scalar, the default instantiation.
pub type Rat = num_rational::BigRational;

/// Matrix over [`Rat`].
pub type RatMatrix = Matrix<Rat>;
