//! Exact-arithmetic generalized complex geometry on flat tori.
//!
//! Everything runs over the rationals (extended by i where eigenbundles are
//! involved), so the structural identities hold with zero tolerance:
//!
//! - [`algebra`]: invariant sections of TM (+) T*M over a split frame, the
//!   natural pairing, the constant-coefficient Courant bracket, and the
//!   orthogonal automorphisms exp(B);
//! - [`gcs`]: generalized complex structures from complex or symplectic
//!   data, B-field transforms, exact classification back into geometric
//!   data, and an eigenbundle involutivity checker over Q(i);
//! - [`tduality`]: the duality isomorphism between dual 2-tori (built both
//!   through the correspondence space and in closed form) and structure
//!   transport;
//! - [`mirror`]: the closed-form moduli maps τ ↔ ρ between complex and
//!   complexified symplectic parameters of elliptic curves, with a
//!   cross-validation oracle against the matrix pipeline;
//! - [`verify`]: named executable suites over fixed and seeded-random
//!   inputs, reported case by case.
//!
//! Sweeps over sample batches go through [`batch`], which uses rayon when
//! the `parallel` feature (default) is enabled and a sequential scan
//! otherwise.

pub mod algebra;
pub mod batch;
pub mod error;
pub mod gcs;
pub mod matrix;
pub mod mirror;
pub mod sample;
pub mod scalar;
pub mod tduality;
pub mod verify;

pub use algebra::{
    apply_map, courant_bracket, exp_b, is_orthogonal, pairing, GVector, SplitFrame, ThreeForm,
    TwoForm,
};
pub use error::{Error, Result};
pub use gcs::{
    b_symplectic_from_modulus, b_transform, classify, complex_from_modulus, from_complex,
    from_symplectic, modulus_from_complex, validate, ClassifiedStructure, GCStructure, Modulus,
    ModulusRole, ValidationReport,
};
pub use matrix::Matrix;
pub use mirror::{consistency_check, rho_to_tau, syz_mirror, tau_to_rho, MirrorPair};
pub use scalar::{GaussianRational, Rational};
pub use tduality::{
    lift, phi_apply, phi_matrix, transport, verify_isomorphism, CorrespondenceVector,
    DualityData, IsomorphismReport,
};
