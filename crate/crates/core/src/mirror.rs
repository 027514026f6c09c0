//! Closed-form mirror maps between the moduli of elliptic curves.
//!
//! A complex parameter τ = b + ia goes to the complexified symplectic
//! parameter ρ = ab/(1+b²) + i·a/(1+b²) and back via τ = b/a + i(a + b²/a);
//! the two maps are exact mutual inverses on the upper half-plane. The
//! [`consistency_check`] oracle re-derives each map through the full matrix
//! pipeline (build, transport, classify, extract) and compares exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcs::{
    b_symplectic_from_modulus, classify, complex_from_modulus, from_complex, Modulus,
    ModulusRole,
};
use crate::algebra::SplitFrame;
use crate::scalar::Rational;
use crate::tduality::{transport, DualityData};

use num_traits::One;

/// A modulus together with its mirror; the roles always differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MirrorPair {
    pub source: Modulus,
    pub target: Modulus,
}

impl MirrorPair {
    /// Applies the role-appropriate mirror map to the source.
    pub fn from_source(source: Modulus) -> MirrorPair {
        let target = match source.role() {
            ModulusRole::Complex => tau_to_rho(&source),
            ModulusRole::Symplectic => rho_to_tau(&source),
        }
        .expect("role was checked before dispatch");
        MirrorPair { source, target }
    }
}

/// τ = b + ia (complex parameter) to ρ = ab/(1+b²) + i·a/(1+b²)
/// (complexified symplectic parameter).
pub fn tau_to_rho(tau: &Modulus) -> Result<Modulus> {
    tau.expect_role(ModulusRole::Complex)?;
    let b = tau.b();
    let a = tau.a();
    let denom = Rational::one() + b * b;
    Modulus::new(&(a * b) / &denom, a / &denom, ModulusRole::Symplectic)
}

/// ρ = b + ia (complexified symplectic parameter) to
/// τ = b/a + i(a + b²/a) (complex parameter).
pub fn rho_to_tau(rho: &Modulus) -> Result<Modulus> {
    rho.expect_role(ModulusRole::Symplectic)?;
    let b = rho.b();
    let a = rho.a();
    Modulus::new(b / a, a + &(&(b * b) / a), ModulusRole::Complex)
}

/// The fibration-level mirror swap: complex parameter iλ and symplectic
/// area γ exchange places.
pub fn syz_mirror(gamma: &Rational, lambda: &Rational) -> Result<(Rational, Rational)> {
    if !gamma.is_positive() || !lambda.is_positive() {
        return Err(Error::NonPositive);
    }
    Ok((lambda.clone(), gamma.clone()))
}

/// Two-path comparison of a mirror map: closed form vs the matrix pipeline.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConsistencyReport {
    pub input: Modulus,
    pub closed_form: Modulus,
    pub transported: Option<Modulus>,
    pub passed: bool,
}

/// Builds the structure of `m`, transports it across the standard duality
/// (f = 1), classifies the result, extracts the target modulus, and compares
/// it exactly against the closed-form map. Mismatches are reported, not
/// raised.
pub fn consistency_check(m: &Modulus) -> Result<ConsistencyReport> {
    let closed_form = match m.role() {
        ModulusRole::Complex => tau_to_rho(m)?,
        ModulusRole::Symplectic => rho_to_tau(m)?,
    };
    let structure = match m.role() {
        ModulusRole::Complex => {
            from_complex(&SplitFrame::torus2(), &complex_from_modulus(m)?)?
        }
        ModulusRole::Symplectic => b_symplectic_from_modulus(m)?,
    };
    let moved = transport(&structure, &DualityData::standard())?;
    let transported = classify(&moved)?.extract_modulus();
    let passed = transported.as_ref() == Some(&closed_form);
    Ok(ConsistencyReport {
        input: m.clone(),
        closed_form,
        transported,
        passed,
    })
}
