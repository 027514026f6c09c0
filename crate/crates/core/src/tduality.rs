//! T-duality between dual 2-tori.
//!
//! Both tori are circle bundles over the same circle; the correspondence
//! space carries the fiberwise form F = f·θ∧θ̃ (f = 1 in the classical
//! setup, kept rational and nonzero here so that uniqueness of the lift and
//! orthogonality are tested away from the involutive special case). The
//! duality map is built in two independent ways: step by step through the
//! correspondence space (lift, -F transform, pushforward) and as a closed
//! form matrix; tests pin the two against each other.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{courant_bracket, pairing, GVector, SplitFrame, ThreeForm};
use crate::error::{Error, Result};
use crate::gcs::GCStructure;
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// The pair of dual torus frames plus the fiberwise coefficient of F.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualityData {
    frame_m: SplitFrame,
    frame_mdual: SplitFrame,
    f_coefficient: Rational,
}

impl DualityData {
    /// F = θ∧θ̃, the classical correspondence form.
    pub fn standard() -> Self {
        Self {
            frame_m: SplitFrame::torus2(),
            frame_mdual: SplitFrame::torus2_dual(),
            f_coefficient: Rational::one(),
        }
    }

    /// F = f·θ∧θ̃ with f nonzero.
    pub fn with_coefficient(f: Rational) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::DegenerateFiberForm);
        }
        Ok(Self {
            f_coefficient: f,
            ..Self::standard()
        })
    }

    pub fn frame_m(&self) -> &SplitFrame {
        &self.frame_m
    }

    pub fn frame_mdual(&self) -> &SplitFrame {
        &self.frame_mdual
    }

    pub fn f_coefficient(&self) -> &Rational {
        &self.f_coefficient
    }
}

const CORRESPONDENCE_LABELS: [&str; 6] = ["∂x", "∂θ", "∂θ̃", "dx", "θ", "θ̃"];

/// Invariant section on the correspondence space T³, over the frame
/// [∂x, ∂θ, ∂θ̃, dx, θ, θ̃].
#[derive(Clone, PartialEq, Eq)]
pub struct CorrespondenceVector {
    coeffs: [Rational; 6],
}

impl CorrespondenceVector {
    pub fn new(coeffs: [Rational; 6]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; 6] {
        &self.coeffs
    }
}

impl fmt::Display for CorrespondenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, label) in self.coeffs.iter().zip(CORRESPONDENCE_LABELS) {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{label}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CorrespondenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn expect_torus2_frame(u: &GVector, dd: &DualityData) -> Result<()> {
    if !u.frame().is_compatible(dd.frame_m()) {
        return Err(Error::FrameMismatch);
    }
    Ok(())
}

/// Lifts X + a∂θ + ξ + bθ to the correspondence space. The ∂θ̃ coefficient
/// c = b/f is the unique choice making the form part basic after the -F
/// transform; uniqueness is exactly the nondegeneracy of F.
pub fn lift(u: &GVector, dd: &DualityData) -> Result<CorrespondenceVector> {
    expect_torus2_frame(u, dd)?;
    let [x, a, xi, b] = [&u.coeffs()[0], &u.coeffs()[1], &u.coeffs()[2], &u.coeffs()[3]];
    let c = b / dd.f_coefficient();
    Ok(CorrespondenceVector::new([
        x.clone(),
        a.clone(),
        c,
        xi.clone(),
        b.clone(),
        Rational::zero(),
    ]))
}

/// Adds the -F transform of the tangent part to the form part:
/// f·a·θ̃ - f·c·θ.
fn minus_f_transform(v: &CorrespondenceVector, f: &Rational) -> CorrespondenceVector {
    let [x, a, c, xi, theta, theta_dual] = v.coeffs().clone();
    let theta = theta - f * &c;
    let theta_dual = theta_dual + f * &a;
    CorrespondenceVector::new([x, a, c, xi, theta, theta_dual])
}

/// The duality isomorphism computed through the correspondence space:
/// lift, -F transform, pushforward. Sends X + a∂θ + ξ + bθ to
/// X + (b/f)∂θ̃ + ξ + (f·a)θ̃; at f = 1 this swaps the fiber coefficients.
pub fn phi_apply(u: &GVector, dd: &DualityData) -> Result<GVector> {
    let lifted = lift(u, dd)?;
    let transformed = minus_f_transform(&lifted, dd.f_coefficient());
    let [x, _a, c, xi, theta, theta_dual] = transformed.coeffs().clone();
    debug_assert!(theta.is_zero(), "lift failed to make the form part basic");
    let _ = theta;
    GVector::new(dd.frame_mdual().clone(), vec![x, c, xi, theta_dual])
}

/// The matrix of the duality map in the split frames, written in closed
/// form; at f = 1 it is the permutation swapping the fiber tangent and
/// fiber cotangent coordinates.
pub fn phi_matrix(dd: &DualityData) -> Matrix<Rational> {
    let f = dd.f_coefficient();
    let mut m = Matrix::zero(4, 4);
    m.set(0, 0, Rational::one());
    m.set(2, 2, Rational::one());
    m.set(1, 3, Rational::one() / f);
    m.set(3, 1, f.clone());
    m
}

/// Transports a structure to the dual torus by conjugation: φ⁻¹ ∘ 𝓕 ∘ φ.
/// The result is re-validated; a failure there cannot come from user input.
pub fn transport(s: &GCStructure, dd: &DualityData) -> Result<GCStructure> {
    if !s.frame().is_compatible(dd.frame_m()) {
        return Err(Error::FrameMismatch);
    }
    let phi = phi_matrix(dd);
    let phi_inv = phi
        .inverse()
        .expect("duality matrix is invertible for nonzero f");
    let matrix = &(&phi_inv * s.matrix()) * &phi;
    let target = if s.frame() == dd.frame_m() {
        dd.frame_mdual().clone()
    } else {
        dd.frame_m().clone()
    };
    GCStructure::new(target, matrix)
        .map_err(|e| Error::Internal(format!("transport produced an invalid structure: {e}")))
}

/// One failed law of [`verify_isomorphism`], with the pair spelled out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsomorphismFailure {
    pub u: GVector,
    pub v: GVector,
    pub law: &'static str,
    pub detail: String,
}

impl fmt::Display for IsomorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} not preserved for u = {}, v = {}: {}",
            self.law, self.u, self.v, self.detail
        )
    }
}

/// Outcome of checking pairing and bracket preservation over sample pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsomorphismReport {
    pub pairs_checked: usize,
    pub failures: Vec<IsomorphismFailure>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks <φu, φv> = <u, v> exactly for every pair, and bracket preservation
/// with H = H̃ = 0 (the only closed 3-forms on a 2-torus). An empty sample
/// list passes trivially.
pub fn verify_isomorphism(
    dd: &DualityData,
    samples: &[(GVector, GVector)],
) -> Result<IsomorphismReport> {
    let h = ThreeForm::zero(2);
    let mut failures = Vec::new();
    for (u, v) in samples {
        let fu = phi_apply(u, dd)?;
        let fv = phi_apply(v, dd)?;

        let before = pairing(u, v)?;
        let after = pairing(&fu, &fv)?;
        if before != after {
            failures.push(IsomorphismFailure {
                u: u.clone(),
                v: v.clone(),
                law: "pairing",
                detail: format!("<u, v> = {before} but <φu, φv> = {after}"),
            });
        }

        let bracket_then_map = phi_apply(&courant_bracket(u, v, &h)?, dd)?;
        let map_then_bracket = courant_bracket(&fu, &fv, &h)?;
        if bracket_then_map.coeffs() != map_then_bracket.coeffs() {
            failures.push(IsomorphismFailure {
                u: u.clone(),
                v: v.clone(),
                law: "bracket",
                detail: format!(
                    "φ([u, v]) = {bracket_then_map} but [φu, φv] = {map_then_bracket}"
                ),
            });
        }
    }
    Ok(IsomorphismReport {
        pairs_checked: samples.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{apply_map, is_orthogonal};
    use crate::gcs::{
        b_symplectic_from_modulus, complex_from_modulus, from_complex, Modulus, ModulusRole,
    };

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ri(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn gv(coeffs: &[i64]) -> GVector {
        GVector::new(
            SplitFrame::torus2(),
            coeffs.iter().map(|&c| ri(c)).collect(),
        )
        .unwrap()
    }

    fn gv_dual(coeffs: &[(i64, i64)]) -> GVector {
        GVector::new(
            SplitFrame::torus2_dual(),
            coeffs.iter().map(|&(n, d)| r(n, d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn lift_matches_the_unique_basic_choice() {
        let dd = DualityData::standard();
        let theta = gv(&[0, 0, 0, 1]);
        assert_eq!(lift(&theta, &dd).unwrap().coeffs()[2], ri(1));

        let horizontal = gv(&[1, 1, 0, 0]);
        assert_eq!(lift(&horizontal, &dd).unwrap().coeffs()[2], ri(0));

        let dd2 = DualityData::with_coefficient(ri(2)).unwrap();
        let two_theta = gv(&[0, 0, 0, 2]);
        assert_eq!(lift(&two_theta, &dd2).unwrap().coeffs()[2], ri(1));
    }

    #[test]
    fn degenerate_f_is_rejected() {
        assert_eq!(
            DualityData::with_coefficient(ri(0)).unwrap_err(),
            Error::DegenerateFiberForm
        );
    }

    #[test]
    fn phi_swaps_fiber_coefficients() {
        let dd = DualityData::standard();
        let d_theta = gv(&[0, 1, 0, 0]);
        let theta = gv(&[0, 0, 0, 1]);
        assert_eq!(
            phi_apply(&d_theta, &dd).unwrap(),
            gv_dual(&[(0, 1), (0, 1), (0, 1), (1, 1)])
        );
        assert_eq!(
            phi_apply(&theta, &dd).unwrap(),
            gv_dual(&[(0, 1), (1, 1), (0, 1), (0, 1)])
        );
    }

    #[test]
    fn phi_fixes_the_base() {
        let dd = DualityData::standard();
        let u = gv(&[1, 0, 1, 0]);
        assert_eq!(
            phi_apply(&u, &dd).unwrap(),
            gv_dual(&[(1, 1), (0, 1), (1, 1), (0, 1)])
        );
    }

    #[test]
    fn phi_scales_with_f() {
        let dd = DualityData::with_coefficient(ri(2)).unwrap();
        let d_theta = gv(&[0, 1, 0, 0]);
        assert_eq!(
            phi_apply(&d_theta, &dd).unwrap(),
            gv_dual(&[(0, 1), (0, 1), (0, 1), (2, 1)])
        );
    }

    #[test]
    fn phi_matrix_is_the_displayed_permutation_at_f_one() {
        let dd = DualityData::standard();
        let m = phi_matrix(&dd);
        let expected = Matrix::from_rows(vec![
            vec![ri(1), ri(0), ri(0), ri(0)],
            vec![ri(0), ri(0), ri(0), ri(1)],
            vec![ri(0), ri(0), ri(1), ri(0)],
            vec![ri(0), ri(1), ri(0), ri(0)],
        ]);
        assert_eq!(m, expected);
        assert_eq!(&m * &m, Matrix::identity(4));
    }

    #[test]
    fn phi_matrix_sends_theta_to_fiber_tangent() {
        let m = phi_matrix(&DualityData::standard());
        let theta = vec![ri(0), ri(0), ri(0), ri(1)];
        assert_eq!(m.matvec(&theta), vec![ri(0), ri(1), ri(0), ri(0)]);
    }

    #[test]
    fn phi_matrix_with_scaled_f() {
        let dd = DualityData::with_coefficient(ri(2)).unwrap();
        let m = phi_matrix(&dd);
        assert_eq!(m.get(1, 3), &r(1, 2));
        assert_eq!(m.get(3, 1), &ri(2));
        assert_eq!(m.get(0, 0), &ri(1));
        assert_eq!(m.get(2, 2), &ri(1));
        assert_eq!(
            m.row(0).iter().chain(m.row(1)).filter(|c| !c.is_zero()).count(),
            2
        );
    }

    #[test]
    fn phi_matrix_is_orthogonal_for_various_f() {
        for f in [ri(1), ri(2), r(1, 3), r(-5, 7)] {
            let dd = DualityData::with_coefficient(f).unwrap();
            assert!(is_orthogonal(&phi_matrix(&dd)).unwrap());
        }
    }

    #[test]
    fn phi_apply_agrees_with_phi_matrix_on_the_basis() {
        for f in [ri(1), ri(3), r(2, 5)] {
            let dd = DualityData::with_coefficient(f).unwrap();
            let m = phi_matrix(&dd);
            for idx in 0..4 {
                let u = GVector::basis(SplitFrame::torus2(), idx);
                let via_pipeline = phi_apply(&u, &dd).unwrap();
                let via_matrix = apply_map(&m, &u).unwrap();
                assert_eq!(via_pipeline.coeffs(), via_matrix.coeffs());
            }
        }
    }

    #[test]
    fn transport_reproduces_the_dual_structure_of_a_complex_modulus() {
        // τ = 1 + i; the transported matrix written out by hand.
        let tau = Modulus::new(ri(1), ri(1), ModulusRole::Complex).unwrap();
        let s = from_complex(&SplitFrame::torus2(), &complex_from_modulus(&tau).unwrap())
            .unwrap();
        let moved = transport(&s, &DualityData::standard()).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ri(-1), ri(0), ri(0), ri(2)],
            vec![ri(0), ri(-1), ri(-2), ri(0)],
            vec![ri(0), ri(1), ri(1), ri(0)],
            vec![ri(-1), ri(0), ri(0), ri(1)],
        ]);
        assert_eq!(moved.matrix(), &expected);
    }

    #[test]
    fn transport_agrees_with_permutation_conjugation_oracle() {
        // At f = 1 conjugating by the swap (1 3) can be done index-wise.
        let tau = Modulus::new(r(2, 3), r(5, 4), ModulusRole::Complex).unwrap();
        let s = from_complex(&SplitFrame::torus2(), &complex_from_modulus(&tau).unwrap())
            .unwrap();
        let moved = transport(&s, &DualityData::standard()).unwrap();
        let sigma = |i: usize| match i {
            1 => 3,
            3 => 1,
            other => other,
        };
        let oracle = Matrix::from_fn(4, 4, |r, c| s.matrix().get(sigma(r), sigma(c)).clone());
        assert_eq!(moved.matrix(), &oracle);
    }

    #[test]
    fn transport_is_an_involution_at_f_one() {
        let rho = Modulus::new(r(-1, 2), r(7, 3), ModulusRole::Symplectic).unwrap();
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let dd = DualityData::standard();
        let back = transport(&transport(&s, &dd).unwrap(), &dd).unwrap();
        assert_eq!(back.matrix(), s.matrix());
    }

    #[test]
    fn transport_sends_b_symplectic_to_the_displayed_complex_structure() {
        // ρ = 1 + i goes to the complex structure [[1, -1], [2, -1]].
        let rho = Modulus::new(ri(1), ri(1), ModulusRole::Symplectic).unwrap();
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let moved = transport(&s, &DualityData::standard()).unwrap();
        let j = Matrix::from_rows(vec![vec![ri(1), ri(-1)], vec![ri(2), ri(-1)]]);
        let expected = from_complex(&SplitFrame::torus2_dual(), &j).unwrap();
        assert_eq!(moved.matrix(), expected.matrix());
    }

    #[test]
    fn isomorphism_suite_passes_on_the_full_basis() {
        let dd = DualityData::standard();
        let mut samples = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                samples.push((
                    GVector::basis(SplitFrame::torus2(), i),
                    GVector::basis(SplitFrame::torus2(), j),
                ));
            }
        }
        let report = verify_isomorphism(&dd, &samples).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 16);
    }

    #[test]
    fn isomorphism_pairing_survives_f_two() {
        let dd = DualityData::with_coefficient(ri(2)).unwrap();
        let mut samples = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                samples.push((
                    GVector::basis(SplitFrame::torus2(), i),
                    GVector::basis(SplitFrame::torus2(), j),
                ));
            }
        }
        assert!(verify_isomorphism(&dd, &samples).unwrap().passed());
    }

    #[test]
    fn empty_sample_list_passes_trivially() {
        let report = verify_isomorphism(&DualityData::standard(), &[]).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 0);
    }
}
