//! Generalized complex structures on flat tori.
//!
//! A structure is a 2n x 2n rational matrix squaring to minus the identity
//! and orthogonal for the natural pairing. Constructors build the two
//! classical families (from a complex structure J or a symplectic form ω),
//! B-field transforms conjugate by exp(B), and [`classify`] inverts the block
//! forms to recover the underlying geometric data exactly. Involutivity of
//! the i-eigenbundle is decided by exact linear algebra over Q(i).

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{exp_b, is_orthogonal, SplitFrame, ThreeForm, TwoForm};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

/// Which geometry a modulus b + ia parameterizes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModulusRole {
    Complex,
    Symplectic,
}

impl ModulusRole {
    pub fn as_str(self) -> &'static str {
        match self {
            ModulusRole::Complex => "complex",
            ModulusRole::Symplectic => "symplectic",
        }
    }
}

impl fmt::Display for ModulusRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point b + ia of the upper half-plane, tagged by what it parameterizes:
/// a complex structure (τ) or a complexified symplectic structure (ρ).
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Modulus {
    #[serde(rename = "re")]
    b: Rational,
    #[serde(rename = "im")]
    a: Rational,
    role: ModulusRole,
}

impl Modulus {
    pub fn new(b: Rational, a: Rational, role: ModulusRole) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::NonPositiveImaginaryPart);
        }
        Ok(Self { b, a, role })
    }

    /// Real part b.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Imaginary part a; positive by construction.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn role(&self) -> ModulusRole {
        self.role
    }

    pub fn expect_role(&self, expected: ModulusRole) -> Result<()> {
        if self.role != expected {
            return Err(Error::WrongRole {
                expected: expected.as_str(),
                found: self.role.as_str(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = GaussianRational::new(self.b.clone(), self.a.clone());
        write!(f, "{z} ({})", self.role)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Generalized complex structure: an orthogonal matrix squaring to -1.
#[derive(Clone, PartialEq, Eq)]
pub struct GCStructure {
    frame: SplitFrame,
    matrix: Matrix<Rational>,
}

impl GCStructure {
    /// Validates both structure axioms before accepting the matrix.
    pub fn new(frame: SplitFrame, matrix: Matrix<Rational>) -> Result<Self> {
        let dim = frame.total_dim();
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.rows(),
            });
        }
        if &matrix * &matrix != -&Matrix::identity(dim) {
            return Err(Error::NotMinusIdentity);
        }
        if !is_orthogonal(&matrix)? {
            return Err(Error::NotOrthogonal);
        }
        Ok(Self { frame, matrix })
    }

    /// Skips validation; for feeding [`validate`] matrices that may violate
    /// the axioms. Everything else in the crate goes through [`Self::new`].
    pub fn from_matrix_unchecked(frame: SplitFrame, matrix: Matrix<Rational>) -> Self {
        Self { frame, matrix }
    }

    pub fn frame(&self) -> &SplitFrame {
        &self.frame
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.frame.dim()
    }
}

impl fmt::Debug for GCStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GCStructure({})", self.matrix)
    }
}

/// Outcome of decomposing a structure into its geometric data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassifiedStructure {
    Complex { j: Matrix<Rational> },
    Symplectic { omega: TwoForm },
    BSymplectic { omega: TwoForm, b_field: TwoForm },
}

impl ClassifiedStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassifiedStructure::Complex { .. } => "complex",
            ClassifiedStructure::Symplectic { .. } => "symplectic",
            ClassifiedStructure::BSymplectic { .. } => "b_symplectic",
        }
    }

    pub fn j(&self) -> Option<&Matrix<Rational>> {
        match self {
            ClassifiedStructure::Complex { j } => Some(j),
            _ => None,
        }
    }

    pub fn omega(&self) -> Option<&TwoForm> {
        match self {
            ClassifiedStructure::Complex { .. } => None,
            ClassifiedStructure::Symplectic { omega } => Some(omega),
            ClassifiedStructure::BSymplectic { omega, .. } => Some(omega),
        }
    }

    /// The B-field; zero for a plain symplectic structure.
    pub fn b_field(&self) -> Option<TwoForm> {
        match self {
            ClassifiedStructure::Complex { .. } => None,
            ClassifiedStructure::Symplectic { omega } => Some(TwoForm::zero(omega.n())),
            ClassifiedStructure::BSymplectic { b_field, .. } => Some(b_field.clone()),
        }
    }

    /// Reads off the modulus of a 2-dimensional classification: τ from a
    /// complex structure, ρ = b + ia from ω = a·J0 and B = b·J0. None when
    /// the data does not sit in the parameterized families.
    pub fn extract_modulus(&self) -> Option<Modulus> {
        match self {
            ClassifiedStructure::Complex { j } => modulus_from_complex(j).ok(),
            ClassifiedStructure::Symplectic { omega } => {
                scalar_multiple_of_standard(omega).and_then(|a| {
                    Modulus::new(Rational::zero(), a, ModulusRole::Symplectic).ok()
                })
            }
            ClassifiedStructure::BSymplectic { omega, b_field } => {
                let a = scalar_multiple_of_standard(omega)?;
                let b = scalar_multiple_of_standard(b_field)?;
                Modulus::new(b, a, ModulusRole::Symplectic).ok()
            }
        }
    }
}

/// c such that the form equals c·[[0, 1], [-1, 0]], if n = 2.
fn scalar_multiple_of_standard(form: &TwoForm) -> Option<Rational> {
    if form.n() != 2 {
        return None;
    }
    Some(form.matrix().get(0, 1).clone())
}

/// 𝓙_J = [[-J, 0], [0, Jᵀ]]; the dual map is the transpose in the dual basis.
pub fn from_complex(frame: &SplitFrame, j: &Matrix<Rational>) -> Result<GCStructure> {
    let n = frame.dim();
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: j.rows(),
        });
    }
    if j * j != -&Matrix::identity(n) {
        return Err(Error::NotMinusIdentity);
    }
    let matrix = Matrix::from_blocks(&-j, &Matrix::zero(n, n), &Matrix::zero(n, n), &j.transpose());
    GCStructure::new(frame.clone(), matrix)
}

/// 𝓙_ω = [[0, -ω⁻¹], [ω, 0]].
pub fn from_symplectic(frame: &SplitFrame, omega: &TwoForm) -> Result<GCStructure> {
    let n = frame.dim();
    if omega.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega.n(),
        });
    }
    let inv = omega.matrix().inverse().ok_or(Error::SingularOmega)?;
    let matrix = Matrix::from_blocks(
        &Matrix::zero(n, n),
        &-&inv,
        omega.matrix(),
        &Matrix::zero(n, n),
    );
    GCStructure::new(frame.clone(), matrix)
}

/// The complex structure of the elliptic curve with parameter τ = b + ia:
/// J = [[b, -(1+b²)/a], [a, -b]].
pub fn complex_from_modulus(tau: &Modulus) -> Result<Matrix<Rational>> {
    tau.expect_role(ModulusRole::Complex)?;
    let b = tau.b();
    let a = tau.a();
    let q = -&(&(Rational::one() + b * b) / a);
    Ok(Matrix::from_rows(vec![
        vec![b.clone(), q],
        vec![a.clone(), -b],
    ]))
}

/// Inverse of [`complex_from_modulus`]: reads τ = b + ia off the J-matrix.
pub fn modulus_from_complex(j: &Matrix<Rational>) -> Result<Modulus> {
    if j.rows() != 2 || j.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: j.rows(),
        });
    }
    if j * j != -&Matrix::identity(2) {
        return Err(Error::NotMinusIdentity);
    }
    let b = j.get(0, 0).clone();
    let a = j.get(1, 0).clone();
    if !a.is_positive() {
        return Err(Error::NonPositiveImaginaryPart);
    }
    let expected_q = -&(&(Rational::one() + &b * &b) / &a);
    if j.get(0, 1) != &expected_q || j.get(1, 1) != &(-&b) {
        return Err(Error::Malformed(
            "matrix is not in the parameterized family of complex structures".into(),
        ));
    }
    Modulus::new(b, a, ModulusRole::Complex)
}

/// B-field transform exp(-B) ∘ 𝓙 ∘ exp(B).
pub fn b_transform(s: &GCStructure, b: &TwoForm) -> Result<GCStructure> {
    let n = s.n();
    if b.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.n(),
        });
    }
    let neg = TwoForm::new(-b.matrix()).expect("negation preserves antisymmetry");
    let matrix = &(&exp_b(&neg) * s.matrix()) * &exp_b(b);
    GCStructure::new(s.frame().clone(), matrix)
}

/// The B-symplectic structure of ρ = b + ia: the B = b·J0 transform of the
/// symplectic structure ω = a·J0.
pub fn b_symplectic_from_modulus(rho: &Modulus) -> Result<GCStructure> {
    rho.expect_role(ModulusRole::Symplectic)?;
    let omega = TwoForm::standard_scaled(2, rho.a())?;
    let b = TwoForm::standard_scaled(2, rho.b())?;
    let base = from_symplectic(&SplitFrame::torus2(), &omega)?;
    b_transform(&base, &b)
}

/// Decomposes a 2-dimensional structure by inverting the block forms:
/// ω = -A₁₂⁻¹ and B = -ω·A₁₁ when the upper-right block is invertible,
/// J = -A₁₁ when it vanishes. Extraction is exact and re-verified by
/// rebuilding the structure.
pub fn classify(s: &GCStructure) -> Result<ClassifiedStructure> {
    if s.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.n(),
        });
    }
    let [a11, a12, a21, _a22] = s.matrix().into_blocks()?;
    if a12.is_zero() {
        if !a21.is_zero() {
            return Err(Error::Malformed(
                "upper-right block vanishes but lower-left does not".into(),
            ));
        }
        let j = -&a11;
        let rebuilt = from_complex(s.frame(), &j)?;
        if rebuilt.matrix() != s.matrix() {
            return Err(Error::Malformed(
                "block-diagonal structure is not of complex type".into(),
            ));
        }
        return Ok(ClassifiedStructure::Complex { j });
    }
    let inv = a12.inverse().ok_or_else(|| {
        Error::Malformed("upper-right block is neither zero nor invertible".into())
    })?;
    let omega = TwoForm::new(-&inv)
        .map_err(|_| Error::Malformed("extracted omega is not antisymmetric".into()))?;
    let b_field = TwoForm::new(-&(omega.matrix() * &a11))
        .map_err(|_| Error::Malformed("extracted B-field is not antisymmetric".into()))?;
    let rebuilt = b_transform(&from_symplectic(s.frame(), &omega)?, &b_field)?;
    if rebuilt.matrix() != s.matrix() {
        return Err(Error::Malformed(
            "structure is not a B-field transform of a symplectic structure".into(),
        ));
    }
    if b_field.is_zero() {
        Ok(ClassifiedStructure::Symplectic { omega })
    } else {
        Ok(ClassifiedStructure::BSymplectic { omega, b_field })
    }
}

/// Diagnostic report of the three structure axioms. Never fails outright;
/// each axiom is reported separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ValidationReport {
    pub squares_to_minus_one: bool,
    pub orthogonal: bool,
    pub involutive: bool,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.squares_to_minus_one && self.orthogonal && self.involutive
    }
}

/// Checks 𝓙² = -1, orthogonality, and involutivity of the i-eigenbundle
/// under the H-twisted bracket.
pub fn validate(s: &GCStructure, h: &ThreeForm) -> Result<ValidationReport> {
    let n = s.n();
    if h.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.n(),
        });
    }
    let dim = s.frame().total_dim();
    let m = s.matrix();
    let squares_to_minus_one = m * m == -&Matrix::identity(dim);
    let orthogonal = is_orthogonal(m)?;
    let involutive = eigenbundle_is_involutive(s, h);
    Ok(ValidationReport {
        squares_to_minus_one,
        orthogonal,
        involutive,
    })
}

/// Basis of the i-eigenbundle: the kernel of 𝓙 - i over Q(i), computed by
/// exact Gaussian elimination with first-nonzero pivoting.
pub fn i_eigenbundle_basis(s: &GCStructure) -> Vec<Vec<GaussianRational>> {
    let dim = s.frame().total_dim();
    let shifted = Matrix::from_fn(dim, dim, |r, c| {
        let mut z = GaussianRational::from_real(s.matrix().get(r, c).clone());
        if r == c {
            z = z - GaussianRational::i();
        }
        z
    });
    shifted.kernel()
}

/// Bilinear (not sesquilinear) extension of the natural pairing to Q(i).
pub fn complex_pairing(u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    assert_eq!(u.len(), v.len());
    assert_eq!(u.len() % 2, 0);
    let n = u.len() / 2;
    let mut acc = GaussianRational::zero();
    for i in 0..n {
        acc = acc + u[i].clone() * v[n + i].clone() + v[i].clone() * u[n + i].clone();
    }
    acc / GaussianRational::from_real(Rational::from_int(2))
}

/// Form part of the bracket of complexified constant sections: the
/// contraction of H with the two tangent parts, extended bilinearly.
fn complex_bracket(u: &[GaussianRational], v: &[GaussianRational], h: &ThreeForm) -> Vec<GaussianRational> {
    let n = h.n();
    let mut out = vec![GaussianRational::zero(); 2 * n];
    for k in 0..n {
        let mut acc = GaussianRational::zero();
        for (i, ui) in u.iter().enumerate().take(n) {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate().take(n) {
                let hij = h.get(i, j, k);
                if hij.is_zero() || vj.is_zero() {
                    continue;
                }
                acc = acc + ui.clone() * vj.clone() * GaussianRational::from_real(hij.clone());
            }
        }
        out[n + k] = acc;
    }
    out
}

fn eigenbundle_is_involutive(s: &GCStructure, h: &ThreeForm) -> bool {
    let basis = i_eigenbundle_basis(s);
    if basis.len() < 2 {
        return true;
    }
    let span = Matrix::from_rows(basis.clone());
    let base_rank = span.rank();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let w = complex_bracket(&basis[a], &basis[b], h);
            if w.iter().all(|z| z.is_zero()) {
                continue;
            }
            let mut rows = basis.clone();
            rows.push(w);
            if Matrix::from_rows(rows).rank() != base_rank {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ri(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn modulus(b: (i64, i64), a: (i64, i64), role: ModulusRole) -> Modulus {
        Modulus::new(r(b.0, b.1), r(a.0, a.1), role).unwrap()
    }

    fn m4(rows: [[i64; 4]; 4]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&c| ri(c)).collect())
                .collect(),
        )
    }

    fn j0() -> Matrix<Rational> {
        Matrix::from_rows(vec![vec![ri(0), ri(1)], vec![ri(-1), ri(0)]])
    }

    #[test]
    fn from_complex_standard_structure() {
        let j = Matrix::from_rows(vec![vec![ri(0), ri(-1)], vec![ri(1), ri(0)]]);
        let s = from_complex(&SplitFrame::torus2(), &j).unwrap();
        let expected = m4([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]);
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn from_complex_of_modulus_matches_block_form() {
        // τ = 1 + i: rows (-b, (1+b²)/a | 0), (-a, b | 0), (0 | b, a), (0 | -(1+b²)/a, -b).
        let tau = modulus((1, 1), (1, 1), ModulusRole::Complex);
        let j = complex_from_modulus(&tau).unwrap();
        let s = from_complex(&SplitFrame::torus2(), &j).unwrap();
        let expected = m4([[-1, 2, 0, 0], [-1, 1, 0, 0], [0, 0, 1, 1], [0, 0, -2, -1]]);
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn from_complex_rejects_non_complex_matrix() {
        let err = from_complex(&SplitFrame::torus2(), &Matrix::identity(2));
        assert_eq!(err.unwrap_err(), Error::NotMinusIdentity);
    }

    #[test]
    fn from_symplectic_standard_form() {
        let omega = TwoForm::new(j0()).unwrap();
        let s = from_symplectic(&SplitFrame::torus2(), &omega).unwrap();
        let expected = m4([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]);
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn from_symplectic_inverts_omega() {
        // 2x2 adjugate oracle: [[0, a], [-a, 0]]⁻¹ = [[0, -1/a], [1/a, 0]].
        let a = ri(2);
        let omega = TwoForm::standard_scaled(2, &a).unwrap();
        let s = from_symplectic(&SplitFrame::torus2(), &omega).unwrap();
        let top_right_oracle = Matrix::from_rows(vec![
            vec![ri(0), r(1, 2)],
            vec![r(-1, 2), ri(0)],
        ]);
        let [_, a12, _, _] = s.matrix().into_blocks().unwrap();
        assert_eq!(a12, top_right_oracle);
    }

    #[test]
    fn from_symplectic_rejects_singular_omega() {
        let err = from_symplectic(&SplitFrame::torus2(), &TwoForm::zero(2));
        assert_eq!(err.unwrap_err(), Error::SingularOmega);
    }

    #[test]
    fn complex_from_modulus_examples() {
        let cases = [
            (modulus((0, 1), (1, 1), ModulusRole::Complex), vec![vec![ri(0), ri(-1)], vec![ri(1), ri(0)]]),
            (modulus((1, 1), (1, 1), ModulusRole::Complex), vec![vec![ri(1), ri(-2)], vec![ri(1), ri(-1)]]),
            (modulus((0, 1), (2, 1), ModulusRole::Complex), vec![vec![ri(0), r(-1, 2)], vec![ri(2), ri(0)]]),
        ];
        for (tau, rows) in cases {
            let j = complex_from_modulus(&tau).unwrap();
            assert_eq!(j, Matrix::from_rows(rows));
            assert_eq!(&(&j * &j), &(-&Matrix::identity(2)));
        }
    }

    #[test]
    fn complex_from_modulus_requires_complex_role() {
        let rho = modulus((0, 1), (1, 1), ModulusRole::Symplectic);
        assert!(matches!(
            complex_from_modulus(&rho),
            Err(Error::WrongRole { .. })
        ));
    }

    #[test]
    fn modulus_from_complex_round_trips() {
        let tau = modulus((1, 1), (1, 1), ModulusRole::Complex);
        let j = complex_from_modulus(&tau).unwrap();
        assert_eq!(modulus_from_complex(&j).unwrap(), tau);

        let std_j = Matrix::from_rows(vec![vec![ri(0), ri(-1)], vec![ri(1), ri(0)]]);
        let i = modulus_from_complex(&std_j).unwrap();
        assert_eq!(i, modulus((0, 1), (1, 1), ModulusRole::Complex));
    }

    #[test]
    fn modulus_from_complex_rejects_wrong_orientation() {
        assert_eq!(
            modulus_from_complex(&j0()).unwrap_err(),
            Error::NonPositiveImaginaryPart
        );
    }

    #[test]
    fn b_transform_by_zero_is_identity() {
        let s = b_symplectic_from_modulus(&modulus((3, 2), (5, 7), ModulusRole::Symplectic))
            .unwrap();
        let moved = b_transform(&s, &TwoForm::zero(2)).unwrap();
        assert_eq!(moved.matrix(), s.matrix());
    }

    #[test]
    fn b_transform_block_example() {
        // ω = J0, B = J0: exp(-B)·𝓙_ω·exp(B) computed blockwise by hand.
        let omega = TwoForm::new(j0()).unwrap();
        let b = TwoForm::new(j0()).unwrap();
        let s = from_symplectic(&SplitFrame::torus2(), &omega).unwrap();
        let moved = b_transform(&s, &b).unwrap();
        let expected = m4([[-1, 0, 0, 1], [0, -1, -1, 0], [0, 2, 1, 0], [-2, 0, 0, 1]]);
        assert_eq!(moved.matrix(), &expected);
    }

    #[test]
    fn b_transform_inverts() {
        let s = b_symplectic_from_modulus(&modulus((-2, 3), (7, 5), ModulusRole::Symplectic))
            .unwrap();
        let b = TwoForm::standard_scaled(2, &r(9, 4)).unwrap();
        let neg = TwoForm::new(-b.matrix()).unwrap();
        let back = b_transform(&b_transform(&s, &b).unwrap(), &neg).unwrap();
        assert_eq!(back.matrix(), s.matrix());
    }

    #[test]
    fn b_symplectic_from_pure_imaginary_is_symplectic() {
        let rho = modulus((0, 1), (1, 1), ModulusRole::Symplectic);
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let omega = TwoForm::new(j0()).unwrap();
        let direct = from_symplectic(&SplitFrame::torus2(), &omega).unwrap();
        assert_eq!(s.matrix(), direct.matrix());
    }

    #[test]
    fn b_symplectic_example_matrix() {
        let rho = modulus((1, 1), (1, 1), ModulusRole::Symplectic);
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let expected = m4([[-1, 0, 0, 1], [0, -1, -1, 0], [0, 2, 1, 0], [-2, 0, 0, 1]]);
        assert_eq!(s.matrix(), &expected);
    }

    #[test]
    fn classify_recovers_complex_data() {
        let tau = modulus((1, 1), (2, 1), ModulusRole::Complex);
        let j = complex_from_modulus(&tau).unwrap();
        let s = from_complex(&SplitFrame::torus2(), &j).unwrap();
        match classify(&s).unwrap() {
            ClassifiedStructure::Complex { j: found } => assert_eq!(found, j),
            other => panic!("expected complex, got {}", other.kind()),
        }
    }

    #[test]
    fn classify_recovers_symplectic_and_b_symplectic_data() {
        let omega = TwoForm::standard_scaled(2, &r(5, 3)).unwrap();
        let s = from_symplectic(&SplitFrame::torus2(), &omega).unwrap();
        let classified = classify(&s).unwrap();
        assert_eq!(classified.kind(), "symplectic");
        assert_eq!(classified.omega().unwrap(), &omega);
        assert!(classified.b_field().unwrap().is_zero());

        let rho = modulus((2, 1), (1, 3), ModulusRole::Symplectic);
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let classified = classify(&s).unwrap();
        assert_eq!(classified.kind(), "b_symplectic");
        assert_eq!(
            classified.extract_modulus().unwrap(),
            rho
        );
    }

    #[test]
    fn validate_constructed_structures() {
        let h0 = ThreeForm::zero(2);
        let tau = modulus((1, 2), (3, 1), ModulusRole::Complex);
        let s = from_complex(&SplitFrame::torus2(), &complex_from_modulus(&tau).unwrap())
            .unwrap();
        assert!(validate(&s, &h0).unwrap().all_ok());

        let rho = modulus((1, 1), (1, 1), ModulusRole::Symplectic);
        let s = b_symplectic_from_modulus(&rho).unwrap();
        assert!(validate(&s, &h0).unwrap().all_ok());
    }

    #[test]
    fn validate_identity_fails_square_axiom() {
        let s = GCStructure::from_matrix_unchecked(SplitFrame::torus2(), Matrix::identity(4));
        let report = validate(&s, &ThreeForm::zero(2)).unwrap();
        assert!(!report.squares_to_minus_one);
    }

    #[test]
    fn flux_breaks_involutivity_on_the_four_torus() {
        let frame = SplitFrame::new(2, 2);
        let omega = TwoForm::standard_scaled(4, &ri(1)).unwrap();
        let s = from_symplectic(&frame, &omega).unwrap();
        let h = ThreeForm::from_components(4, &[(0, 1, 2, ri(1))]).unwrap();
        let report = validate(&s, &h).unwrap();
        assert!(report.squares_to_minus_one);
        assert!(report.orthogonal);
        assert!(!report.involutive);
        assert_eq!(i_eigenbundle_basis(&s).len(), 4);

        let clean = validate(&s, &ThreeForm::zero(4)).unwrap();
        assert!(clean.all_ok());
    }

    #[test]
    fn eigenbundle_has_complex_dimension_n_and_is_isotropic() {
        let rho = modulus((1, 3), (4, 5), ModulusRole::Symplectic);
        let s = b_symplectic_from_modulus(&rho).unwrap();
        let basis = i_eigenbundle_basis(&s);
        assert_eq!(basis.len(), 2);
        for u in &basis {
            for v in &basis {
                assert!(complex_pairing(u, v).is_zero());
            }
        }
    }

    #[test]
    fn modulus_requires_positive_imaginary_part() {
        assert_eq!(
            Modulus::new(ri(1), ri(0), ModulusRole::Complex).unwrap_err(),
            Error::NonPositiveImaginaryPart
        );
        assert_eq!(
            Modulus::new(ri(1), ri(-2), ModulusRole::Complex).unwrap_err(),
            Error::NonPositiveImaginaryPart
        );
    }
}
