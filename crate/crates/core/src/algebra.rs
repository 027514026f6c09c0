//! The algebra of invariant sections of TM (+) T*M over a flat torus.
//!
//! Sections are represented by constant coefficient vectors over a split
//! frame ordered as [base tangent, fiber tangent, base cotangent, fiber
//! cotangent]. Constancy makes all derivative terms of the Courant bracket
//! vanish, so the bracket reduces to the interior contraction with the
//! twisting 3-form and everything stays inside exact rational arithmetic.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// Basis bookkeeping for the invariant sections of a torus bundle.
///
/// The total space has dimension `n = base_dim + fiber_dim`; coefficient
/// vectors have length `2n` with the tangent half first.
#[derive(Clone, PartialEq, Eq)]
pub struct SplitFrame {
    base_dim: usize,
    fiber_dim: usize,
    labels: Vec<String>,
}

impl SplitFrame {
    pub fn new(base_dim: usize, fiber_dim: usize) -> Self {
        let tag = |prefix: &str, i: usize, dim: usize| {
            if dim == 1 {
                prefix.to_string()
            } else {
                format!("{prefix}{}", i + 1)
            }
        };
        let mut labels = Vec::with_capacity(2 * (base_dim + fiber_dim));
        for i in 0..base_dim {
            labels.push(tag("∂x", i, base_dim));
        }
        for i in 0..fiber_dim {
            labels.push(tag("∂θ", i, fiber_dim));
        }
        for i in 0..base_dim {
            labels.push(tag("dx", i, base_dim));
        }
        for i in 0..fiber_dim {
            labels.push(tag("θ", i, fiber_dim));
        }
        Self {
            base_dim,
            fiber_dim,
            labels,
        }
    }

    pub fn with_labels(base_dim: usize, fiber_dim: usize, labels: Vec<String>) -> Result<Self> {
        let expected = 2 * (base_dim + fiber_dim);
        if labels.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: labels.len(),
            });
        }
        Ok(Self {
            base_dim,
            fiber_dim,
            labels,
        })
    }

    /// The 2-torus seen as a circle bundle over a circle.
    pub fn torus2() -> Self {
        Self::new(1, 1)
    }

    /// Frame of the dual 2-torus; same shape, tilde labels.
    pub fn torus2_dual() -> Self {
        Self::with_labels(
            1,
            1,
            ["∂x", "∂θ̃", "dx", "θ̃"].map(String::from).to_vec(),
        )
        .expect("label count is fixed")
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    /// n = base_dim + fiber_dim.
    pub fn dim(&self) -> usize {
        self.base_dim + self.fiber_dim
    }

    pub fn total_dim(&self) -> usize {
        2 * self.dim()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    /// Frames are interchangeable for the algebra when their shapes agree;
    /// labels are cosmetic.
    pub fn is_compatible(&self, other: &SplitFrame) -> bool {
        self.base_dim == other.base_dim && self.fiber_dim == other.fiber_dim
    }

    /// The natural pairing in this frame: P[i, n+i] = P[n+i, i] = 1/2.
    pub fn pairing_matrix(&self) -> Matrix<Rational> {
        pairing_matrix(self.dim())
    }
}

impl fmt::Debug for SplitFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitFrame({}+{}; {:?})", self.base_dim, self.fiber_dim, self.labels)
    }
}

fn pairing_matrix(n: usize) -> Matrix<Rational> {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r + n == c || c + n == r {
            half.clone()
        } else {
            Rational::zero()
        }
    })
}

/// Invariant section X + ξ as a coefficient vector over a split frame.
#[derive(Clone, PartialEq, Eq)]
pub struct GVector {
    frame: SplitFrame,
    coeffs: Vec<Rational>,
}

impl GVector {
    pub fn new(frame: SplitFrame, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != frame.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: frame.total_dim(),
                found: coeffs.len(),
            });
        }
        Ok(Self { frame, coeffs })
    }

    pub fn zero(frame: SplitFrame) -> Self {
        let coeffs = vec![Rational::zero(); frame.total_dim()];
        Self { frame, coeffs }
    }

    /// The idx-th frame vector.
    pub fn basis(frame: SplitFrame, idx: usize) -> Self {
        let mut v = Self::zero(frame);
        v.coeffs[idx] = Rational::one();
        v
    }

    pub fn frame(&self) -> &SplitFrame {
        &self.frame
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// First n coefficients: the vector part X.
    pub fn tangent_part(&self) -> &[Rational] {
        &self.coeffs[..self.frame.dim()]
    }

    /// Last n coefficients: the form part ξ.
    pub fn form_part(&self) -> &[Rational] {
        &self.coeffs[self.frame.dim()..]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.frame.label(idx);
            if first {
                if c == &Rational::one() {
                    write!(f, "{label}")?;
                } else if c == &(-Rational::one()) {
                    write!(f, "-{label}")?;
                } else {
                    write!(f, "{c}·{label}")?;
                }
                first = false;
            } else if c.is_negative() {
                if c == &(-Rational::one()) {
                    write!(f, " - {label}")?;
                } else {
                    write!(f, " - {}·{label}", c.abs())?;
                }
            } else if c == &Rational::one() {
                write!(f, " + {label}")?;
            } else {
                write!(f, " + {c}·{label}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Constant 2-form, stored as an antisymmetric n x n matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoForm {
    matrix: Matrix<Rational>,
}

impl TwoForm {
    pub fn new(matrix: Matrix<Rational>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if matrix != -&matrix.transpose() {
            return Err(Error::NotAntisymmetric);
        }
        Ok(Self { matrix })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zero(n, n),
        }
    }

    /// c times the standard form [[0, I], [-I, 0]] (n even). For n = 2 this
    /// is [[0, c], [-c, 0]].
    pub fn standard_scaled(n: usize, c: &Rational) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::OddDimension);
        }
        let half = n / 2;
        Ok(Self {
            matrix: Matrix::from_fn(n, n, |r, q| {
                if r + half == q {
                    c.clone()
                } else if q + half == r {
                    -c.clone()
                } else {
                    Rational::zero()
                }
            }),
        })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoForm({})", self.matrix)
    }
}

/// Constant 3-form, stored as a fully populated antisymmetric array. The
/// constructor antisymmetrizes, so invalid states are unrepresentable; in
/// particular the only 3-form in dimension 2 is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeForm {
    n: usize,
    coeffs: Vec<Rational>,
}

impl ThreeForm {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![Rational::zero(); n * n * n],
        }
    }

    /// Sets H[i][j][k] = value for each listed component and its five signed
    /// permutations. Indices are 0-based and must be pairwise distinct.
    pub fn from_components(
        n: usize,
        components: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let mut form = Self::zero(n);
        for (i, j, k, value) in components {
            form.set_component(*i, *j, *k, value.clone())?;
        }
        Ok(form)
    }

    fn set_component(&mut self, i: usize, j: usize, k: usize, value: Rational) -> Result<()> {
        let n = self.n;
        if i >= n || j >= n || k >= n || i == j || j == k || i == k {
            return Err(Error::BadThreeFormIndex { i, j, k, n });
        }
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        self.coeffs[idx(i, j, k)] = value.clone();
        self.coeffs[idx(j, k, i)] = value.clone();
        self.coeffs[idx(k, i, j)] = value.clone();
        self.coeffs[idx(j, i, k)] = -&value;
        self.coeffs[idx(i, k, j)] = -&value;
        self.coeffs[idx(k, j, i)] = -value;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.coeffs[(i * self.n + j) * self.n + k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreeForm(n={}", self.n)?;
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        write!(f, ", [{i},{j},{k}]={v}")?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// Natural pairing <X + ξ, Y + η> = (η(X) + ξ(Y)) / 2.
pub fn pairing(u: &GVector, v: &GVector) -> Result<Rational> {
    if !u.frame().is_compatible(v.frame()) {
        return Err(Error::FrameMismatch);
    }
    let mut acc = Rational::zero();
    for (x, eta) in u.tangent_part().iter().zip(v.form_part()) {
        acc = acc + x * eta;
    }
    for (y, xi) in v.tangent_part().iter().zip(u.form_part()) {
        acc = acc + y * xi;
    }
    Ok(acc / Rational::from_int(2))
}

/// H-twisted Courant bracket of constant sections: the Lie bracket, Lie
/// derivative, and exterior derivative terms all vanish, leaving the
/// contraction i_X i_Y H as the form part.
pub fn courant_bracket(u: &GVector, v: &GVector, h: &ThreeForm) -> Result<GVector> {
    if !u.frame().is_compatible(v.frame()) {
        return Err(Error::FrameMismatch);
    }
    let n = u.frame().dim();
    if h.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.n(),
        });
    }
    let x = u.tangent_part();
    let y = v.tangent_part();
    let mut coeffs = vec![Rational::zero(); 2 * n];
    for k in 0..n {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let hij = h.get(i, j, k);
                if hij.is_zero() || yj.is_zero() {
                    continue;
                }
                acc = acc + xi * yj * hij;
            }
        }
        coeffs[n + k] = acc;
    }
    GVector::new(u.frame().clone(), coeffs)
}

/// The orthogonal automorphism exp(B) = [[1, 0], [B, 1]].
pub fn exp_b(b: &TwoForm) -> Matrix<Rational> {
    let n = b.n();
    Matrix::from_blocks(
        &Matrix::identity(n),
        &Matrix::zero(n, n),
        b.matrix(),
        &Matrix::identity(n),
    )
}

/// Applies a 2n x 2n matrix to a section's coefficient vector.
pub fn apply_map(m: &Matrix<Rational>, u: &GVector) -> Result<GVector> {
    if m.rows() != u.frame().total_dim() || m.cols() != u.frame().total_dim() {
        return Err(Error::DimensionMismatch {
            expected: u.frame().total_dim(),
            found: m.cols(),
        });
    }
    GVector::new(u.frame().clone(), m.matvec(u.coeffs()))
}

/// True iff Mᵀ P M = P exactly, with P the pairing matrix of the frame.
pub fn is_orthogonal(m: &Matrix<Rational>) -> Result<bool> {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return Err(Error::OddDimension);
    }
    let p = pairing_matrix(m.rows() / 2);
    Ok(&(&m.transpose() * &p) * m == p)
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

    fn gv(coeffs: &[i64]) -> GVector {
        GVector::new(
            SplitFrame::torus2(),
            coeffs.iter().map(|&c| ri(c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pairing_of_fiber_tangent_and_fiber_form_is_one_half() {
        let d_theta = gv(&[0, 1, 0, 0]);
        let theta = gv(&[0, 0, 0, 1]);
        assert_eq!(pairing(&d_theta, &theta).unwrap(), r(1, 2));
        assert_eq!(pairing(&theta, &d_theta).unwrap(), r(1, 2));
    }

    #[test]
    fn tangent_vectors_are_isotropic() {
        let dx = gv(&[1, 0, 0, 0]);
        assert_eq!(pairing(&dx, &dx).unwrap(), ri(0));
    }

    #[test]
    fn pairing_by_direct_formula() {
        let u = gv(&[1, 0, 1, 0]);
        assert_eq!(pairing(&u, &u).unwrap(), ri(1));
    }

    #[test]
    fn pairing_rejects_frame_mismatch() {
        let u = gv(&[0, 1, 0, 0]);
        let w = GVector::zero(SplitFrame::new(2, 2));
        assert_eq!(pairing(&u, &w), Err(Error::FrameMismatch));
    }

    #[test]
    fn pairing_matrix_is_nondegenerate() {
        for n in 1..=4 {
            let p = pairing_matrix(n);
            assert!(!p.determinant().is_zero());
        }
    }

    #[test]
    fn bracket_vanishes_without_flux() {
        let u = gv(&[1, 2, 3, 4]);
        let v = gv(&[-1, 5, 0, 2]);
        let out = courant_bracket(&u, &v, &ThreeForm::zero(2)).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn bracket_contracts_the_three_form() {
        // H with H[0][1][2] = 1 on the 4-torus; [∂_1, ∂_2] picks out ε_3.
        let frame = SplitFrame::new(2, 2);
        let h = ThreeForm::from_components(4, &[(0, 1, 2, ri(1))]).unwrap();
        let u = GVector::basis(frame.clone(), 0);
        let v = GVector::basis(frame.clone(), 1);
        let out = courant_bracket(&u, &v, &h).unwrap();
        let mut expected = vec![ri(0); 8];
        expected[4 + 2] = ri(1);
        assert_eq!(out.coeffs(), &expected[..]);
        // Spot-check antisymmetry on this pair.
        let flipped = courant_bracket(&v, &u, &h).unwrap();
        let neg: Vec<Rational> = out.coeffs().iter().map(|c| -c).collect();
        assert_eq!(flipped.coeffs(), &neg[..]);
    }

    #[test]
    fn three_form_rejects_repeated_indices() {
        assert!(ThreeForm::from_components(4, &[(0, 0, 2, ri(1))]).is_err());
        assert!(ThreeForm::from_components(4, &[(0, 1, 4, ri(1))]).is_err());
        // Dimension 2 admits no nonzero components at all.
        assert!(ThreeForm::from_components(2, &[(0, 1, 1, ri(1))]).is_err());
        assert!(ThreeForm::zero(2).is_zero());
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(exp_b(&TwoForm::zero(2)), Matrix::identity(4));
    }

    #[test]
    fn exp_b_block_form() {
        let b = TwoForm::standard_scaled(2, &ri(1)).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ri(1), ri(0), ri(0), ri(0)],
            vec![ri(0), ri(1), ri(0), ri(0)],
            vec![ri(0), ri(1), ri(1), ri(0)],
            vec![ri(-1), ri(0), ri(0), ri(1)],
        ]);
        assert_eq!(exp_b(&b), expected);
    }

    #[test]
    fn exp_b_inverse_is_exp_of_negated_form() {
        let b = TwoForm::standard_scaled(2, &r(3, 7)).unwrap();
        let neg = TwoForm::new(-b.matrix()).unwrap();
        assert_eq!(&exp_b(&b) * &exp_b(&neg), Matrix::identity(4));
    }

    #[test]
    fn apply_map_examples() {
        let u = gv(&[0, 1, 0, 0]);
        assert_eq!(apply_map(&Matrix::identity(4), &u).unwrap(), u);
        let b = TwoForm::standard_scaled(2, &ri(1)).unwrap();
        let moved = apply_map(&exp_b(&b), &u).unwrap();
        assert_eq!(moved, gv(&[0, 1, 1, 0]));
    }

    #[test]
    fn orthogonality_checks() {
        assert!(is_orthogonal(&Matrix::identity(4)).unwrap());
        let b = TwoForm::standard_scaled(2, &r(-5, 3)).unwrap();
        assert!(is_orthogonal(&exp_b(&b)).unwrap());
        let mut bad = Matrix::identity(4);
        bad.set(0, 0, ri(2));
        assert!(!is_orthogonal(&bad).unwrap());
        assert!(is_orthogonal(&Matrix::<Rational>::identity(3)).is_err());
    }

    #[test]
    fn two_form_requires_antisymmetry() {
        let sym = Matrix::from_rows(vec![vec![ri(0), ri(1)], vec![ri(1), ri(0)]]);
        assert_eq!(TwoForm::new(sym), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn gvector_display_uses_frame_labels() {
        let u = GVector::new(
            SplitFrame::torus2(),
            vec![ri(1), ri(-1), ri(0), r(1, 2)],
        )
        .unwrap();
        assert_eq!(u.to_string(), "∂x - ∂θ + 1/2·θ");
        assert_eq!(GVector::zero(SplitFrame::torus2()).to_string(), "0");
    }
}
