//! Seeded random inputs for the verification suites, property tests, and
//! benches. ChaCha keeps the streams identical across platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GVector, SplitFrame, ThreeForm, TwoForm};
use crate::gcs::{Modulus, ModulusRole};
use crate::matrix::Matrix;
use crate::scalar::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in [-span, span] and denominator in [1, span].
pub fn rational(rng: &mut impl Rng, span: i64) -> Rational {
    let numerator = rng.random_range(-span..=span);
    let denominator = rng.random_range(1..=span);
    Rational::new(numerator, denominator).expect("denominator is positive")
}

pub fn nonzero_rational(rng: &mut impl Rng, span: i64) -> Rational {
    loop {
        let r = rational(rng, span);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn positive_rational(rng: &mut impl Rng, span: i64) -> Rational {
    let numerator = rng.random_range(1..=span);
    let denominator = rng.random_range(1..=span);
    Rational::new(numerator, denominator).expect("denominator is positive")
}

/// Upper half-plane modulus with small rational coordinates.
pub fn modulus(rng: &mut impl Rng, role: ModulusRole, span: i64) -> Modulus {
    Modulus::new(rational(rng, span), positive_rational(rng, span), role)
        .expect("imaginary part is positive")
}

/// Pure-imaginary modulus i·a.
pub fn pure_imaginary_modulus(rng: &mut impl Rng, role: ModulusRole, span: i64) -> Modulus {
    Modulus::new(Rational::from_int(0), positive_rational(rng, span), role)
        .expect("imaginary part is positive")
}

/// Random antisymmetric n x n form.
pub fn two_form(rng: &mut impl Rng, n: usize, span: i64) -> TwoForm {
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rational(rng, span);
            m.set(i, j, v.clone());
            m.set(j, i, -v);
        }
    }
    TwoForm::new(m).expect("constructed antisymmetric")
}

/// Random totally antisymmetric 3-form; zero when n < 3.
pub fn three_form(rng: &mut impl Rng, n: usize, span: i64) -> ThreeForm {
    let mut components = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                components.push((i, j, k, rational(rng, span)));
            }
        }
    }
    ThreeForm::from_components(n, &components).expect("indices are distinct")
}

pub fn gvector(rng: &mut impl Rng, frame: &SplitFrame, span: i64) -> GVector {
    let coeffs = (0..frame.total_dim()).map(|_| rational(rng, span)).collect();
    GVector::new(frame.clone(), coeffs).expect("coefficient count matches frame")
}
