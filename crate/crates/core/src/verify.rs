//! Named verification suites.
//!
//! Each suite freezes one cluster of algebraic claims as executable checks
//! over fixed and seeded-random inputs. Every comparison is exact; a failing
//! case carries its counterexample verbatim. Sample sweeps run through
//! [`crate::batch`], so they parallelize when the `parallel` feature is on.

use num_traits::One;
use serde::Serialize;

use crate::algebra::{
    courant_bracket, exp_b, is_orthogonal, pairing, GVector, SplitFrame, ThreeForm, TwoForm,
};
use crate::batch;
use crate::gcs::{
    b_symplectic_from_modulus, b_transform, classify, complex_from_modulus, complex_pairing,
    from_complex, from_symplectic, i_eigenbundle_basis, modulus_from_complex, validate,
    GCStructure, Modulus, ModulusRole,
};
use crate::matrix::Matrix;
use crate::mirror::{consistency_check, rho_to_tau, syz_mirror, tau_to_rho};
use crate::sample;
use crate::scalar::Rational;
use crate::tduality::{phi_apply, phi_matrix, transport, verify_isomorphism, DualityData};

pub const DEFAULT_SEED: u64 = 0;

/// Suites in the order `verify --all` runs them.
pub const SUITE_NAMES: [&str; 7] = [
    "algebra",
    "gcs",
    "isomorphism",
    "transport",
    "roundtrip",
    "syz",
    "involutivity",
];

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    fn from_cases(suite: &str, cases: Vec<CaseResult>) -> Self {
        let counterexample = cases.iter().find(|c| !c.passed).map(|c| Counterexample {
            case: c.name.clone(),
            detail: c.detail.clone().unwrap_or_else(|| "check failed".into()),
        });
        SuiteReport {
            suite: suite.to_string(),
            passed: counterexample.is_none(),
            cases,
            counterexample,
        }
    }
}

/// Runs a sweep over `items`; on failure the case records the offending item.
fn sweep<T: Sync>(
    name: &str,
    items: &[T],
    check: impl Fn(&T) -> bool + Sync,
    describe: impl Fn(&T) -> String,
) -> CaseResult {
    match batch::first_failure(items, check) {
        None => CaseResult {
            name: name.to_string(),
            passed: true,
            detail: None,
        },
        Some(idx) => CaseResult {
            name: name.to_string(),
            passed: false,
            detail: Some(describe(&items[idx])),
        },
    }
}

fn single(name: &str, passed: bool, detail_on_fail: &str) -> CaseResult {
    CaseResult {
        name: name.to_string(),
        passed,
        detail: if passed {
            None
        } else {
            Some(detail_on_fail.to_string())
        },
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// The five fixed moduli exercised by the transport suite.
pub fn fixed_moduli() -> [(Rational, Rational); 5] {
    [
        (r(1, 1), r(1, 1)),
        (r(2, 1), r(1, 1)),
        (r(1, 1), r(2, 1)),
        (r(1, 2), r(3, 1)),
        (r(0, 1), r(5, 1)),
    ]
}

/// Closed-form matrix of the dual structure of τ = b + ia: rows
/// (-b, 0, 0, (1+b²)/a), (0, -b, -(1+b²)/a, 0), (0, a, b, 0), (-a, 0, 0, b).
pub fn dual_of_complex_modulus(tau: &Modulus) -> Matrix<Rational> {
    let b = tau.b();
    let a = tau.a();
    let zero = Rational::from_int(0);
    let q = &(Rational::one() + b * b) / a;
    Matrix::from_rows(vec![
        vec![-b, zero.clone(), zero.clone(), q.clone()],
        vec![zero.clone(), -b, -&q, zero.clone()],
        vec![zero.clone(), a.clone(), b.clone(), zero.clone()],
        vec![-a, zero.clone(), zero.clone(), b.clone()],
    ])
}

/// Closed-form complex structure dual to ρ = b + ia:
/// [[b/a, -1/a], [a + b²/a, -b/a]].
pub fn dual_complex_structure_of_symplectic_modulus(rho: &Modulus) -> Matrix<Rational> {
    let b = rho.b();
    let a = rho.a();
    Matrix::from_rows(vec![
        vec![b / a, -&(&Rational::one() / a)],
        vec![a + &(&(b * b) / a), -&(b / a)],
    ])
}

fn structure_of(m: &Modulus) -> GCStructure {
    match m.role() {
        ModulusRole::Complex => from_complex(
            &SplitFrame::torus2(),
            &complex_from_modulus(m).expect("role checked"),
        )
        .expect("modulus structures satisfy the axioms"),
        ModulusRole::Symplectic => {
            b_symplectic_from_modulus(m).expect("modulus structures satisfy the axioms")
        }
    }
}

pub fn suite_algebra(seed: u64) -> SuiteReport {
    let mut rng = sample::rng(seed);
    let torus2 = SplitFrame::torus2();
    let mut cases = Vec::new();

    let pairs: Vec<(GVector, GVector)> = (0..100)
        .map(|_| {
            (
                sample::gvector(&mut rng, &torus2, 9),
                sample::gvector(&mut rng, &torus2, 9),
            )
        })
        .collect();
    cases.push(sweep(
        "pairing-symmetry",
        &pairs,
        |(u, v)| pairing(u, v).ok() == pairing(v, u).ok(),
        |(u, v)| format!("u = {u}, v = {v}"),
    ));

    let dims: Vec<usize> = (1..=4).collect();
    cases.push(sweep(
        "pairing-nondegenerate",
        &dims,
        |&n| !SplitFrame::new(n, 0).pairing_matrix().determinant().is_zero(),
        |&n| format!("singular pairing matrix at n = {n}"),
    ));

    let torus4 = SplitFrame::new(2, 2);
    let flux = sample::three_form(&mut rng, 4, 9);
    let flux_pairs: Vec<(GVector, GVector)> = (0..100)
        .map(|_| {
            (
                sample::gvector(&mut rng, &torus4, 9),
                sample::gvector(&mut rng, &torus4, 9),
            )
        })
        .collect();
    cases.push(sweep(
        "bracket-antisymmetry",
        &flux_pairs,
        |(u, v)| {
            let uv = courant_bracket(u, v, &flux).expect("dimensions agree");
            let vu = courant_bracket(v, u, &flux).expect("dimensions agree");
            uv.coeffs()
                .iter()
                .zip(vu.coeffs())
                .all(|(x, y)| (x + y).is_zero())
        },
        |(u, v)| format!("u = {u}, v = {v}"),
    ));

    let h0 = ThreeForm::zero(2);
    cases.push(sweep(
        "bracket-vanishes-without-flux",
        &pairs,
        |(u, v)| courant_bracket(u, v, &h0).map(|w| w.is_zero()).unwrap_or(false),
        |(u, v)| format!("u = {u}, v = {v}"),
    ));

    let form_pairs: Vec<(TwoForm, TwoForm)> = (0..50)
        .map(|_| (sample::two_form(&mut rng, 4, 9), sample::two_form(&mut rng, 4, 9)))
        .collect();
    cases.push(sweep(
        "exp-b-group-law",
        &form_pairs,
        |(b1, b2)| {
            let sum = TwoForm::new(b1.matrix() + b2.matrix()).expect("sum is antisymmetric");
            &exp_b(b1) * &exp_b(b2) == exp_b(&sum)
        },
        |(b1, b2)| format!("B1 = {b1:?}, B2 = {b2:?}"),
    ));

    let forms: Vec<TwoForm> = (0..50).map(|_| sample::two_form(&mut rng, 4, 9)).collect();
    cases.push(sweep(
        "exp-b-orthogonal",
        &forms,
        |b| is_orthogonal(&exp_b(b)).unwrap_or(false),
        |b| format!("B = {b:?}"),
    ));
    cases.push(sweep(
        "exp-b-inverse",
        &forms,
        |b| {
            let neg = TwoForm::new(-b.matrix()).expect("negation is antisymmetric");
            &exp_b(b) * &exp_b(&neg) == Matrix::identity(8)
        },
        |b| format!("B = {b:?}"),
    ));

    SuiteReport::from_cases("algebra", cases)
}

pub fn suite_gcs(seed: u64) -> SuiteReport {
    let mut rng = sample::rng(seed);
    let mut cases = Vec::new();
    let h0 = ThreeForm::zero(2);

    let moduli: Vec<Modulus> = (0..40)
        .map(|i| {
            let role = if i % 2 == 0 {
                ModulusRole::Complex
            } else {
                ModulusRole::Symplectic
            };
            sample::modulus(&mut rng, role, 9)
        })
        .collect();
    cases.push(sweep(
        "constructed-structures-validate",
        &moduli,
        |m| {
            validate(&structure_of(m), &h0)
                .map(|rep| rep.all_ok())
                .unwrap_or(false)
        },
        |m| format!("modulus {m}"),
    ));

    let taus: Vec<Modulus> = (0..50)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Complex, 9))
        .collect();
    cases.push(sweep(
        "modulus-round-trip",
        &taus,
        |t| {
            complex_from_modulus(t)
                .and_then(|j| modulus_from_complex(&j))
                .map(|back| &back == t)
                .unwrap_or(false)
        },
        |t| format!("τ = {t}"),
    ));
    cases.push(sweep(
        "classify-complex-identity",
        &taus,
        |t| {
            let j = complex_from_modulus(t).expect("role checked");
            from_complex(&SplitFrame::torus2(), &j)
                .and_then(|s| classify(&s))
                .map(|c| c.j() == Some(&j))
                .unwrap_or(false)
        },
        |t| format!("τ = {t}"),
    ));

    let rhos: Vec<Modulus> = (0..50)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Symplectic, 9))
        .collect();
    cases.push(sweep(
        "classify-b-symplectic-recovers-forms",
        &rhos,
        |p| {
            let expected_omega = TwoForm::standard_scaled(2, p.a()).expect("even dimension");
            let expected_b = TwoForm::standard_scaled(2, p.b()).expect("even dimension");
            b_symplectic_from_modulus(p)
                .and_then(|s| classify(&s))
                .map(|c| {
                    c.omega() == Some(&expected_omega)
                        && c.b_field().as_ref() == Some(&expected_b)
                })
                .unwrap_or(false)
        },
        |p| format!("ρ = {p}"),
    ));

    let transforms: Vec<(Modulus, TwoForm)> = (0..50)
        .map(|i| {
            let role = if i % 2 == 0 {
                ModulusRole::Complex
            } else {
                ModulusRole::Symplectic
            };
            (
                sample::modulus(&mut rng, role, 9),
                sample::two_form(&mut rng, 2, 9),
            )
        })
        .collect();
    cases.push(sweep(
        "b-transform-preserves-axioms",
        &transforms,
        |(m, b)| {
            b_transform(&structure_of(m), b)
                .and_then(|s| validate(&s, &h0))
                .map(|rep| rep.all_ok())
                .unwrap_or(false)
        },
        |(m, b)| format!("modulus {m}, B = {b:?}"),
    ));
    cases.push(sweep(
        "b-transform-fixes-complex-type",
        &transforms,
        |(m, b)| {
            let tau = Modulus::new(m.b().clone(), m.a().clone(), ModulusRole::Complex)
                .expect("imaginary part already positive");
            let s = structure_of(&tau);
            b_transform(&s, b)
                .map(|moved| moved.matrix() == s.matrix())
                .unwrap_or(false)
        },
        |(m, b)| format!("modulus {m}, B = {b:?}"),
    ));

    cases.push(sweep(
        "eigenbundle-dimension-and-isotropy",
        &moduli,
        |m| {
            let basis = i_eigenbundle_basis(&structure_of(m));
            basis.len() == 2
                && basis.iter().all(|u| {
                    basis.iter().all(|v| complex_pairing(u, v).is_zero())
                })
        },
        |m| format!("modulus {m}"),
    ));

    SuiteReport::from_cases("gcs", cases)
}

pub fn suite_isomorphism(_seed: u64) -> SuiteReport {
    let mut cases = Vec::new();
    let dd = DualityData::standard();

    let mut basis_pairs = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            basis_pairs.push((
                GVector::basis(SplitFrame::torus2(), i),
                GVector::basis(SplitFrame::torus2(), j),
            ));
        }
    }
    let report = verify_isomorphism(&dd, &basis_pairs).expect("basis pairs are well formed");
    cases.push(single(
        "basis-pairing-and-bracket-preserved",
        report.passed(),
        &report
            .failures
            .first()
            .map(|f| f.to_string())
            .unwrap_or_default(),
    ));

    let coefficients = [r(1, 1), r(2, 1), r(1, 3)];
    cases.push(sweep(
        "phi-orthogonal-for-rescaled-f",
        &coefficients,
        |f| {
            DualityData::with_coefficient(f.clone())
                .map(|dd| is_orthogonal(&phi_matrix(&dd)).unwrap_or(false))
                .unwrap_or(false)
        },
        |f| format!("f = {f}"),
    ));

    let mut agreement = true;
    'outer: for f in [r(1, 1), r(2, 1), r(1, 3)] {
        let dd = DualityData::with_coefficient(f).expect("nonzero coefficient");
        let m = phi_matrix(&dd);
        for idx in 0..4 {
            let u = GVector::basis(SplitFrame::torus2(), idx);
            let lhs = phi_apply(&u, &dd).expect("valid frame");
            let rhs = m.matvec(u.coeffs());
            if lhs.coeffs() != &rhs[..] {
                agreement = false;
                break 'outer;
            }
        }
    }
    cases.push(single(
        "phi-pipeline-matches-matrix",
        agreement,
        "correspondence-space pipeline disagrees with the closed-form matrix",
    ));

    let m1 = phi_matrix(&DualityData::standard());
    cases.push(single(
        "phi-involution-at-f-one",
        &m1 * &m1 == Matrix::identity(4),
        "phi squared is not the identity at f = 1",
    ));

    SuiteReport::from_cases("isomorphism", cases)
}

pub fn suite_transport(seed: u64) -> SuiteReport {
    let mut rng = sample::rng(seed);
    let mut cases = Vec::new();
    let dd = DualityData::standard();

    let fixed: Vec<Modulus> = fixed_moduli()
        .into_iter()
        .map(|(b, a)| Modulus::new(b, a, ModulusRole::Complex).expect("a > 0"))
        .collect();
    let random: Vec<Modulus> = (0..50)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Complex, 9))
        .collect();

    let forward_matrix = |t: &Modulus| {
        transport(&structure_of(t), &dd)
            .map(|moved| moved.matrix() == &dual_of_complex_modulus(t))
            .unwrap_or(false)
    };
    cases.push(sweep("forward-matrix-fixed", &fixed, forward_matrix, |t| {
        format!("τ = {t}")
    }));
    cases.push(sweep("forward-matrix-random", &random, forward_matrix, |t| {
        format!("τ = {t}")
    }));

    let extraction = |t: &Modulus| {
        let expected = tau_to_rho(t).expect("complex role");
        let denom = Rational::one() + t.b() * t.b();
        let expected_omega =
            TwoForm::standard_scaled(2, &(t.a() / &denom)).expect("even dimension");
        let expected_b =
            TwoForm::standard_scaled(2, &(&(t.a() * t.b()) / &denom)).expect("even dimension");
        transport(&structure_of(t), &dd)
            .and_then(|moved| classify(&moved))
            .map(|c| {
                c.omega() == Some(&expected_omega)
                    && c.b_field().as_ref() == Some(&expected_b)
                    && c.extract_modulus().as_ref() == Some(&expected)
            })
            .unwrap_or(false)
    };
    cases.push(sweep("extraction-fixed", &fixed, extraction, |t| {
        format!("τ = {t}")
    }));
    cases.push(sweep("extraction-random", &random, extraction, |t| {
        format!("τ = {t}")
    }));

    let fixed_rho: Vec<Modulus> = fixed_moduli()
        .into_iter()
        .map(|(b, a)| Modulus::new(b, a, ModulusRole::Symplectic).expect("a > 0"))
        .collect();
    let random_rho: Vec<Modulus> = (0..50)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Symplectic, 9))
        .collect();
    let reverse = |p: &Modulus| {
        let expected_j = dual_complex_structure_of_symplectic_modulus(p);
        let expected = rho_to_tau(p).expect("symplectic role");
        transport(&structure_of(p), &dd)
            .and_then(|moved| classify(&moved))
            .map(|c| {
                c.j() == Some(&expected_j) && c.extract_modulus().as_ref() == Some(&expected)
            })
            .unwrap_or(false)
    };
    cases.push(sweep("reverse-fixed", &fixed_rho, reverse, |p| {
        format!("ρ = {p}")
    }));
    cases.push(sweep("reverse-random", &random_rho, reverse, |p| {
        format!("ρ = {p}")
    }));

    let mixed: Vec<Modulus> = random.iter().chain(&random_rho).cloned().collect();
    cases.push(sweep(
        "transport-dichotomy",
        &mixed,
        |m| {
            transport(&structure_of(m), &dd)
                .and_then(|moved| classify(&moved))
                .map(|c| match m.role() {
                    ModulusRole::Complex => c.kind() != "complex",
                    ModulusRole::Symplectic => c.kind() == "complex",
                })
                .unwrap_or(false)
        },
        |m| format!("modulus {m}"),
    ));

    SuiteReport::from_cases("transport", cases)
}

pub fn suite_roundtrip(seed: u64) -> SuiteReport {
    let mut rng = sample::rng(seed);
    let mut cases = Vec::new();

    let taus: Vec<Modulus> = (0..200)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Complex, 9))
        .collect();
    cases.push(sweep(
        "tau-rho-tau",
        &taus,
        |t| {
            tau_to_rho(t)
                .and_then(|p| rho_to_tau(&p))
                .map(|back| &back == t)
                .unwrap_or(false)
        },
        |t| format!("τ = {t}"),
    ));

    let rhos: Vec<Modulus> = (0..200)
        .map(|_| sample::modulus(&mut rng, ModulusRole::Symplectic, 9))
        .collect();
    cases.push(sweep(
        "rho-tau-rho",
        &rhos,
        |p| {
            rho_to_tau(p)
                .and_then(|t| tau_to_rho(&t))
                .map(|back| &back == p)
                .unwrap_or(false)
        },
        |p| format!("ρ = {p}"),
    ));

    let dd = DualityData::standard();
    let mixed: Vec<Modulus> = taus.iter().take(25).chain(rhos.iter().take(25)).cloned().collect();
    cases.push(sweep(
        "transport-involution",
        &mixed,
        |m| {
            let s = structure_of(m);
            transport(&s, &dd)
                .and_then(|moved| transport(&moved, &dd))
                .map(|back| back.matrix() == s.matrix())
                .unwrap_or(false)
        },
        |m| format!("modulus {m}"),
    ));

    cases.push(sweep(
        "consistency-oracle",
        &mixed,
        |m| consistency_check(m).map(|rep| rep.passed).unwrap_or(false),
        |m| format!("modulus {m}"),
    ));

    SuiteReport::from_cases("roundtrip", cases)
}

pub fn suite_syz(seed: u64) -> SuiteReport {
    let mut rng = sample::rng(seed);
    let mut cases = Vec::new();

    let pure: Vec<Modulus> = (0..20)
        .map(|_| sample::pure_imaginary_modulus(&mut rng, ModulusRole::Complex, 9))
        .collect();
    cases.push(sweep(
        "pure-imaginary-moduli-swap-roles-only",
        &pure,
        |t| {
            tau_to_rho(t)
                .map(|p| {
                    p.role() == ModulusRole::Symplectic && p.b().is_zero() && p.a() == t.a()
                })
                .unwrap_or(false)
        },
        |t| format!("τ = {t}"),
    ));

    let params: Vec<(Rational, Rational)> = (0..20)
        .map(|_| {
            (
                sample::positive_rational(&mut rng, 9),
                sample::positive_rational(&mut rng, 9),
            )
        })
        .collect();
    cases.push(sweep(
        "syz-swap",
        &params,
        |(gamma, lambda)| {
            syz_mirror(gamma, lambda)
                .map(|(c, s)| &c == lambda && &s == gamma)
                .unwrap_or(false)
        },
        |(gamma, lambda)| format!("γ = {gamma}, λ = {lambda}"),
    ));
    cases.push(sweep(
        "syz-involution",
        &params,
        |(gamma, lambda)| {
            syz_mirror(gamma, lambda)
                .and_then(|(c, s)| syz_mirror(&c, &s))
                .map(|(g, l)| &g == gamma && &l == lambda)
                .unwrap_or(false)
        },
        |(gamma, lambda)| format!("γ = {gamma}, λ = {lambda}"),
    ));

    // The curve with complex parameter iγ and area λ maps to the curve with
    // complex parameter iλ and area γ: both mirror readings coincide.
    cases.push(sweep(
        "syz-matches-modulus-maps",
        &params,
        |(gamma, lambda)| {
            let tau = Modulus::new(Rational::from_int(0), gamma.clone(), ModulusRole::Complex)
                .expect("positive");
            let rho = Modulus::new(Rational::from_int(0), lambda.clone(), ModulusRole::Symplectic)
                .expect("positive");
            let (mirror_complex, mirror_area) =
                syz_mirror(gamma, lambda).expect("positive inputs");
            tau_to_rho(&tau).map(|p| p.a() == &mirror_area).unwrap_or(false)
                && rho_to_tau(&rho).map(|t| t.a() == &mirror_complex).unwrap_or(false)
        },
        |(gamma, lambda)| format!("γ = {gamma}, λ = {lambda}"),
    ));

    SuiteReport::from_cases("syz", cases)
}

pub fn suite_involutivity(_seed: u64) -> SuiteReport {
    let mut cases = Vec::new();
    let frame = SplitFrame::new(2, 2);
    let omega = TwoForm::standard_scaled(4, &Rational::one()).expect("even dimension");
    let s = from_symplectic(&frame, &omega).expect("standard form is invertible");

    let flux = ThreeForm::from_components(4, &[(0, 1, 2, Rational::one())])
        .expect("distinct indices");
    match validate(&s, &flux) {
        Ok(report) => {
            cases.push(single(
                "flux-breaks-involutivity",
                !report.involutive,
                "eigenbundle stayed involutive despite nonzero flux",
            ));
            cases.push(single(
                "flux-preserves-pointwise-axioms",
                report.squares_to_minus_one && report.orthogonal,
                "pointwise axioms failed under flux",
            ));
        }
        Err(e) => cases.push(single("flux-breaks-involutivity", false, &e.to_string())),
    }

    match validate(&s, &ThreeForm::zero(4)) {
        Ok(report) => cases.push(single(
            "no-flux-involutive",
            report.all_ok(),
            "flux-free validation failed",
        )),
        Err(e) => cases.push(single("no-flux-involutive", false, &e.to_string())),
    }

    SuiteReport::from_cases("involutivity", cases)
}

/// Runs one named suite.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let suite: fn(u64) -> SuiteReport = match name {
        "algebra" => suite_algebra,
        "gcs" => suite_gcs,
        "isomorphism" => suite_isomorphism,
        "transport" => suite_transport,
        "roundtrip" => suite_roundtrip,
        "syz" => suite_syz,
        "involutivity" => suite_involutivity,
        _ => return None,
    };
    Some(suite(seed))
}

/// Runs every suite in the canonical order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, seed).expect("canonical names resolve"))
        .collect()
}
