//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured numbers (run with `--nocapture` to see them).
//!
//! Oracles here are deliberately independent of the library's computation
//! paths: the numerical radius is cross-checked against brute-force
//! maximization of |<Tx,x>| over unit vectors (a dense Hopf-coordinate grid
//! in C^2, multistart phase/power ascent in higher dimensions), and the
//! factorization constants against Loewner bisection.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;

use opineq::certify::is_ab_normal;
use opineq::douglas::douglas_factorization;
use opineq::ensemble::{generate, EnsembleSpec, Kind};
use opineq::matrix::{Matrix, Vector};
use opineq::pinv::pseudo_inverse;
use opineq::radius::numerical_radius;
use opineq::rng::SplitMix64;
use opineq::subspace::{kernel_basis, max_principal_angle_sin, range_basis, subspaces_equal};
use opineq::suite::{
    check_vector_lemma, default_sweep_items, sweep, InequalityParams, LemmaId, Mode, Summary,
    ALL_LEMMAS, ALL_THEOREMS,
};
use opineq::svd::{operator_norm, svd};
use opineq::tol::Tolerances;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn opineq_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_opineq"))
}

fn running_example() -> Matrix {
    Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]])
}

fn alpha_sq_exact() -> f64 {
    (3.0 - 5.0_f64.sqrt()) / 2.0
}

fn beta_sq_exact() -> f64 {
    (3.0 + 5.0_f64.sqrt()) / 2.0
}

/// Brute-force radius lower bound over a dense grid of unit vectors in C^2,
/// parametrized as x = (cos t, e^{i phi} sin t) with t in [0, pi/2] and phi
/// in [0, 2 pi); the phase-invariance of |<Tx,x>| makes this grid cover all
/// of projective space quasi-uniformly.
fn radius_grid_oracle_c2(t: &Matrix, t_steps: usize, phi_steps: usize) -> f64 {
    assert_eq!(t.rows(), 2);
    let (t00, t01, t10, t11) = (t[(0, 0)], t[(0, 1)], t[(1, 0)], t[(1, 1)]);
    let phases: Vec<Complex64> = (0..phi_steps)
        .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / phi_steps as f64))
        .collect();
    let mut best = 0.0_f64;
    for i in 0..t_steps {
        let angle = std::f64::consts::FRAC_PI_2 * i as f64 / (t_steps - 1) as f64;
        let (c, s) = (angle.cos(), angle.sin());
        let cc = c * c;
        let ss = s * s;
        let cs = c * s;
        for ph in &phases {
            // <Tx, x> = c^2 t00 + cs (ph t01 + conj(ph) t10) + s^2 t11
            let form = cc * t00 + cs * (ph * t01 + ph.conj() * t10) + ss * t11;
            let v = form.norm();
            if v > best {
                best = v;
            }
        }
    }
    best
}

/// Multistart ascent oracle: alternates the optimal phase with shifted power
/// steps on Re(e^{i theta} T), which never decreases |<Tx,x>|. Starts from
/// the best random samples plus the standard basis.
fn radius_ascent_oracle(t: &Matrix, seed: u64) -> f64 {
    let n = t.rows();
    let t_adj = t.adjoint();
    let mut rng = SplitMix64::new(seed);
    let mut starts: Vec<(f64, Vector)> = (0..2000)
        .map(|_| {
            let x = rng.unit_vector(n);
            (t.apply(&x).inner(&x).norm(), x)
        })
        .collect();
    starts.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
    starts.truncate(8);
    for k in 0..n {
        let x = Vector::basis(n, k);
        starts.push((t.apply(&x).inner(&x).norm(), x));
    }

    let mut best = 0.0_f64;
    for (_, mut x) in starts {
        let mut value = t.apply(&x).inner(&x).norm();
        for _ in 0..500 {
            let form = t.apply(&x).inner(&x);
            let theta = -form.arg();
            let rot = Complex64::from_polar(0.5, theta);
            let h = t.scale(rot).add(&t_adj.scale(rot.conj()));
            let shift = h.frobenius_norm() + 1.0;
            for _ in 0..3 {
                let y = h.apply(&x).add(&x.scale_re(shift));
                x = y.normalized().expect("shifted iterate is nonzero");
            }
            let next = t.apply(&x).inner(&x).norm();
            if next - value <= 1e-13 * value.max(1.0) {
                value = value.max(next);
                break;
            }
            value = next;
        }
        best = best.max(value);
    }
    best
}

#[test]
fn criterion_1_running_example_reproduction() {
    let start = Instant::now();
    let output = opineq_bin()
        .args(["analyze", fixture("lower_triangular_2x2.txt").to_str().unwrap(), "--json"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let profile = &doc["profile"];
    let alpha_sq = profile["alpha_sq"].as_f64().unwrap();
    let beta_sq = profile["beta_sq"].as_f64().unwrap();
    assert!((alpha_sq - alpha_sq_exact()).abs() < 1e-9, "alpha_sq = {alpha_sq}");
    assert!((beta_sq - beta_sq_exact()).abs() < 1e-9, "beta_sq = {beta_sq}");
    assert_eq!(profile["is_ab_normal"].as_bool(), Some(true));

    // The Loewner test confirms normality at exactly those constants.
    let tol = Tolerances::default();
    assert!(is_ab_normal(
        &running_example(),
        alpha_sq_exact().sqrt(),
        beta_sq_exact().sqrt(),
        &tol
    )
    .unwrap());
    assert!(elapsed.as_secs_f64() < 1.0, "analyze took {elapsed:?}");
    println!("criterion 1 PASS: alpha_sq {alpha_sq:.12}, beta_sq {beta_sq:.12}, runtime {elapsed:?}");
}

#[test]
fn criterion_2_numerical_radius_against_oracles() {
    let start = Instant::now();
    let tol = Tolerances::default();

    // 2000 x 3000 = 6e6 >= 1e6 grid vectors; quadratic falloff near the
    // maximizer keeps the grid error well below 1e-6.
    let shift = Matrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]);
    let w_shift = numerical_radius(&shift, &tol).unwrap();
    let oracle_shift = radius_grid_oracle_c2(&shift, 2000, 3000);
    assert!((w_shift - 0.5).abs() < 1e-6, "w = {w_shift}");
    assert!((w_shift - oracle_shift).abs() < 1e-6, "oracle gap {}", w_shift - oracle_shift);

    let example = running_example();
    let w_ex = numerical_radius(&example, &tol).unwrap();
    let oracle_ex = radius_grid_oracle_c2(&example, 2000, 3000);
    assert!((w_ex - 1.5).abs() < 1e-6, "w = {w_ex}");
    assert!((w_ex - oracle_ex).abs() < 1e-6, "oracle gap {}", w_ex - oracle_ex);

    // 100 seeded random operators, dims 2..4, ascent oracle within 1e-3.
    let mut worst_gap = 0.0_f64;
    for i in 0..100u64 {
        let dim = 2 + (i % 3) as usize;
        let t = generate(&EnsembleSpec {
            kind: Kind::Gaussian,
            dim,
            count: 1,
            seed: 0xC2_0000 + i,
            scale: 1.0,
        })
        .unwrap()
        .remove(0);
        let w = numerical_radius(&t, &tol).unwrap();
        let oracle = radius_ascent_oracle(&t, 0xAC_0000 + i);
        let gap = (w - oracle).abs();
        worst_gap = worst_gap.max(gap);
        assert!(gap < 1e-3, "seed {i}: w = {w}, oracle = {oracle}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 2 took {elapsed:?}");
    println!(
        "criterion 2 PASS: w(shift) {w_shift:.9}, w(example) {w_ex:.9}, worst oracle gap {worst_gap:.2e}, runtime {elapsed:?}"
    );
}

#[test]
fn criterion_3_norm_chain_on_gaussian_ensembles() {
    let tol = Tolerances::default();
    let mut checked = 0usize;
    for dim in 2..=8usize {
        let mats = generate(&EnsembleSpec {
            kind: Kind::Gaussian,
            dim,
            count: 143,
            seed: 0x30_000 + dim as u64,
            scale: 1.0,
        })
        .unwrap();
        for t in mats {
            let w = numerical_radius(&t, &tol).unwrap();
            let norm = operator_norm(&t);
            assert!(w <= norm + 1e-8, "dim {dim}: w {w} > norm {norm}");
            assert!(norm <= 2.0 * w + 1e-8, "dim {dim}: norm {norm} > 2w {}", 2.0 * w);
            checked += 1;
        }
    }
    assert!(checked >= 1000);
    println!("criterion 3 PASS: {checked} operators, zero norm-chain violations");
}

struct LemmaTally {
    evaluated: usize,
    vacuous: usize,
    min_slack: f64,
}

fn run_lemma_batch(id: LemmaId, tuples: usize, seed: u64) -> LemmaTally {
    let tol = Tolerances::default();
    let mut tally = LemmaTally {
        evaluated: 0,
        vacuous: 0,
        min_slack: f64::INFINITY,
    };
    for i in 0..tuples {
        let mut rng = SplitMix64::substream(seed, i as u64);
        let dim = 1 + rng.next_index(16);
        let stress = i % 50 == 49;
        let (a, b, e, params) = make_lemma_tuple(id, dim, stress, &mut rng);
        let rep = check_vector_lemma(id, &a, &b, e.as_ref(), &params, &tol).unwrap();
        tally.evaluated += 1;
        if rep.is_vacuous() {
            tally.vacuous += 1;
        } else {
            tally.min_slack = tally.min_slack.min(rep.slack);
            assert!(
                rep.slack >= -1e-10,
                "{id:?} tuple {i}: slack {}",
                rep.slack
            );
        }
    }
    tally
}

/// Hypothesis-conforming tuples per lemma; stress tuples deliberately break
/// a hypothesis to exercise the vacuous path.
fn make_lemma_tuple(
    id: LemmaId,
    dim: usize,
    stress: bool,
    rng: &mut SplitMix64,
) -> (Vector, Vector, Option<Vector>, InequalityParams) {
    let lambda_grid = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(2.0, 0.0),
    ];
    match id {
        LemmaId::GrcVec => {
            let mut a = rng.gaussian_vector(dim);
            let mut b = rng.gaussian_vector(dim);
            if a.norm() < b.norm() {
                std::mem::swap(&mut a, &mut b);
            }
            if stress {
                b = Vector::zeros(dim);
            }
            let r = [0.5, 1.0, 2.0][rng.next_index(3)];
            (a, b, None, InequalityParams::with_r(r))
        }
        LemmaId::Buzano => {
            let a = rng.gaussian_vector(dim);
            let b = rng.gaussian_vector(dim);
            let mut e = rng.unit_vector(dim);
            if stress {
                e = e.scale_re(0.5);
            }
            (a, b, Some(e), InequalityParams::default())
        }
        LemmaId::DunklWilliamsVec => {
            let a = rng.gaussian_vector(dim);
            let b = if stress {
                Vector::zeros(dim)
            } else if rng.next_index(10) == 0 {
                // near-parallel pair
                a.add(&rng.gaussian_vector(dim).scale_re(1e-8))
            } else {
                rng.gaussian_vector(dim)
            };
            (a, b, None, InequalityParams::default())
        }
        LemmaId::DragomirQuad => {
            let a = rng.gaussian_vector(dim);
            let b = if rng.next_index(10) == 0 {
                a.add(&rng.gaussian_vector(dim).scale_re(1e-8))
            } else {
                rng.gaussian_vector(dim)
            };
            let lambda = lambda_grid[rng.next_index(4)];
            (a, b, None, InequalityParams::with_lambda(lambda))
        }
        LemmaId::DragomirR => {
            // target a != 0, y = a + s g with s <= ||a||, r in [s, ||a||].
            let target = loop {
                let v = rng.gaussian_vector(dim);
                if v.norm() > 1e-6 {
                    break v;
                }
            };
            let dir = rng.unit_vector(dim);
            let s = rng.next_f64() * target.norm();
            let y = target.add(&dir.scale_re(s));
            let r = if stress {
                s * 0.5 // breaks ||y - a|| <= r
            } else {
                s + rng.next_f64() * (target.norm() - s)
            };
            (y, target, None, InequalityParams::with_r(r))
        }
        LemmaId::DragomirRrr => {
            let target = rng.gaussian_vector(dim);
            let dir = rng.unit_vector(dim);
            let s = rng.next_f64() * 2.0;
            let y = target.add(&dir.scale_re(s));
            let r = if stress { s * 0.5 } else { s * (1.0 + rng.next_f64()) };
            (y, target, None, InequalityParams::with_r(r))
        }
        LemmaId::DsUpper | LemmaId::PowerMean => {
            let a = rng.gaussian_vector(dim);
            let b = if rng.next_index(10) == 0 {
                a.scale_re(1.0 + 1e-9) // near-equal norms hit the equality case
            } else {
                rng.gaussian_vector(dim)
            };
            let p = [2.0, 3.0, 4.0][rng.next_index(3)];
            (a, b, None, InequalityParams::with_p(p))
        }
        LemmaId::DsLowerVec => {
            let a = rng.gaussian_vector(dim);
            let b = rng.gaussian_vector(dim);
            let p = [1.25, 1.5, 1.75][rng.next_index(3)];
            (a, b, None, InequalityParams::with_p(p))
        }
    }
}

#[test]
fn criterion_4_vector_lemma_suite() {
    let start = Instant::now();
    const TUPLES: usize = 100_000;
    let mut total_vacuous = 0usize;
    let mut worst = f64::INFINITY;
    for (k, id) in ALL_LEMMAS.into_iter().enumerate() {
        let tally = run_lemma_batch(id, TUPLES, 0x40_000 + k as u64);
        assert_eq!(tally.evaluated, TUPLES);
        assert!(
            tally.vacuous < TUPLES / 5,
            "{id:?}: too many vacuous tuples ({})",
            tally.vacuous
        );
        total_vacuous += tally.vacuous;
        worst = worst.min(tally.min_slack);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 4 took {elapsed:?}");
    println!(
        "criterion 4 PASS: 9 x {TUPLES} tuples, min slack {worst:.2e}, {total_vacuous} vacuous, runtime {elapsed:?}"
    );
}

#[test]
fn criterion_5_corrected_mode_theorem_sweep() {
    let start = Instant::now();
    let tol = Tolerances::default();
    let items = default_sweep_items(&ALL_THEOREMS, Mode::Corrected);
    let mut totals = Summary {
        passed: 0,
        failed: 0,
        vacuous: 0,
    };
    let mut operators = 0usize;
    for kind in [Kind::Invertible, Kind::RankDeficient] {
        for dim in 2..=8usize {
            let spec = EnsembleSpec {
                kind,
                dim,
                count: 72,
                seed: 0x50_000 + dim as u64,
                scale: 1.0,
            };
            operators += spec.count;
            let reports = sweep(&spec, &items, &tol).unwrap();
            let summary = Summary::tally(&reports);
            assert_eq!(
                summary.failed, 0,
                "kind {kind:?} dim {dim}: {} violations",
                summary.failed
            );
            totals.passed += summary.passed;
            totals.failed += summary.failed;
            totals.vacuous += summary.vacuous;
        }
    }
    let elapsed = start.elapsed();
    assert!(operators >= 1000);
    assert!(elapsed.as_secs_f64() < 300.0, "criterion 5 took {elapsed:?}");
    println!(
        "criterion 5 PASS: {operators} operators, {} checks passed, {} vacuous, 0 violations, runtime {elapsed:?}",
        totals.passed, totals.vacuous
    );
}

#[test]
fn criterion_6_printed_form_refutation() {
    let identity = fixture("identity_2x2.txt");
    let printed = opineq_bin()
        .args([
            "verify",
            identity.to_str().unwrap(),
            "--theorem",
            "parallelogram-power",
            "--mode",
            "printed",
            "--p",
            "2",
            "--json",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(printed.status.code(), Some(1), "printed form must refute");
    let doc: serde_json::Value = serde_json::from_slice(&printed.stdout).unwrap();
    let rep = &doc["reports"][0];
    assert_eq!(rep["lhs"].as_f64(), Some(4.0));
    assert_eq!(rep["rhs"].as_f64(), Some(2.0));
    assert_eq!(rep["passed"].as_bool(), Some(false));
    assert!(!rep["witness"].is_null());

    let corrected = opineq_bin()
        .args([
            "verify",
            identity.to_str().unwrap(),
            "--theorem",
            "parallelogram-power",
            "--mode",
            "corrected",
            "--p",
            "2",
            "--json",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(corrected.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&corrected.stdout).unwrap();
    let rep = &doc["reports"][0];
    assert_eq!(rep["slack"].as_f64(), Some(0.0));
    assert_eq!(rep["passed"].as_bool(), Some(true));
    println!("criterion 6 PASS: printed form refuted (exit 1), corrected form exact (slack 0, exit 0)");
}

#[test]
fn criterion_7_douglas_round_trip() {
    let start = Instant::now();
    let tol = Tolerances::default();
    let mut worst_residual = 0.0_f64;
    let mut worst_gap = 0.0_f64;
    for i in 0..200u64 {
        let dim = 2 + (i % 4) as usize;
        let mut rng = SplitMix64::substream(0x70_000, i);
        // Moderately conditioned invertible S keeps the Loewner boundary
        // sharp enough to compare against ||R||^2 at 1e-6.
        let s = loop {
            let candidate = rng.gaussian_matrix(dim, dim, 1.0);
            let d = svd(&candidate, &tol).unwrap();
            if *d.singular_values.last().unwrap() > 3e-2 * d.sigma_max() {
                break candidate;
            }
        };
        // A third of the right factors are rank-deficient to exercise the
        // kernel bookkeeping.
        let r0 = if i % 3 == 0 && dim > 1 {
            let rank = 1 + rng.next_index(dim - 1);
            let left = rng.gaussian_matrix(dim, rank, 1.0);
            let right = rng.gaussian_matrix(rank, dim, 1.0);
            left.mul(&right)
        } else {
            rng.gaussian_matrix(dim, dim, 1.0)
        };
        let t = s.mul(&r0);

        let f = douglas_factorization(&t, &s, &tol).unwrap();
        let t_norm = operator_norm(&t).max(1e-12);
        assert!(
            f.residual <= 1e-8 * t_norm,
            "pair {i}: residual {} vs {}",
            f.residual,
            1e-8 * t_norm
        );
        assert!(f.kernel_match, "pair {i}: ker(R) != ker(T)");
        let angle = max_principal_angle_sin(
            range_basis(&f.factor, &tol).unwrap().as_ref(),
            range_basis(&s.adjoint(), &tol).unwrap().as_ref(),
        );
        assert!(angle <= 1e-8, "pair {i}: principal angle {angle}");
        assert!(
            subspaces_equal(
                kernel_basis(&f.factor, &tol).unwrap().as_ref(),
                kernel_basis(&t, &tol).unwrap().as_ref(),
                &tol
            ),
            "pair {i}"
        );
        let gap = (f.factor_norm_sq - f.certified_infimum).abs();
        assert!(
            gap <= 1e-6,
            "pair {i}: ||R||^2 {} vs infimum {}",
            f.factor_norm_sq,
            f.certified_infimum
        );
        worst_residual = worst_residual.max(f.residual / t_norm);
        worst_gap = worst_gap.max(gap);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 7 PASS: 200 pairs; ||R||^2 = inf{{mu: TT* <= mu SS*}} within {worst_gap:.2e} \
         (squared-norm convention confirmed), worst relative residual {worst_residual:.2e}, runtime {elapsed:?}"
    );
}

#[test]
fn criterion_8_pseudo_inverse() {
    let tol = Tolerances::default();

    // The 2x2 example is exactly invertible: T+ = [[1,0],[-1,1]].
    let p = pseudo_inverse(&running_example(), &tol).unwrap();
    let expected = Matrix::from_real_rows(&[&[1.0, 0.0], &[-1.0, 1.0]]);
    let err = p.sub(&expected).frobenius_norm();
    assert!(err < 1e-12, "pinv error {err}");

    let mut checked = 0usize;
    let mut worst = 0.0_f64;
    for i in 0..500u64 {
        let mut rng = SplitMix64::substream(0x80_000, i);
        let t = match i % 4 {
            // square dense
            0 => rng.gaussian_matrix(2 + (i % 5) as usize, 2 + (i % 5) as usize, 1.0),
            // rectangular dense, both orientations
            1 => rng.gaussian_matrix(2 + (i % 4) as usize, 3 + (i % 3) as usize, 1.0),
            2 => rng.gaussian_matrix(3 + (i % 3) as usize, 2 + (i % 4) as usize, 1.0),
            // rank-deficient product
            _ => {
                let m = 3 + (i % 3) as usize;
                let n = 3 + (i % 4) as usize;
                let k = 1 + rng.next_index(m.min(n) - 1);
                rng.gaussian_matrix(m, k, 1.0).mul(&rng.gaussian_matrix(k, n, 1.0))
            }
        };
        let p = pseudo_inverse(&t, &tol).unwrap();
        let scale_t = operator_norm(&t).max(1.0);
        let scale_p = operator_norm(&p).max(1.0);
        let r1 = t.mul(&p).mul(&t).sub(&t).frobenius_norm() / scale_t;
        let r2 = p.mul(&t).mul(&p).sub(&p).frobenius_norm() / scale_p;
        let tp = t.mul(&p);
        let pt = p.mul(&t);
        let r3 = tp.sub(&tp.adjoint()).frobenius_norm();
        let r4 = pt.sub(&pt.adjoint()).frobenius_norm();
        for (k, r) in [r1, r2, r3, r4].into_iter().enumerate() {
            assert!(r <= 1e-10, "draw {i}: identity {} residual {r}", k + 1);
            worst = worst.max(r);
        }
        checked += 1;
    }
    assert_eq!(checked, 500);
    println!("criterion 8 PASS: 500 draws, worst identity residual {worst:.2e}, exact-inverse error {err:.2e}");
}

#[test]
fn criterion_9_sweep_determinism() {
    let args = [
        "sweep",
        "--kind",
        "invertible",
        "--dim",
        "3",
        "--count",
        "5",
        "--seed",
        "7",
        "--theorems",
        "buzano-radius,half-sum-norm,ds-lower",
        "--mode",
        "corrected",
        "--json",
    ];
    let a = opineq_bin().args(args).output().expect("binary runs");
    let b = opineq_bin().args(args).output().expect("binary runs");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout, "sweep output must be byte-identical");
    println!(
        "criterion 9 PASS: identical flags give byte-identical JSON ({} bytes)",
        a.stdout.len()
    );
}
