//! Desk-scale smoke test: ℛ_{2,1} from raw Möbius data.
//!
//! The constant term β of A(t) = Σ_{n odd} μ(n) n^{-t} = α/t + β + O(t) is
//! estimated from Gaussian-smoothed partial sums. The Mellin transform of the
//! smoothing kernel has a simple pole at 0, so
//!
//!   S_X(t) = Σ μ(n) n^{-t} e^{-(n/X)²} ≈ A(t) + α X^{-t} Γ(-t/2)/2,
//!
//! and after removing the known pole α/t a low-degree polynomial fit in t
//! extrapolates β at t = 0. Convergence is slow (Möbius cancellation only);
//! the tolerance is 1e-2.

use regprod::arith::mobius_sieve;
use regprod::dirichlet::enumerate_characters;
use regprod::hurwitz::{log_gamma, HurwitzEvaluator};
use regprod::lfunc::LFunctions;
use regprod::progressions::r_coefficient;

const SIEVE_BOUND: usize = 20_000_000;
const SMOOTHING_X: f64 = 2.0e6;

fn gamma(x: f64) -> f64 {
    log_gamma(x).unwrap().exp()
}

/// Γ(−t/2) for 0 < t < 2, via Γ(z) = Γ(z+1)/z.
fn gamma_neg_half(t: f64) -> f64 {
    -2.0 * gamma(1.0 - t / 2.0) / t
}

#[test]
fn r21_from_abel_regularized_moebius_sums() {
    let mut lfun = LFunctions::new(HurwitzEvaluator::default());
    let expected = r_coefficient(&mut lfun, 2, 1).unwrap();

    // pole coefficient α of Σ_{n odd} μ(n) n^{-t} = 1/L(t, χ0 mod 2) at t = 0
    let chi0_mod2 = enumerate_characters(2).unwrap().into_iter().next().unwrap();
    let (laurent, _) = lfun.inverse_l_laurent(&chi0_mod2, 0).unwrap();
    let alpha = laurent[0].re; // coefficient of t^{-1}

    let mu = mobius_sieve(SIEVE_BOUND);
    let cutoff = ((5.3 * SMOOTHING_X) as usize).min(SIEVE_BOUND);

    // t grid 0.3, 0.4, ..., 1.2; n^{-t} advanced by repeated multiplication
    let npts = 10usize;
    let t0 = 0.3f64;
    let dt = 0.1f64;
    let mut sums = vec![0.0f64; npts];
    for n in (1..=cutoff).step_by(2) {
        let m = mu[n];
        if m == 0 {
            continue;
        }
        let x = n as f64;
        let w = (-(x / SMOOTHING_X) * (x / SMOOTHING_X)).exp();
        if w < 1e-14 {
            break;
        }
        let ln = x.ln();
        let step = (-dt * ln).exp();
        let mut pw = (-t0 * ln).exp();
        let base = m as f64 * w;
        for s in sums.iter_mut() {
            *s += base * pw;
            pw *= step;
        }
    }

    // remove the two known pole contributions, then fit a quintic and read
    // the constant term
    let ts: Vec<f64> = (0..npts).map(|j| t0 + dt * j as f64).collect();
    let ys: Vec<f64> = ts
        .iter()
        .zip(&sums)
        .map(|(&t, &s)| s - alpha * SMOOTHING_X.powf(-t) * 0.5 * gamma_neg_half(t) - alpha / t)
        .collect();
    let beta = polyfit_constant(&ts, &ys, 5);

    let err = (beta - expected).abs();
    println!("abel-regularized beta = {beta:.6}, L-path R_2,1 = {expected:.6}, err = {err:.2e}");
    assert!(err <= 1e-2, "smoke test off by {err:.3e}");
}

/// Constant coefficient of the least-squares polynomial fit of given degree.
fn polyfit_constant(ts: &[f64], ys: &[f64], degree: usize) -> f64 {
    let k = degree + 1;
    // normal equations (VᵀV) c = Vᵀy
    let mut ata = vec![vec![0.0f64; k]; k];
    let mut aty = vec![0.0f64; k];
    for (&t, &y) in ts.iter().zip(ys) {
        let mut powers = vec![1.0f64; k];
        for j in 1..k {
            powers[j] = powers[j - 1] * t;
        }
        for i in 0..k {
            aty[i] += powers[i] * y;
            for j in 0..k {
                ata[i][j] += powers[i] * powers[j];
            }
        }
    }
    // Gaussian elimination with partial pivoting
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| ata[a][col].abs().partial_cmp(&ata[b][col].abs()).unwrap())
            .unwrap();
        ata.swap(col, pivot);
        aty.swap(col, pivot);
        let diag = ata[col][col];
        for row in (col + 1)..k {
            let factor = ata[row][col] / diag;
            let (above, below) = ata.split_at_mut(row);
            for (rj, cj) in below[0][col..k].iter_mut().zip(&above[col][col..k]) {
                *rj -= factor * cj;
            }
            aty[row] -= factor * aty[col];
        }
    }
    let mut c = vec![0.0f64; k];
    for row in (0..k).rev() {
        let mut acc = aty[row];
        for j in (row + 1)..k {
            acc -= ata[row][j] * c[j];
        }
        c[row] = acc / ata[row][row];
    }
    c[0]
}
