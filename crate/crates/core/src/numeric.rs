//! Scalar numeric kernels shared across the crate.
//!
//! Everything here is deterministic and allocation-free unless noted. All
//! densities are evaluated in log space.

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

pub const LN_2PI: f64 = 1.837_877_066_409_345_3;

/// `ln(1 + e^x)`, stable over the whole f64 range.
#[inline]
pub fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Logistic function `1 / (1 + e^-x)`, stable for large `|x|`.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Univariate normal log-density with variance `var`.
#[inline]
pub fn ln_normal_pdf(x: f64, mean: f64, var: f64) -> f64 {
    let d = x - mean;
    -0.5 * (LN_2PI + var.ln()) - d * d / (2.0 * var)
}

/// Isotropic multivariate normal log-density with covariance `var * I`.
#[inline]
pub fn ln_normal_iso(x: &[f64], mean: &[f64], var: f64) -> f64 {
    debug_assert_eq!(x.len(), mean.len());
    let mut q = 0.0;
    for k in 0..x.len() {
        let d = x[k] - mean[k];
        q += d * d;
    }
    -0.5 * x.len() as f64 * (LN_2PI + var.ln()) - q / (2.0 * var)
}

/// Standard normal density.
#[inline]
pub fn normal_pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Standard normal CDF.
#[inline]
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-z / std::f64::consts::SQRT_2)
}

/// Log of the standard normal CDF, safe in both tails.
///
/// Uses `erfc` down to z ~ -37 and the continued asymptotic expansion below
/// that, where `erfc` underflows.
pub fn ln_normal_cdf(z: f64) -> f64 {
    if z > 8.0 {
        // Phi(z) = 1 - q with tiny q.
        let q = 0.5 * statrs::function::erf::erfc(z / std::f64::consts::SQRT_2);
        (-q).ln_1p()
    } else if z > -37.0 {
        (0.5 * statrs::function::erf::erfc(-z / std::f64::consts::SQRT_2)).ln()
    } else {
        let z2 = z * z;
        let correction = (-1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2)).ln_1p();
        -0.5 * z2 - (-z).ln() - 0.5 * LN_2PI + correction
    }
}

/// Log-gamma function.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// Inverse-gamma log-density with shape `shape` and scale `scale`:
/// `f(x) = scale^shape / Gamma(shape) * x^-(shape+1) * exp(-scale / x)`.
#[inline]
pub fn ln_inv_gamma_pdf(x: f64, shape: f64, scale: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    shape * scale.ln() - ln_gamma(shape) - (shape + 1.0) * x.ln() - scale / x
}

/// Dirichlet log-density. `x` must lie on the simplex; entries at or below
/// zero give `-inf`.
pub fn ln_dirichlet_pdf(x: &[f64], alpha: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), alpha.len());
    let mut sum_alpha = 0.0;
    let mut acc = 0.0;
    for (&xi, &ai) in x.iter().zip(alpha) {
        if xi <= 0.0 {
            return f64::NEG_INFINITY;
        }
        sum_alpha += ai;
        acc += (ai - 1.0) * xi.ln() - ln_gamma(ai);
    }
    acc + ln_gamma(sum_alpha)
}

/// Log of the modified Bessel function of the first kind, order zero.
///
/// Power series below the crossover, asymptotic expansion above; relative
/// error stays near f64 precision on the series side and below 1e-10 on the
/// asymptotic side.
pub fn log_bessel_i0(x: f64) -> f64 {
    let x = x.abs();
    if x < 50.0 {
        let t = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1.0;
        loop {
            term *= t / (k * k);
            sum += term;
            if term < sum * 1e-17 {
                break;
            }
            k += 1.0;
        }
        sum.ln()
    } else {
        let r = 1.0 / (8.0 * x);
        let series = r * (1.0 + r * (4.5 + r * (37.5 + r * 459.375)));
        x - 0.5 * (2.0 * std::f64::consts::PI * x).ln() + series.ln_1p()
    }
}

/// `ln(sum_i exp(x_i))` with max subtraction. Empty input gives `-inf`.
pub fn logsumexp(xs: &[f64]) -> f64 {
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let s: f64 = xs.iter().map(|&x| (x - m).exp()).sum();
    m + s.ln()
}

/// Linear-interpolation quantile of a sorted slice, `q` in [0, 1].
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty(), "quantile of empty slice");
    let h = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Draw from an inverse-gamma distribution with shape `shape`, scale `scale`.
pub fn sample_inv_gamma<R: Rng>(shape: f64, scale: f64, rng: &mut R) -> f64 {
    // 1/X ~ Gamma(shape, rate = scale), i.e. Gamma with scale 1/scale.
    let g = Gamma::new(shape, 1.0 / scale).expect("invalid inverse-gamma parameters");
    1.0 / g.sample(rng)
}

/// Draw from a Dirichlet distribution via normalized gammas.
pub fn sample_dirichlet<R: Rng>(alpha: &[f64], rng: &mut R) -> Vec<f64> {
    let mut out = Vec::with_capacity(alpha.len());
    let mut sum = 0.0;
    for &a in alpha {
        let g = Gamma::new(a, 1.0).expect("invalid Dirichlet concentration");
        let v: f64 = g.sample(rng);
        sum += v;
        out.push(v);
    }
    for v in &mut out {
        *v /= sum;
    }
    out
}

/// Fill `out` with independent N(0, sd^2) draws.
pub fn sample_normal_vec<R: Rng>(out: &mut [f64], sd: f64, rng: &mut R) {
    for v in out.iter_mut() {
        let z: f64 = rng.sample(StandardNormal);
        *v = sd * z;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn softplus_matches_naive_in_safe_range() {
        for &x in &[-20.0, -3.5, -0.1, 0.0, 0.1, 4.2, 20.0] {
            assert_relative_eq!(softplus(x), (1.0 + f64::exp(x)).ln(), max_relative = 1e-12);
        }
    }

    #[test]
    fn softplus_stable_at_extremes() {
        assert_eq!(softplus(1e3), 1e3);
        assert!(softplus(-1e3) >= 0.0);
        assert!(softplus(-1e3) < 1e-300);
    }

    #[test]
    fn sigmoid_limits() {
        assert_relative_eq!(sigmoid(0.0), 0.5);
        assert!(sigmoid(800.0) == 1.0);
        assert!(sigmoid(-800.0) > 0.0 || sigmoid(-800.0) == 0.0);
        assert_relative_eq!(sigmoid(1.5) + sigmoid(-1.5), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn ln_normal_cdf_matches_erfc_region() {
        for &z in &[-8.0, -2.0, 0.0, 1.3, 5.0] {
            assert_relative_eq!(ln_normal_cdf(z), normal_cdf(z).ln(), max_relative = 1e-12);
        }
        // Continuity at the asymptotic switch.
        let a = ln_normal_cdf(-36.999);
        let b = ln_normal_cdf(-37.001);
        assert_relative_eq!(a, b, max_relative = 1e-9);
    }

    #[test]
    fn bessel_i0_reference_values() {
        // I0(1) and I0(5) to full precision, I0(60) via the asymptotic form.
        assert_relative_eq!(log_bessel_i0(1.0), 1.266_065_877_752_008_4_f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(log_bessel_i0(5.0), 27.239_871_823_604_45_f64.ln(), max_relative = 1e-13);
        // Crossover consistency.
        assert_relative_eq!(log_bessel_i0(49.999), log_bessel_i0(50.001), max_relative = 1e-9);
        assert_eq!(log_bessel_i0(-3.0), log_bessel_i0(3.0));
    }

    #[test]
    fn dirichlet_and_inv_gamma_match_statrs() {
        use statrs::distribution::{Continuous, Dirichlet, InverseGamma};
        let x = [0.2, 0.5, 0.3];
        let alpha = [1.5, 2.0, 0.7];
        let reference = Dirichlet::new(alpha.to_vec()).unwrap();
        let got = ln_dirichlet_pdf(&x, &alpha);
        assert_relative_eq!(got, reference.ln_pdf(&nalgebra::DVector::from_row_slice(&x)), max_relative = 1e-12);

        let ig = InverseGamma::new(3.0, 2.5).unwrap();
        assert_relative_eq!(ln_inv_gamma_pdf(0.8, 3.0, 2.5), ig.ln_pdf(0.8), max_relative = 1e-12);
    }

    #[test]
    fn logsumexp_basics() {
        assert_eq!(logsumexp(&[]), f64::NEG_INFINITY);
        assert_relative_eq!(logsumexp(&[0.0, 0.0]), 2.0_f64.ln());
        assert_relative_eq!(logsumexp(&[-1000.0, -1000.0]), -1000.0 + 2.0_f64.ln());
    }

    #[test]
    fn quantile_interpolates() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_sorted(&xs, 0.0), 1.0);
        assert_eq!(quantile_sorted(&xs, 1.0), 4.0);
        assert_relative_eq!(quantile_sorted(&xs, 0.5), 2.5);
    }

    #[test]
    fn inv_gamma_sampler_moments() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let (shape, scale) = (6.0, 4.0);
        let n = 200_000;
        let draws: Vec<f64> = (0..n).map(|_| sample_inv_gamma(shape, scale, &mut rng)).collect();
        let mean: f64 = draws.iter().sum::<f64>() / n as f64;
        // Mean = scale / (shape - 1) = 0.8, sd of mean ~ 0.4/sqrt(5n).
        assert_relative_eq!(mean, 0.8, epsilon = 3.0 * 0.4 / (5.0 * n as f64).sqrt());
    }

    #[test]
    fn dirichlet_sampler_is_on_simplex() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let alpha = vec![0.5, 1.0, 2.0, 4.0];
        for _ in 0..100 {
            let x = sample_dirichlet(&alpha, &mut rng);
            assert!((x.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(x.iter().all(|&v| v > 0.0));
        }
    }
}
