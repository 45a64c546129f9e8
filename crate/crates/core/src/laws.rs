//! Closed-form distributions used by the generative scenarios and the
//! quadrature oracles.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::Real;

/// Standard normal CDF.
pub fn normal_cdf(x: Real) -> Real {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

/// Standard normal density.
pub fn normal_pdf(x: Real) -> Real {
    const INV_SQRT_2PI: Real = 0.398_942_280_401_432_7;
    (-0.5 * x * x).exp() * INV_SQRT_2PI
}

/// A univariate law on [0, inf) with evaluable distribution and density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Law {
    Exponential { rate: Real },
    /// log T ~ Normal(mu, sigma).
    LogNormal { mu: Real, sigma: Real },
    /// Mass at +infinity; models the absence of censoring (G == 0).
    Never,
}

impl Law {
    pub fn cdf(&self, t: Real) -> Real {
        if t <= 0.0 {
            return 0.0;
        }
        match *self {
            Law::Exponential { rate } => -(-rate * t).exp_m1(),
            Law::LogNormal { mu, sigma } => normal_cdf((t.ln() - mu) / sigma),
            Law::Never => 0.0,
        }
    }

    pub fn pdf(&self, t: Real) -> Real {
        if t < 0.0 {
            return 0.0;
        }
        match *self {
            // right-limit at 0 so quadrature panels that touch 0 are exact
            Law::Exponential { rate } => rate * (-rate * t).exp(),
            Law::LogNormal { mu, sigma } => {
                if t == 0.0 {
                    0.0
                } else {
                    normal_pdf((t.ln() - mu) / sigma) / (sigma * t)
                }
            }
            Law::Never => 0.0,
        }
    }

    pub fn survival(&self, t: Real) -> Real {
        1.0 - self.cdf(t)
    }

    /// Cumulative hazard -log S(t).
    pub fn chf(&self, t: Real) -> Real {
        match *self {
            Law::Exponential { rate } => rate * t.max(0.0),
            _ => -self.survival(t).ln(),
        }
    }

    /// Inverse-CDF draw.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Real {
        match *self {
            Law::Exponential { rate } => {
                // u in (0, 1]; -ln(u)/rate
                let u: Real = 1.0 - rng.gen::<Real>();
                -u.ln() / rate
            }
            Law::LogNormal { mu, sigma } => {
                let z: Real = rng.sample(rand_distr::StandardNormal);
                (mu + sigma * z).exp()
            }
            Law::Never => Real::INFINITY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exponential_identities() {
        let law = Law::Exponential { rate: 2.0 };
        assert!((law.cdf(1.0) - (1.0 - (-2.0f64).exp())).abs() < 1e-15);
        assert!((law.chf(1.5) - 3.0).abs() < 1e-15);
        assert_eq!(law.cdf(0.0), 0.0);
        assert_eq!(law.pdf(-1.0), 0.0);
    }

    #[test]
    fn lognormal_median_and_symmetry() {
        let law = Law::LogNormal { mu: 0.3, sigma: 1.0 };
        assert!((law.cdf((0.3f64).exp()) - 0.5).abs() < 1e-12);
        // numeric derivative of the cdf matches the pdf
        let t = 1.7;
        let h = 1e-6;
        let num = (law.cdf(t + h) - law.cdf(t - h)) / (2.0 * h);
        assert!((num - law.pdf(t)).abs() < 1e-6);
    }

    #[test]
    fn never_is_no_censoring() {
        let law = Law::Never;
        assert_eq!(law.cdf(1e12), 0.0);
        assert_eq!(law.survival(5.0), 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(law.sample(&mut rng).is_infinite());
    }

    #[test]
    fn exponential_sample_mean() {
        let law = Law::Exponential { rate: 0.5 };
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 200_000;
        let mean: f64 = (0..n).map(|_| law.sample(&mut rng)).sum::<f64>() / n as f64;
        assert!((mean - 2.0).abs() < 0.03, "mean {mean}");
    }
}
