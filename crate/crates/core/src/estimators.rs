//! Within-node nonparametric estimators of the cumulative hazard and
//! survival functions, plus the closed-form population curves used as
//! quadrature oracles by the benchmark harnesses.

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laws::Law;
use crate::stepfn::{HazardCurve, StepFunction, SurvivalCurve};
use crate::Real;

/// Floor applied to `1 - G(s|x)` before inverting it into an IPCW weight.
pub const DEFAULT_IPCW_EPS: Real = 0.05;

/// Grid size of the quadrature oracles.
pub const DEFAULT_ORACLE_GRID: usize = 4096;

/// Convergence tolerance of the quadrature oracles under grid refinement.
pub const ORACLE_TOL: Real = 1e-6;

/// One observation: observed time `Y = min(T, C)`, event indicator
/// `delta = 1(T <= C)`, and the covariate vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurvivalRecord {
    pub time: Real,
    pub event: bool,
    pub covariates: Vec<Real>,
}

impl SurvivalRecord {
    pub fn new(time: Real, event: bool, covariates: Vec<Real>) -> Result<Self> {
        if !time.is_finite() || time < 0.0 {
            return Err(Error::InvalidInput(format!(
                "time must be finite and non-negative, got {time}"
            )));
        }
        if covariates.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("non-finite covariate".into()));
        }
        Ok(Self { time, event, covariates })
    }
}

/// How the comparison horizon tau is chosen from the training times.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum TauPolicy {
    Quantile { q: Real },
    Fixed { tau: Real },
    MinAtRisk { r: usize },
}

impl Default for TauPolicy {
    fn default() -> Self {
        TauPolicy::Quantile { q: 0.9 }
    }
}

impl TauPolicy {
    pub fn validate(&self) -> Result<()> {
        match *self {
            TauPolicy::Quantile { q } => {
                if !(q > 0.0 && q <= 1.0) {
                    return Err(Error::InvalidConfig(format!("tau quantile q={q} outside (0, 1]")));
                }
            }
            TauPolicy::Fixed { tau } => {
                if !(tau > 0.0 && tau.is_finite()) {
                    return Err(Error::InvalidConfig(format!("fixed tau={tau} must be positive")));
                }
            }
            TauPolicy::MinAtRisk { r } => {
                if r < 2 {
                    return Err(Error::InvalidConfig(format!("min_at_risk r={r} must be >= 2")));
                }
            }
        }
        Ok(())
    }

    /// Resolve tau on a set of observed times.
    pub fn compute(&self, times: &[Real]) -> Result<Real> {
        self.validate()?;
        if times.is_empty() {
            return Err(Error::EmptyDataset);
        }
        match *self {
            TauPolicy::Fixed { tau } => Ok(tau),
            TauPolicy::Quantile { q } => {
                let mut sorted = times.to_vec();
                sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let idx = ((q * sorted.len() as Real).ceil() as usize).clamp(1, sorted.len()) - 1;
                Ok(sorted[idx])
            }
            TauPolicy::MinAtRisk { r } => {
                if times.len() < r {
                    return Err(Error::InvalidConfig(format!(
                        "min_at_risk r={r} exceeds sample size {}",
                        times.len()
                    )));
                }
                let mut sorted = times.to_vec();
                sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
                // the r-th largest time still has at least r subjects at risk
                Ok(sorted[times.len() - r])
            }
        }
    }
}

fn check_samples<T: Float>(samples: &[(T, bool)]) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::EmptyNode);
    }
    for &(t, _) in samples {
        if !t.is_finite() || t < T::zero() {
            return Err(Error::InvalidInput("times must be finite and non-negative".into()));
        }
    }
    Ok(())
}

/// Indices sorted ascending by time.
fn time_order<T: Float>(samples: &[(T, bool)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..samples.len()).collect();
    order.sort_by(|&a, &b| samples[a].0.partial_cmp(&samples[b].0).unwrap());
    order
}

/// Nelson-Aalen estimator of the cumulative hazard.
///
/// Sums `d(s) / Y(s)` over the distinct observed times with at least one
/// event, where `d(s)` counts events at `s` and `Y(s)` counts subjects
/// still at risk (`time >= s`). Ties aggregate at a single knot.
pub fn nelson_aalen<T: Float>(samples: &[(T, bool)]) -> Result<HazardCurve<T>> {
    check_samples(samples)?;
    let order = time_order(samples);
    let n = samples.len();

    let mut knots = Vec::new();
    let mut values = Vec::new();
    let mut cum = T::zero();
    let mut i = 0usize;
    while i < n {
        let t = samples[order[i]].0;
        let at_risk = n - i;
        let mut d = 0usize;
        while i < n && samples[order[i]].0 == t {
            if samples[order[i]].1 {
                d += 1;
            }
            i += 1;
        }
        if d > 0 {
            cum = cum + T::from(d).unwrap() / T::from(at_risk).unwrap();
            knots.push(t);
            values.push(cum);
        }
    }
    HazardCurve::new(StepFunction::new(knots, values, T::zero())?)
}

/// Kaplan-Meier product-limit estimator of the survival function.
pub fn kaplan_meier<T: Float>(samples: &[(T, bool)]) -> Result<SurvivalCurve<T>> {
    check_samples(samples)?;
    let order = time_order(samples);
    let n = samples.len();

    let mut knots = Vec::new();
    let mut values = Vec::new();
    let mut surv = T::one();
    let mut i = 0usize;
    while i < n {
        let t = samples[order[i]].0;
        let at_risk = n - i;
        let mut d = 0usize;
        while i < n && samples[order[i]].0 == t {
            if samples[order[i]].1 {
                d += 1;
            }
            i += 1;
        }
        if d > 0 {
            surv = surv * (T::one() - T::from(d).unwrap() / T::from(at_risk).unwrap());
            knots.push(t);
            values.push(surv);
        }
    }
    SurvivalCurve::new(StepFunction::new(knots, values, T::one())?)
}

/// Survival curve `exp(-hazard)` on the same knots.
pub fn na_survival<T: Float>(chf: &HazardCurve<T>) -> SurvivalCurve<T> {
    let step = StepFunction::new(
        chf.knots().to_vec(),
        chf.values().iter().map(|&v| (-v).exp()).collect(),
        T::one(),
    )
    .expect("valid hazard maps to valid survival");
    SurvivalCurve::new(step).expect("exp(-hazard) satisfies survival invariants")
}

/// Weighted Nelson-Aalen kernel. `weight(i, s)` returns the multiplier of
/// sample `i`'s risk/event contribution at time `s`; it must be finite and
/// positive. The plain estimator is the special case `weight == 1`.
pub fn weighted_nelson_aalen_by<T, W>(samples: &[(T, bool)], weight: W) -> Result<HazardCurve<T>>
where
    T: Float,
    W: Fn(usize, T) -> T,
{
    check_samples(samples)?;
    let order = time_order(samples);
    let n = samples.len();

    let mut knots = Vec::new();
    let mut values = Vec::new();
    let mut cum = T::zero();
    let mut i = 0usize;
    while i < n {
        let t = samples[order[i]].0;
        let group_start = i;
        let mut num = T::zero();
        while i < n && samples[order[i]].0 == t {
            let idx = order[i];
            if samples[idx].1 {
                num = num + weight(idx, t);
            }
            i += 1;
        }
        if num > T::zero() {
            // weighted at-risk mass: everyone with time >= t
            let mut den = T::zero();
            for &idx in &order[group_start..] {
                den = den + weight(idx, t);
            }
            if !den.is_finite() || !num.is_finite() {
                return Err(Error::NonFiniteWeight {
                    time: t.to_f64().unwrap_or(Real::NAN),
                });
            }
            cum = cum + num / den;
            knots.push(t);
            values.push(cum);
        }
    }
    HazardCurve::new(StepFunction::new(knots, values, T::zero())?)
}

/// IPCW-weighted Nelson-Aalen estimator.
///
/// Each contribution of sample `i` at time `s` is divided by
/// `max(censor_survival(s, x_i), eps)`, where `censor_survival` returns
/// `1 - G(s | x)` and `eps` floors the weight denominators.
pub fn weighted_nelson_aalen<F>(
    records: &[SurvivalRecord],
    censor_survival: F,
    eps: Real,
) -> Result<HazardCurve<Real>>
where
    F: Fn(Real, &[Real]) -> Real,
{
    if records.is_empty() {
        return Err(Error::EmptyNode);
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidConfig(format!("ipcw eps={eps} outside (0, 1]")));
    }
    let samples: Vec<(Real, bool)> = records.iter().map(|r| (r.time, r.event)).collect();
    let bad_time = std::cell::Cell::new(None::<Real>);
    let result = weighted_nelson_aalen_by(&samples, |i, s| {
        let cs = censor_survival(s, &records[i].covariates);
        if !cs.is_finite() {
            if bad_time.get().is_none() {
                bad_time.set(Some(s));
            }
            return 1.0; // placeholder; the error below wins
        }
        1.0 / cs.max(eps)
    });
    if let Some(time) = bad_time.get() {
        return Err(Error::NonFiniteWeight { time });
    }
    result
}

/// Evenly spaced grid from 0 to `tau` inclusive.
pub fn oracle_grid(tau: Real, points: usize) -> Vec<Real> {
    assert!(points >= 2 && tau > 0.0);
    (0..points).map(|j| tau * j as Real / (points - 1) as Real).collect()
}

fn integrate_population_chf(
    failure_laws: &[Law],
    censor_laws: Option<&[Law]>,
    grid: &[Real],
) -> Result<HazardCurve<Real>> {
    if failure_laws.is_empty() {
        return Err(Error::EmptyNode);
    }
    if let Some(censor) = censor_laws {
        if censor.len() != failure_laws.len() {
            return Err(Error::DimensionMismatch {
                expected: failure_laws.len(),
                got: censor.len(),
            });
        }
    }
    if grid.len() < 2 || grid[0] != 0.0 {
        return Err(Error::InvalidInput("oracle grid must start at 0 with >= 2 points".into()));
    }

    let integrand = |s: Real| -> Result<Real> {
        let mut num = 0.0;
        let mut den = 0.0;
        for (i, f) in failure_laws.iter().enumerate() {
            let g_surv = match censor_laws {
                Some(censor) => censor[i].survival(s),
                None => 1.0,
            };
            num += g_surv * f.pdf(s);
            den += g_surv * f.survival(s);
        }
        if den < 1e-12 {
            return Err(Error::OracleDenominator);
        }
        Ok(num / den)
    };

    let mut knots = Vec::with_capacity(grid.len());
    let mut values = Vec::with_capacity(grid.len());
    let mut cum = 0.0;
    let mut prev_s = grid[0];
    let mut prev_g = integrand(prev_s)?;
    knots.push(prev_s);
    values.push(0.0);
    for &s in &grid[1..] {
        if s <= prev_s {
            return Err(Error::InvalidInput("oracle grid must be strictly increasing".into()));
        }
        let g = integrand(s)?;
        cum += 0.5 * (g + prev_g) * (s - prev_s);
        knots.push(s);
        values.push(cum);
        prev_s = s;
        prev_g = g;
    }
    // a knot at 0 with value 0 duplicates the pre-value; drop it
    HazardCurve::new(StepFunction::new(
        knots[1..].to_vec(),
        values[1..].to_vec(),
        0.0,
    )?)
}

/// Censoring-contaminated population CHF on a node,
/// `int_0^t sum_i (1-G_i) dF_i / sum_i (1-G_i)(1-F_i)`,
/// integrated by the trapezoid rule on `grid`. Quadrature oracle for the
/// concentration target of the within-node Nelson-Aalen estimator.
pub fn contaminated_chf(
    failure_laws: &[Law],
    censor_laws: &[Law],
    grid: &[Real],
) -> Result<HazardCurve<Real>> {
    integrate_population_chf(failure_laws, Some(censor_laws), grid)
}

/// Averaged population CHF on a node, `int_0^t sum_i dF_i / sum_i (1-F_i)`.
/// This is the censoring-free target the IPCW-weighted estimator recovers.
pub fn average_chf(failure_laws: &[Law], grid: &[Real]) -> Result<HazardCurve<Real>> {
    integrate_population_chf(failure_laws, None, grid)
}
