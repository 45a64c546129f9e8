//! Right-continuous piecewise-constant curves.
//!
//! Every cumulative hazard and survival curve in the crate is represented
//! this way: a sorted knot vector, one value per knot, and the value the
//! curve takes before the first knot. Evaluation at `t` returns the value
//! of the largest knot `<= t`, or `pre_value` when `t` lies before every
//! knot; past the last knot the curve holds its last value.

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepFunction<T> {
    knots: Vec<T>,
    values: Vec<T>,
    pre_value: T,
}

impl<T: Float> StepFunction<T> {
    pub fn new(knots: Vec<T>, values: Vec<T>, pre_value: T) -> Result<Self> {
        if knots.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "step function has {} knots but {} values",
                knots.len(),
                values.len()
            )));
        }
        if !pre_value.is_finite() {
            return Err(Error::InvalidInput("non-finite pre_value".into()));
        }
        for w in knots.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidInput("knots not strictly increasing".into()));
            }
        }
        if knots.iter().any(|k| !k.is_finite()) || values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite knot or value".into()));
        }
        Ok(Self { knots, values, pre_value })
    }

    /// Constant curve with no knots.
    pub fn constant(value: T) -> Self {
        Self { knots: Vec::new(), values: Vec::new(), pre_value: value }
    }

    pub fn knots(&self) -> &[T] {
        &self.knots
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn pre_value(&self) -> T {
        self.pre_value
    }

    pub fn is_constant(&self) -> bool {
        self.knots.is_empty()
    }

    /// Value at and after the last knot (`pre_value` for a constant curve).
    pub fn last_value(&self) -> T {
        self.values.last().copied().unwrap_or(self.pre_value)
    }

    /// Right-continuous evaluation.
    pub fn eval(&self, t: T) -> T {
        let idx = self.knots.partition_point(|k| *k <= t);
        if idx == 0 {
            self.pre_value
        } else {
            self.values[idx - 1]
        }
    }

    /// Evaluate on a sorted grid with a single merged pass.
    pub fn eval_sorted_grid(&self, grid: &[T]) -> Vec<T> {
        let mut out = Vec::with_capacity(grid.len());
        let mut j = 0usize;
        let mut cur = self.pre_value;
        for &t in grid {
            while j < self.knots.len() && self.knots[j] <= t {
                cur = self.values[j];
                j += 1;
            }
            out.push(cur);
        }
        out
    }

    /// Largest absolute difference to `other` over the given evaluation points.
    pub fn sup_abs_diff(&self, other: &Self, points: &[T]) -> T {
        points.iter().fold(T::zero(), |acc, &t| {
            acc.max((self.eval(t) - other.eval(t)).abs())
        })
    }
}

/// Cumulative hazard function: starts at zero, non-negative, non-decreasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HazardCurve<T>(StepFunction<T>);

impl<T: Float> HazardCurve<T> {
    pub fn new(step: StepFunction<T>) -> Result<Self> {
        let curve = Self(step);
        curve.validate()?;
        Ok(curve)
    }

    /// The identically-zero hazard (node with no events).
    pub fn zero() -> Self {
        Self(StepFunction::constant(T::zero()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.pre_value != T::zero() {
            return Err(Error::InvalidInput("hazard curve must start at 0".into()));
        }
        let mut prev = T::zero();
        for &v in self.0.values() {
            if !(v >= prev) {
                return Err(Error::InvalidInput("hazard curve must be non-decreasing".into()));
            }
            prev = v;
        }
        Ok(())
    }

    pub fn step(&self) -> &StepFunction<T> {
        &self.0
    }

    pub fn eval(&self, t: T) -> T {
        self.0.eval(t)
    }

    pub fn knots(&self) -> &[T] {
        self.0.knots()
    }

    pub fn values(&self) -> &[T] {
        self.0.values()
    }

    pub fn last_value(&self) -> T {
        self.0.last_value()
    }

    pub fn eval_sorted_grid(&self, grid: &[T]) -> Vec<T> {
        self.0.eval_sorted_grid(grid)
    }
}

/// Survival function: starts at one, values in [0, 1], non-increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SurvivalCurve<T>(StepFunction<T>);

impl<T: Float> SurvivalCurve<T> {
    pub fn new(step: StepFunction<T>) -> Result<Self> {
        let curve = Self(step);
        curve.validate()?;
        Ok(curve)
    }

    /// The identically-one survival curve.
    pub fn one() -> Self {
        Self(StepFunction::constant(T::one()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.pre_value != T::one() {
            return Err(Error::InvalidInput("survival curve must start at 1".into()));
        }
        let mut prev = T::one();
        for &v in self.0.values() {
            if !(v <= prev) {
                return Err(Error::InvalidInput("survival curve must be non-increasing".into()));
            }
            if v < T::zero() || v > T::one() {
                return Err(Error::InvalidInput("survival value outside [0, 1]".into()));
            }
            prev = v;
        }
        Ok(())
    }

    pub fn step(&self) -> &StepFunction<T> {
        &self.0
    }

    pub fn eval(&self, t: T) -> T {
        self.0.eval(t)
    }

    pub fn knots(&self) -> &[T] {
        self.0.knots()
    }

    pub fn values(&self) -> &[T] {
        self.0.values()
    }

    pub fn eval_sorted_grid(&self, grid: &[T]) -> Vec<T> {
        self.0.eval_sorted_grid(grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_is_right_continuous() {
        let f = StepFunction::new(vec![1.0, 2.0, 4.0], vec![0.25, 0.5, 1.5], 0.0).unwrap();
        assert_eq!(f.eval(0.0), 0.0);
        assert_eq!(f.eval(0.999), 0.0);
        assert_eq!(f.eval(1.0), 0.25);
        assert_eq!(f.eval(1.5), 0.25);
        assert_eq!(f.eval(2.0), 0.5);
        assert_eq!(f.eval(4.0), 1.5);
        assert_eq!(f.eval(100.0), 1.5);
    }

    #[test]
    fn grid_eval_matches_pointwise() {
        let f = StepFunction::new(vec![1.0, 2.0, 4.0], vec![0.25, 0.5, 1.5], 0.0).unwrap();
        let grid = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0];
        let fast = f.eval_sorted_grid(&grid);
        let slow: Vec<f64> = grid.iter().map(|&t| f.eval(t)).collect();
        assert_eq!(fast, slow);
    }

    #[test]
    fn rejects_unsorted_knots() {
        assert!(StepFunction::new(vec![2.0, 1.0], vec![0.1, 0.2], 0.0).is_err());
        assert!(StepFunction::new(vec![1.0, 1.0], vec![0.1, 0.2], 0.0).is_err());
    }

    #[test]
    fn hazard_invariants_enforced() {
        let dec = StepFunction::new(vec![1.0, 2.0], vec![0.5, 0.25], 0.0).unwrap();
        assert!(HazardCurve::new(dec).is_err());
        let bad_pre = StepFunction::new(vec![1.0], vec![0.5], 0.1).unwrap();
        assert!(HazardCurve::new(bad_pre).is_err());
        assert_eq!(HazardCurve::<f64>::zero().eval(3.0), 0.0);
    }

    #[test]
    fn survival_invariants_enforced() {
        let inc = StepFunction::new(vec![1.0, 2.0], vec![0.5, 0.75], 1.0).unwrap();
        assert!(SurvivalCurve::new(inc).is_err());
        let oob = StepFunction::new(vec![1.0], vec![1.5], 1.0).unwrap();
        assert!(SurvivalCurve::new(oob).is_err());
        assert_eq!(SurvivalCurve::<f64>::one().eval(7.0), 1.0);
    }

    #[test]
    fn generic_over_f32() {
        let f = StepFunction::<f32>::new(vec![1.0, 2.0], vec![0.5, 1.0], 0.0).unwrap();
        assert_eq!(f.eval(1.5f32), 0.5f32);
        let h = HazardCurve::<f32>::new(f).unwrap();
        assert_eq!(h.last_value(), 1.0f32);
    }
}
