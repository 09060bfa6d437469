//! Per-identity report records and the pass/fail rule.

use bizeta_core::ComplexValue;
use serde::Serialize;

/// Magnitude above which the relative fallback applies.
pub const REL_FALLBACK_ABOVE: f64 = 1e3;
pub const REL_FALLBACK_TOL: f64 = 1e-8;

/// The inputs of one sample. Unused fields stay `None` and are omitted
/// from the JSON.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Extra integer: shift `l`, multiplier `N`, degree `k`, truncation, ...
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aux: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    /// Exact rational argument `[numerator, denominator]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<[f64; 2]>,
}

impl Inputs {
    pub fn r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }
    pub fn n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }
    pub fn aux(mut self, a: u32) -> Self {
        self.aux = Some(a);
        self
    }
    pub fn m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }
    pub fn q(mut self, num: i64, den: i64) -> Self {
        self.q = Some([num, den]);
        self
    }
    pub fn s(mut self, s: ComplexValue) -> Self {
        self.s = Some([s.re, s.im]);
        self
    }
    pub fn z(mut self, z: ComplexValue) -> Self {
        self.z = Some([z.re, z.im]);
        self
    }

    pub fn get_r(&self) -> u32 {
        self.r.unwrap_or(1)
    }
    pub fn get_n(&self) -> u32 {
        self.n.unwrap_or(1)
    }
    pub fn get_aux(&self) -> u32 {
        self.aux.unwrap_or(0)
    }
    pub fn get_m(&self) -> i64 {
        self.m.unwrap_or(0)
    }
    pub fn get_s(&self) -> ComplexValue {
        self.s.map_or(ComplexValue::new(0.0, 0.0), |[a, b]| ComplexValue::new(a, b))
    }
    pub fn get_z(&self) -> ComplexValue {
        self.z.map_or(ComplexValue::new(0.0, 0.0), |[a, b]| ComplexValue::new(a, b))
    }

    /// Sort key. Floats are keyed by an order-preserving map of their bits,
    /// so the ordering is total and numeric.
    #[allow(clippy::type_complexity)]
    pub fn key(&self) -> (Option<u32>, Option<u32>, Option<u32>, Option<i64>, Option<[i64; 2]>, [u64; 4]) {
        fn ord(x: f64) -> u64 {
            let b = x.to_bits();
            if b >> 63 == 1 {
                !b
            } else {
                b | (1 << 63)
            }
        }
        let s = self.s.unwrap_or([0.0; 2]);
        let z = self.z.unwrap_or([0.0; 2]);
        (self.r, self.n, self.aux, self.m, self.q, [ord(s[0]), ord(s[1]), ord(z[0]), ord(z[1])])
    }
}

/// Both sides of an identity at one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    /// Known bound on the error of one side (brute-force tails); only the
    /// excess over it counts as discrepancy.
    pub tail_bound: Option<f64>,
    /// Exact comparison result for identities checked in rational arithmetic.
    pub exact: Option<bool>,
}

impl Outcome {
    pub fn new(lhs: ComplexValue, rhs: ComplexValue) -> Self {
        Outcome {
            lhs,
            rhs,
            tail_bound: None,
            exact: None,
        }
    }

    pub fn with_tail(mut self, tail: f64) -> Self {
        self.tail_bound = Some(tail);
        self
    }

    pub fn exact(lhs: ComplexValue, rhs: ComplexValue, equal: bool) -> Self {
        Outcome {
            lhs,
            rhs,
            tail_bound: None,
            exact: Some(equal),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRecord {
    pub inputs: Inputs,
    pub lhs: Option<[f64; 2]>,
    pub rhs: Option<[f64; 2]>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub passed: bool,
}

impl SampleRecord {
    pub fn from_outcome(inputs: Inputs, o: Outcome, tol: f64) -> Self {
        let diff = (o.lhs - o.rhs).norm();
        let mut abs_err = match o.tail_bound {
            Some(t) => (diff - t).max(0.0),
            None => diff,
        };
        if o.exact == Some(false) && abs_err == 0.0 {
            // a mismatch that rounds away in f64 still has to fail at tol 0
            abs_err = f64::MIN_POSITIVE;
        }
        if o.exact == Some(true) {
            abs_err = 0.0;
        }
        let scale = o.lhs.norm().max(o.rhs.norm());
        let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
        let finite = abs_err.is_finite();
        let passed = finite
            && (abs_err <= tol || (o.exact.is_none() && scale > REL_FALLBACK_ABOVE && rel_err <= REL_FALLBACK_TOL));
        SampleRecord {
            inputs,
            lhs: Some([o.lhs.re, o.lhs.im]),
            rhs: Some([o.rhs.re, o.rhs.im]),
            abs_err: finite.then_some(abs_err),
            rel_err: finite.then_some(rel_err),
            tail_bound: o.tail_bound,
            exact: o.exact,
            error: (!finite).then(|| "non-finite discrepancy".to_string()),
            passed,
        }
    }

    pub fn from_error(inputs: Inputs, err: String) -> Self {
        SampleRecord {
            inputs,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            tail_bound: None,
            exact: None,
            error: Some(err),
            passed: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheckReport {
    pub identity_id: String,
    pub suite: String,
    pub description: String,
    pub tol: f64,
    pub seed: u64,
    pub passed: bool,
    /// `None` when some sample failed to evaluate.
    pub max_abs_err: Option<f64>,
    pub mean_abs_err: Option<f64>,
    pub max_rel_err: Option<f64>,
    pub mean_rel_err: Option<f64>,
    pub sample_count: usize,
    pub failed_samples: usize,
    pub samples: Vec<SampleRecord>,
}

impl IdentityCheckReport {
    pub fn new(identity_id: &str, suite: &str, description: &str, tol: f64, seed: u64, samples: Vec<SampleRecord>) -> Self {
        let failed_samples = samples.iter().filter(|s| !s.passed).count();
        let errs: Option<Vec<(f64, f64)>> = samples.iter().map(|s| Some((s.abs_err?, s.rel_err?))).collect();
        let (max_abs_err, mean_abs_err, max_rel_err, mean_rel_err) = match errs {
            Some(e) if !e.is_empty() => {
                let n = e.len() as f64;
                (
                    Some(e.iter().map(|x| x.0).fold(0.0, f64::max)),
                    Some(e.iter().map(|x| x.0).sum::<f64>() / n),
                    Some(e.iter().map(|x| x.1).fold(0.0, f64::max)),
                    Some(e.iter().map(|x| x.1).sum::<f64>() / n),
                )
            }
            Some(_) => (Some(0.0), Some(0.0), Some(0.0), Some(0.0)),
            None => (None, None, None, None),
        };
        IdentityCheckReport {
            identity_id: identity_id.to_string(),
            suite: suite.to_string(),
            description: description.to_string(),
            tol,
            seed,
            passed: failed_samples == 0,
            max_abs_err,
            mean_abs_err,
            max_rel_err,
            mean_rel_err,
            sample_count: samples.len(),
            failed_samples,
            samples,
        }
    }

    /// One-line human summary.
    pub fn pretty(&self) -> String {
        let err = self.max_abs_err.map_or("error".to_string(), |e| format!("{e:.3e}"));
        format!(
            "{} {:<40} samples={:<4} max_abs_err={:<10} tol={:.0e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity_id,
            self.sample_count,
            err,
            self.tol
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: f64, b: f64) -> ComplexValue {
        ComplexValue::new(a, b)
    }

    #[test]
    fn pass_rule() {
        let s = SampleRecord::from_outcome(Inputs::default(), Outcome::new(c(1.0, 0.0), c(1.0, 1e-10)), 1e-9);
        assert!(s.passed);
        let s = SampleRecord::from_outcome(Inputs::default(), Outcome::new(c(1.0, 0.0), c(1.0, 1e-8)), 1e-9);
        assert!(!s.passed);
        // relative fallback above 1e3
        let s = SampleRecord::from_outcome(Inputs::default(), Outcome::new(c(1e5, 0.0), c(1e5 + 1e-4, 0.0)), 1e-9);
        assert!(s.passed);
        // tail bound absorbs the discrepancy
        let s = SampleRecord::from_outcome(Inputs::default(), Outcome::new(c(1.0, 0.0), c(1.1, 0.0)).with_tail(0.2), 0.0);
        assert_eq!(s.abs_err, Some(0.0));
        assert!(s.passed);
        let s = SampleRecord::from_outcome(Inputs::default(), Outcome::exact(c(1.0, 0.0), c(1.0, 0.0), false), 0.0);
        assert!(!s.passed);
    }

    #[test]
    fn report_aggregates() {
        let a = SampleRecord::from_outcome(Inputs::default(), Outcome::new(c(0.0, 0.0), c(2e-10, 0.0)), 1e-9);
        let b = SampleRecord::from_error(Inputs::default(), "boom".into());
        let r = IdentityCheckReport::new("x", "y", "", 1e-9, 1, vec![a.clone()]);
        assert!(r.passed);
        assert_eq!(r.max_abs_err, Some(2e-10));
        let r = IdentityCheckReport::new("x", "y", "", 1e-9, 1, vec![a, b]);
        assert!(!r.passed);
        assert_eq!(r.max_abs_err, None);
        assert_eq!(r.failed_samples, 1);
    }

    #[test]
    fn key_orders_numerically() {
        let a = Inputs::default().z(c(-1.0, 0.0)).key();
        let b = Inputs::default().z(c(-0.5, 0.0)).key();
        let d = Inputs::default().z(c(0.25, 0.0)).key();
        assert!(a < b && b < d);
    }
}
