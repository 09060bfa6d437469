//! Registry of numerically checked identities behind `bizeta check`.
//!
//! Every identity draws its own samples from a ChaCha stream seeded with
//! `seed ^ fnv1a(id)`, so adding or reordering identities never changes the
//! samples of another one. Samples run in parallel and are sorted by input
//! key before the report is built.

mod bilateral;
mod comb;
mod oracle;
mod sine;
mod special;

use bizeta_core::complex::c;
use bizeta_core::{ComplexValue, EvalParams};
use clap::ValueEnum;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{IdentityCheckReport, Inputs, Outcome, SampleRecord};

pub type EvalResult = Result<Outcome, bizeta_core::Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Combinatorics,
    Special,
    Bilateral,
    Sine,
    Oracle,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Combinatorics => "combinatorics",
            Suite::Special => "special",
            Suite::Bilateral => "bilateral",
            Suite::Sine => "sine",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }

    fn contains(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Deliberate harness faults, used to prove a check can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Injection {
    /// Flip the sign of the mirrored `ζ_r(s, r-z)` term in the `ζ_r` form of `K_r`.
    #[value(name = "eq16", alias = "k-mirror")]
    KMirrorSign,
}

/// Caps on the integer parameters drawn by the samplers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    pub r_max: Option<u32>,
    pub n_max: Option<u32>,
}

impl Limits {
    pub fn r_hi(&self, hi: u32) -> u32 {
        self.r_max.map_or(hi, |m| hi.min(m))
    }

    pub fn n_hi(&self, hi: u32) -> u32 {
        self.n_max.map_or(hi, |m| hi.min(m))
    }

    /// Draws `r` in `lo..=hi`, capped by `--r-max` but never below `lo`.
    pub fn r(&self, rng: &mut ChaCha8Rng, lo: u32, hi: u32) -> u32 {
        rng.random_range(lo..=self.r_hi(hi).max(lo))
    }

    pub fn n(&self, rng: &mut ChaCha8Rng, lo: u32, hi: u32) -> u32 {
        rng.random_range(lo..=self.n_hi(hi).max(lo))
    }
}

/// Shared evaluation context.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub params: EvalParams,
    pub injection: Option<Injection>,
}

pub type DrawFn = fn(&mut ChaCha8Rng, &Limits, usize) -> Inputs;
pub type EvalFn = fn(&Ctx, &Inputs) -> EvalResult;

pub struct Identity {
    pub id: &'static str,
    pub suite: Suite,
    pub description: &'static str,
    pub tol: f64,
    pub default_samples: usize,
    pub draw: DrawFn,
    pub eval: EvalFn,
}

/// All identities in listing order.
pub fn registry() -> Vec<Identity> {
    let mut v = Vec::new();
    v.extend(comb::identities());
    v.extend(special::identities());
    v.extend(bilateral::identities());
    v.extend(sine::identities());
    v.extend(oracle::identities());
    v
}

pub fn identities_in(suite: Suite) -> Vec<Identity> {
    registry().into_iter().filter(|i| suite.contains(i.suite)).collect()
}

pub fn find(id: &str) -> Option<Identity> {
    registry().into_iter().find(|i| i.id == id)
}

/// 64-bit FNV-1a.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub seed: u64,
    pub samples: Option<usize>,
    pub limits: Limits,
    pub tol: Option<f64>,
    pub ctx: Ctx,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 42,
            samples: None,
            limits: Limits::default(),
            tol: None,
            ctx: Ctx {
                params: EvalParams::default(),
                injection: None,
            },
        }
    }
}

pub fn run_identity(identity: &Identity, opts: &RunOptions) -> IdentityCheckReport {
    let count = opts.samples.unwrap_or(identity.default_samples).max(1);
    let seed = opts.seed ^ fnv1a(identity.id);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<Inputs> = (0..count).map(|i| (identity.draw)(&mut rng, &opts.limits, i)).collect();
    let tol = opts.tol.unwrap_or(identity.tol);
    let eval = identity.eval;
    let ctx = opts.ctx;
    let mut records: Vec<SampleRecord> = inputs
        .par_iter()
        .map(|inp| match eval(&ctx, inp) {
            Ok(o) => SampleRecord::from_outcome(*inp, o, tol),
            Err(e) => SampleRecord::from_error(*inp, e.to_string()),
        })
        .collect();
    records.sort_by(|a, b| a.inputs.key().cmp(&b.inputs.key()));
    IdentityCheckReport::new(identity.id, identity.suite.name(), identity.description, tol, opts.seed, records)
}

pub fn run_suite(suite: Suite, opts: &RunOptions) -> Vec<IdentityCheckReport> {
    identities_in(suite).iter().map(|i| run_identity(i, opts)).collect()
}

// Sampling helpers shared by the suites.

pub(crate) fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

pub(crate) fn cpx(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> ComplexValue {
    let x = uniform(rng, re.0, re.1);
    let y = uniform(rng, im.0, im.1);
    c(x, y)
}

/// A point in the upper half plane away from the real axis.
pub(crate) fn upper(rng: &mut ChaCha8Rng) -> ComplexValue {
    cpx(rng, (-0.9, 1.9), (0.05, 1.0))
}

/// A generic `s`.
pub(crate) fn s_any(rng: &mut ChaCha8Rng) -> ComplexValue {
    cpx(rng, (-4.0, 5.0), (-2.0, 2.0))
}

/// `(a, b)` scaled by `1/max(1, |b|)`, so a tolerance reads as relative for
/// large values and absolute for small ones.
/// `f'(z)` by the trapezoidal rule on `|w - z| = rho` with `m` nodes; the
/// error decays like `(rho / R)^m` for `f` analytic on a disc of radius `R`.
pub(crate) fn contour_deriv(
    z: ComplexValue,
    rho: f64,
    m: usize,
    f: impl Fn(ComplexValue) -> bizeta_core::Result<ComplexValue>,
) -> bizeta_core::Result<ComplexValue> {
    let mut acc = ComplexValue::new(0.0, 0.0);
    for j in 0..m {
        let w = ComplexValue::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64);
        acc += f(z + rho * w)? / w;
    }
    Ok(acc / (rho * m as f64))
}

pub(crate) fn scaled(a: ComplexValue, b: ComplexValue) -> Outcome {
    let k = b.norm().max(1.0);
    Outcome::new(a / k, b / k)
}
