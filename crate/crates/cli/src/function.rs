//! Function selection and single-point evaluation.

use bizeta_core::bilateral::{h_r, h_sderiv, k_r, k_sderiv, multiple_hurwitz, xi};
use bizeta_core::combinatorics::multiple_bernoulli_poly;
use bizeta_core::complex::{arg, ComplexValue};
use bizeta_core::sine::{
    log_classical_primitive_sine, log_gen_normalized_sine, log_gen_primitive_sine,
    log_kurokawa_normalized_sine,
};
use bizeta_core::special::{complex_gamma, hurwitz_zeta, polylog, riemann_zeta};
use bizeta_core::EvalParams;
use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionId {
    /// ξ(s, z)
    #[value(name = "xi")]
    Xi,
    /// H_r(s, z)
    #[value(name = "H")]
    H,
    /// K_r(s, z)
    #[value(name = "K")]
    K,
    /// ∂H_r/∂s at s = 1-n
    #[value(name = "H_sderiv")]
    HSderiv,
    /// ∂K_r/∂s at s = 1-n
    #[value(name = "K_sderiv")]
    KSderiv,
    /// multiple Hurwitz ζ_r(s, z)
    #[value(name = "zeta_r")]
    ZetaR,
    /// generalized primitive sine 𝒮_{r,n}(z)
    #[value(name = "Sgen")]
    Sgen,
    /// generalized normalized sine 𝒮ᶜ_{r,n}(z)
    #[value(name = "Snorm")]
    Snorm,
    /// Kurokawa-Wakayama S_{r,n}(z)
    #[value(name = "S")]
    S,
    /// classical primitive sine 𝒮_r(z)
    #[value(name = "Sclassical")]
    Sclassical,
    /// multiple Bernoulli polynomial B_{r,n}(z)
    #[value(name = "bernoulli_multi")]
    BernoulliMulti,
    /// polylogarithm Li_s(z)
    #[value(name = "Li")]
    Li,
    /// Γ(s)
    #[value(name = "gamma")]
    Gamma,
    /// Hurwitz ζ(s, z)
    #[value(name = "hurwitz")]
    Hurwitz,
    /// Riemann ζ(s)
    #[value(name = "zeta")]
    Zeta,
}

impl FunctionId {
    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Xi => "xi",
            FunctionId::H => "H",
            FunctionId::K => "K",
            FunctionId::HSderiv => "H_sderiv",
            FunctionId::KSderiv => "K_sderiv",
            FunctionId::ZetaR => "zeta_r",
            FunctionId::Sgen => "Sgen",
            FunctionId::Snorm => "Snorm",
            FunctionId::S => "S",
            FunctionId::Sclassical => "Sclassical",
            FunctionId::BernoulliMulti => "bernoulli_multi",
            FunctionId::Li => "Li",
            FunctionId::Gamma => "gamma",
            FunctionId::Hurwitz => "hurwitz",
            FunctionId::Zeta => "zeta",
        }
    }

    pub fn needs_r(self) -> bool {
        matches!(
            self,
            FunctionId::H
                | FunctionId::K
                | FunctionId::HSderiv
                | FunctionId::KSderiv
                | FunctionId::ZetaR
                | FunctionId::Sgen
                | FunctionId::Snorm
                | FunctionId::S
                | FunctionId::Sclassical
                | FunctionId::BernoulliMulti
        )
    }

    pub fn needs_n(self) -> bool {
        matches!(
            self,
            FunctionId::HSderiv
                | FunctionId::KSderiv
                | FunctionId::Sgen
                | FunctionId::Snorm
                | FunctionId::S
                | FunctionId::BernoulliMulti
        )
    }

    pub fn needs_s(self) -> bool {
        matches!(
            self,
            FunctionId::Xi
                | FunctionId::H
                | FunctionId::K
                | FunctionId::ZetaR
                | FunctionId::Li
                | FunctionId::Gamma
                | FunctionId::Hurwitz
                | FunctionId::Zeta
        )
    }

    pub fn needs_z(self) -> bool {
        !matches!(self, FunctionId::Gamma | FunctionId::Zeta)
    }

    /// Sine functions, whose logarithm can be requested instead.
    pub fn is_sine(self) -> bool {
        matches!(
            self,
            FunctionId::Sgen | FunctionId::Snorm | FunctionId::S | FunctionId::Sclassical
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EvalRequest {
    pub function: FunctionId,
    pub r: Option<u32>,
    pub n: Option<u32>,
    pub s: Option<ComplexValue>,
    pub z: Option<ComplexValue>,
    /// Return the analytic logarithm of a sine function.
    pub log: bool,
    pub params: EvalParams,
}

impl EvalRequest {
    pub fn new(function: FunctionId) -> Self {
        EvalRequest {
            function,
            r: None,
            n: None,
            s: None,
            z: None,
            log: false,
            params: EvalParams::default(),
        }
    }

    /// Checks that every argument the function needs is present.
    pub fn validate(&self) -> Result<(), CliError> {
        let f = self.function;
        let missing = |what: &str| CliError::Usage(format!("--fn {} requires --{what}", f.name()));
        if f.needs_r() && self.r.is_none() {
            return Err(missing("r"));
        }
        if f.needs_n() && self.n.is_none() {
            return Err(missing("n"));
        }
        if f.needs_s() && self.s.is_none() {
            return Err(missing("s"));
        }
        if f.needs_z() && self.z.is_none() {
            return Err(missing("z"));
        }
        if self.log && !f.is_sine() {
            return Err(CliError::Usage(format!("--log only applies to sine functions, not {}", f.name())));
        }
        self.params.validate()?;
        Ok(())
    }

    pub fn with_z(mut self, z: ComplexValue) -> Self {
        self.z = Some(z);
        self
    }
}

pub fn evaluate(req: &EvalRequest) -> Result<ComplexValue, CliError> {
    req.validate()?;
    let p = req.params;
    let r = req.r.unwrap_or(1);
    let n = req.n.unwrap_or(1);
    let s = req.s.unwrap_or_default();
    let z = req.z.unwrap_or_default();
    let sine = |v: ComplexValue| if req.log { v } else { v.exp() };
    let v = match req.function {
        FunctionId::Xi => xi(p, s, z)?,
        FunctionId::H => h_r(p, r, s, z)?,
        FunctionId::K => k_r(p, r, s, z)?,
        FunctionId::HSderiv => h_sderiv(p, r, n, z)?,
        FunctionId::KSderiv => k_sderiv(p, r, n, z)?,
        FunctionId::ZetaR => multiple_hurwitz(p, r, s, z)?,
        FunctionId::Sgen => sine(log_gen_primitive_sine(p, r, n, z)?),
        FunctionId::Snorm => sine(log_gen_normalized_sine(p, r, n, z)?),
        FunctionId::S => sine(log_kurokawa_normalized_sine(p, r, n, z)?),
        FunctionId::Sclassical => sine(log_classical_primitive_sine(p, r, z)?),
        FunctionId::BernoulliMulti => multiple_bernoulli_poly(r, n).eval_complex(z),
        FunctionId::Li => polylog(p, s, z)?,
        FunctionId::Gamma => complex_gamma(s)?,
        FunctionId::Hurwitz => hurwitz_zeta(p, s, z)?,
        FunctionId::Zeta => riemann_zeta(p, s)?,
    };
    Ok(v)
}

/// `{re, im, abs, arg}` rendering of a value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalOutput {
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    pub arg: f64,
}

impl From<ComplexValue> for EvalOutput {
    fn from(v: ComplexValue) -> Self {
        EvalOutput {
            re: v.re,
            im: v.im,
            abs: v.norm(),
            arg: arg(v),
        }
    }
}
