//! Norm curves over geometric time ladders, rate fits, and the claim
//! verifiers built on them.

mod claims;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::profiles::{ProfileKind, RadialProfile};
use crate::quadrature::{composite_norm, gradient_jbeta_norm, plancherel_norm, NormResult, QuadratureSpec, Term, Weight};
use crate::symbols::{Multiplier, SymbolParams};

pub use claims::{verify, Check, CurveRecord, NamedFit, Relation, VerificationReport, VerifyConfig, CLAIMS};

/// Geometric sequence of times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeLadder {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
    values: Vec<f64>,
}

impl TimeLadder {
    pub fn new(t_min: f64, t_max: f64, points: usize) -> Result<Self> {
        if !(t_min >= 2.0 && t_max > t_min && t_max.is_finite()) {
            return Err(domain(format!(
                "ladder needs 2 <= t_min < t_max, got {t_min}..{t_max}"
            )));
        }
        if points < 8 {
            return Err(domain(format!("ladder needs at least 8 points, got {points}")));
        }
        let (lo, hi) = (t_min.ln(), t_max.ln());
        let step = (hi - lo) / (points - 1) as f64;
        let mut values: Vec<f64> = (0..points).map(|i| (lo + i as f64 * step).exp()).collect();
        values[0] = t_min;
        values[points - 1] = t_max;
        Ok(TimeLadder {
            t_min,
            t_max,
            points,
            values,
        })
    }

    /// `t_min:t_max:points`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(domain(format!("ladder must look like t_min:t_max:points, got '{s}'")));
        }
        let num = |x: &str| x.trim().parse::<f64>().map_err(|_| domain(format!("bad number '{x}' in ladder")));
        let points = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| domain(format!("bad point count '{}' in ladder", parts[2])))?;
        TimeLadder::new(num(parts[0])?, num(parts[1])?, points)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Ladder with `2 points - 1` points: every old point plus the
    /// geometric midpoints.
    pub fn doubled(&self) -> Result<Self> {
        TimeLadder::new(self.t_min, self.t_max, 2 * self.points - 1)
    }
}

/// Named norm quantities. Composite ones use the same datum `g` for both
/// initial displacement and initial velocity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    /// `‖D(t) g‖₂`.
    DNorm,
    /// `‖D(t)‖₂` in one dimension.
    DUnitNorm,
    K0ConvNorm,
    K1ConvNorm,
    GConvNorm,
    WConvNorm,
    /// `‖(K₁ - G)(t) * g‖₂`.
    K1MinusGNorm,
    /// `‖J^(β)(t)‖₂`.
    JBetaNorm,
    JBetaConvNorm,
    /// `‖J^(β)(t) * g - m_g J^(β)(t)‖₂`.
    JBetaDefectNorm,
    GradJBetaNorm,
    /// `‖u(t) - W(t)u₁‖₂` with `u₀ = u₁ = g`, assembled as
    /// `K₀ * u₀ + (K₁ - G) * u₁ + D u₁`.
    UMinusWNorm,
}

impl Quantity {
    pub const ALL: [Quantity; 12] = [
        Quantity::DNorm,
        Quantity::DUnitNorm,
        Quantity::K0ConvNorm,
        Quantity::K1ConvNorm,
        Quantity::GConvNorm,
        Quantity::WConvNorm,
        Quantity::K1MinusGNorm,
        Quantity::JBetaNorm,
        Quantity::JBetaConvNorm,
        Quantity::JBetaDefectNorm,
        Quantity::GradJBetaNorm,
        Quantity::UMinusWNorm,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Quantity::DNorm => "D_norm",
            Quantity::DUnitNorm => "D_unit_norm",
            Quantity::K0ConvNorm => "K0_conv_norm",
            Quantity::K1ConvNorm => "K1_conv_norm",
            Quantity::GConvNorm => "G_conv_norm",
            Quantity::WConvNorm => "W_conv_norm",
            Quantity::K1MinusGNorm => "K1_minus_G_norm",
            Quantity::JBetaNorm => "J_beta_norm",
            Quantity::JBetaConvNorm => "J_beta_conv_norm",
            Quantity::JBetaDefectNorm => "J_beta_defect_norm",
            Quantity::GradJBetaNorm => "grad_J_beta_norm",
            Quantity::UMinusWNorm => "u_minus_W_norm",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Quantity::ALL.into_iter().find(|q| q.id() == s)
    }

    /// The quantity `‖M(t) g‖₂` for a multiplier applied to the datum.
    pub fn for_multiplier(m: Multiplier) -> Self {
        match m {
            Multiplier::K0 => Quantity::K0ConvNorm,
            Multiplier::K1 => Quantity::K1ConvNorm,
            Multiplier::G => Quantity::GConvNorm,
            Multiplier::W => Quantity::WConvNorm,
            Multiplier::D => Quantity::DNorm,
            Multiplier::Jbeta => Quantity::JBetaConvNorm,
            Multiplier::K1MinusG => Quantity::K1MinusGNorm,
        }
    }

    pub fn evaluate(self, t: f64, p: &SymbolParams, g: &RadialProfile, spec: &QuadratureSpec) -> Result<NormResult> {
        let conv = |m| plancherel_norm(m, t, p, &Weight::Profile(*g), spec);
        match self {
            Quantity::DNorm => conv(Multiplier::D),
            Quantity::DUnitNorm => plancherel_norm(Multiplier::D, t, p, &Weight::Unit, spec),
            Quantity::K0ConvNorm => conv(Multiplier::K0),
            Quantity::K1ConvNorm => conv(Multiplier::K1),
            Quantity::GConvNorm => conv(Multiplier::G),
            Quantity::WConvNorm => conv(Multiplier::W),
            Quantity::K1MinusGNorm => conv(Multiplier::K1MinusG),
            Quantity::JBetaNorm => plancherel_norm(Multiplier::Jbeta, t, p, &Weight::Unit, spec),
            Quantity::JBetaConvNorm => conv(Multiplier::Jbeta),
            Quantity::JBetaDefectNorm => plancherel_norm(Multiplier::Jbeta, t, p, &Weight::MassDefect(*g), spec),
            Quantity::GradJBetaNorm => gradient_jbeta_norm(t, p, spec),
            Quantity::UMinusWNorm => {
                let w = Weight::Profile(*g);
                let terms = [
                    Term::new(Multiplier::K0, w),
                    Term::new(Multiplier::K1MinusG, w),
                    Term::new(Multiplier::D, w),
                ];
                composite_norm(&terms, t, p, spec)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub value: f64,
    pub error_estimate: f64,
}

/// Short description of the datum a curve was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub kind: ProfileKind,
    pub amplitude: f64,
    pub sigma: f64,
}

impl ProfileSpec {
    pub fn build(&self, n: usize) -> Result<RadialProfile> {
        RadialProfile::build(self.kind, self.amplitude, self.sigma, n)
    }

    pub fn of(g: &RadialProfile) -> Self {
        ProfileSpec {
            kind: g.kind,
            amplitude: g.amplitude,
            sigma: g.sigma,
        }
    }
}

impl Default for ProfileSpec {
    fn default() -> Self {
        ProfileSpec {
            kind: ProfileKind::Gaussian,
            amplitude: 1.0,
            sigma: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormCurve {
    pub quantity_id: String,
    pub params: SymbolParams,
    pub profile: ProfileSpec,
    pub samples: Vec<Sample>,
}

impl NormCurve {
    pub fn times(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.t).collect()
    }

    pub fn values(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.value).collect()
    }

    /// Curve built from raw `(t, value)` pairs, such as grid-path data.
    pub fn from_points(quantity_id: &str, params: SymbolParams, profile: ProfileSpec, points: &[(f64, f64)]) -> Self {
        NormCurve {
            quantity_id: quantity_id.to_string(),
            params,
            profile,
            samples: points
                .iter()
                .map(|&(t, value)| Sample {
                    t,
                    value,
                    error_estimate: 0.0,
                })
                .collect(),
        }
    }
}

/// One quadrature evaluation per ladder point, in parallel; the result is
/// in ladder order regardless of scheduling.
pub fn norm_curve(
    quantity: Quantity,
    params: &SymbolParams,
    profile: &RadialProfile,
    ladder: &TimeLadder,
    spec: &QuadratureSpec,
) -> Result<NormCurve> {
    params.validate()?;
    if profile.dim != params.dim {
        return Err(domain(format!(
            "profile is {}-dimensional but the curve is taken in dimension {}",
            profile.dim, params.dim
        )));
    }
    let samples = ladder
        .values()
        .par_iter()
        .map(|&t| {
            quantity.evaluate(t, params, profile, spec).map(|r| Sample {
                t,
                value: r.value,
                error_estimate: r.abs_error_estimate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NormCurve {
        quantity_id: quantity.id().to_string(),
        params: *params,
        profile: ProfileSpec::of(profile),
        samples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// `y = C t^α`.
    Power,
    /// `y² = a + b log t`.
    Sqrtlog,
    /// `sup y`, with the power-law trend alongside.
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateFit {
    pub model: FitModel,
    /// `α` (power, bounded) or `b` (sqrtlog).
    pub exponent_or_slope: f64,
    /// `C` (power), `a` (sqrtlog) or `sup y` (bounded).
    pub prefactor: f64,
    pub r_squared: f64,
    /// Standard error of the fitted slope.
    pub slope_std_error: f64,
    pub window: (f64, f64),
    pub samples: usize,
}

struct Ols {
    slope: f64,
    intercept: f64,
    r_squared: f64,
    slope_se: f64,
}

fn ols(x: &[f64], y: &[f64]) -> Ols {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxx += (a - mx) * (a - mx);
        sxy += (a - mx) * (b - my);
        syy += (b - my) * (b - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let e = b - (intercept + slope * a);
            e * e
        })
        .sum();
    let scale = y.iter().map(|v| v * v).sum::<f64>().max(f64::MIN_POSITIVE);
    let r_squared = if syy <= 1e-28 * scale {
        if ss_res <= 1e-28 * scale {
            1.0
        } else {
            0.0
        }
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    let dof = (x.len() as f64 - 2.0).max(1.0);
    Ols {
        slope,
        intercept,
        r_squared,
        slope_se: (ss_res / dof / sxx).sqrt(),
    }
}

fn windowed(curve: &NormCurve, window: (f64, f64)) -> Result<(Vec<f64>, Vec<f64>)> {
    let (lo, hi) = window;
    let slack = 1e-9;
    let pts: Vec<&Sample> = curve
        .samples
        .iter()
        .filter(|s| s.t >= lo * (1.0 - slack) && s.t <= hi * (1.0 + slack))
        .collect();
    if pts.len() < 6 {
        return Err(domain(format!(
            "fit window [{lo}, {hi}] holds {} samples of {}, need at least 6",
            pts.len(),
            curve.quantity_id
        )));
    }
    if let Some(bad) = pts.iter().find(|s| !(s.value > 0.0 && s.value.is_finite())) {
        return Err(domain(format!(
            "{} has a non-positive value {} at t = {}",
            curve.quantity_id, bad.value, bad.t
        )));
    }
    Ok((pts.iter().map(|s| s.t).collect(), pts.iter().map(|s| s.value).collect()))
}

/// Least squares of `log y` on `log t`.
pub fn fit_power(curve: &NormCurve, window: (f64, f64)) -> Result<RateFit> {
    let (t, y) = windowed(curve, window)?;
    let x: Vec<f64> = t.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let f = ols(&x, &ly);
    Ok(RateFit {
        model: FitModel::Power,
        exponent_or_slope: f.slope,
        prefactor: f.intercept.exp(),
        r_squared: f.r_squared,
        slope_std_error: f.slope_se,
        window,
        samples: t.len(),
    })
}

/// Least squares of `y²` on `log t`.
pub fn fit_sqrtlog(curve: &NormCurve, window: (f64, f64)) -> Result<RateFit> {
    let (t, y) = windowed(curve, window)?;
    let x: Vec<f64> = t.iter().map(|v| v.ln()).collect();
    let y2: Vec<f64> = y.iter().map(|v| v * v).collect();
    let f = ols(&x, &y2);
    Ok(RateFit {
        model: FitModel::Sqrtlog,
        exponent_or_slope: f.slope,
        prefactor: f.intercept,
        r_squared: f.r_squared,
        slope_std_error: f.slope_se,
        window,
        samples: t.len(),
    })
}

/// `sup y` over the window together with the fitted power-law trend.
pub fn fit_bounded(curve: &NormCurve, window: (f64, f64)) -> Result<RateFit> {
    let power = fit_power(curve, window)?;
    let (_, y) = windowed(curve, window)?;
    Ok(RateFit {
        model: FitModel::Bounded,
        prefactor: y.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        ..power
    })
}

/// Slope and intercept of `y²` on `log t` through a handful of points
/// (no minimum sample count).
pub(crate) fn sqrtlog_slope(points: &[(f64, f64)]) -> (f64, f64) {
    let x: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let y: Vec<f64> = points.iter().map(|p| p.1 * p.1).collect();
    let f = ols(&x, &y);
    (f.slope, f.intercept)
}
