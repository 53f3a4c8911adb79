//! Fourier-side symbols of the strongly damped wave equation
//! `u_tt - Δu - ν Δu_t = 0` and of the free wave equation.
//!
//! Every symbol is a real function of time `t` and radial wavenumber
//! `r = |ξ|`. The mode equation is `ü + ν r² u̇ + r² u = 0`, with roots
//! `λ± = -ν r²/2 ± sqrt(ν² r⁴/4 - r²)`. Instead of forming
//! `(e^{λ₊t} - e^{λ₋t}) / (λ₊ - λ₋)` directly, which is 0/0 at the double
//! root `r = 2/ν` and suffers complex cancellation below it, the solution
//! kernels are written through the entire functions
//! `cosh(t sqrt(s²))` and `sinh(t sqrt(s²)) / sqrt(s²)` of the discriminant.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// `|s² t²|` below which [`sinhc_pair`] switches to its Taylor series.
pub const TAYLOR_THRESHOLD: f64 = 1e-6;

/// Default relative threshold (in units of `r²`) under which
/// [`CharRoots::degenerate`] is set.
pub const DEGENERACY_THRESHOLD: f64 = 1e-10;

/// Physical and analytic parameters shared by every symbol evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymbolParams {
    /// Viscosity `ν > 0`.
    pub nu: f64,
    /// Space dimension, one of 1, 2, 3.
    pub dim: usize,
    /// Smoothing parameter `β > 0`, used only by the `J^(β)` symbol.
    pub beta: f64,
}

impl SymbolParams {
    pub fn new(nu: f64, dim: usize, beta: f64) -> Result<Self> {
        let p = SymbolParams { nu, dim, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.nu > 0.0 && self.nu.is_finite()) {
            return Err(domain(format!("viscosity must be positive, got {}", self.nu)));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(domain(format!("beta must be positive, got {}", self.beta)));
        }
        if !(1..=3).contains(&self.dim) {
            return Err(domain(format!("dimension must be 1, 2 or 3, got {}", self.dim)));
        }
        Ok(())
    }

    pub fn with_dim(self, dim: usize) -> Self {
        SymbolParams { dim, ..self }
    }

    pub fn with_nu(self, nu: f64) -> Self {
        SymbolParams { nu, ..self }
    }
}

/// The two characteristic roots of `λ² + ν r² λ + r² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoots {
    pub lambda_plus: Complex64,
    pub lambda_minus: Complex64,
    /// `ν² r⁴/4 - r²`.
    pub discriminant: f64,
    pub degenerate: bool,
}

/// Discriminant `ν²r⁴/4 - r²`, factored so that it vanishes exactly at
/// `r = 2/ν` and keeps relative accuracy near it.
#[inline]
pub(crate) fn discriminant(r: f64, nu: f64) -> f64 {
    let h = 0.5 * nu * r;
    r * r * (h - 1.0) * (h + 1.0)
}

fn check_nonneg(name: &str, v: f64) -> Result<()> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{name} must be a finite value >= 0, got {v}")))
    }
}

pub fn char_roots(r: f64, p: &SymbolParams) -> Result<CharRoots> {
    char_roots_with_threshold(r, p, DEGENERACY_THRESHOLD)
}

pub fn char_roots_with_threshold(r: f64, p: &SymbolParams, threshold: f64) -> Result<CharRoots> {
    check_nonneg("wavenumber", r)?;
    let a = 0.5 * p.nu * r * r;
    let disc = discriminant(r, p.nu);
    let degenerate = disc.abs() <= threshold * r * r;
    let (lp, lm) = if degenerate {
        (Complex64::new(-a, 0.0), Complex64::new(-a, 0.0))
    } else if disc > 0.0 {
        let b = disc.sqrt();
        // λ₊ = -(a - b) = -r²/(a + b) avoids cancellation when a ≫ r.
        (Complex64::new(-r * r / (a + b), 0.0), Complex64::new(-(a + b), 0.0))
    } else {
        let w = (-disc).sqrt();
        (Complex64::new(-a, w), Complex64::new(-a, -w))
    };
    Ok(CharRoots {
        lambda_plus: lp,
        lambda_minus: lm,
        discriminant: disc,
        degenerate,
    })
}

/// `(cosh(t√s2), sinh(t√s2)/√s2)`, continued analytically to
/// `(cos(t√-s2), sin(t√-s2)/√-s2)` for negative `s2`.
pub fn sinhc_pair(s2: f64, t: f64) -> Result<(f64, f64)> {
    check_nonneg("time", t)?;
    Ok(sinhc_pair_raw(s2, t))
}

#[inline]
pub(crate) fn sinhc_pair_raw(s2: f64, t: f64) -> (f64, f64) {
    let x = s2 * t * t;
    if x.abs() < TAYLOR_THRESHOLD {
        taylor_pair(x, t)
    } else if s2 > 0.0 {
        let b = s2.sqrt();
        ((b * t).cosh(), (b * t).sinh() / b)
    } else {
        let w = (-s2).sqrt();
        let (sn, cs) = (w * t).sin_cos();
        (cs, sn / w)
    }
}

#[inline]
fn taylor_pair(x: f64, t: f64) -> (f64, f64) {
    let c = 1.0 + x * (1.0 / 2.0 + x * (1.0 / 24.0 + x * (1.0 / 720.0 + x / 40320.0)));
    let s = t * (1.0 + x * (1.0 / 6.0 + x * (1.0 / 120.0 + x * (1.0 / 5040.0 + x / 362880.0))));
    (c, s)
}

/// `(e^{-at} c, e^{-at} s)` with `a = νr²/2` and `(c, s)` the sinhc pair of
/// the discriminant. In the overdamped range the exponentials are
/// recombined as `e^{λ₊t}(1 ± e^{-2bt})` so nothing overflows.
#[inline]
pub(crate) fn damped_pair(t: f64, r: f64, nu: f64) -> (f64, f64) {
    let a = 0.5 * nu * r * r;
    let s2 = discriminant(r, nu);
    let x = s2 * t * t;
    if x.abs() < TAYLOR_THRESHOLD {
        let e = (-a * t).exp();
        let (c, s) = taylor_pair(x, t);
        (e * c, e * s)
    } else if s2 > 0.0 {
        let b = s2.sqrt();
        let lp = -r * r / (a + b);
        let ep = (lp * t).exp();
        let em = (-2.0 * b * t).exp();
        (0.5 * ep * (1.0 + em), ep * (-(-2.0 * b * t).exp_m1()) / (2.0 * b))
    } else {
        let w = (-s2).sqrt();
        let e = (-a * t).exp();
        let (sn, cs) = (w * t).sin_cos();
        (e * cs, e * sn / w)
    }
}

#[inline]
pub(crate) fn k0_raw(t: f64, r: f64, nu: f64) -> f64 {
    let (ec, es) = damped_pair(t, r, nu);
    ec + 0.5 * nu * r * r * es
}

#[inline]
pub(crate) fn k1_raw(t: f64, r: f64, nu: f64) -> f64 {
    damped_pair(t, r, nu).1
}

#[inline]
pub(crate) fn omega_raw(t: f64, r: f64) -> f64 {
    sinhc_pair_raw(-r * r, t).1
}

#[inline]
pub(crate) fn g_raw(t: f64, r: f64, nu: f64) -> f64 {
    (-0.5 * nu * t * r * r).exp() * omega_raw(t, r)
}

#[inline]
pub(crate) fn d_raw(t: f64, r: f64, nu: f64) -> f64 {
    (-0.5 * nu * t * r * r).exp_m1() * omega_raw(t, r)
}

#[inline]
pub(crate) fn j_raw(t: f64, r: f64, nu: f64, beta: f64) -> f64 {
    (-beta * r * r).exp() * d_raw(t, r, nu)
}

fn check_tr(t: f64, r: f64) -> Result<()> {
    check_nonneg("time", t)?;
    check_nonneg("wavenumber", r)
}

/// Free-wave multiplier `sin(tr)/r`, equal to `t` at `r = 0`.
pub fn omega(t: f64, r: f64) -> Result<f64> {
    check_tr(t, r)?;
    Ok(omega_raw(t, r))
}

/// Fourier kernel multiplying the initial displacement.
pub fn k0_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(k0_raw(t, r, p.nu))
}

/// Fourier kernel multiplying the initial velocity.
pub fn k1_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(k1_raw(t, r, p.nu))
}

pub fn dt_k0_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(-r * r * k1_raw(t, r, p.nu))
}

pub fn dt_k1_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    let (ec, es) = damped_pair(t, r, p.nu);
    let k0 = ec + 0.5 * p.nu * r * r * es;
    Ok(k0 - p.nu * r * r * es)
}

/// Diffusion-wave symbol `e^{-νtr²/2} ω(t, r)`.
pub fn g_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(g_raw(t, r, p.nu))
}

/// Symbol of the difference operator, `(e^{-νtr²/2} - 1) ω(t, r)`.
pub fn d_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(d_raw(t, r, p.nu))
}

/// Gaussian-smoothed difference symbol `e^{-βr²} (e^{-νtr²/2} - 1) ω(t, r)`.
pub fn j_beta_hat(t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
    check_tr(t, r)?;
    Ok(j_raw(t, r, p.nu, p.beta))
}

/// The Fourier multipliers whose evolutions are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Multiplier {
    K0,
    K1,
    /// Diffusion wave.
    G,
    /// Free wave `ω`.
    W,
    /// Difference `G - W`.
    D,
    Jbeta,
    K1MinusG,
}

impl Multiplier {
    pub const ALL: [Multiplier; 7] = [
        Multiplier::K0,
        Multiplier::K1,
        Multiplier::G,
        Multiplier::W,
        Multiplier::D,
        Multiplier::Jbeta,
        Multiplier::K1MinusG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Multiplier::K0 => "K0",
            Multiplier::K1 => "K1",
            Multiplier::G => "G",
            Multiplier::W => "W",
            Multiplier::D => "D",
            Multiplier::Jbeta => "Jbeta",
            Multiplier::K1MinusG => "K1_minus_G",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Multiplier::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(s))
    }

    /// Symbol value at `(t, r)`.
    pub fn eval(self, t: f64, r: f64, p: &SymbolParams) -> Result<f64> {
        check_tr(t, r)?;
        Ok(self.eval_raw(t, r, p))
    }

    #[inline]
    pub(crate) fn eval_raw(self, t: f64, r: f64, p: &SymbolParams) -> f64 {
        match self {
            Multiplier::K0 => k0_raw(t, r, p.nu),
            Multiplier::K1 => k1_raw(t, r, p.nu),
            Multiplier::G => g_raw(t, r, p.nu),
            Multiplier::W => omega_raw(t, r),
            Multiplier::D => d_raw(t, r, p.nu),
            Multiplier::Jbeta => j_raw(t, r, p.nu, p.beta),
            Multiplier::K1MinusG => k1_raw(t, r, p.nu) - g_raw(t, r, p.nu),
        }
    }
}

/// The sharp low-dimensional rate: `√t`, `√(log t)`, `t^{-(n-2)/4}`.
pub fn dn_rate(n: usize, t: f64) -> Result<f64> {
    if !(t >= 2.0 && t.is_finite()) {
        return Err(domain(format!("rate needs t >= 2, got {t}")));
    }
    match n {
        1 => Ok(t.sqrt()),
        2 => Ok(t.ln().sqrt()),
        3 => Ok(t.powf(-(n as f64 - 2.0) / 4.0)),
        _ => Err(domain(format!("dimension must be 1, 2 or 3, got {n}"))),
    }
}
