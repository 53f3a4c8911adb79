//! Radial Plancherel integrals
//! `‖M(t)g‖₂² = (2π)^{-n} σ_{n-1} ∫₀^∞ M(t, r)² ĝ(r)² r^{n-1} dr`
//! at cost independent of `t`.
//!
//! The integrand is split as `A + B cos(2tr) + C sin(2tr)` (see
//! [`split`]); `A` is integrated by Gauss–Legendre and the two oscillatory
//! parts by Filon panels. Integration stops at the first panel edge where
//! an analytic envelope bound on the remaining tail drops below
//! `10^{-digits}` of the accumulated value.
//!
//! [`OscillationMode::Brute`] evaluates the symbols directly on panels no
//! wider than `π/(4t)`. It shares nothing with the Filon path except the
//! outer panel layout and the stopping rule, and is the oracle for it.

mod filon;
mod split;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::gauss::GaussLegendre;
use crate::profiles::{sphere_area, Envelope, RadialProfile};
use crate::sum::NeumaierSum;
use crate::symbols::{Multiplier, SymbolParams};

use filon::{sin_cos_product, FilonRule};
use split::{is_damped_kernel, log_kernel_bound, multiplier_envelope, shift_rate, split_limit, NEGLIGIBLE_LOG};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OscillationMode {
    Filon,
    Brute,
}

impl OscillationMode {
    pub fn name(self) -> &'static str {
        match self {
            OscillationMode::Filon => "filon",
            OscillationMode::Brute => "brute",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "filon" => Some(OscillationMode::Filon),
            "brute" => Some(OscillationMode::Brute),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Gauss–Legendre nodes per panel.
    pub panel_order: usize,
    /// Panel width cap as a fraction of the smallest feature scale of the
    /// smooth factor (Gaussian widths of weight and smoothing, and the
    /// diffusive length `1/sqrt(νt)`).
    pub smooth_panel_width: f64,
    pub tail_cutoff_digits: u32,
    pub mode: OscillationMode,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            panel_order: 16,
            smooth_panel_width: 0.05,
            tail_cutoff_digits: 12,
            mode: OscillationMode::Filon,
        }
    }
}

impl QuadratureSpec {
    pub fn brute() -> Self {
        QuadratureSpec {
            mode: OscillationMode::Brute,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(4..=64).contains(&self.panel_order) {
            return Err(Error::Config(format!(
                "panel order must lie in 4..=64, got {}",
                self.panel_order
            )));
        }
        if !(self.smooth_panel_width > 0.0 && self.smooth_panel_width <= 1.0) {
            return Err(Error::Config(format!(
                "smooth panel width must lie in (0, 1], got {}",
                self.smooth_panel_width
            )));
        }
        if !(1..=15).contains(&self.tail_cutoff_digits) {
            return Err(Error::Config(format!(
                "tail cutoff digits must lie in 1..=15, got {}",
                self.tail_cutoff_digits
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormResult {
    /// The L² norm itself, not its square.
    pub value: f64,
    pub abs_error_estimate: f64,
    pub panels_used: usize,
}

/// Radial factor multiplying the symbol inside the norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Weight {
    /// `w = 1`: the norm of the kernel itself.
    Unit,
    /// `w = ĝ`: the norm of `M(t) g`.
    Profile(RadialProfile),
    /// `w = ĝ - m_g`: the norm of `M(t) g - m_g M(t)`.
    MassDefect(RadialProfile),
}

impl Weight {
    #[inline]
    fn eval(&self, r: f64) -> f64 {
        match self {
            Weight::Unit => 1.0,
            Weight::Profile(g) => g.fourier(r),
            Weight::MassDefect(g) => g.fourier_minus_mass(r),
        }
    }

    fn envelope(&self) -> Envelope {
        match self {
            Weight::Unit => Envelope::UNIT,
            Weight::Profile(g) => g.fourier_envelope(),
            Weight::MassDefect(g) => g.defect_envelope(),
        }
    }

    fn profile(&self) -> Option<&RadialProfile> {
        match self {
            Weight::Unit => None,
            Weight::Profile(g) | Weight::MassDefect(g) => Some(g),
        }
    }
}

/// One summand `M(t) w` of a composite multiplier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub multiplier: Multiplier,
    pub weight: Weight,
}

impl Term {
    pub fn new(multiplier: Multiplier, weight: Weight) -> Self {
        Term { multiplier, weight }
    }
}

fn check_terms(terms: &[Term], p: &SymbolParams) -> Result<()> {
    if terms.is_empty() {
        return Err(domain("at least one term is required"));
    }
    for term in terms {
        match term.weight {
            Weight::Unit => {
                let ok = term.multiplier == Multiplier::Jbeta || (term.multiplier == Multiplier::D && p.dim == 1);
                if !ok {
                    return Err(domain(format!(
                        "the {} symbol is not square integrable in dimension {}; a profile weight is required",
                        term.multiplier.name(),
                        p.dim
                    )));
                }
            }
            Weight::Profile(g) | Weight::MassDefect(g) => {
                if g.dim != p.dim {
                    return Err(domain(format!(
                        "profile is {}-dimensional but the norm is taken in dimension {}",
                        g.dim, p.dim
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("time must be finite and >= 0, got {t}")))
    }
}

/// `∫_R^∞ c r^p e^{-s r²} dr`, or an upper bound for it.
fn envelope_tail(e: Envelope, r: f64) -> Result<f64> {
    if e.c == 0.0 {
        return Ok(0.0);
    }
    let p = e.p;
    if e.s == 0.0 {
        if p >= -1 {
            return Err(Error::Config(format!(
                "tail envelope r^{p} is not integrable at infinity"
            )));
        }
        if r == 0.0 {
            return Ok(f64::INFINITY);
        }
        return Ok(e.c * r.powi(p + 1) / (-p - 1) as f64);
    }
    let s = e.s;
    let g = (-s * r * r).exp();
    let t0 = || {
        let full = 0.5 * (PI / s).sqrt();
        if r > 0.0 {
            full.min(g / (2.0 * s * r))
        } else {
            full
        }
    };
    let t1 = g / (2.0 * s);
    let bound = match p {
        0 => t0(),
        1 => t1,
        _ if p < 0 => {
            if r == 0.0 {
                return Ok(f64::INFINITY);
            }
            let gaussian = r.powi(p - 1) * t1;
            if p < -1 {
                gaussian.min(r.powi(p + 1) / (-p - 1) as f64)
            } else {
                gaussian
            }
        }
        _ => {
            let mut k = if p % 2 == 0 { 0 } else { 1 };
            let mut acc = if k == 0 { t0() } else { t1 };
            while k < p {
                k += 2;
                acc = r.powi(k - 1) * g / (2.0 * s) + (k - 1) as f64 / (2.0 * s) * acc;
            }
            acc
        }
    };
    Ok(e.c * bound)
}

/// Multiplier giving `‖·‖₂²` from the raw radial integral.
fn convention_factor(n: usize) -> f64 {
    sphere_area(n) / (2.0 * PI).powi(n as i32)
}

/// Upper bound for `(2π)^{-n} σ_{n-1} ∫_{r_start}^∞ M(t, r)² w(r)² r^{n-1} dr`.
pub fn tail_bound(m: Multiplier, weight: &Weight, n: usize, r_start: f64, t: f64, p: &SymbolParams) -> Result<f64> {
    if !(r_start >= 0.0) {
        return Err(domain(format!("tail start must be >= 0, got {r_start}")));
    }
    check_time(t)?;
    let radial = Envelope {
        c: 1.0,
        p: n as i32 - 1,
        s: 0.0,
    };
    let e = multiplier_envelope(m, t, p).times(weight.envelope()).times(radial);
    Ok(convention_factor(n) * envelope_tail(e, r_start)?)
}

/// Raw radial integral with its error estimate.
#[derive(Debug, Clone, Copy)]
struct RawIntegral {
    value: f64,
    error: f64,
    panels: usize,
}

const MAX_PANELS: usize = 200_000;
const MAX_BRUTE_SUBPANELS: usize = 400_000_000;
/// Filon panels with `t (b - a)` below this are integrated directly.
const DIRECT_THETA: f64 = 4.0;
/// Largest phase change of `tδ` across one panel.
const MAX_SHIFT_PHASE: f64 = 1.5;

struct Engine<'a> {
    terms: &'a [Term],
    t: f64,
    p: &'a SymbolParams,
    /// Power of `r` in the radial measure.
    power: i32,
    spec: &'a QuadratureSpec,
    rule: FilonRule,
    coarse: GaussLegendre,
    has_kernels: bool,
    damped: bool,
    /// Diffusive length `1/sqrt(νt)`.
    ell: f64,
    damp_window: f64,
    /// Smallest time-independent feature scale.
    feature: f64,
    r_split: f64,
    envelopes: Vec<Envelope>,
    brute_subpanels: std::cell::Cell<usize>,
}

impl<'a> Engine<'a> {
    fn new(terms: &'a [Term], t: f64, p: &'a SymbolParams, power: i32, spec: &'a QuadratureSpec) -> Self {
        let has_kernels = terms.iter().any(|x| is_damped_kernel(x.multiplier));
        let damped = terms.iter().any(|x| x.multiplier != Multiplier::W);
        let ell = if t > 0.0 { 1.0 / (p.nu * t).sqrt() } else { f64::INFINITY };
        let mut feature = f64::INFINITY;
        for term in terms {
            if let Some(g) = term.weight.profile() {
                feature = feature.min(g.fourier_scale());
            }
            if term.multiplier == Multiplier::Jbeta {
                feature = feature.min(1.0 / p.beta.sqrt());
            }
        }
        if has_kernels {
            feature = feature.min(split_limit(p.nu));
        }
        let k = terms.len() as f64;
        let radial = Envelope { c: k, p: power, s: 0.0 };
        let envelopes = terms
            .iter()
            .map(|x| multiplier_envelope(x.multiplier, t, p).times(x.weight.envelope()).times(radial))
            .collect();
        Engine {
            terms,
            t,
            p,
            power,
            spec,
            rule: FilonRule::new(spec.panel_order),
            coarse: GaussLegendre::new((spec.panel_order / 2).max(2)),
            has_kernels,
            damped,
            ell,
            damp_window: 12.0 * 2f64.sqrt() * ell,
            feature,
            r_split: split_limit(p.nu),
            envelopes,
            brute_subpanels: std::cell::Cell::new(0),
        }
    }

    fn tail(&self, r: f64) -> Result<f64> {
        let mut s = 0.0;
        for e in &self.envelopes {
            s += envelope_tail(*e, r)?;
        }
        Ok(s)
    }

    fn kernels_live(&self, a: f64, b: f64) -> bool {
        self.has_kernels && log_kernel_bound(a, b, self.t, self.p.nu) >= NEGLIGIBLE_LOG
    }

    fn first_panel_end(&self) -> f64 {
        let mut scale = self.feature;
        if self.damped {
            scale = scale.min(self.ell);
        }
        let r0 = 0.25 * scale;
        if self.t > 0.0 {
            r0.min(2.0 / self.t)
        } else {
            r0
        }
    }

    fn next_width(&self, a: f64) -> f64 {
        let spw = self.spec.smooth_panel_width;
        let mut w = (0.5 * a).min(spw * self.feature);
        if self.damped && a < self.damp_window {
            w = w.min(spw * self.ell);
        }
        if self.has_kernels && a < self.r_split && self.kernels_live(a, a + w) {
            let rate = shift_rate((a + w).min(self.r_split), self.p.nu);
            if self.t * rate * w > MAX_SHIFT_PHASE {
                w = MAX_SHIFT_PHASE / (self.t * rate);
            }
        }
        w
    }

    #[inline]
    fn radial(&self, r: f64) -> f64 {
        r.powi(self.power)
    }

    /// Direct evaluation of the composite symbol, used by the oracle.
    #[inline]
    fn brute_integrand(&self, r: f64) -> f64 {
        let mut m = 0.0;
        for term in self.terms {
            m += term.multiplier.eval_raw(self.t, r, self.p) * term.weight.eval(r);
        }
        m * m * self.radial(r)
    }

    #[inline]
    fn split_pq(&self, r: f64, live: bool) -> (f64, f64) {
        let (mut pp, mut qq) = (0.0, 0.0);
        for term in self.terms {
            let w = term.weight.eval(r);
            let (a, b) = split::split(term.multiplier, self.t, r, self.p, live);
            pp += a * w;
            qq += b * w;
        }
        (pp, qq)
    }

    /// Filon (or, for short panels, direct) integral of the split form.
    /// Returns the value and a magnitude for the roundoff estimate.
    fn split_panel(&self, a: f64, b: f64, live: bool) -> (f64, f64) {
        let h = 0.5 * (b - a);
        let n = self.rule.order();
        if self.t * (b - a) <= DIRECT_THETA {
            let mut vals = Vec::with_capacity(n);
            for r in self.rule.nodes_on(a, b) {
                let (pp, qq) = self.split_pq(r, live);
                let (s, c) = sin_cos_product(self.t, r);
                let m = pp * s + qq * c;
                vals.push(m * m * self.radial(r));
            }
            let v = self.rule.gauss_sum(&vals, h);
            return (v, v.abs());
        }
        let mut av = Vec::with_capacity(n);
        let mut bv = Vec::with_capacity(n);
        let mut cv = Vec::with_capacity(n);
        for r in self.rule.nodes_on(a, b) {
            let (pp, qq) = self.split_pq(r, live);
            let rho = self.radial(r);
            av.push(0.5 * (pp * pp + qq * qq) * rho);
            bv.push(0.5 * (qq * qq - pp * pp) * rho);
            cv.push(pp * qq * rho);
        }
        let smooth = self.rule.gauss_sum(&av, h);
        let osc = self.rule.oscillatory(a, b, 2.0 * self.t, &bv, &cv);
        (smooth + osc, smooth.abs() + osc.abs())
    }

    /// `(fine, coarse, magnitude)` by direct Gauss sums on sub-panels no
    /// wider than `π/(4t)`.
    fn brute_panel(&self, a: f64, b: f64) -> Result<(f64, f64, f64)> {
        let pieces = if self.t > 0.0 {
            ((b - a) / (PI / (4.0 * self.t))).ceil().max(1.0)
        } else {
            1.0
        };
        let total = self.brute_subpanels.get() + pieces as usize;
        if total > MAX_BRUTE_SUBPANELS {
            return Err(Error::Config(format!(
                "brute paneling needs more than {MAX_BRUTE_SUBPANELS} sub-panels at t = {}",
                self.t
            )));
        }
        self.brute_subpanels.set(total);
        let pieces = pieces as usize;
        let w = (b - a) / pieces as f64;
        let mut fine = NeumaierSum::new();
        let mut coarse = NeumaierSum::new();
        let mut mag = 0.0;
        for i in 0..pieces {
            let lo = a + i as f64 * w;
            let hi = if i + 1 == pieces { b } else { lo + w };
            let f = self.rule.gl.integrate(lo, hi, |r| self.brute_integrand(r));
            fine += f;
            mag += f.abs();
            coarse += self.coarse.integrate(lo, hi, |r| self.brute_integrand(r));
        }
        Ok((fine.sum(), coarse.sum(), mag))
    }

    /// `(fine, coarse, magnitude, panels)` for one outer panel.
    fn panel(&self, a: f64, b: f64) -> Result<(f64, f64, f64, usize)> {
        let brute = self.spec.mode == OscillationMode::Brute
            || (self.has_kernels && a >= self.r_split && self.kernels_live(a, b));
        if brute {
            let before = self.brute_subpanels.get();
            let (f, c, m) = self.brute_panel(a, b)?;
            return Ok((f, c, m, self.brute_subpanels.get() - before));
        }
        let live = a < self.r_split && self.kernels_live(a, b);
        let mid = 0.5 * (a + b);
        let (f1, m1) = self.split_panel(a, mid, live);
        let (f2, m2) = self.split_panel(mid, b, live);
        let (c, _) = self.split_panel(a, b, live);
        Ok((f1 + f2, c, m1 + m2, 2))
    }

    /// Far field `∫_R^∞ sin²(tr)/r² dr` for the unit-weight difference
    /// symbol in one dimension, once the damping factor equals one to
    /// double precision. Only the brute path uses it.
    fn far_field_start(&self) -> Option<f64> {
        let single_unit_d = self.terms.len() == 1
            && self.terms[0].multiplier == Multiplier::D
            && self.terms[0].weight == Weight::Unit
            && self.power == 0;
        if self.spec.mode == OscillationMode::Brute && single_unit_d && self.t > 0.0 {
            Some((100.0 / (self.p.nu * self.t)).sqrt().max(200.0 / self.t))
        } else {
            None
        }
    }

    fn integrate(&self, lo: f64, hi: Option<f64>) -> Result<RawIntegral> {
        let digits = 10f64.powi(-(self.spec.tail_cutoff_digits as i32));
        let mut acc = NeumaierSum::new();
        let mut err = 0.0;
        let mut mag = 0.0;
        let mut panels = 0usize;
        let mut outer = 0usize;
        let far = self.far_field_start();
        let mut a = lo;
        let mut tail_left = 0.0;
        loop {
            if let Some(h) = hi {
                if a >= h {
                    break;
                }
            } else if a > 0.0 {
                if let Some(r_far) = far {
                    if a >= r_far {
                        let v = sin2_over_r2_tail(self.t, a);
                        acc += v;
                        mag += v.abs();
                        break;
                    }
                }
                let tail = self.tail(a)?;
                if tail <= digits * acc.sum().abs() {
                    tail_left = tail;
                    break;
                }
            }
            let mut b = if a == 0.0 { self.first_panel_end() } else { a + self.next_width(a) };
            if self.has_kernels && a < self.r_split && b > self.r_split {
                b = self.r_split;
            }
            if let Some(h) = hi {
                b = b.min(h);
            }
            if let Some(r_far) = far {
                if a < r_far && b > r_far {
                    b = r_far;
                }
            }
            let (fine, coarse, m, used) = self.panel(a, b)?;
            if !(fine.is_finite() && coarse.is_finite()) {
                return Err(Error::Config(format!("non-finite panel value on [{a}, {b}] at t = {}", self.t)));
            }
            acc += fine;
            err += (fine - coarse).abs();
            mag += m;
            panels += used;
            outer += 1;
            if outer > MAX_PANELS {
                return Err(Error::Config(format!(
                    "tail bound did not fall below the cutoff within {MAX_PANELS} panels (t = {})",
                    self.t
                )));
            }
            a = b;
        }
        let value = acc.sum();
        Ok(RawIntegral {
            value,
            error: err + tail_left + 64.0 * f64::EPSILON * mag,
            panels,
        })
    }
}

/// `∫_R^∞ sin²(tr)/r² dr = 1/(2R) - ½ Re ∫_R^∞ e^{2itr} r^{-2} dr`, the
/// oscillatory part by its asymptotic series (requires `2tR ≥ 400`).
fn sin2_over_r2_tail(t: f64, r: f64) -> f64 {
    use num_complex::Complex64;
    let omega = 2.0 * t;
    let iw = Complex64::new(0.0, omega);
    // -e^{iωR} Σ_k (k+1)! R^{-2-k} / (iω)^{k+1}
    let mut term = Complex64::new(1.0 / (r * r), 0.0) / iw;
    let mut series = term;
    for k in 1..12 {
        term *= (k + 1) as f64 / r / iw;
        series += term;
    }
    let (s, c) = sin_cos_product(omega, r);
    let osc = -(Complex64::new(c, s) * series);
    0.5 / r - 0.5 * osc.re
}

fn to_norm(raw: RawIntegral, factor: f64) -> NormResult {
    let s = factor * raw.value;
    let ds = factor * raw.error;
    let value = s.max(0.0).sqrt();
    let abs_error_estimate = if value > 0.0 {
        ds.sqrt().min(ds / (2.0 * value))
    } else {
        ds.sqrt()
    };
    NormResult {
        value,
        abs_error_estimate,
        panels_used: raw.panels,
    }
}

fn zero_norm() -> NormResult {
    NormResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        panels_used: 0,
    }
}

/// `‖Σ_i M_i(t) w_i‖₂` for a sum of weighted multipliers, such as
/// `K₀(t)*u₀ + (K₁ - G)(t)*u₁ + D(t)u₁`.
pub fn composite_norm(terms: &[Term], t: f64, p: &SymbolParams, spec: &QuadratureSpec) -> Result<NormResult> {
    p.validate()?;
    spec.validate()?;
    check_time(t)?;
    check_terms(terms, p)?;
    if t == 0.0 && terms.iter().all(|x| x.multiplier != Multiplier::K0) {
        return Ok(zero_norm());
    }
    let power = p.dim as i32 - 1;
    let engine = Engine::new(terms, t, p, power, spec);
    let raw = engine.integrate(0.0, None)?;
    Ok(to_norm(raw, convention_factor(p.dim)))
}

/// `‖M(t) g‖₂` (profile weight), `‖M(t) g - m_g M(t)‖₂` (mass-defect weight)
/// or `‖M(t)‖₂` (unit weight).
pub fn plancherel_norm(
    m: Multiplier,
    t: f64,
    p: &SymbolParams,
    weight: &Weight,
    spec: &QuadratureSpec,
) -> Result<NormResult> {
    composite_norm(&[Term::new(m, *weight)], t, p, spec)
}

/// `‖∇J^(β)(t)‖₂` in two dimensions.
pub fn gradient_jbeta_norm(t: f64, p: &SymbolParams, spec: &QuadratureSpec) -> Result<NormResult> {
    p.validate()?;
    spec.validate()?;
    check_time(t)?;
    if p.dim != 2 {
        return Err(domain(format!("the gradient norm is taken in dimension 2, got {}", p.dim)));
    }
    if t == 0.0 {
        return Ok(zero_norm());
    }
    let terms = [Term::new(Multiplier::Jbeta, Weight::Unit)];
    let engine = Engine::new(&terms, t, p, 3, spec);
    let raw = engine.integrate(0.0, None)?;
    Ok(to_norm(raw, convention_factor(2)))
}

/// Low/high frequency split of `‖D(t)‖₂²` in one dimension after the
/// rescaling `r = ξ/√t`:
/// `I₁ = (√t/2π) ∫_{|ξ|≤1} sin²(√t ξ) ξ^{-2} (1 - e^{-νξ²})² dξ` and `I₂`
/// the same over `|ξ| ≥ 1`.
///
/// With the exponent `νξ²` as written here, `I₁ + I₂` is `‖D(t)‖₂²` for
/// viscosity `2ν`.
pub fn i_split_1d(t: f64, nu: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be positive, got {t}")));
    }
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(domain(format!("viscosity must be positive, got {nu}")));
    }
    // sin(√t ξ)/ξ is ω at time √t, and e^{-νξ²} is the damping factor at
    // time √t for viscosity 2ν/√t.
    let tau = t.sqrt();
    let p = SymbolParams::new(2.0 * nu / tau, 1, 1.0)?;
    let terms = [Term::new(Multiplier::D, Weight::Unit)];
    let engine = Engine::new(&terms, tau, &p, 0, spec);
    let low = engine.integrate(0.0, Some(1.0))?;
    let high = engine.integrate(1.0, None)?;
    let k = tau / PI;
    Ok((k * low.value, k * high.value))
}

/// The smooth factor of the two-dimensional split,
/// `F(r) = π e^{-2βr²} (1 - e^{-νtr²})² / r`.
fn a_split_factor(t: f64, nu: f64, beta: f64, r: f64) -> f64 {
    let d = (-nu * t * r * r).exp_m1();
    PI * (-2.0 * beta * r * r).exp() * d * d / r
}

fn check_a_split(t: f64, nu: f64, beta: f64) -> Result<()> {
    if !(t >= 4.0 && t.is_finite()) {
        return Err(domain(format!("the two-dimensional split needs t >= 4, got {t}")));
    }
    if !(nu > 0.0 && beta > 0.0) {
        return Err(domain("viscosity and smoothing must be positive"));
    }
    Ok(())
}

/// Panel edges on `[t^{-1/2}, 1]` for the two-dimensional split.
fn a_split_edges(t: f64, nu: f64, beta: f64, spw: f64) -> Vec<f64> {
    let lo = 1.0 / t.sqrt();
    let ell = 1.0 / (nu * t).sqrt();
    let window = 8.0 * ell;
    let cap = spw / beta.sqrt();
    let mut edges = vec![lo];
    let mut a = lo;
    while a < 1.0 {
        let mut w = (0.5 * a).min(cap);
        if a < window {
            w = w.min(spw * ell);
        }
        a = (a + w).min(1.0);
        edges.push(a);
    }
    edges
}

/// `A₁ = ∫_{t^{-1/2} ≤ |ξ| ≤ 1} e^{-2β|ξ|²} (1 - e^{-νt|ξ|²})² / (2|ξ|²) dξ`
/// in the plane and its companion `A₂` with the extra factor `cos(2t|ξ|)`,
/// so that the same integral with `sin²(t|ξ|)/|ξ|²` in place of
/// `1/(2|ξ|²)` is `A₁ - A₂`.
pub fn a_split_2d(t: f64, nu: f64, beta: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    check_a_split(t, nu, beta)?;
    let rule = FilonRule::new(spec.panel_order);
    let f = |r: f64| a_split_factor(t, nu, beta, r);
    let edges = a_split_edges(t, nu, beta, spec.smooth_panel_width);
    let omega = 2.0 * t;
    let mut a1 = NeumaierSum::new();
    let mut a2 = NeumaierSum::new();
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        match spec.mode {
            OscillationMode::Filon => {
                let fv: Vec<f64> = rule.nodes_on(a, b).map(f).collect();
                a1 += rule.gauss_sum(&fv, 0.5 * (b - a));
                if t * (b - a) <= DIRECT_THETA {
                    a2 += rule.gl.integrate(a, b, |r| f(r) * sin_cos_product(omega, r).1);
                } else {
                    let zeros = vec![0.0; fv.len()];
                    a2 += rule.oscillatory(a, b, omega, &fv, &zeros);
                }
            }
            OscillationMode::Brute => {
                let pieces = ((b - a) / (PI / (4.0 * t))).ceil().max(1.0) as usize;
                if pieces > MAX_BRUTE_SUBPANELS {
                    return Err(Error::Config(format!("brute paneling is too fine at t = {t}")));
                }
                let h = (b - a) / pieces as f64;
                for i in 0..pieces {
                    let lo = a + i as f64 * h;
                    let hi = if i + 1 == pieces { b } else { lo + h };
                    a1 += rule.gl.integrate(lo, hi, f);
                    a2 += rule.gl.integrate(lo, hi, |r| f(r) * (omega * r).cos());
                }
            }
        }
    }
    Ok((a1.sum(), a2.sum()))
}

/// Integration-by-parts bound
/// `|A₂| ≤ (1/2t) (|F(1)| + |F(t^{-1/2})| + ∫ |F'|)`, the total variation
/// taken from a dense sampling of `F` between its monotone pieces.
pub fn a2_parts_bound(t: f64, nu: f64, beta: f64) -> Result<f64> {
    check_a_split(t, nu, beta)?;
    let lo = 1.0 / t.sqrt();
    let f = |r: f64| a_split_factor(t, nu, beta, r);
    let samples = 20_000;
    let ratio = (1.0 / lo).powf(1.0 / samples as f64);
    let mut tv = 0.0;
    let mut prev = f(lo);
    let mut r = lo;
    for i in 1..=samples {
        r = if i == samples { 1.0 } else { r * ratio };
        let cur = f(r);
        tv += (cur - prev).abs();
        prev = cur;
    }
    Ok((f(1.0).abs() + f(lo).abs() + tv) / (2.0 * t))
}
