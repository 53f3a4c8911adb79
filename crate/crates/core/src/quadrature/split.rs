//! Phase-split form of the multipliers and their tail envelopes.
//!
//! Every multiplier is written as `M(t, r) = P(r) sin(tr) + Q(r) cos(tr)`
//! with `P`, `Q` free of the `tr` oscillation, so that
//! `M² = A + B cos(2tr) + C sin(2tr)` with `A = (P²+Q²)/2`,
//! `B = (Q²-P²)/2` and `C = PQ`. For the damped kernels this holds below
//! `r = 1/ν`, where the mode frequency `q = r sqrt(1 - ν²r²/4)` differs
//! from `r` by a slowly varying shift `δ = q - r`.

use crate::profiles::Envelope;
use crate::symbols::{Multiplier, SymbolParams};

/// Upper end of the range where the damped kernels are phase split.
pub(crate) fn split_limit(nu: f64) -> f64 {
    1.0 / nu
}

pub(crate) fn is_damped_kernel(m: Multiplier) -> bool {
    matches!(m, Multiplier::K0 | Multiplier::K1 | Multiplier::K1MinusG)
}

/// `(q, δ)` for `r ≤ 1/ν`; `δ` is formed without cancellation.
#[inline]
fn shifted_frequency(r: f64, nu: f64) -> (f64, f64) {
    let x = 0.25 * nu * nu * r * r;
    let root = (1.0 - x).sqrt();
    (r * root, -r * x / (root + 1.0))
}

/// `|dδ/dr|`, used to keep `tδ` resolved on a panel.
pub(crate) fn shift_rate(r: f64, nu: f64) -> f64 {
    let x = 0.25 * nu * nu * r * r;
    let dq = (1.0 - 2.0 * x) / (1.0 - x).sqrt();
    (dq - 1.0).abs()
}

/// Bound for `log |K(t, r)|` on `[a, b]` for either damped kernel:
/// `|K| ≤ (1 + νb²t/2 + t) e^{-c t}` with `c = min(νa²/2, 1/ν)`.
pub(crate) fn log_kernel_bound(a: f64, b: f64, t: f64, nu: f64) -> f64 {
    let c = (0.5 * nu * a * a).min(1.0 / nu);
    (1.0 + 0.5 * nu * b * b * t + t).ln() - c * t
}

/// Threshold on [`log_kernel_bound`] below which a damped kernel is dropped.
pub(crate) const NEGLIGIBLE_LOG: f64 = -45.0;

/// `(P, Q)` at `r > 0`. `kernels_live` must be false only where
/// [`log_kernel_bound`] is below [`NEGLIGIBLE_LOG`], and true only for
/// `r ≤ 1/ν`.
#[inline]
pub(crate) fn split(m: Multiplier, t: f64, r: f64, p: &SymbolParams, kernels_live: bool) -> (f64, f64) {
    let a = 0.5 * p.nu * r * r;
    match m {
        Multiplier::W => (1.0 / r, 0.0),
        Multiplier::G => ((-a * t).exp() / r, 0.0),
        Multiplier::D => ((-a * t).exp_m1() / r, 0.0),
        Multiplier::Jbeta => ((-p.beta * r * r).exp() * (-a * t).exp_m1() / r, 0.0),
        Multiplier::K0 | Multiplier::K1 if !kernels_live => (0.0, 0.0),
        Multiplier::K1MinusG if !kernels_live => (-(-a * t).exp() / r, 0.0),
        Multiplier::K1 => {
            let (q, d) = shifted_frequency(r, p.nu);
            let e = (-a * t).exp() / q;
            let (s, c) = (t * d).sin_cos();
            (e * c, e * s)
        }
        Multiplier::K0 => {
            let (q, d) = shifted_frequency(r, p.nu);
            let e = (-a * t).exp();
            let (s, c) = (t * d).sin_cos();
            let k = a / q;
            (e * (k * c - s), e * (c + k * s))
        }
        Multiplier::K1MinusG => {
            let (q, d) = shifted_frequency(r, p.nu);
            let e = (-a * t).exp() / q;
            let sh = (0.5 * t * d).sin();
            (e * (-2.0 * sh * sh - d / r), e * (t * d).sin())
        }
    }
}

/// Envelope of `M(t, r)²` valid for every `r > 0`.
pub(crate) fn multiplier_envelope(m: Multiplier, t: f64, p: &SymbolParams) -> Envelope {
    let inv_sq = |c: f64, s: f64| Envelope { c, p: -2, s };
    match m {
        Multiplier::K0 => Envelope::UNIT,
        _ if t == 0.0 => Envelope { c: 0.0, p: 0, s: 0.0 },
        Multiplier::K1 | Multiplier::W | Multiplier::D => inv_sq(1.0, 0.0),
        Multiplier::G => inv_sq(1.0, p.nu * t),
        Multiplier::Jbeta => inv_sq(1.0, 2.0 * p.beta),
        Multiplier::K1MinusG => inv_sq(4.0, 0.0),
    }
}
