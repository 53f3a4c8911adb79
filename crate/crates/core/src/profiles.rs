//! Radial initial data with closed-form Fourier transforms.
//!
//! Fourier convention throughout the crate: `ĝ(ξ) = ∫ e^{-ix·ξ} g(x) dx`,
//! so `‖g‖₂² = (2π)^{-n} ‖ĝ‖₂²` and `m_g = ĝ(0)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::gauss::GaussLegendre;
use crate::gridlab::{GridField, GridSpec};
use crate::sum::NeumaierSum;

/// Surface area of the unit sphere `S^{n-1}` (2 for the two half-lines of
/// the real axis).
pub fn sphere_area(n: usize) -> f64 {
    match n {
        1 => 2.0,
        2 => 2.0 * PI,
        3 => 4.0 * PI,
        _ => panic!("unsupported dimension {n}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// `A e^{-|x|²/(2σ²)}`.
    Gaussian,
    /// Laplacian of the Gaussian; zero mass.
    MexicanHat,
    /// Gaussian normalised to mass `A`.
    ScaledGaussian,
}

impl ProfileKind {
    pub fn name(self) -> &'static str {
        match self {
            ProfileKind::Gaussian => "gaussian",
            ProfileKind::MexicanHat => "mexican_hat",
            ProfileKind::ScaledGaussian => "scaled_gaussian",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "gaussian" => Some(ProfileKind::Gaussian),
            "mexican_hat" => Some(ProfileKind::MexicanHat),
            "scaled_gaussian" => Some(ProfileKind::ScaledGaussian),
            _ => None,
        }
    }
}

/// Upper envelope `c r^p e^{-s r²}` of a squared radial function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub c: f64,
    pub p: i32,
    pub s: f64,
}

impl Envelope {
    pub const UNIT: Envelope = Envelope { c: 1.0, p: 0, s: 0.0 };

    pub fn times(self, other: Envelope) -> Envelope {
        Envelope {
            c: self.c * other.c,
            p: self.p + other.p,
            s: self.s + other.s,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    pub kind: ProfileKind,
    pub amplitude: f64,
    pub sigma: f64,
    pub dim: usize,
    pub mass: f64,
    pub l1_norm: f64,
    pub l2_norm: f64,
}

fn check_shape(sigma: f64, n: usize) -> Result<()> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(domain(format!("sigma must be positive, got {sigma}")));
    }
    if !(1..=3).contains(&n) {
        return Err(domain(format!("dimension must be 1, 2 or 3, got {n}")));
    }
    Ok(())
}

/// `A (2πσ²)^{n/2}`, the mass of `A e^{-|x|²/(2σ²)}`.
fn gaussian_mass(amplitude: f64, sigma: f64, n: usize) -> f64 {
    amplitude * (2.0 * PI * sigma * sigma).powf(n as f64 / 2.0)
}

pub fn gaussian(amplitude: f64, sigma: f64, n: usize) -> Result<RadialProfile> {
    check_shape(sigma, n)?;
    let mass = gaussian_mass(amplitude, sigma, n);
    Ok(RadialProfile {
        kind: ProfileKind::Gaussian,
        amplitude,
        sigma,
        dim: n,
        mass,
        l1_norm: mass.abs(),
        l2_norm: amplitude.abs() * (PI * sigma * sigma).powf(n as f64 / 4.0),
    })
}

pub fn scaled_gaussian(mass: f64, sigma: f64, n: usize) -> Result<RadialProfile> {
    check_shape(sigma, n)?;
    let mut p = gaussian(mass / gaussian_mass(1.0, sigma, n), sigma, n)?;
    p.kind = ProfileKind::ScaledGaussian;
    p.amplitude = mass;
    Ok(p)
}

pub fn mexican_hat(amplitude: f64, sigma: f64, n: usize) -> Result<RadialProfile> {
    check_shape(sigma, n)?;
    let m = gaussian_mass(amplitude, sigma, n);
    // (2π)^{-n} σ_{n-1} ∫ r⁴ m² e^{-σ²r²} r^{n-1} dr, the radial integral in
    // closed form through Γ((n+4)/2).
    let radial = gamma_half_integer(n + 4) / (2.0 * sigma.powi(n as i32 + 4));
    let l2sq = sphere_area(n) * m * m * radial / (2.0 * PI).powi(n as i32);
    let mut p = RadialProfile {
        kind: ProfileKind::MexicanHat,
        amplitude,
        sigma,
        dim: n,
        mass: 0.0,
        l1_norm: 0.0,
        l2_norm: l2sq.sqrt(),
    };
    p.l1_norm = p.radial_l1_quadrature();
    Ok(p)
}

/// `Γ(k/2)` for positive integers `k`.
fn gamma_half_integer(k: usize) -> f64 {
    if k % 2 == 0 {
        (1..k / 2).map(|j| j as f64).product()
    } else {
        let mut g = PI.sqrt();
        let mut x = 0.5;
        while x < k as f64 / 2.0 - 0.25 {
            g *= x;
            x += 1.0;
        }
        g
    }
}

impl RadialProfile {
    pub fn build(kind: ProfileKind, amplitude: f64, sigma: f64, n: usize) -> Result<Self> {
        match kind {
            ProfileKind::Gaussian => gaussian(amplitude, sigma, n),
            ProfileKind::MexicanHat => mexican_hat(amplitude, sigma, n),
            ProfileKind::ScaledGaussian => scaled_gaussian(amplitude, sigma, n),
        }
    }

    /// Same shape in another dimension.
    pub fn in_dim(&self, n: usize) -> Result<Self> {
        RadialProfile::build(self.kind, self.amplitude, self.sigma, n)
    }

    /// Peak amplitude of the underlying Gaussian `A e^{-|x|²/(2σ²)}`.
    fn gaussian_peak(&self) -> f64 {
        match self.kind {
            ProfileKind::ScaledGaussian => self.amplitude / gaussian_mass(1.0, self.sigma, self.dim),
            _ => self.amplitude,
        }
    }

    /// `ĝ(r)`.
    pub fn fourier(&self, r: f64) -> f64 {
        let m = gaussian_mass(self.gaussian_peak(), self.sigma, self.dim);
        let e = (-0.5 * self.sigma * self.sigma * r * r).exp();
        match self.kind {
            ProfileKind::Gaussian | ProfileKind::ScaledGaussian => m * e,
            ProfileKind::MexicanHat => -r * r * m * e,
        }
    }

    /// `ĝ(r) - m_g`, without cancellation near `r = 0`.
    pub fn fourier_minus_mass(&self, r: f64) -> f64 {
        match self.kind {
            ProfileKind::Gaussian | ProfileKind::ScaledGaussian => {
                self.mass * (-0.5 * self.sigma * self.sigma * r * r).exp_m1()
            }
            ProfileKind::MexicanHat => self.fourier(r),
        }
    }

    /// Physical-space value at radius `rho`.
    pub fn value_at(&self, rho: f64) -> f64 {
        let a = self.gaussian_peak();
        let s2 = self.sigma * self.sigma;
        let e = (-0.5 * rho * rho / s2).exp();
        match self.kind {
            ProfileKind::Gaussian | ProfileKind::ScaledGaussian => a * e,
            ProfileKind::MexicanHat => a * (rho * rho / (s2 * s2) - self.dim as f64 / s2) * e,
        }
    }

    /// Envelope of `ĝ(r)²`.
    pub fn fourier_envelope(&self) -> Envelope {
        let m = gaussian_mass(self.gaussian_peak(), self.sigma, self.dim);
        let s = self.sigma * self.sigma;
        match self.kind {
            ProfileKind::MexicanHat => Envelope { c: m * m, p: 4, s },
            _ => Envelope { c: m * m, p: 0, s },
        }
    }

    /// Envelope of `(ĝ(r) - m_g)²`.
    pub fn defect_envelope(&self) -> Envelope {
        match self.kind {
            ProfileKind::MexicanHat => self.fourier_envelope(),
            _ => Envelope {
                c: self.mass * self.mass,
                p: 0,
                s: 0.0,
            },
        }
    }

    /// Natural length scale on the Fourier side.
    pub fn fourier_scale(&self) -> f64 {
        1.0 / self.sigma
    }

    /// `σ_{n-1} ∫ |g(ρ)| ρ^{n-1} dρ`, split at the sign change of the
    /// Mexican hat.
    fn radial_l1_quadrature(&self) -> f64 {
        let gl = GaussLegendre::new(32);
        let n = self.dim;
        let node = match self.kind {
            ProfileKind::MexicanHat => self.sigma * (n as f64).sqrt(),
            _ => self.sigma,
        };
        let end = 40.0 * self.sigma;
        let mut breaks = vec![0.0, node];
        let mut x = node;
        while x < end {
            x = (x + 0.25 * self.sigma).min(end);
            breaks.push(x);
        }
        let mut acc = NeumaierSum::new();
        for w in breaks.windows(2) {
            acc += gl.integrate(w[0], w[1], |rho| self.value_at(rho).abs() * rho.powi(n as i32 - 1));
        }
        sphere_area(n) * acc.sum()
    }
}

/// Samples `g` on the periodic lattice of `grid`.
pub fn sample_on_grid(profile: &RadialProfile, grid: &GridSpec) -> Result<GridField> {
    if grid.dim != profile.dim {
        return Err(domain(format!(
            "profile is {}-dimensional but grid is {}-dimensional",
            profile.dim, grid.dim
        )));
    }
    let h = grid.spacing();
    if profile.sigma / h < 8.0 {
        return Err(Error::Resolution(format!(
            "grid spacing {h} gives {:.2} points per sigma, need at least 8",
            profile.sigma / h
        )));
    }
    let coords = grid.coordinates();
    let values = match grid.dim {
        1 => coords.iter().map(|&x| profile.value_at(x.abs())).collect(),
        2 => {
            let mut v = Vec::with_capacity(coords.len() * coords.len());
            for &x in &coords {
                for &y in &coords {
                    v.push(profile.value_at(x.hypot(y)));
                }
            }
            v
        }
        d => return Err(domain(format!("grids support dimensions 1 and 2, got {d}"))),
    };
    GridField::new(*grid, values)
}
