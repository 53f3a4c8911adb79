//! Pseudospectral evolution on the periodic box `[-L, L)^n`.
//!
//! Each discrete Fourier mode is multiplied by the exact symbol at its
//! wavenumber magnitude, so there is no time stepping and no CFL limit. The
//! only approximation is periodisation: once waves have travelled far
//! enough to wrap around the box the result no longer represents the
//! whole-space problem, and [`Evolution::horizon_ok`] turns false.
//!
//! [`mode_oracle`] integrates the mode ODE with classical RK4 and is the
//! independent check on the closed-form kernels in [`crate::symbols`].

use std::f64::consts::PI;
use std::io::{self, Read, Write};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{domain, Error, Result};
use crate::symbols::{self, Multiplier, SymbolParams};
use crate::sum::compensated_sum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub dim: usize,
    pub points_per_dim: usize,
    pub half_width: f64,
}

impl GridSpec {
    pub fn new(dim: usize, points_per_dim: usize, half_width: f64) -> Result<Self> {
        if !(dim == 1 || dim == 2) {
            return Err(domain(format!("grids support dimensions 1 and 2, got {dim}")));
        }
        if points_per_dim < 16 || !points_per_dim.is_power_of_two() {
            return Err(domain(format!(
                "points per dimension must be a power of two >= 16, got {points_per_dim}"
            )));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(domain(format!("half width must be positive, got {half_width}")));
        }
        Ok(GridSpec {
            dim,
            points_per_dim,
            half_width,
        })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.points_per_dim as f64
    }

    pub fn len(&self) -> usize {
        self.points_per_dim.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `h^n`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Lattice coordinates along one axis, `-L + j h`.
    pub fn coordinates(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.points_per_dim)
            .map(|j| -self.half_width + j as f64 * h)
            .collect()
    }

    /// Angular wavenumbers along one axis in FFT index order.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let n = self.points_per_dim as i64;
        let dk = PI / self.half_width;
        (0..n)
            .map(|k| if k <= n / 2 { k } else { k - n })
            .map(|k| k as f64 * dk)
            .collect()
    }

    /// `|κ|` for every mode, laid out like the field values.
    pub fn radial_wavenumbers(&self) -> Vec<f64> {
        let k = self.wavenumbers();
        match self.dim {
            1 => k.iter().map(|x| x.abs()).collect(),
            _ => {
                let mut out = Vec::with_capacity(self.len());
                for &kx in &k {
                    for &ky in &k {
                        out.push(kx.hypot(ky));
                    }
                }
                out
            }
        }
    }
}

/// Real scalar field on the lattice, row-major for `n = 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    pub spec: GridSpec,
    pub values: Vec<f64>,
}

impl GridField {
    pub fn new(spec: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != spec.len() {
            return Err(domain(format!(
                "field has {} values, grid needs {}",
                values.len(),
                spec.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(domain("field values must be finite"));
        }
        Ok(GridField { spec, values })
    }

    pub fn zeros(spec: GridSpec) -> Self {
        GridField {
            spec,
            values: vec![0.0; spec.len()],
        }
    }

    pub fn from_fn<F: Fn(&[f64]) -> f64>(spec: GridSpec, f: F) -> Result<Self> {
        let c = spec.coordinates();
        let values = match spec.dim {
            1 => c.iter().map(|&x| f(&[x])).collect(),
            _ => {
                let mut v = Vec::with_capacity(spec.len());
                for &x in &c {
                    for &y in &c {
                        v.push(f(&[x, y]));
                    }
                }
                v
            }
        };
        GridField::new(spec, values)
    }

    /// Riemann sum `Σ v h^n`.
    pub fn mass(&self) -> f64 {
        compensated_sum(self.values.iter().copied()) * self.spec.cell_volume()
    }

    pub fn scaled(&self, k: f64) -> GridField {
        GridField {
            spec: self.spec,
            values: self.values.iter().map(|v| k * v).collect(),
        }
    }

    pub fn sub(&self, other: &GridField) -> Result<GridField> {
        same_spec(self, other)?;
        Ok(GridField {
            spec: self.spec,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, other: &GridField) -> Result<GridField> {
        same_spec(self, other)?;
        Ok(GridField {
            spec: self.spec,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Largest `|x|` (sup-norm over coordinates) where the field exceeds
    /// `1e-12` of its maximum.
    pub fn support_radius(&self) -> f64 {
        let peak = self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if peak == 0.0 {
            return 0.0;
        }
        let cut = 1e-12 * peak;
        let c = self.spec.coordinates();
        let n = self.spec.points_per_dim;
        let mut radius = 0.0f64;
        for (idx, v) in self.values.iter().enumerate() {
            if v.abs() > cut {
                let rho = match self.spec.dim {
                    1 => c[idx].abs(),
                    _ => c[idx / n].hypot(c[idx % n]),
                };
                radius = radius.max(rho);
            }
        }
        radius
    }

    /// Raw dump: little-endian `dims: u64`, `N: u64`, `L: f64`, then the
    /// values row-major as `f64`.
    pub fn write_raw<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(&(self.spec.dim as u64).to_le_bytes())?;
        w.write_all(&(self.spec.points_per_dim as u64).to_le_bytes())?;
        w.write_all(&self.spec.half_width.to_le_bytes())?;
        for v in &self.values {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_raw<R: Read>(mut r: R) -> io::Result<GridField> {
        let mut b = [0u8; 8];
        r.read_exact(&mut b)?;
        let dim = u64::from_le_bytes(b) as usize;
        r.read_exact(&mut b)?;
        let n = u64::from_le_bytes(b) as usize;
        r.read_exact(&mut b)?;
        let l = f64::from_le_bytes(b);
        let spec = GridSpec::new(dim, n, l).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        let mut values = Vec::with_capacity(spec.len());
        for _ in 0..spec.len() {
            r.read_exact(&mut b)?;
            values.push(f64::from_le_bytes(b));
        }
        GridField::new(spec, values).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
    }
}

fn same_spec(a: &GridField, b: &GridField) -> Result<()> {
    if a.spec == b.spec {
        Ok(())
    } else {
        Err(Error::GridMismatch)
    }
}

/// Discrete L² norm with volume element `h^n`.
pub fn l2_norm(u: &GridField) -> f64 {
    (compensated_sum(u.values.iter().map(|v| v * v)) * u.spec.cell_volume()).sqrt()
}

fn fft_in_place(spec: &GridSpec, data: &mut [Complex64], inverse: bool) {
    let n = spec.points_per_dim;
    let mut planner = FftPlanner::<f64>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    match spec.dim {
        1 => fft.process(data),
        _ => {
            for row in data.chunks_exact_mut(n) {
                fft.process(row);
            }
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            for j in 0..n {
                for i in 0..n {
                    col[i] = data[i * n + j];
                }
                fft.process(&mut col);
                for i in 0..n {
                    data[i * n + j] = col[i];
                }
            }
        }
    }
}

fn forward(u: &GridField) -> Vec<Complex64> {
    let mut data: Vec<Complex64> = u.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_in_place(&u.spec, &mut data, false);
    data
}

/// Inverse transform; returns the real part and the largest imaginary
/// residue relative to the field's sup norm.
fn inverse(spec: GridSpec, mut data: Vec<Complex64>) -> (GridField, f64) {
    fft_in_place(&spec, &mut data, true);
    let scale = 1.0 / spec.len() as f64;
    let peak = data.iter().fold(0.0f64, |m, z| m.max(z.re.abs())) * scale;
    let imag = data.iter().fold(0.0f64, |m, z| m.max(z.im.abs())) * scale;
    let values = data.iter().map(|z| z.re * scale).collect();
    let residue = if peak > 0.0 { imag / peak } else { imag };
    (GridField { spec, values }, residue)
}

/// Applies a radial Fourier multiplier `m(|κ|)` to a field.
pub fn apply_radial<F: Fn(f64) -> f64>(u: &GridField, m: F) -> GridField {
    let mut hat = forward(u);
    for (z, r) in hat.iter_mut().zip(u.spec.radial_wavenumbers()) {
        *z *= m(r);
    }
    inverse(u.spec, hat).0
}

/// `M(t) u` for one of the named multipliers.
pub fn apply_multiplier(u: &GridField, m: Multiplier, t: f64, p: &SymbolParams) -> Result<GridField> {
    m.eval(t, 0.0, p)?;
    Ok(apply_radial(u, |r| m.eval_raw(t, r, p)))
}

/// Result of a spectral evolution.
#[derive(Debug, Clone)]
pub struct Evolution {
    pub t: f64,
    pub u: GridField,
    pub ut: GridField,
    /// False once `t + support radius` exceeds the half width.
    pub horizon_ok: bool,
    /// Largest imaginary part left after the inverse transform, relative to
    /// the field's sup norm.
    pub imag_residue: f64,
}

fn evolve_with<F>(u0: &GridField, u1: &GridField, t: f64, kernels: F) -> Result<Evolution>
where
    F: Fn(f64) -> [f64; 4],
{
    same_spec(u0, u1)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be >= 0, got {t}")));
    }
    let spec = u0.spec;
    let h0 = forward(u0);
    let h1 = forward(u1);
    let radii = spec.radial_wavenumbers();
    let mut uh = Vec::with_capacity(spec.len());
    let mut vh = Vec::with_capacity(spec.len());
    for ((a, b), &r) in h0.iter().zip(&h1).zip(&radii) {
        let [k0, k1, d0, d1] = kernels(r);
        uh.push(a * k0 + b * k1);
        vh.push(a * d0 + b * d1);
    }
    let (u, ru) = inverse(spec, uh);
    let (ut, rv) = inverse(spec, vh);
    let reach = u0.support_radius().max(u1.support_radius());
    Ok(Evolution {
        t,
        u,
        ut,
        horizon_ok: t + reach <= spec.half_width,
        imag_residue: ru.max(rv),
    })
}

/// `u = K₀(t)*u₀ + K₁(t)*u₁` and its time derivative.
pub fn evolve_damped(u0: &GridField, u1: &GridField, t: f64, nu: f64) -> Result<Evolution> {
    if !(nu > 0.0) {
        return Err(domain(format!("viscosity must be positive, got {nu}")));
    }
    evolve_with(u0, u1, t, |r| {
        let (ec, es) = symbols::damped_pair(t, r, nu);
        let k0 = ec + 0.5 * nu * r * r * es;
        [k0, es, -r * r * es, k0 - nu * r * r * es]
    })
}

/// Free wave `v = cos(t|∇|)u₀ + W(t)u₁` and its time derivative.
pub fn evolve_wave(u0: &GridField, u1: &GridField, t: f64) -> Result<Evolution> {
    evolve_with(u0, u1, t, |r| {
        let (s, c) = (t * r).sin_cos();
        [c, symbols::omega_raw(t, r), -r * s, c]
    })
}

/// `½ ∫ (|u_t|² + |∇u|²)`, gradient taken spectrally.
pub fn energy(u: &GridField, ut: &GridField) -> Result<f64> {
    same_spec(u, ut)?;
    let kinetic = compensated_sum(ut.values.iter().map(|v| v * v)) * u.spec.cell_volume();
    Ok(0.5 * (kinetic + grad_sq(u)))
}

/// `‖∇u‖₂²` by Parseval.
fn grad_sq(u: &GridField) -> f64 {
    let hat = forward(u);
    let radii = u.spec.radial_wavenumbers();
    let s = compensated_sum(hat.iter().zip(&radii).map(|(z, r)| r * r * z.norm_sqr()));
    s * u.spec.cell_volume() / u.spec.len() as f64
}

/// `ν ‖∇u_t‖₂²`, the energy loss rate.
pub fn dissipation(ut: &GridField, nu: f64) -> f64 {
    nu * grad_sq(ut)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySample {
    pub t: f64,
    pub energy: f64,
    pub dissipation: f64,
    /// Centred difference of the energy in time.
    pub energy_rate: f64,
    pub horizon_ok: bool,
}

#[derive(Debug, Clone)]
pub struct DissipationReport {
    pub samples: Vec<EnergySample>,
    /// `max |dE/dt + ν‖∇u_t‖²| / E(0)`.
    pub max_defect: f64,
    /// Energy nonincreasing along the time grid.
    pub monotone: bool,
    pub horizon_ok: bool,
}

pub fn dissipation_check(
    u0: &GridField,
    u1: &GridField,
    nu: f64,
    times: &[f64],
    dt_fd: f64,
) -> Result<DissipationReport> {
    if !(dt_fd > 0.0) {
        return Err(domain(format!("finite-difference step must be positive, got {dt_fd}")));
    }
    let e_at = |t: f64| -> Result<f64> {
        let ev = evolve_damped(u0, u1, t, nu)?;
        energy(&ev.u, &ev.ut)
    };
    let e0 = e_at(0.0)?;
    let mut samples = Vec::with_capacity(times.len());
    for &t in times {
        let ev = evolve_damped(u0, u1, t, nu)?;
        let e = energy(&ev.u, &ev.ut)?;
        let rate = if t >= dt_fd {
            (e_at(t + dt_fd)? - e_at(t - dt_fd)?) / (2.0 * dt_fd)
        } else {
            // second-order one-sided difference
            (-3.0 * e + 4.0 * e_at(t + dt_fd)? - e_at(t + 2.0 * dt_fd)?) / (2.0 * dt_fd)
        };
        samples.push(EnergySample {
            t,
            energy: e,
            dissipation: dissipation(&ev.ut, nu),
            energy_rate: rate,
            horizon_ok: ev.horizon_ok,
        });
    }
    let scale = if e0 > 0.0 { e0 } else { 1.0 };
    let max_defect = samples
        .iter()
        .map(|s| (s.energy_rate + s.dissipation).abs() / scale)
        .fold(0.0, f64::max);
    let monotone = samples.windows(2).all(|w| w[1].energy <= w[0].energy * (1.0 + 1e-12));
    let horizon_ok = samples.iter().all(|s| s.horizon_ok);
    Ok(DissipationReport {
        samples,
        max_defect,
        monotone,
        horizon_ok,
    })
}

/// Classical RK4 for `ü + ν r² u̇ + r² u = 0` from `(u0_hat, u1_hat)`.
///
/// The requested step is rounded down so that a whole number of steps
/// lands exactly on `t`.
pub fn mode_oracle(r: f64, nu: f64, t: f64, u0_hat: f64, u1_hat: f64, rk4_step: f64) -> Result<(f64, f64)> {
    if r < 0.0 || t < 0.0 || nu <= 0.0 {
        return Err(domain("mode oracle needs r >= 0, t >= 0, nu > 0"));
    }
    let limit = 0.1 / (1.0f64).max(nu * r * r).max(r);
    if !(rk4_step > 0.0 && rk4_step <= limit) {
        return Err(Error::Stability(format!("RK4 step {rk4_step} exceeds limit {limit}")));
    }
    if t == 0.0 {
        return Ok((u0_hat, u1_hat));
    }
    let steps = (t / rk4_step).ceil() as u64;
    let h = t / steps as f64;
    let damp = nu * r * r;
    let stiff = r * r;
    let f = |u: f64, v: f64| (v, -damp * v - stiff * u);
    let (mut u, mut v) = (u0_hat, u1_hat);
    for _ in 0..steps {
        let (a1, b1) = f(u, v);
        let (a2, b2) = f(u + 0.5 * h * a1, v + 0.5 * h * b1);
        let (a3, b3) = f(u + 0.5 * h * a2, v + 0.5 * h * b2);
        let (a4, b4) = f(u + h * a3, v + h * b3);
        u += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
        v += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn gaussian_field(spec: GridSpec, sigma: f64) -> GridField {
        GridField::from_fn(spec, |x| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            (-0.5 * r2 / (sigma * sigma)).exp()
        })
        .unwrap()
    }

    #[test]
    fn grid_spec_validation() {
        assert!(GridSpec::new(1, 8, 1.0).is_err());
        assert!(GridSpec::new(1, 100, 1.0).is_err());
        assert!(GridSpec::new(3, 16, 1.0).is_err());
        assert!(GridSpec::new(1, 16, 0.0).is_err());
        let g = GridSpec::new(2, 32, 4.0).unwrap();
        assert_eq!(g.len(), 1024);
        assert_eq!(g.spacing(), 0.25);
    }

    #[test]
    fn wavenumbers_follow_fft_ordering() {
        let g = GridSpec::new(1, 16, PI).unwrap();
        let k = g.wavenumbers();
        assert_eq!(k[0], 0.0);
        assert_eq!(k[1], 1.0);
        assert_eq!(k[8], 8.0);
        assert_eq!(k[9], -7.0);
        assert_eq!(k[15], -1.0);
    }

    #[test]
    fn zero_data_stays_zero() {
        let g = GridSpec::new(1, 64, 8.0).unwrap();
        let z = GridField::zeros(g);
        let ev = evolve_damped(&z, &z, 3.0, 1.0).unwrap();
        assert!(ev.u.values.iter().all(|&v| v == 0.0));
        assert!(ev.ut.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn evolution_at_time_zero_is_identity() {
        let g = GridSpec::new(1, 128, 16.0).unwrap();
        let u0 = gaussian_field(g, 1.0);
        let u1 = gaussian_field(g, 2.0).scaled(0.5);
        for ev in [evolve_damped(&u0, &u1, 0.0, 1.0).unwrap(), evolve_wave(&u0, &u1, 0.0).unwrap()] {
            for (a, b) in ev.u.values.iter().zip(&u0.values) {
                assert!((a - b).abs() < 1e-14);
            }
            for (a, b) in ev.ut.values.iter().zip(&u1.values) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn evolved_fields_are_real() {
        for dim in [1, 2] {
            let n = if dim == 1 { 256 } else { 64 };
            let g = GridSpec::new(dim, n, 16.0).unwrap();
            let u1 = gaussian_field(g, 2.0);
            let ev = evolve_damped(&GridField::zeros(g), &u1, 2.5, 1.0).unwrap();
            assert!(ev.imag_residue <= 1e-12, "dim {dim}: {}", ev.imag_residue);
        }
    }

    #[test]
    fn energy_of_pure_velocity_gaussian() {
        let g = GridSpec::new(1, 512, 16.0).unwrap();
        let u1 = gaussian_field(g, 1.0);
        let e = energy(&GridField::zeros(g), &u1).unwrap();
        assert_relative_eq!(e, PI.sqrt() / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn energy_of_single_mode() {
        let l = 4.0;
        let g = GridSpec::new(1, 64, l).unwrap();
        let k = PI / l;
        let u = GridField::from_fn(g, |x| (k * x[0]).sin()).unwrap();
        // ½ k² ∫ cos²(kx) dx over one period of length 2L
        let expect = 0.5 * k * k * l;
        assert_relative_eq!(energy(&u, &GridField::zeros(g)).unwrap(), expect, max_relative = 1e-12);
        assert_relative_eq!(expect, PI * PI / (2.0 * l), max_relative = 1e-15);
    }

    #[test]
    fn l2_norm_values() {
        let g = GridSpec::new(1, 512, 16.0).unwrap();
        assert_eq!(l2_norm(&GridField::zeros(g)), 0.0);
        let u = gaussian_field(g, 1.0);
        assert_relative_eq!(l2_norm(&u), PI.powf(0.25), max_relative = 1e-8);
        assert_relative_eq!(l2_norm(&u.scaled(2.0)), 2.0 * l2_norm(&u), max_relative = 1e-15);
    }

    #[test]
    fn free_wave_conserves_energy() {
        let g = GridSpec::new(1, 1024, 32.0).unwrap();
        let u0 = gaussian_field(g, 1.0);
        let u1 = gaussian_field(g, 1.5).scaled(-0.3);
        let e0 = energy(&u0, &u1).unwrap();
        for t in [1.0, 5.0, 12.0] {
            let ev = evolve_wave(&u0, &u1, t).unwrap();
            assert!(ev.horizon_ok);
            let e = energy(&ev.u, &ev.ut).unwrap();
            assert!((e - e0).abs() <= 1e-10 * e0, "t={t}: {e} vs {e0}");
        }
    }

    #[test]
    fn free_wave_matches_dalembert() {
        // u0 = 0: v(t, x) = ½ ∫_{x-t}^{x+t} u1 = ½ √(π/2) [erf((x+t)/√2) - erf((x-t)/√2)]
        // for u1 = e^{-x²/2}; the error function primitive is checked by quadrature.
        let g = GridSpec::new(1, 1024, 32.0).unwrap();
        let u1 = gaussian_field(g, 1.0);
        let t = 6.0;
        let ev = evolve_wave(&GridField::zeros(g), &u1, t).unwrap();
        let gl = crate::gauss::GaussLegendre::new(32);
        for (x, v) in g.coordinates().iter().zip(&ev.u.values).step_by(7) {
            let (a, b) = (x - t, x + t);
            let pieces = 16;
            let w = (b - a) / pieces as f64;
            let direct: f64 = (0..pieces)
                .map(|i| gl.integrate(a + i as f64 * w, a + (i + 1) as f64 * w, |y| (-0.5 * y * y).exp()))
                .sum();
            assert!((0.5 * direct - v).abs() <= 1e-6, "x={x}");
        }
    }

    #[test]
    fn damped_energy_decreases_and_dissipation_identity_holds() {
        let g = GridSpec::new(1, 1024, 32.0).unwrap();
        let u1 = gaussian_field(g, 1.0);
        let rep = dissipation_check(&GridField::zeros(g), &u1, 1.0, &[0.0, 0.5, 1.0, 2.0, 4.0, 8.0], 1e-3).unwrap();
        assert!(rep.monotone);
        assert!(rep.max_defect <= 1e-5, "{}", rep.max_defect);
    }

    #[test]
    fn constant_displacement_has_no_energy() {
        let g = GridSpec::new(1, 64, 8.0).unwrap();
        let u0 = GridField::new(g, vec![3.0; 64]).unwrap();
        let rep = dissipation_check(&u0, &GridField::zeros(g), 1.0, &[0.5, 1.0, 2.0], 1e-3).unwrap();
        for s in &rep.samples {
            assert!(s.energy.abs() < 1e-20);
        }
    }

    #[test]
    fn mode_oracle_free_particle() {
        let (u, v) = mode_oracle(0.0, 1.0, 3.0, 2.0, 0.5, 0.01).unwrap();
        assert_relative_eq!(u, 3.5, max_relative = 1e-14);
        assert_relative_eq!(v, 0.5, max_relative = 1e-14);
    }

    #[test]
    fn mode_oracle_rejects_large_steps() {
        assert!(matches!(mode_oracle(10.0, 1.0, 1.0, 1.0, 0.0, 0.01), Err(Error::Stability(_))));
    }

    #[test]
    fn raw_dump_round_trip() {
        let g = GridSpec::new(2, 16, 3.0).unwrap();
        let u = gaussian_field(g, 0.7);
        let mut buf = Vec::new();
        u.write_raw(&mut buf).unwrap();
        assert_eq!(buf.len(), 24 + 8 * 256);
        assert_eq!(&buf[0..8], &2u64.to_le_bytes());
        assert_eq!(&buf[8..16], &16u64.to_le_bytes());
        assert_eq!(&buf[16..24], &3.0f64.to_le_bytes());
        assert_eq!(GridField::read_raw(&buf[..]).unwrap(), u);
    }

    #[test]
    fn mismatched_specs_are_rejected() {
        let a = GridField::zeros(GridSpec::new(1, 16, 1.0).unwrap());
        let b = GridField::zeros(GridSpec::new(1, 32, 1.0).unwrap());
        assert!(matches!(evolve_damped(&a, &b, 1.0, 1.0), Err(Error::GridMismatch)));
    }
}
