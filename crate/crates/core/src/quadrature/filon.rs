//! Filon panels: the smooth factor is replaced by its Legendre interpolant
//! at the Gauss nodes and the oscillatory factor is integrated exactly
//! through `∫_{-1}^{1} P_k(x) e^{iθx} dx = 2 i^k j_k(θ)`.

use num_complex::Complex64;

use crate::gauss::{legendre_values, GaussLegendre};

/// Gauss–Legendre rule plus the Legendre table needed for projection.
#[derive(Debug, Clone)]
pub(crate) struct FilonRule {
    pub gl: GaussLegendre,
    /// `ptab[j * n + k] = P_k(x_j)`.
    ptab: Vec<f64>,
}

impl FilonRule {
    pub fn new(order: usize) -> Self {
        let gl = GaussLegendre::new(order);
        let n = gl.order();
        let mut ptab = vec![0.0; n * n];
        for (j, &x) in gl.nodes.iter().enumerate() {
            legendre_values(n, x, &mut ptab[j * n..(j + 1) * n]);
        }
        FilonRule { gl, ptab }
    }

    pub fn order(&self) -> usize {
        self.gl.order()
    }

    /// Nodes mapped to `[a, b]`.
    pub fn nodes_on(&self, a: f64, b: f64) -> impl Iterator<Item = f64> + '_ {
        let m = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        self.gl.nodes.iter().map(move |x| m + h * x)
    }

    /// Plain Gauss sum of node values over a panel of half width `h`.
    pub fn gauss_sum(&self, values: &[f64], h: f64) -> f64 {
        values.iter().zip(&self.gl.weights).map(|(v, w)| v * w).sum::<f64>() * h
    }

    fn legendre_coefficients(&self, values: &[f64], out: &mut [f64]) {
        let n = self.order();
        for (k, c) in out.iter_mut().enumerate().take(n) {
            let mut s = 0.0;
            for j in 0..n {
                s += self.gl.weights[j] * values[j] * self.ptab[j * n + k];
            }
            *c = (2 * k + 1) as f64 / 2.0 * s;
        }
    }

    /// `∫_a^b [B(r) cos(ωr) + C(r) sin(ωr)] dr` from node samples of `B`
    /// and `C` on `[a, b]`.
    pub fn oscillatory(&self, a: f64, b: f64, omega: f64, bv: &[f64], cv: &[f64]) -> f64 {
        let n = self.order();
        let m = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let theta = omega * h;
        let mut cb = vec![0.0; n];
        let mut cc = vec![0.0; n];
        self.legendre_coefficients(bv, &mut cb);
        self.legendre_coefficients(cv, &mut cc);
        let mut jk = vec![0.0; n];
        spherical_bessel(theta, &mut jk);
        let mut s = Complex64::new(0.0, 0.0);
        let mut ik = Complex64::new(1.0, 0.0);
        for k in 0..n {
            s += Complex64::new(cb[k], -cc[k]) * ik * (2.0 * jk[k]);
            ik *= Complex64::i();
        }
        (phase(omega, m) * s).re * h
    }
}

/// `e^{iωr}` with the product `ωr` carried to double-double accuracy.
pub(crate) fn phase(omega: f64, r: f64) -> Complex64 {
    let (s, c) = sin_cos_product(omega, r);
    Complex64::new(c, s)
}

/// `(sin(ωr), cos(ωr))` with the rounding error of the product `ωr`
/// added back.
#[inline]
pub(crate) fn sin_cos_product(omega: f64, r: f64) -> (f64, f64) {
    let p = omega * r;
    let e = omega.mul_add(r, -p);
    let (s, c) = p.sin_cos();
    let (se, ce) = e.sin_cos();
    (s * ce + c * se, c * ce - s * se)
}

/// Spherical Bessel functions `j_0..j_{n-1}` at `θ > 0`.
pub(crate) fn spherical_bessel(theta: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    if theta == 0.0 {
        out.fill(0.0);
        out[0] = 1.0;
        return;
    }
    if theta > n as f64 {
        let (s, c) = theta.sin_cos();
        out[0] = s / theta;
        if n > 1 {
            out[1] = s / (theta * theta) - c / theta;
        }
        for k in 1..n - 1 {
            out[k + 1] = (2 * k + 1) as f64 / theta * out[k] - out[k - 1];
        }
        return;
    }
    // Miller's backward recurrence, normalised against whichever of the
    // closed forms j_0, j_1 is larger.
    let start = n + 20 + theta as usize;
    let mut next = 0.0f64;
    let mut cur = 1e-30f64;
    let mut vals = vec![0.0; n.max(2)];
    for k in (0..=start).rev() {
        if k < vals.len() {
            vals[k] = cur;
        }
        if k == 0 {
            break;
        }
        let prev = (2 * k + 1) as f64 / theta * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > 1e200 {
            cur *= 1e-200;
            next *= 1e-200;
            for v in vals.iter_mut() {
                *v *= 1e-200;
            }
        }
    }
    let (s, c) = theta.sin_cos();
    let j0 = s / theta;
    let j1 = s / (theta * theta) - c / theta;
    let scale = if j0.abs() >= j1.abs() { j0 / vals[0] } else { j1 / vals[1] };
    for (o, v) in out.iter_mut().zip(&vals) {
        *o = scale * v;
    }
}
