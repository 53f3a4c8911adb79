use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "dampwave",
    version,
    about = "Fourier-side laboratory for the strongly damped wave equation",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate every multiplier on a (t, r) grid.
    SymbolsTable(SymbolsArgs),
    /// Plancherel norm of one multiplier over a time ladder.
    Norm(NormArgs),
    /// Evolve initial data on the periodic FFT grid.
    Evolve(EvolveArgs),
    /// Run claim verifiers and write curves and reports.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Physics {
    /// Viscosity ν > 0.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub nu: f64,
    /// Smoothing parameter β > 0 of J^(β).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Debug, Clone, Args)]
pub struct Quadrature {
    /// Oscillatory panel treatment: filon or brute.
    #[arg(long, default_value = "filon")]
    pub mode: String,
    /// Gauss–Legendre order per panel.
    #[arg(long, default_value_t = 16)]
    pub panel_order: usize,
    /// Panel width relative to the smallest feature scale.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub panel_width: f64,
    /// Stop once the tail is below 10^-digits of the accumulated value.
    #[arg(long, default_value_t = 12)]
    pub tail_digits: u32,
}

#[derive(Debug, Clone, Args)]
pub struct SymbolsArgs {
    #[command(flatten)]
    pub physics: Physics,
    /// Comma-separated times.
    #[arg(long, default_value = "0,0.5,1,2,10")]
    pub times: String,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub r_max: f64,
    /// Number of radii, equally spaced on [0, r_max].
    #[arg(long, default_value_t = 81)]
    pub r_points: usize,
    #[arg(long, default_value = "dampwave-out")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct NormArgs {
    /// K0, K1, G, W, D, Jbeta or K1_minus_G.
    #[arg(long)]
    pub multiplier: String,
    /// Space dimension (1, 2 or 3).
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Geometric ladder t_min:t_max:points.
    #[arg(long, default_value = "1000:1e8:21")]
    pub ladder: String,
    /// profile, unit or defect (ĝ - m_g).
    #[arg(long, default_value = "profile")]
    pub weight: String,
    /// kind[:amplitude[:sigma]] with kind gaussian, mexican_hat or scaled_gaussian.
    #[arg(long, default_value = "gaussian")]
    pub profile: String,
    #[command(flatten)]
    pub physics: Physics,
    #[command(flatten)]
    pub quadrature: Quadrature,
    #[arg(long, default_value = "dampwave-out")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    /// Space dimension (1 or 2).
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Points per dimension, a power of two.
    #[arg(long, default_value_t = 4096)]
    pub grid_points: usize,
    /// Half width L of the box [-L, L)^n.
    #[arg(long, default_value_t = 64.0, allow_negative_numbers = true)]
    pub half_width: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub nu: f64,
    /// Comma-separated output times.
    #[arg(long, default_value = "0,1,2,4,8,16")]
    pub times: String,
    /// Initial displacement: a profile spec or `zero`.
    #[arg(long, default_value = "gaussian")]
    pub u0: String,
    /// Initial velocity: a profile spec or `zero`.
    #[arg(long, default_value = "zero")]
    pub u1: String,
    /// Evolve the free wave equation instead.
    #[arg(long)]
    pub wave: bool,
    /// Also write raw field dumps u_<index>.bin.
    #[arg(long)]
    pub dump: bool,
    #[arg(long, default_value = "dampwave-out")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// A claim id or `all`.
    #[arg(long, default_value = "all")]
    pub claim: String,
    #[command(flatten)]
    pub physics: Physics,
    #[arg(long, default_value = "gaussian")]
    pub profile: String,
    /// Replace every default ladder by t_min:t_max:points.
    #[arg(long)]
    pub ladder: Option<String>,
    #[command(flatten)]
    pub quadrature: Quadrature,
    #[arg(long, default_value_t = 4096)]
    pub grid_points: usize,
    #[arg(long, default_value_t = 64.0, allow_negative_numbers = true)]
    pub half_width: f64,
    #[arg(long, default_value = "dampwave-out")]
    pub out: PathBuf,
}

/// Flags that take no value; in a config file they read `key = true`.
pub(crate) const SWITCHES: [&str; 2] = ["wave", "dump"];
