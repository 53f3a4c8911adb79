//! Command-line front end: argument and config parsing, the four
//! subcommands, and deterministic file output.

mod args;
pub mod config;
pub mod output;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Parser;
use dampwave::asymptotics::{verify, ProfileSpec, TimeLadder, VerificationReport, VerifyConfig, CLAIMS};
use dampwave::gridlab::{self, GridField, GridSpec};
use dampwave::profiles::{sample_on_grid, ProfileKind, RadialProfile};
use dampwave::quadrature::{plancherel_norm, OscillationMode, QuadratureSpec, Weight};
use dampwave::symbols::{Multiplier, SymbolParams};
use rayon::prelude::*;

use args::{Cli, Command};
pub use output::emit_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CLAIM_FAILED: i32 = 3;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "DAMPWAVE_THREADS";

/// A rejected command line or config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    Profile,
    Unit,
    Defect,
}

impl WeightKind {
    fn name(self) -> &'static str {
        match self {
            WeightKind::Profile => "profile",
            WeightKind::Unit => "unit",
            WeightKind::Defect => "defect",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunCommand {
    SymbolsTable {
        params: SymbolParams,
        times: Vec<f64>,
        r_max: f64,
        r_points: usize,
    },
    Norm {
        multiplier: Multiplier,
        params: SymbolParams,
        ladder: TimeLadder,
        weight: WeightKind,
        profile: ProfileSpec,
        quadrature: QuadratureSpec,
    },
    Evolve {
        grid: GridSpec,
        nu: f64,
        times: Vec<f64>,
        u0: Option<ProfileSpec>,
        u1: Option<ProfileSpec>,
        wave: bool,
        dump: bool,
    },
    Verify {
        claims: Vec<String>,
        config: VerifyConfig,
    },
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: RunCommand,
    pub out: PathBuf,
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn positive(flag: &str, v: f64) -> Result<f64, UsageError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(format!("--{flag} must be a positive number, got {v}")))
    }
}

fn dimension(flag: &str, n: usize, max: usize) -> Result<usize, UsageError> {
    if (1..=max).contains(&n) {
        Ok(n)
    } else {
        Err(usage(format!("--{flag} must be between 1 and {max}, got {n}")))
    }
}

fn times(flag: &str, s: &str) -> Result<Vec<f64>, UsageError> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("--{flag} must be a comma-separated list of numbers, got '{s}'")))?;
    if v.is_empty() || v.iter().any(|t| !(*t >= 0.0 && t.is_finite())) {
        return Err(usage(format!("--{flag} needs finite times >= 0, got '{s}'")));
    }
    Ok(v)
}

/// `kind[:amplitude[:sigma]]`.
pub fn parse_profile(flag: &str, s: &str) -> Result<ProfileSpec, UsageError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() > 3 {
        return Err(usage(format!("--{flag}: expected kind[:amplitude[:sigma]], got '{s}'")));
    }
    let kind = ProfileKind::parse(parts[0].trim())
        .ok_or_else(|| usage(format!("--{flag}: unknown profile kind '{}'", parts[0])))?;
    let num = |i: usize| -> Result<f64, UsageError> {
        match parts.get(i) {
            None => Ok(1.0),
            Some(x) => x
                .trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("--{flag}: bad number '{x}'"))),
        }
    };
    let amplitude = num(1)?;
    if !amplitude.is_finite() {
        return Err(usage(format!("--{flag}: amplitude must be finite")));
    }
    let sigma = positive(flag, num(2)?)?;
    Ok(ProfileSpec {
        kind,
        amplitude,
        sigma,
    })
}

fn profile_text(p: &ProfileSpec) -> String {
    format!("{}:{}:{}", p.kind.name(), p.amplitude, p.sigma)
}

fn optional_profile(flag: &str, s: &str) -> Result<Option<ProfileSpec>, UsageError> {
    if s.trim() == "zero" {
        Ok(None)
    } else {
        parse_profile(flag, s).map(Some)
    }
}

fn ladder(s: &str) -> Result<TimeLadder, UsageError> {
    TimeLadder::parse(s).map_err(|e| usage(format!("--ladder: {e}")))
}

fn quadrature(q: &args::Quadrature) -> Result<QuadratureSpec, UsageError> {
    let mode = OscillationMode::parse(&q.mode).ok_or_else(|| usage(format!("--mode must be filon or brute, got '{}'", q.mode)))?;
    let spec = QuadratureSpec {
        panel_order: q.panel_order,
        smooth_panel_width: q.panel_width,
        tail_cutoff_digits: q.tail_digits,
        mode,
    };
    spec.validate().map_err(|e| {
        let flag = if !(4..=64).contains(&q.panel_order) {
            "panel-order"
        } else if !(1..=15).contains(&q.tail_digits) {
            "tail-digits"
        } else {
            "panel-width"
        };
        usage(format!("--{flag}: {e}"))
    })?;
    Ok(spec)
}

fn physics(p: &args::Physics, n: usize) -> Result<SymbolParams, UsageError> {
    Ok(SymbolParams {
        nu: positive("nu", p.nu)?,
        dim: n,
        beta: positive("beta", p.beta)?,
    })
}

/// Parses and validates a full argument vector (program name first),
/// expanding `--config` files.
pub fn parse_args(argv: &[String]) -> Result<RunConfig, clap::Error> {
    let expanded = config::expand(argv).map_err(|e| usage_error(&e.0))?;
    let cli = Cli::try_parse_from(&expanded)?;
    validate(cli).map_err(|e| usage_error(&e.0))
}

fn usage_error(msg: &str) -> clap::Error {
    clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{msg}\n"))
}

fn validate(cli: Cli) -> Result<RunConfig, UsageError> {
    Ok(match cli.command {
        Command::SymbolsTable(a) => {
            if a.r_points < 2 {
                return Err(usage(format!("--r-points must be at least 2, got {}", a.r_points)));
            }
            RunConfig {
                command: RunCommand::SymbolsTable {
                    params: physics(&a.physics, 1)?,
                    times: times("times", &a.times)?,
                    r_max: positive("r-max", a.r_max)?,
                    r_points: a.r_points,
                },
                out: a.out,
            }
        }
        Command::Norm(a) => {
            let multiplier = Multiplier::parse(&a.multiplier)
                .ok_or_else(|| usage(format!("--multiplier: unknown multiplier '{}'", a.multiplier)))?;
            let weight = match a.weight.as_str() {
                "profile" => WeightKind::Profile,
                "unit" => WeightKind::Unit,
                "defect" => WeightKind::Defect,
                w => return Err(usage(format!("--weight must be profile, unit or defect, got '{w}'"))),
            };
            RunConfig {
                command: RunCommand::Norm {
                    multiplier,
                    params: physics(&a.physics, dimension("n", a.n, 3)?)?,
                    ladder: ladder(&a.ladder)?,
                    weight,
                    profile: parse_profile("profile", &a.profile)?,
                    quadrature: quadrature(&a.quadrature)?,
                },
                out: a.out,
            }
        }
        Command::Evolve(a) => {
            let n = dimension("n", a.n, 2)?;
            positive("half-width", a.half_width)?;
            let grid = GridSpec::new(n, a.grid_points, a.half_width).map_err(|e| usage(format!("--grid-points: {e}")))?;
            RunConfig {
                command: RunCommand::Evolve {
                    grid,
                    nu: positive("nu", a.nu)?,
                    times: times("times", &a.times)?,
                    u0: optional_profile("u0", &a.u0)?,
                    u1: optional_profile("u1", &a.u1)?,
                    wave: a.wave,
                    dump: a.dump,
                },
                out: a.out,
            }
        }
        Command::Verify(a) => {
            let claims = if a.claim == "all" {
                CLAIMS.iter().map(|s| s.to_string()).collect()
            } else if CLAIMS.contains(&a.claim.as_str()) {
                vec![a.claim.clone()]
            } else {
                return Err(usage(format!("--claim: unknown claim '{}'", a.claim)));
            };
            let p = physics(&a.physics, 1)?;
            let grid = GridSpec::new(1, a.grid_points, positive("half-width", a.half_width)?)
                .map_err(|e| usage(format!("--grid-points: {e}")))?;
            RunConfig {
                command: RunCommand::Verify {
                    claims,
                    config: VerifyConfig {
                        nu: p.nu,
                        beta: p.beta,
                        profile: parse_profile("profile", &a.profile)?,
                        ladder: a.ladder.as_deref().map(ladder).transpose()?,
                        quadrature: quadrature(&a.quadrature)?,
                        grid_points: grid.points_per_dim,
                        grid_half_width: grid.half_width,
                    },
                },
                out: a.out,
            }
        }
    })
}

fn list(v: &[f64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn ladder_text(l: &TimeLadder) -> String {
    format!("{}:{}:{}", l.t_min, l.t_max, l.points)
}

fn quadrature_lines(q: &QuadratureSpec) -> Vec<(&'static str, String)> {
    vec![
        ("mode", q.mode.name().to_string()),
        ("panel-order", q.panel_order.to_string()),
        ("panel-width", q.smooth_panel_width.to_string()),
        ("tail-digits", q.tail_cutoff_digits.to_string()),
    ]
}

impl RunConfig {
    pub fn subcommand(&self) -> &'static str {
        match self.command {
            RunCommand::SymbolsTable { .. } => "symbols-table",
            RunCommand::Norm { .. } => "norm",
            RunCommand::Evolve { .. } => "evolve",
            RunCommand::Verify { .. } => "verify",
        }
    }

    /// `key = value` form accepted by `--config`; every setting except the
    /// output directory, keys sorted after the leading `command`.
    pub fn canonical(&self) -> String {
        let mut kv: Vec<(&str, String)> = match &self.command {
            RunCommand::SymbolsTable {
                params,
                times,
                r_max,
                r_points,
            } => vec![
                ("nu", params.nu.to_string()),
                ("beta", params.beta.to_string()),
                ("times", list(times)),
                ("r-max", r_max.to_string()),
                ("r-points", r_points.to_string()),
            ],
            RunCommand::Norm {
                multiplier,
                params,
                ladder,
                weight,
                profile,
                quadrature,
            } => {
                let mut v = vec![
                    ("multiplier", multiplier.name().to_string()),
                    ("n", params.dim.to_string()),
                    ("nu", params.nu.to_string()),
                    ("beta", params.beta.to_string()),
                    ("ladder", ladder_text(ladder)),
                    ("weight", weight.name().to_string()),
                    ("profile", profile_text(profile)),
                ];
                v.extend(quadrature_lines(quadrature));
                v
            }
            RunCommand::Evolve {
                grid,
                nu,
                times,
                u0,
                u1,
                wave,
                dump,
            } => {
                let p = |x: &Option<ProfileSpec>| x.as_ref().map_or("zero".to_string(), profile_text);
                vec![
                    ("n", grid.dim.to_string()),
                    ("grid-points", grid.points_per_dim.to_string()),
                    ("half-width", grid.half_width.to_string()),
                    ("nu", nu.to_string()),
                    ("times", list(times)),
                    ("u0", p(u0)),
                    ("u1", p(u1)),
                    ("wave", wave.to_string()),
                    ("dump", dump.to_string()),
                ]
            }
            RunCommand::Verify { claims, config } => {
                let claim = if claims.len() == 1 { claims[0].clone() } else { "all".to_string() };
                let mut v = vec![
                    ("claim", claim),
                    ("nu", config.nu.to_string()),
                    ("beta", config.beta.to_string()),
                    ("profile", profile_text(&config.profile)),
                    ("grid-points", config.grid_points.to_string()),
                    ("half-width", config.grid_half_width.to_string()),
                ];
                if let Some(l) = &config.ladder {
                    v.push(("ladder", ladder_text(l)));
                }
                v.extend(quadrature_lines(&config.quadrature));
                v
            }
        };
        kv.sort_by(|a, b| a.0.cmp(b.0));
        let mut s = format!("command = {}\n", self.subcommand());
        for (k, v) in kv {
            s.push_str(&format!("{k} = {v}\n"));
        }
        s
    }
}

/// Outcome of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Done,
    ClaimsFailed(Vec<String>),
}

fn build_profile(p: &ProfileSpec, n: usize) -> anyhow::Result<RadialProfile> {
    Ok(p.build(n)?)
}

fn symbols_table(params: &SymbolParams, times: &[f64], r_max: f64, r_points: usize, out: &Path) -> anyhow::Result<()> {
    let mut header = vec!["t", "r"];
    header.extend(Multiplier::ALL.iter().map(|m| m.name()));
    let mut rows = Vec::new();
    for &t in times {
        for i in 0..r_points {
            let r = r_max * i as f64 / (r_points - 1) as f64;
            let mut row = vec![output::fmt_f64(t), output::fmt_f64(r)];
            for m in Multiplier::ALL {
                row.push(output::fmt_f64(m.eval(t, r, params)?));
            }
            rows.push(row);
        }
    }
    output::write_csv(&out.join("symbols_table.csv"), &header, &rows)?;
    Ok(())
}

fn norm(
    m: Multiplier,
    params: &SymbolParams,
    ladder: &TimeLadder,
    weight: WeightKind,
    profile: &ProfileSpec,
    spec: &QuadratureSpec,
    out: &Path,
) -> anyhow::Result<()> {
    let g = build_profile(profile, params.dim)?;
    let w = match weight {
        WeightKind::Profile => Weight::Profile(g),
        WeightKind::Unit => Weight::Unit,
        WeightKind::Defect => Weight::MassDefect(g),
    };
    let results = ladder
        .values()
        .par_iter()
        .map(|&t| plancherel_norm(m, t, params, &w, spec).map(|r| (t, r)))
        .collect::<dampwave::Result<Vec<_>>>()?;
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|(t, r)| {
            vec![
                output::fmt_f64(*t),
                output::fmt_f64(r.value),
                output::fmt_f64(r.abs_error_estimate),
                r.panels_used.to_string(),
            ]
        })
        .collect();
    let name = format!("norm_{}_{}d.csv", m.name(), params.dim);
    output::write_csv(&out.join(name), &["t", "value", "abs_error_estimate", "panels_used"], &rows)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn evolve(
    grid: &GridSpec,
    nu: f64,
    times: &[f64],
    u0: &Option<ProfileSpec>,
    u1: &Option<ProfileSpec>,
    wave: bool,
    dump: bool,
    out: &Path,
) -> anyhow::Result<()> {
    let field = |p: &Option<ProfileSpec>| -> anyhow::Result<GridField> {
        match p {
            None => Ok(GridField::zeros(*grid)),
            Some(p) => Ok(sample_on_grid(&build_profile(p, grid.dim)?, grid)?),
        }
    };
    let f0 = field(u0)?;
    let f1 = field(u1)?;
    let mut rows = Vec::new();
    for (i, &t) in times.iter().enumerate() {
        let ev = if wave {
            gridlab::evolve_wave(&f0, &f1, t)?
        } else {
            gridlab::evolve_damped(&f0, &f1, t, nu)?
        };
        let e = gridlab::energy(&ev.u, &ev.ut)?;
        let d = if wave { 0.0 } else { gridlab::dissipation(&ev.ut, nu) };
        rows.push(vec![
            output::fmt_f64(t),
            output::fmt_f64(gridlab::l2_norm(&ev.u)),
            output::fmt_f64(e),
            output::fmt_f64(d),
            u8::from(ev.horizon_ok).to_string(),
        ]);
        if dump {
            let path = out.join(format!("u_{i}.bin"));
            let f = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            ev.u.write_raw(std::io::BufWriter::new(f))?;
        }
    }
    output::write_csv(
        &out.join("evolve.csv"),
        &["t", "l2_norm", "energy", "dissipation", "horizon_ok"],
        &rows,
    )?;
    Ok(())
}

/// Runs the reports in registry order; curves inside each claim run in
/// parallel.
pub fn run_claims(claims: &[String], config: &VerifyConfig) -> anyhow::Result<Vec<VerificationReport>> {
    claims
        .iter()
        .map(|c| verify(c, config).with_context(|| format!("claim {c}")))
        .collect()
}

/// Executes a validated configuration, writing into `cfg.out`.
pub fn execute(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let out = &cfg.out;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    fs::write(out.join("run.conf"), cfg.canonical()).with_context(|| format!("writing into {}", out.display()))?;
    match &cfg.command {
        RunCommand::SymbolsTable {
            params,
            times,
            r_max,
            r_points,
        } => symbols_table(params, times, *r_max, *r_points, out)?,
        RunCommand::Norm {
            multiplier,
            params,
            ladder,
            weight,
            profile,
            quadrature,
        } => norm(*multiplier, params, ladder, *weight, profile, quadrature, out)?,
        RunCommand::Evolve {
            grid,
            nu,
            times,
            u0,
            u1,
            wave,
            dump,
        } => evolve(grid, *nu, times, u0, u1, *wave, *dump, out)?,
        RunCommand::Verify { claims, config } => {
            let reports = run_claims(claims, config)?;
            emit_report(&reports, out).with_context(|| format!("writing reports into {}", out.display()))?;
            for r in &reports {
                eprintln!("{:<20} {}", r.claim_id, if r.pass { "pass" } else { "FAIL" });
            }
            let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| r.claim_id.clone()).collect();
            if !failed.is_empty() {
                return Ok(Outcome::ClaimsFailed(failed));
            }
        }
    }
    Ok(Outcome::Done)
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n >= 1)
        .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got '{v}'")))?;
    // A pool may already exist when called twice in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Full entry point; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let cfg = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cfg) {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::ClaimsFailed(ids)) => {
            eprintln!("failed claims: {}", ids.join(", "));
            EXIT_CLAIM_FAILED
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_RUNTIME
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("dampwave").chain(s.split_whitespace()).map(String::from).collect()
    }

    #[test]
    fn verify_defaults() {
        let c = parse_args(&argv("verify --claim thm11")).unwrap();
        let RunCommand::Verify { claims, config } = &c.command else { panic!() };
        assert_eq!(claims, &["thm11".to_string()]);
        assert_eq!(config.nu, 1.0);
        assert_eq!(config.beta, 1.0);
        assert_eq!(config.profile, ProfileSpec::default());
        assert!(config.ladder.is_none());
    }

    #[test]
    fn norm_ladder() {
        let c = parse_args(&argv("norm --multiplier D --n 1 --ladder 100:1e8:25")).unwrap();
        let RunCommand::Norm { ladder, multiplier, .. } = &c.command else { panic!() };
        assert_eq!(ladder.values().len(), 25);
        assert_eq!(*multiplier, Multiplier::D);
    }

    #[test]
    fn rejects_bad_values() {
        for bad in [
            "verify --nu -1",
            "verify --nu 0",
            "verify --claim nope",
            "verify --frobnicate 3",
            "norm --multiplier Q",
            "norm --multiplier D --n 4",
            "norm --multiplier D --ladder 1:10:8",
            "norm --multiplier D --mode fast",
            "evolve --grid-points 1000",
            "evolve --n 3",
            "symbols-table --times 1,x",
        ] {
            let e = parse_args(&argv(bad)).unwrap_err();
            assert_eq!(e.exit_code(), EXIT_USAGE, "{bad}");
        }
        let e = parse_args(&argv("verify --nu -1")).unwrap_err().to_string();
        assert!(e.contains("--nu"), "{e}");
    }

    #[test]
    fn later_flags_win() {
        let c = parse_args(&argv("verify --nu 2 --nu 3")).unwrap();
        let RunCommand::Verify { config, .. } = &c.command else { panic!() };
        assert_eq!(config.nu, 3.0);
    }

    #[test]
    fn profile_specs() {
        let p = parse_profile("profile", "mexican_hat:2:0.5").unwrap();
        assert_eq!((p.kind, p.amplitude, p.sigma), (ProfileKind::MexicanHat, 2.0, 0.5));
        assert_eq!(parse_profile("profile", "gaussian").unwrap(), ProfileSpec::default());
        assert!(parse_profile("profile", "gaussian:1:-1").is_err());
        assert!(parse_profile("profile", "box").is_err());
    }

    #[test]
    fn canonical_round_trip() {
        let dir = std::env::temp_dir().join(format!("dampwave-canon-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        for line in [
            "verify --claim lem22 --nu 0.5 --profile mexican_hat:2:0.5 --ladder 10:1e4:9 --mode brute",
            "norm --multiplier Jbeta --n 2 --weight unit --beta 0.25",
            "evolve --n 2 --grid-points 64 --half-width 8 --u1 gaussian --wave --dump",
            "symbols-table --times 0,1.5 --r-points 5",
        ] {
            let c = parse_args(&argv(line)).unwrap();
            let path = dir.join("run.conf");
            fs::write(&path, c.canonical()).unwrap();
            let back = parse_args(&argv(&format!("--config {}", path.display()))).unwrap();
            assert_eq!(back.command, c.command, "{line}");
            assert_eq!(back.canonical(), c.canonical());
        }
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn flags_override_config() {
        let dir = std::env::temp_dir().join(format!("dampwave-over-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("a.conf");
        fs::write(&path, "command = verify\nnu = 0.5\nclaim = thm11\n").unwrap();
        let c = parse_args(&argv(&format!("verify --config {} --nu 2", path.display()))).unwrap();
        let RunCommand::Verify { config, claims } = &c.command else { panic!() };
        assert_eq!(config.nu, 2.0);
        assert_eq!(claims, &["thm11".to_string()]);
        fs::write(&path, "bogus = 1\n").unwrap();
        assert!(parse_args(&argv(&format!("verify --config {}", path.display()))).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
