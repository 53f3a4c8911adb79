use dampwave::asymptotics::*;
use dampwave::profiles::{gaussian, ProfileKind};
use dampwave::quadrature::{composite_norm, plancherel_norm, QuadratureSpec, Term, Weight};
use dampwave::symbols::{Multiplier, SymbolParams};
use proptest::prelude::*;

fn p(n: usize) -> SymbolParams {
    SymbolParams::new(1.0, n, 1.0).unwrap()
}

fn curve_of(points: &[(f64, f64)]) -> NormCurve {
    NormCurve::from_points("synthetic", p(1), ProfileSpec::default(), points)
}

#[test]
fn difference_norm_grows_past_the_transient() {
    let g = gaussian(1.0, 1.0, 1).unwrap();
    let l = TimeLadder::new(1e2, 1e6, 13).unwrap();
    let c = norm_curve(Quantity::DNorm, &p(1), &g, &l, &QuadratureSpec::default()).unwrap();
    assert!(c.samples.iter().all(|s| s.value.is_finite() && s.value > 0.0));
    for w in c.samples.windows(2).filter(|w| w[0].t >= 1e3) {
        assert!(w[1].value > w[0].value, "t={}", w[1].t);
    }
}

#[test]
fn curves_have_one_sample_per_rung() {
    let g = gaussian(1.0, 1.0, 2).unwrap();
    let l = TimeLadder::new(2.0, 1e3, 8).unwrap();
    for q in Quantity::ALL {
        if q == Quantity::DUnitNorm {
            continue;
        }
        let c = norm_curve(q, &p(2), &g, &l, &QuadratureSpec::default()).unwrap();
        assert_eq!(c.samples.len(), 8, "{}", q.id());
        assert_eq!(c.quantity_id, q.id());
    }
    let j = norm_curve(Quantity::JBetaNorm, &p(2), &g, &l, &QuadratureSpec::default()).unwrap();
    assert!(j.samples[0].value > 0.0);
}

#[test]
fn inadmissible_curves_are_domain_errors() {
    let g = gaussian(1.0, 1.0, 2).unwrap();
    let l = TimeLadder::new(2.0, 1e3, 8).unwrap();
    // unit weight D is not square integrable in two dimensions
    assert!(norm_curve(Quantity::DUnitNorm, &p(2), &g, &l, &QuadratureSpec::default()).is_err());
    assert!(norm_curve(Quantity::DNorm, &p(1), &g, &l, &QuadratureSpec::default()).is_err());
}

#[test]
fn smoothed_slope_matches_brute_oracle() {
    let g = gaussian(1.0, 1.0, 2).unwrap();
    let l = TimeLadder::new(1e3, 1e12, 10).unwrap();
    let c = norm_curve(Quantity::JBetaNorm, &p(2), &g, &l, &QuadratureSpec::default()).unwrap();
    let f = fit_sqrtlog(&c, (1e3, 1e12)).unwrap();
    assert!(f.exponent_or_slope > 0.0);
    let brute: Vec<(f64, f64)> = [1e3, 1e4, 1e5]
        .iter()
        .map(|&t| {
            let v = plancherel_norm(Multiplier::Jbeta, t, &p(2), &Weight::Unit, &QuadratureSpec::brute())
                .unwrap()
                .value;
            (t, v * v)
        })
        .collect();
    let b = (brute[2].1 - brute[0].1) / (brute[2].0 / brute[0].0).ln();
    assert!((f.exponent_or_slope - b).abs() <= 0.2 * b, "{} vs {b}", f.exponent_or_slope);
}

#[test]
fn doubling_ladder_density_moves_exponents_less_than_their_error() {
    let g = gaussian(1.0, 1.0, 1).unwrap();
    let spec = QuadratureSpec::default();
    for q in [Quantity::DNorm, Quantity::K1MinusGNorm, Quantity::UMinusWNorm] {
        let l = TimeLadder::new(1e3, 1e8, 11).unwrap();
        let a = fit_power(&norm_curve(q, &p(1), &g, &l, &spec).unwrap(), (1e3, 1e8)).unwrap();
        let b = fit_power(&norm_curve(q, &p(1), &g, &l.doubled().unwrap(), &spec).unwrap(), (1e3, 1e8)).unwrap();
        let shift = (a.exponent_or_slope - b.exponent_or_slope).abs();
        assert!(shift < a.slope_std_error.max(b.slope_std_error), "{}: shift {shift} vs se {}", q.id(), a.slope_std_error);
    }
}

#[test]
fn lower_bound_chain_holds_on_a_ladder() {
    let g = gaussian(1.0, 1.0, 2).unwrap();
    let spec = QuadratureSpec::default();
    let l = TimeLadder::new(4.0, 1e12, 12).unwrap();
    let get = |q| norm_curve(q, &p(2), &g, &l, &spec).unwrap();
    let (d, jg, j, def) = (get(Quantity::DNorm), get(Quantity::JBetaConvNorm), get(Quantity::JBetaNorm), get(Quantity::JBetaDefectNorm));
    for i in 0..l.points {
        let t = l.values()[i];
        assert!(d.samples[i].value >= jg.samples[i].value, "t={t}");
        let lower = g.mass.abs() * j.samples[i].value - def.samples[i].value;
        assert!(jg.samples[i].value >= lower, "t={t}");
        assert!(lower > 0.0, "t={t}");
    }
}

#[test]
fn verify_rejects_unknown_claims_and_accepts_overrides() {
    assert!(verify("thm0", &VerifyConfig::default()).is_err());
    let cfg = VerifyConfig {
        ladder: Some(TimeLadder::new(1e3, 1e7, 9).unwrap()),
        ..Default::default()
    };
    let r = verify("lem22", &cfg).unwrap();
    assert!(r.pass);
    assert!(r.fits.iter().all(|f| f.fit.window == (1e3, 1e7)));
}

#[test]
fn zero_mass_datum_fails_the_growth_claim() {
    let cfg = VerifyConfig {
        profile: ProfileSpec {
            kind: ProfileKind::MexicanHat,
            amplitude: 1.0,
            sigma: 1.0,
        },
        ..Default::default()
    };
    let r = verify("thm12", &cfg).unwrap();
    assert!(!r.pass);
    assert!(verify("zero_mass_control", &cfg).unwrap().pass);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn power_fit_is_idempotent(alpha in -2.0f64..2.0, c in 0.01f64..100.0, lo in 0.5f64..4.0, decades in 1.0f64..8.0, n in 8usize..40) {
        let l = TimeLadder::new(10f64.powf(lo), 10f64.powf(lo + decades), n).unwrap();
        let pts: Vec<(f64, f64)> = l.values().iter().map(|&t| (t, c * t.powf(alpha))).collect();
        let w = (l.t_min, l.t_max);
        let f = fit_power(&curve_of(&pts), w).unwrap();
        prop_assert!((f.exponent_or_slope - alpha).abs() <= 1e-10);
        prop_assert!((f.prefactor - c).abs() <= 1e-10 * c);
        let again: Vec<(f64, f64)> = l.values().iter().map(|&t| (t, f.prefactor * t.powf(f.exponent_or_slope))).collect();
        let g = fit_power(&curve_of(&again), w).unwrap();
        prop_assert!((g.exponent_or_slope - f.exponent_or_slope).abs() <= 1e-10);
        prop_assert!((0.0..=1.0).contains(&g.r_squared));
    }

    #[test]
    fn sqrtlog_fit_is_idempotent(a in 0.0f64..10.0, b in 0.0f64..5.0, decades in 2.0f64..10.0, n in 8usize..40) {
        let l = TimeLadder::new(10.0, 10f64.powf(1.0 + decades), n).unwrap();
        let pts: Vec<(f64, f64)> = l.values().iter().map(|&t| (t, (a + b * t.ln()).sqrt())).collect();
        let f = fit_sqrtlog(&curve_of(&pts), (l.t_min, l.t_max)).unwrap();
        prop_assert!((f.exponent_or_slope - b).abs() <= 1e-10 * (1.0 + a + b));
        prop_assert!((f.prefactor - a).abs() <= 1e-10 * (1.0 + a + b) * 30.0);
    }

    #[test]
    fn composite_is_below_the_sum_of_its_parts(log_t in -1.0f64..12.0, sigma in 0.3f64..3.0, n in 1usize..=3) {
        let t = 10f64.powf(log_t);
        let g = gaussian(1.0, sigma, n).unwrap();
        let w = Weight::Profile(g);
        let spec = QuadratureSpec::default();
        let parts = [Multiplier::K0, Multiplier::K1MinusG, Multiplier::D];
        let whole = composite_norm(&parts.map(|m| Term::new(m, w)), t, &p(n), &spec).unwrap().value;
        let sum: f64 = parts.iter().map(|&m| plancherel_norm(m, t, &p(n), &w, &spec).unwrap().value).sum();
        prop_assert!(whole <= sum * (1.0 + 1e-9), "{whole} vs {sum}");
    }
}
