use dampwave::gridlab::*;
use dampwave::profiles::{gaussian, mexican_hat, sample_on_grid};
use dampwave::quadrature::{plancherel_norm, QuadratureSpec, Weight};
use dampwave::symbols::{Multiplier, SymbolParams};

#[test]
fn grid_and_quadrature_norms_agree_in_one_dimension() {
    let spec = GridSpec::new(1, 4096, 64.0).unwrap();
    let g = gaussian(1.0, 1.0, 1).unwrap();
    let u1 = sample_on_grid(&g, &spec).unwrap();
    let zero = GridField::zeros(spec);
    let p = SymbolParams::new(1.0, 1, 1.0).unwrap();
    for t in [0.5, 4.0, 16.0, 32.0] {
        let grid = l2_norm(&evolve_damped(&zero, &u1, t, 1.0).unwrap().u);
        let quad = plancherel_norm(Multiplier::K1, t, &p, &Weight::Profile(g), &QuadratureSpec::default())
            .unwrap()
            .value;
        assert!((grid - quad).abs() <= 1e-3 * quad, "t={t}: {grid} vs {quad}");
        for m in Multiplier::ALL {
            let grid = l2_norm(&apply_multiplier(&u1, m, t, &p).unwrap());
            let quad = plancherel_norm(m, t, &p, &Weight::Profile(g), &QuadratureSpec::default())
                .unwrap()
                .value;
            assert!((grid - quad).abs() <= 1e-3 * quad, "{} t={t}: {grid} vs {quad}", m.name());
        }
    }
}

#[test]
fn grid_and_quadrature_norms_agree_in_two_dimensions() {
    // K1 - G carries a diffusive tail, so the box must be wide enough
    // for its periodic images to stay negligible up to t = L/2
    let spec = GridSpec::new(2, 512, 32.0).unwrap();
    let g = gaussian(1.0, 1.0, 2).unwrap();
    let u1 = sample_on_grid(&g, &spec).unwrap();
    let p = SymbolParams::new(1.0, 2, 1.0).unwrap();
    for t in [1.0, 4.0, 8.0, 16.0] {
        for m in Multiplier::ALL {
            let grid = l2_norm(&apply_multiplier(&u1, m, t, &p).unwrap());
            let quad = plancherel_norm(m, t, &p, &Weight::Profile(g), &QuadratureSpec::default())
                .unwrap()
                .value;
            assert!((grid - quad).abs() <= 1e-3 * quad, "{} t={t}: {grid} vs {quad}", m.name());
        }
    }
}

#[test]
fn solution_minus_free_wave_decomposes() {
    let spec = GridSpec::new(1, 2048, 48.0).unwrap();
    let u0 = sample_on_grid(&mexican_hat(1.0, 1.5, 1).unwrap(), &spec).unwrap();
    let u1 = sample_on_grid(&gaussian(2.0, 0.8, 1).unwrap(), &spec).unwrap();
    let zero = GridField::zeros(spec);
    let p = SymbolParams::new(0.7, 1, 1.0).unwrap();
    for t in [0.3, 2.0, 9.0] {
        let u = evolve_damped(&u0, &u1, t, p.nu).unwrap().u;
        let w = evolve_wave(&zero, &u1, t).unwrap().u;
        let lhs = u.sub(&w).unwrap();
        let rhs = apply_multiplier(&u0, Multiplier::K0, t, &p)
            .unwrap()
            .add(&apply_multiplier(&u1, Multiplier::K1MinusG, t, &p).unwrap())
            .unwrap()
            .add(&apply_multiplier(&u1, Multiplier::D, t, &p).unwrap())
            .unwrap();
        let err = l2_norm(&lhs.sub(&rhs).unwrap());
        assert!(err <= 1e-10 * l2_norm(&lhs), "t={t}: {err}");
    }
}

#[test]
fn two_dimensional_evolution_is_real_and_dissipative() {
    let spec = GridSpec::new(2, 256, 12.0).unwrap();
    let g = sample_on_grid(&gaussian(1.0, 1.0, 2).unwrap(), &spec).unwrap();
    let rep = dissipation_check(&g, &g, 1.0, &[0.0, 0.5, 1.0, 2.0, 4.0], 1e-4).unwrap();
    assert!(rep.monotone);
    assert!(rep.max_defect <= 1e-5, "{}", rep.max_defect);
    let ev = evolve_damped(&g, &g, 3.0, 1.0).unwrap();
    assert!(ev.imag_residue <= 1e-12);
}

#[test]
fn horizon_is_flagged_not_fatal() {
    let spec = GridSpec::new(1, 1024, 16.0).unwrap();
    let g = sample_on_grid(&gaussian(1.0, 1.0, 1).unwrap(), &spec).unwrap();
    assert!(evolve_wave(&g, &g, 4.0).unwrap().horizon_ok);
    assert!(!evolve_wave(&g, &g, 12.0).unwrap().horizon_ok);
}

#[test]
fn raw_dumps_have_the_documented_layout() {
    let spec = GridSpec::new(2, 16, 3.0).unwrap();
    let f = GridField::from_fn(spec, |x| x[0] - 2.0 * x[1]).unwrap();
    let mut buf = Vec::new();
    f.write_raw(&mut buf).unwrap();
    assert_eq!(buf.len(), 24 + 8 * 256);
    assert_eq!(u64::from_le_bytes(buf[0..8].try_into().unwrap()), 2);
    assert_eq!(u64::from_le_bytes(buf[8..16].try_into().unwrap()), 16);
    assert_eq!(f64::from_le_bytes(buf[16..24].try_into().unwrap()), 3.0);
    // row-major: the second value moves along the last axis
    let v1 = f64::from_le_bytes(buf[32..40].try_into().unwrap());
    assert_eq!(v1, f.values[1]);
    let back = GridField::read_raw(&buf[..]).unwrap();
    assert_eq!(back.values, f.values);
}
