use std::f64::consts::PI;

use cntplate::assembly::{assemble_global, BcCode, LoadState, PlateModel};
use cntplate::bench::{run_buckle, RunConfig};
use cntplate::eigen::{negative_count, normalized_factor, smallest_critical_load, CriticalLoad, RESIDUAL_TOL};
use cntplate::micromechanics::{reduced_stiffness, to_bulk_shear, IsotropicElastic};
use nalgebra::DVector;

fn model(code: &str, a: f64, e: f64, load: LoadState) -> PlateModel {
    let mat = IsotropicElastic::new(e, 0.34).unwrap();
    let q = reduced_stiffness(mat, to_bulk_shear(mat).unwrap().g).unwrap();
    let sections = (8.0 * a).ceil() as usize;
    PlateModel::new(1.0, a, 0.01, q, 6, sections, code.parse::<BcCode>().unwrap(), load).unwrap()
}

fn solve(m: &PlateModel) -> CriticalLoad {
    smallest_critical_load(&assemble_global(m).unwrap()).unwrap()
}

#[test]
fn residual_is_small_for_many_codes() {
    for code in ["SSSS", "CCCC", "SCSF", "CSCS", "SFSS", "CFCF"] {
        let m = model(code, 1.3, 2.1, LoadState::uniaxial());
        let sys = assemble_global(&m).unwrap();
        let r = smallest_critical_load(&sys).unwrap();
        let phi = DVector::from_vec(r.mode.clone());
        let res = (&sys.k * &phi - &sys.kg * &phi * r.sigma_cr).norm();
        let bound = RESIDUAL_TOL * (sys.k.norm() + r.sigma_cr * sys.kg.norm()) * phi.norm();
        assert!(res <= bound, "{code}: {res} > {bound}");
        assert!((phi.amax() - 1.0).abs() < 1e-15);
        if let Some(next) = r.next_sigma {
            assert!(next >= r.sigma_cr);
        }
    }
}

#[test]
fn inertia_changes_by_one_across_the_critical_load() {
    let m = model("SCSS", 1.0, 2.1, LoadState::uniaxial());
    let sys = assemble_global(&m).unwrap();
    let r = smallest_critical_load(&sys).unwrap();
    assert_eq!(r.multiplicity, 1);
    assert_eq!(negative_count(&sys.k, &sys.kg, 0.999 * r.sigma_cr), 0);
    assert_eq!(negative_count(&sys.k, &sys.kg, 1.001 * r.sigma_cr), 1);
    let next = r.next_sigma.unwrap();
    assert_eq!(negative_count(&sys.k, &sys.kg, 0.5 * (r.sigma_cr + next)), 1);
}

#[test]
fn modulus_and_load_scale_out_of_lambda() {
    let base = solve(&model("SCSC", 1.2, 2.1, LoadState::uniaxial())).sigma_cr;
    let stiff = solve(&model("SCSC", 1.2, 21.0, LoadState::uniaxial())).sigma_cr;
    assert!((stiff / base - 10.0).abs() < 1e-9);
    let lam = |s: f64, e: f64| normalized_factor(s, e, 0.34, 1.0, 0.01);
    assert!((lam(stiff, 21.0) - lam(base, 2.1)).abs() < 1e-9 * lam(base, 2.1));

    let doubled = solve(&model("SCSC", 1.2, 2.1, LoadState::new(0.0, 2.0, 0.0).unwrap())).sigma_cr;
    assert!((doubled * 2.0 / base - 1.0).abs() < 1e-9);
}

#[test]
fn mirrored_codes_buckle_alike() {
    let pairs = [("SCSS", "SSSC"), ("CSSS", "SSCS"), ("CCSF", "SFCC"), ("CSSF", "SFCS")];
    for (a, b) in pairs {
        let la = solve(&model(a, 1.4, 2.1, LoadState::uniaxial())).sigma_cr;
        let lb = solve(&model(b, 1.4, 2.1, LoadState::uniaxial())).sigma_cr;
        assert!((la - lb).abs() < 1e-8 * la, "{a} {la} vs {b} {lb}");
    }
}

#[test]
fn fundamental_mode_has_one_half_wave_each_way() {
    let m = model("SSSS", 1.0, 2.1, LoadState::uniaxial());
    let sys = assemble_global(&m).unwrap();
    let r = smallest_critical_load(&sys).unwrap();
    let full = sys.layout.expand(&r.mode);
    let sign = m.deflection(&full, 0.5, 0.5).signum();
    for k in 1..40 {
        let s = k as f64 / 40.0;
        assert!(
            m.deflection(&full, s, 0.5) * sign > 0.0,
            "sign change along y = a/2 at x = {s}"
        );
        assert!(
            m.deflection(&full, 0.5, s) * sign > 0.0,
            "sign change along x = b/2 at y = {s}"
        );
    }
    // Sine shape: quarter-point ratio sin(π/4).
    let ratio = m.deflection(&full, 0.25, 0.5) / m.deflection(&full, 0.5, 0.5);
    assert!((ratio - (PI / 4.0).sin()).abs() < 1e-3);
}

#[test]
fn free_edges_soften_and_clamps_stiffen() {
    let lam = |c: &str| run_buckle(&RunConfig::benchmark(c)).unwrap().lambda;
    let (sfsf, sfss, ssss, scss, scsc, cccc) = (
        lam("SFSF"),
        lam("SFSS"),
        lam("SSSS"),
        lam("SCSS"),
        lam("SCSC"),
        lam("CCCC"),
    );
    assert!(sfsf < sfss && sfss < ssss && ssss < scss && scss < scsc && scsc < cccc);
    // A wide plate with free sides behaves like an Euler column: λ ≈ (b/a)².
    assert!((sfsf - 1.0).abs() < 0.1, "{sfsf}");
}
