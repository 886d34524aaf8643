use cjl::fox::{d1_dim, default_fingerprint, fingerprint_distance, Presentation, RepPoint};
use cjl::gfamily::{
    build_h_zeta_g, sample_f_zeta, subfamilies, FZetaParams, GParams, HZetaGParams, Subfamily,
};
use cjl::numerics::{theta, Complex64};
use cjl::sampling::rng_from_seed;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn f_zeta_points(gp: &GParams, seed: u64) -> Vec<RepPoint> {
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    for sub in subfamilies(gp).unwrap() {
        if let Subfamily::FZeta { zeta } = sub {
            for _ in 0..10 {
                out.push(sample_f_zeta(gp, zeta, &mut rng).unwrap());
            }
        }
    }
    out
}

fn param(rep: &RepPoint, name: &str) -> Complex64 {
    rep.param(name).unwrap()
}

#[test]
fn trace_condition_holds_on_f_zeta() {
    for m in [-3i64, -2, -1, 1, 2, 3] {
        for n in 1..=3 {
            let gp = GParams::new(m, n).unwrap();
            for rep in f_zeta_points(&gp, 7) {
                let (w, z) = (rep.image(0), rep.image(2));
                let (a, d) = (w.at(0, 0), w.at(1, 1));
                let (l, zeta) = (param(&rep, "lambda"), param(&rep, "zeta"));
                let tn = theta(l, n);
                let (lm, zm) = (l.powi(m as i32), zeta.powi(m as i32));
                let lhs = tn * (lm.inv() - zm.inv()) * (a + d) * a * d
                    + (lm * tn + zm) * a
                    + (l.powi((n + m) as i32) - tn * zm) * d;
                let rhs = (l.powi(n as i32) + 1.0) * lm * zm;
                let scale = lhs.norm().max(rhs.norm()).max(1.0);
                assert!(
                    (lhs - rhs).norm() <= 1e-9 * scale,
                    "({m},{n}) {:?}",
                    rep.params()
                );
                let v = z.pow(n).unwrap() * w.inverse().unwrap() * z.pow(-m).unwrap() * w * w;
                assert!((v.trace() - z.pow(n).unwrap().trace()).norm() <= 1e-9 * scale);
            }
        }
    }
}

#[test]
fn det_star_of_f_zeta_matches_determinants() {
    for (m, n) in [(1, 1), (2, 2), (-2, 2), (3, 3), (-3, 2), (2, 3)] {
        let gp = GParams::new(m, n).unwrap();
        for rep in f_zeta_points(&gp, 11) {
            let p = FZetaParams {
                zeta: param(&rep, "zeta"),
                lambda: param(&rep, "lambda"),
                b: param(&rep, "b"),
                c: param(&rep, "c"),
                aprime: param(&rep, "aprime"),
                bprime: param(&rep, "bprime"),
            };
            let (dz, t) = p.det_star(&gp);
            let dets = rep.det_star();
            assert!((dz - dets[2]).norm() <= 1e-10 * dz.norm().max(1.0));
            assert!((t - dets[1]).norm() <= 1e-10 * t.norm().max(1.0));
        }
    }
}

#[test]
fn h_zeta_fiber_over_fixed_target_is_two_dimensional() {
    let (n, zeta, t) = (2i64, c(-1.0, 0.0), c(0.7, 0.3));
    let pres = Presentation::g_family(-n, n);
    let grid: Vec<f64> = (0..5).map(|i| 0.3 + 0.2 * i as f64).collect();
    let mut prints = Vec::new();
    for &ar in &grid {
        for &cr in &grid {
            let (aprime, cprime) = (c(ar, 0.1), c(cr, -0.2));
            let d = 1.0 + cprime * cprime * (n * n) as f64 / t;
            let rep = build_h_zeta_g(
                n,
                &HZetaGParams {
                    zeta,
                    aprime,
                    cprime,
                    d,
                },
            )
            .unwrap();
            let dets = rep.det_star();
            assert!((dets[1] - t).norm() <= 1e-10);
            assert!((dets[2] - zeta * zeta).norm() <= 1e-10);
            assert_eq!(d1_dim(&pres, &rep).unwrap(), 3);
            prints.push(default_fingerprint(&rep));
        }
    }
    for i in 0..prints.len() {
        for j in i + 1..prints.len() {
            assert!(
                fingerprint_distance(&prints[i], &prints[j]) > 1e-6,
                "{i} {j}"
            );
        }
    }
}
