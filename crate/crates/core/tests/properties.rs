mod common;

use cjl::distinguish::distinguish_g;
use cjl::fox::{fox_derivative, fox_eval, Word};
use cjl::gfamily::{sample_generic_rep_g, GParams};
use cjl::hfamily::{delta_r, gamma, power_identity_residual};
use cjl::numerics::{bracket, int_poly_squarefree, poly_roots, Complex64, IntPoly, Mat2, Mat2xN};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn root_multiplicities_sum_to_degree(roots in prop::collection::vec((-3i64..=3, -3i64..=3), 1..=8)) {
        let values: Vec<Complex64> = roots.iter().map(|&(a, b)| Complex64::new(a as f64 / 2.0, b as f64 / 3.0)).collect();
        let p = cjl::numerics::CPoly::from_roots(&values);
        let set = poly_roots(&p).unwrap();
        prop_assert_eq!(set.total_multiplicity(), p.degree());
        for r in &set.roots {
            if r.multiplicity == 1 {
                prop_assert!(p.relative_residual(r.value) <= 1e-9);
            }
        }
    }

    #[test]
    fn squarefree_agrees_with_root_multiplicities(
        linear in prop::collection::vec(-3i64..=3, 0..=4),
        quad in prop::collection::vec((-3i64..=3, -3i64..=3), 0..=2),
        repeat in prop::bool::ANY,
    ) {
        let mut p = IntPoly::from_i64(&[1]);
        let mul = |a: &IntPoly, b: &[i64]| {
            let b = IntPoly::from_i64(b);
            let mut c = vec![num_bigint::BigInt::from(0); a.coeffs().len() + b.coeffs().len() - 1];
            for (i, x) in a.coeffs().iter().enumerate() {
                for (j, y) in b.coeffs().iter().enumerate() {
                    c[i + j] += x * y;
                }
            }
            IntPoly::new(c)
        };
        for &a in &linear {
            p = mul(&p, &[-a, 1]);
        }
        for &(b, c) in &quad {
            p = mul(&p, &[c, b, 1]);
        }
        if repeat {
            p = mul(&p, &[-2, 1]);
            p = mul(&p, &[-2, 1]);
        }
        prop_assume!(p.degree() >= 1 && p.degree() <= 12);
        let exact = int_poly_squarefree(&p).unwrap();
        let numeric = poly_roots(&p.to_cpoly()).unwrap().all_simple();
        prop_assert_eq!(exact, numeric);
    }

    #[test]
    fn bracket_matches_geometric_sum(k in -10i64..=10, re in -1.5f64..1.5, im in -1.5f64..1.5) {
        let r = Complex64::new(re, im);
        prop_assume!((r - 1.0).norm() > 1e-3 && r.norm() > 1e-2);
        let got: Complex64 = bracket(k, r).unwrap();
        let want = (r.powi(k as i32) - 1.0) / (r - 1.0);
        prop_assert!((got - want).norm() <= 1e-10 * want.norm().max(1.0));
    }

    #[test]
    fn fox_product_rule(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rep = rand_rep(&mut g, 3);
        let (u, v) = (rand_word(&mut g, 3, 12), rand_word(&mut g, 3, 12));
        let uv = &u * &v;
        for gen in 0..3 {
            let lhs = fox_eval(&uv, gen, &rep);
            let rhs = fox_eval(&u, gen, &rep) + rep.word_eval(&u) * fox_eval(&v, gen, &rep);
            prop_assert!(rel_err(&lhs, &rhs) <= 1e-10);
        }
    }

    #[test]
    fn fox_agrees_with_chain_rule_and_group_ring(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rep = rand_rep(&mut g, 3);
        let w = rand_word(&mut g, 3, 12);
        for gen in 0..3 {
            let direct = fox_eval(&w, gen, &rep);
            prop_assert!(rel_err(&direct, &fox_chain_rule(&w, gen, &rep)) <= 1e-10);
            prop_assert!(rel_err(&direct, &fox_derivative(&w, gen).eval(&rep)) <= 1e-10);
        }
    }

    #[test]
    fn fundamental_identity(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rep = rand_rep(&mut g, 3);
        let w = rand_word(&mut g, 3, 12);
        let one = Mat2::identity();
        let lhs = (0..3).fold(Mat2::zero(), |acc, gen| acc + fox_eval(&w, gen, &rep) * (rep.image(gen) - one));
        prop_assert!(rel_err(&lhs, &(rep.word_eval(&w) - one)) <= 1e-9);
    }

    #[test]
    fn word_inverse_and_substitution(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (u, v) = (rand_word(&mut g, 3, 12), rand_word(&mut g, 3, 12));
        prop_assert!((&u * &u.inverse()).is_identity());
        let images = [rand_word(&mut g, 2, 4), rand_word(&mut g, 2, 4), rand_word(&mut g, 2, 4)];
        let lhs = (&u * &v).substitute(&images).unwrap();
        let rhs = &u.substitute(&images).unwrap() * &v.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_identity(seed in any::<u64>(), k in -40i64..=40) {
        let mut g = rng(seed);
        let x = rand_invertible(&mut g);
        let x = x * x.det().sqrt().inv();
        prop_assert!(power_identity_residual(&x, k).unwrap() <= 1e-8);
    }

    #[test]
    fn gamma_is_odd_and_branch_free(k in -60i64..=60, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let r = Complex64::new(re, im);
        let (a, b) = (gamma(k, r).unwrap(), gamma(-k, r).unwrap());
        prop_assert!((a + b).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn delta_is_continuous_at_two(m in 1i64..=6, eps in -1e-6f64..1e-6, tilt in -1e-6f64..1e-6) {
        let at2 = delta_r(m, Complex64::new(2.0, 0.0)).unwrap();
        let near = delta_r(m, Complex64::new(2.0 + eps, tilt)).unwrap();
        prop_assert!((near - at2).norm() <= 1e-5);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_is_unitarily_invariant(seed in any::<u64>(), target in 0usize..=2, k in 2usize..=6) {
        let mut g = rng(seed);
        let cols: Vec<[Complex64; 2]> = match target {
            0 => vec![[Complex64::default(); 2]; k],
            1 => {
                let s = [rand_c(&mut g), rand_c(&mut g)];
                (0..k).map(|_| { let t = rand_c(&mut g); [s[0] * t, s[1] * t] }).collect()
            }
            _ => (0..k).map(|_| [rand_c(&mut g), rand_c(&mut g)]).collect(),
        };
        prop_assume!(target != 1 || cols.iter().any(|c| c[0].norm() + c[1].norm() > 1e-3));
        let m = Mat2xN::from_cols(cols.clone());
        let expected = m.rank();
        let (a, b) = (rand_c(&mut g), rand_c(&mut g));
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        prop_assume!(n > 1e-3);
        let (a, b) = (a / n, b / n);
        let unitary = Mat2::new(a, -b.conj(), b, a.conj());
        prop_assert_eq!(m.left_mul(&unitary).rank(), expected);
        let mut permuted = cols.clone();
        permuted.reverse();
        let swapped: Vec<_> = permuted.iter().map(|c| [c[1], c[0]]).collect();
        prop_assert_eq!(Mat2xN::from_cols(swapped.clone()).rank(), expected);
        let theta = (seed % 628) as f64 / 100.0;
        let (cs, sn) = (theta.cos(), theta.sin());
        let mut rotated = swapped;
        let (c0, c1) = (rotated[0], rotated[1]);
        rotated[0] = [c0[0] * cs - c1[0] * sn, c0[1] * cs - c1[1] * sn];
        rotated[1] = [c0[0] * sn + c1[0] * cs, c0[1] * sn + c1[1] * cs];
        prop_assert_eq!(Mat2xN::from_cols(rotated).rank(), expected);
        if target == 2 { prop_assert_eq!(expected, 2); }
    }
}

fn nonzero_m() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generic_sampling_is_seed_deterministic(seed in any::<u64>(), m in 1i64..=3, n in 1i64..=3) {
        let gp = GParams::new(m, n).unwrap();
        let a = sample_generic_rep_g(&gp, seed).unwrap();
        let b = sample_generic_rep_g(&gp, seed).unwrap();
        prop_assert_eq!(a.images(), b.images());
    }

    #[test]
    fn distinguish_is_symmetric_and_reflexive(m in nonzero_m(), n in 1i64..=4, m2 in nonzero_m(), n2 in 1i64..=4) {
        let ab = distinguish_g(m, n, m2, n2).unwrap();
        let ba = distinguish_g(m2, n2, m, n).unwrap();
        prop_assert_eq!(ab.distinguished, ba.distinguished);
        prop_assert_eq!(ab.distinguished, !ab.witnesses.is_empty());
        for (x, y) in ab.witnesses.iter().zip(&ba.witnesses) {
            prop_assert_eq!((x.invariant, x.left, x.right), (y.invariant, y.right, y.left));
        }
        prop_assert!(!distinguish_g(m, n, m, n).unwrap().distinguished);
    }
}

#[test]
fn word_parse_round_trip() {
    let names = ["w", "y", "z"];
    let w = Word::parse("z^2 w^-1 z^-1 w w", &names).unwrap();
    assert_eq!(w.display(&names), "z^2 w^-1 z^-1 w^2");
    assert_eq!(Word::parse(&w.display(&names), &names).unwrap(), w);
}
