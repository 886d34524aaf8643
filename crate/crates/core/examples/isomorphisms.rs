// The generator maps between members of each family are homomorphisms.

use cjl::fox::{check_homomorphism, Presentation, Word};
use cjl::gfamily::{g_commutator_images, sample_generic_g_any};
use cjl::hfamily::{h_commutator_images, sample_generic_h_any};
use cjl::sampling::{rng_from_seed, split_seed};

const TRIALS: usize = 100;

pub fn run_example() -> cjl::Result<()> {
    let (x, y, z) = (0, 1, 2);
    for (m, n) in [(1, 2), (-2, 3), (3, 1)] {
        let map = [Word::gen(x), Word::gen(y), Word::gen_pow(z, -1)];
        let check = check_homomorphism(
            &map,
            &Presentation::g_family_commutator(m, n),
            TRIALS,
            1e-9,
            |t| {
                let mut rng = rng_from_seed(split_seed(1, t as u64));
                g_commutator_images(&sample_generic_g_any(-m, -n, &mut rng)?, -m)
            },
        )?;
        println!(
            "G({m},{n}) -> G({},{}): max residual {:.1e}",
            -m, -n, check.max_residual
        );

        if m > 0 {
            let map = [
                Word::gen(x),
                Word::new([(y, 1), (z, n + 1), (x, m + 1), (z, -1)]),
                Word::gen(z),
            ];
            let check = check_homomorphism(
                &map,
                &Presentation::h_family_commutator(m, n),
                TRIALS,
                1e-9,
                |t| {
                    let mut rng = rng_from_seed(split_seed(2, t as u64));
                    h_commutator_images(&sample_generic_h_any(-m - 1, -n - 1, &mut rng)?)
                },
            )?;
            println!(
                "H({m},{n}) -> H({},{}): max residual {:.1e}",
                -m - 1,
                -n - 1,
                check.max_residual
            );

            let map = [
                Word::gen_pow(x, -1),
                Word::new([(y, 1), (z, 1 - n)]),
                Word::gen_pow(z, -1),
            ];
            let check = check_homomorphism(
                &map,
                &Presentation::h_family_commutator(m, n),
                TRIALS,
                1e-9,
                |t| {
                    let mut rng = rng_from_seed(split_seed(3, t as u64));
                    h_commutator_images(&sample_generic_h_any(-m - 1, n, &mut rng)?)
                },
            )?;
            println!(
                "H({m},{n}) -> H({},{n}): max residual {:.1e}",
                -m - 1,
                check.max_residual
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("isomorphism example failed");
}
