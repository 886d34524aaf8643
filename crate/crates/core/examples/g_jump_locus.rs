// Points of every subfamily of the jump locus of `G(m,n)` have `d¹ = 3`.

use cjl::fox::{d1_dim, Presentation};
use cjl::gfamily::{block_rank, sample_generic_rep_g, subfamilies, GParams};
use cjl::sampling::rng_from_seed;

pub fn run_example() -> cjl::Result<()> {
    let mut rng = rng_from_seed(2024);
    for (m, n) in [(1, 2), (2, 4), (-3, 3)] {
        let gp = GParams::new(m, n)?;
        let p = Presentation::g_family(m, n);
        for sub in subfamilies(&gp)? {
            let rep = sub.sample(&gp, &mut rng)?;
            println!(
                "G({m},{n}) {:<14} zeta = {:.3}: residual {:.1e}, d1 = {}, block rank {}",
                sub.label(),
                sub.zeta(),
                rep.relation_residual(&p),
                d1_dim(&p, &rep)?,
                block_rank(m, n, &rep)?
            );
        }
        let generic = sample_generic_rep_g(&gp, 1)?;
        println!("G({m},{n}) generic: d1 = {}", d1_dim(&p, &generic)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("G jump locus example failed");
}
