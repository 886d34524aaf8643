// As `λ → ζ` the `F_ζ` points of `G(−n, n)` converge to a point of `H_ζ`.

use cjl::gfamily::{degeneration_check, halving_sequence};
use cjl::numerics::{c, r};

pub fn run_example() -> cjl::Result<()> {
    let cases = [
        (1, r(1.0), r(1.0)),
        (2, r(-1.0), r(0.7)),
        (3, c(-0.5, 3f64.sqrt() / 2.0), c(0.4, 0.3)),
    ];
    for (n, zeta, cprime) in cases {
        let report = degeneration_check(n, zeta, r(0.5), cprime, &halving_sequence(zeta, 4, 6))?;
        let ratios: Vec<String> = report.ratios.iter().map(|x| format!("{x:.3}")).collect();
        println!(
            "n = {n}, zeta = {zeta:.3}: ratios [{}], converges = {}",
            ratios.join(", "),
            report.converges
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("degeneration example failed");
}
