// The sequence `γ_k(r)` and the identities it satisfies.

use cjl::hfamily::{gamma, gamma_identities_check, power_identity_residual};
use cjl::numerics::{c, r, Mat2};

pub fn run_example() -> cjl::Result<()> {
    let x = c(0.3, 1.1);
    let first: Vec<String> = (0..6)
        .map(|k| gamma(k, x).map(|g| format!("{g:.3}")))
        .collect::<cjl::Result<_>>()?;
    println!("gamma_0..5({x}) = {}", first.join(", "));
    for s in [r(2.0), r(-2.0), c(1.7, -0.4)] {
        println!(
            "identities at r = {s}: max residual {:.1e}",
            gamma_identities_check(s, 40)?
        );
    }
    let m = Mat2::real(2.0, 3.0, 1.0, 2.0);
    println!(
        "x^-17 = gamma_-17 x - gamma_-18: error {:.1e}",
        power_identity_residual(&m, -17)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("gamma example failed");
}
