// The family `σ_{λ,r,a₁}` on `H(m,n)`, its `det_∗` image and the parabolic case.

use cjl::hfamily::{
    admissible_roots, build_sigma, det_star_sigma, parabolic_search, puncture_count,
    r2_consistency, r2_lambdas, SigmaParams,
};
use cjl::numerics::r;

pub fn run_example() -> cjl::Result<()> {
    let lambda = r(3.0);
    let roots = admissible_roots(1, 1, lambda)?;
    let p = SigmaParams {
        m: 1,
        n: 1,
        lambda,
        r: roots[0],
        a1: r(3.0),
    };
    let (rep, report) = build_sigma(&p)?;
    println!("H(1,1) at lambda = 3, r = {:.4}: {report:?}", roots[0]);
    println!(
        "det_* formula {:?} vs det u = {:.6}",
        det_star_sigma(&p),
        rep.image(1).det()
    );

    for m in 1..=4 {
        println!(
            "H({m},2): {} admissible roots at lambda = 1.3+0.4i, {} punctures",
            admissible_roots(m, 2, cjl::numerics::c(1.3, 0.4))?.len(),
            puncture_count(m, 2)?
        );
    }

    let l2 = r2_lambdas(2, 1)?[0];
    println!(
        "r = 2 branch at lambda = {l2:.4}: distance to direct construction {:.1e}",
        r2_consistency(2, 1, l2, r(1.0))?
    );

    let search = parabolic_search(2, 2, 12)?;
    println!(
        "parabolic z: {} points, min Fox rank {}",
        search.evaluated, search.min_rank
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("H jump locus example failed");
}
