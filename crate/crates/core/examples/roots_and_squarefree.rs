// Exact squarefreeness of `f = λ^(n+m) − λ^n − λ^m` and its numerical roots.

use cjl::gfamily::{ell, f_poly, f_roots};
use cjl::numerics::{int_poly_squarefree, poly_roots, CPoly, IntPoly};

pub fn run_example() -> cjl::Result<()> {
    let cube = CPoly::from_real(&[-1.0, 3.0, -3.0, 1.0]);
    let roots = poly_roots(&cube)?;
    println!(
        "(x-1)^3: {} distinct root(s), multiplicity {}",
        roots.distinct_count(),
        roots.roots[0].multiplicity
    );

    let square = IntPoly::from_i64(&[1, -2, 1]);
    println!("x^2 - 2x + 1 squarefree: {}", int_poly_squarefree(&square)?);

    for (m, n) in [(1, 2), (-2, 3), (3, 3), (-4, 1)] {
        let f = f_poly(m, n)?;
        let exact = int_poly_squarefree(&f)?;
        let count = f_roots(m, n)?.len();
        println!(
            "G({m},{n}): deg f = {}, squarefree = {exact}, roots = {count}, ell = {}",
            f.degree(),
            ell(m, n)
        );
        assert!(exact && count as i64 == ell(m, n));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("roots example failed");
}
