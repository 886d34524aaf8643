// Fox derivatives of a relator and the dimension of the derivation space.

use cjl::fox::{
    d1_dim, derivation_matrix, fox_derivative, fox_eval, FamilyTag, Presentation, RepPoint, Word,
};
use cjl::numerics::{c, Mat2};

pub fn run_example() -> cjl::Result<()> {
    let names = ["x", "y"];
    let w = Word::parse("x^2 y x^-1 y^-1", &names)?;
    let dx = fox_derivative(&w, 0);
    println!(
        "d/dx {} has {} terms",
        w.display(&names),
        dx.terms().count()
    );

    let rep = RepPoint::new(
        vec![
            Mat2::new(c(1.0, 0.5), c(2.0, 0.0), c(0.0, 1.0), c(1.5, 0.0)),
            Mat2::real(2.0, 1.0, 1.0, 1.0),
        ],
        FamilyTag::Free,
    )?;
    // fundamental identity: Σ ρ(∂w/∂g)(ρ(g) − 1) = ρ(w) − 1
    let lhs = (0..2).fold(Mat2::zero(), |acc, g| {
        acc + fox_eval(&w, g, &rep) * (rep.image(g) - Mat2::identity())
    });
    let rhs = rep.word_eval(&w) - Mat2::identity();
    println!("fundamental identity error {:.2e}", (lhs - rhs).frobenius());

    let gm = Presentation::g_family(1, 2);
    let generic = cjl::gfamily::sample_generic_rep_g(&cjl::gfamily::GParams::new(1, 2)?, 7)?;
    let sys = derivation_matrix(&gm, &generic)?;
    println!(
        "G(1,2) generic point: Fox rank {}, d1 = {}",
        sys.rank(),
        d1_dim(&gm, &generic)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fox example failed");
}
