// Invariant profiles tell the groups of each family apart.

use cjl::distinguish::{distinguish_g, distinguish_h};
use cjl::gfamily::invariant_profile_g;
use cjl::hfamily::invariant_profile_h;

pub fn run_example() -> cjl::Result<()> {
    println!("G(1,2): {:?}", invariant_profile_g(1, 2)?);
    println!("H(3,2): {:?}", invariant_profile_h(3, 2)?);
    for (a, b) in [((1, 2), (2, 1)), ((-2, 2), (-3, 3)), ((2, 3), (2, 3))] {
        let v = distinguish_g(a.0, a.1, b.0, b.1)?;
        println!(
            "G{a:?} vs G{b:?}: distinguished = {}, first witness {:?}",
            v.distinguished,
            v.witness()
        );
    }
    let v = distinguish_h(1, 1, 1, 2)?;
    println!("H(1,1) vs H(1,2): {:?}", v.witnesses);

    let grid: Vec<(i64, i64)> = (-4..=4)
        .filter(|&m| m != 0)
        .flat_map(|m| (1..=4).map(move |n| (m, n)))
        .collect();
    let mut undistinguished = 0;
    for (i, a) in grid.iter().enumerate() {
        for b in &grid[i + 1..] {
            if !distinguish_g(a.0, a.1, b.0, b.1)?.distinguished {
                undistinguished += 1;
            }
        }
    }
    println!("unequal G pairs not distinguished: {undistinguished}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("distinguish example failed");
}
