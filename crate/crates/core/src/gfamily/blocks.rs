use crate::error::Result;
use crate::fox::RepPoint;
use crate::numerics::{bracket, Mat2, Mat2xN};

/// The blocks `(a, b, c)` of the derivation system on `(w, y, z)` after
/// left multiplication by `z^m w z^-n`:
/// `a = e + w − z^m`, `b = w² − z^m w z^-n`,
/// `c = z^m[−m]_z + z^m w z^-n [n]_z − w² y⁻¹ z^-n [n]_z`.
pub fn derivation_blocks(m: i64, n: i64, rep: &RepPoint) -> Result<[Mat2; 3]> {
    let (w, y, z) = (rep.image(0), rep.image(1), rep.image(2));
    let e = Mat2::identity();
    let zm = z.pow(m)?;
    let zmn = z.pow(-n)?;
    let yi = y.pow(-1)?;
    let bn = bracket(n, z)?;
    let a = e + w - zm;
    let b = w * w - zm * w * zmn;
    let c = zm * bracket(-m, z)? + zm * w * zmn * bn - w * w * yi * zmn * bn;
    Ok([a, b, c])
}

/// Rank of the reduced block system: `(a, b)` when `z − e` is invertible,
/// `(a, b, c_{*2})` when `z` has eigenvalue 1 (`z` upper triangular with
/// `z₂₂ = 1` in every family here).
pub fn block_rank(m: i64, n: i64, rep: &RepPoint) -> Result<usize> {
    let [a, b, c] = derivation_blocks(m, n, rep)?;
    let z = rep.image(2);
    let unit = (z - Mat2::identity()).det().norm() <= 1e-10 * z.max_abs().max(1.0);
    let mut cols = vec![a.col(0), a.col(1), b.col(0), b.col(1)];
    if unit {
        cols.push(c.col(1));
    }
    Ok(Mat2xN::from_cols(cols).rank())
}

/// Rank of the full `(a, b, c)` system.
pub fn full_block_rank(m: i64, n: i64, rep: &RepPoint) -> Result<usize> {
    Ok(Mat2xN::from_blocks(&derivation_blocks(m, n, rep)?).rank())
}
