use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cpoly::CPoly;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `sign · x^k`.
    pub fn monomial(k: usize, sign: i64) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::from(sign);
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of 0 as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Remove the largest power of `x` dividing the polynomial.
    pub fn strip_x_factor(&self) -> Self {
        Self::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Pseudo-remainder of `self` by `d`, scaling by `lc(d)` once per
    /// elimination step so every intermediate stays integral.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dl = d.leading().clone();
        let dd = d.degree();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let rl = r.last().cloned().unwrap_or_default();
            for c in r.iter_mut() {
                *c *= &dl;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[i + shift] -= &rl * dc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Primitive gcd via the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn to_cpoly(&self) -> CPoly {
        CPoly::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
                .collect(),
        )
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// True iff `p` has no repeated factor over the rationals, decided exactly.
pub fn int_poly_squarefree(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(g.degree() == 0 && g.coeffs.first().is_some_and(|c| c.abs().is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_examples() {
        assert!(int_poly_squarefree(&IntPoly::from_i64(&[-1, -1, 1])).unwrap());
        assert!(!int_poly_squarefree(&IntPoly::from_i64(&[1, -2, 1])).unwrap());
        let f = IntPoly::from_i64(&[0, -1, -1, 1]);
        assert!(int_poly_squarefree(&f).unwrap());
        assert!(int_poly_squarefree(&f.strip_x_factor()).unwrap());
        // x^2 (x^2 - x - 1) has a double root at 0
        assert!(!int_poly_squarefree(&IntPoly::from_i64(&[0, 0, -1, -1, 1])).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(
            int_poly_squarefree(&IntPoly::from_i64(&[])),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            int_poly_squarefree(&IntPoly::from_i64(&[5])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(3x+1)
        let a = IntPoly::from_i64(&[-2, 1, 1]);
        let b = IntPoly::from_i64(&[-1, -2, 3]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = IntPoly::from_i64(&[6, -4, -2]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive_part(), IntPoly::from_i64(&[-3, 2, 1]));
    }

    #[test]
    fn large_coefficients_stay_exact() {
        // (x - 10^12)^2
        let r: i64 = 1_000_000_000_000;
        let sq = IntPoly::new(vec![
            BigInt::from(r) * BigInt::from(r),
            BigInt::from(-2 * r),
            BigInt::one(),
        ]);
        assert!(!int_poly_squarefree(&sq).unwrap());
        assert_eq!(sq.eval_i64(r), BigInt::zero());
    }
}
