use std::collections::BTreeMap;
use std::ops::{Add, Neg};

use super::rep::RepPoint;
use super::word::Word;
use crate::numerics::{Complex64, Mat2};

/// Element of the integral group ring of a free group: `Σ cᵢ wᵢ` with
/// distinct words and nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(1, w);
        e
    }

    pub fn add_term(&mut self, coeff: i64, w: Word) {
        let entry = self.terms.entry(w).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Word)> {
        self.terms.iter().map(|(w, &c)| (c, w))
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// `u · self`.
    pub fn left_mul(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (c, w) in self.terms() {
            out.add_term(c, u * w);
        }
        out
    }

    /// Image under the linear extension of a representation.
    pub fn eval(&self, rep: &RepPoint) -> Mat2 {
        self.terms()
            .map(|(c, w)| rep.word_eval(w).scale(Complex64::new(c as f64, 0.0)))
            .fold(Mat2::zero(), |a, b| a + b)
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, o: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (c, w) in o.terms() {
            out.add_term(c, w.clone());
        }
        out
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut e = GroupRingElem::from_word(Word::gen(0));
        e.add_term(2, Word::gen(1));
        e.add_term(-1, Word::gen(0));
        assert_eq!(e.coefficient(&Word::gen(0)), 0);
        assert_eq!(e.terms().count(), 1);
        assert!((&e + &-&e).is_zero());
    }
}
