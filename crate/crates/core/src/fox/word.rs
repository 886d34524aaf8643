use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Freely reduced word in the generators `0..k`, stored as `(generator, exponent)`
/// syllables with nonzero exponents and distinct adjacent generators.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn new<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { letters: out }
    }

    /// The single syllable `g^e`.
    pub fn gen_pow(g: usize, e: i64) -> Self {
        Word::new([(g, e)])
    }

    pub fn gen(g: usize) -> Self {
        Word::gen_pow(g, 1)
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length as a product of single generators, `Σ |e|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word::new(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| &acc * &base)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        &(&(&a.inverse() * &b.inverse()) * a) * b
    }

    /// Replace generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Self> {
        let mut acc = Word::identity();
        for &(g, e) in &self.letters {
            let img = images.get(g).ok_or(Error::GeneratorOutOfRange {
                index: g,
                count: images.len(),
            })?;
            acc = &acc * &img.pow(e);
        }
        Ok(acc)
    }

    /// Parse `"z^2 w^-1 y"`-style text; syllables separated by whitespace or `*`.
    pub fn parse(text: &str, names: &[&str]) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
        {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e = e
                        .trim_matches(|c| c == '(' || c == ')')
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad exponent in {tok:?}")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let g = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown generator {name:?}")))?;
            letters.push((g, exp));
        }
        Ok(Word::new(letters))
    }

    pub fn display(&self, names: &[&str]) -> String {
        if self.is_identity() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                let n = names.get(g).copied().unwrap_or("?");
                if e == 1 {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, o: &Word) -> Word {
        Word::new(self.letters.iter().chain(&o.letters).copied())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_generator().unwrap_or(0))
            .map(|i| format!("g{i}"))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_cascades() {
        let w = Word::new([(0, 1), (1, 2), (1, -2), (0, -1), (2, 3)]);
        assert_eq!(w, Word::gen_pow(2, 3));
        assert!((&w * &w.inverse()).is_identity());
    }

    #[test]
    fn parse_and_display() {
        let names = ["w", "y", "z"];
        let w = Word::parse("z^2 w^-1 z^(-1) w w", &names).unwrap();
        assert_eq!(w.letters(), &[(2, 2), (0, -1), (2, -1), (0, 2)]);
        assert_eq!(w.display(&names), "z^2 w^-1 z^-1 w^2");
        assert!(Word::parse("q", &names).is_err());
    }

    #[test]
    fn commutator_and_substitution() {
        let (a, b) = (Word::gen(0), Word::gen(1));
        let c = Word::commutator(&a, &b);
        assert_eq!(c.letters(), &[(0, -1), (1, -1), (0, 1), (1, 1)]);
        let swapped = c.substitute(&[b.clone(), a.clone()]).unwrap();
        assert_eq!(swapped, Word::commutator(&b, &a));
        assert!(c.substitute(&[a]).is_err());
    }
}
