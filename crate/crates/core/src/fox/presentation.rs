use super::word::Word;
use crate::error::{Error, Result};

/// A relation `lhs = rhs` between words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    /// The relator `lhs · rhs⁻¹`.
    pub fn relator(&self) -> Word {
        &self.lhs * &self.rhs.inverse()
    }
}

/// Group presentation with at most one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relation: Option<Relation>,
}

impl Presentation {
    pub fn new(names: &[&str], relation: Option<Relation>) -> Result<Self> {
        if let Some(rel) = &relation {
            for w in [&rel.lhs, &rel.rhs] {
                if let Some(g) = w.max_generator().filter(|&g| g >= names.len()) {
                    return Err(Error::GeneratorOutOfRange {
                        index: g,
                        count: names.len(),
                    });
                }
            }
        }
        Ok(Presentation {
            names: names.iter().map(|s| s.to_string()).collect(),
            relation,
        })
    }

    /// Free group on `k` generators `g0, g1, ...`.
    pub fn free(k: usize) -> Self {
        Presentation {
            names: (0..k).map(|i| format!("g{i}")).collect(),
            relation: None,
        }
    }

    /// `G(m,n)` on generators `(w, y, z)`: `z^n w^-1 z^-m w^2 = y^-1 z^n y`.
    pub fn g_family(m: i64, n: i64) -> Self {
        let (w, y, z) = (0, 1, 2);
        let lhs = Word::new([(z, n), (w, -1), (z, -m), (w, 2)]);
        let rhs = Word::new([(y, -1), (z, n), (y, 1)]);
        Presentation {
            names: vec!["w".into(), "y".into(), "z".into()],
            relation: Some(Relation { lhs, rhs }),
        }
    }

    /// `H(m,n)` on generators `(x, u, z)`: `z^(-n-1) x^-m z^n x^(m+1) = u^-1 z^-1 u`.
    pub fn h_family(m: i64, n: i64) -> Self {
        let (x, u, z) = (0, 1, 2);
        let lhs = Word::new([(z, -n - 1), (x, -m), (z, n), (x, m + 1)]);
        let rhs = Word::new([(u, -1), (z, -1), (u, 1)]);
        Presentation {
            names: vec!["x".into(), "u".into(), "z".into()],
            relation: Some(Relation { lhs, rhs }),
        }
    }

    /// `G(m,n)` in its commutator form on `(x, y, z)`: `x = [z^m, x][z^n, y]`.
    pub fn g_family_commutator(m: i64, n: i64) -> Self {
        let (x, y, z) = (Word::gen(0), Word::gen(1), Word::gen(2));
        let rhs = &Word::commutator(&z.pow(m), &x) * &Word::commutator(&z.pow(n), &y);
        Presentation {
            names: vec!["x".into(), "y".into(), "z".into()],
            relation: Some(Relation { lhs: x, rhs }),
        }
    }

    /// `H(m,n)` in its commutator form on `(x, y, z)`: `x = [x^m, z^n][y, z]`.
    pub fn h_family_commutator(m: i64, n: i64) -> Self {
        let (x, y, z) = (Word::gen(0), Word::gen(1), Word::gen(2));
        let rhs = &Word::commutator(&x.pow(m), &z.pow(n)) * &Word::commutator(&y, &z);
        Presentation {
            names: vec!["x".into(), "y".into(), "z".into()],
            relation: Some(Relation { lhs: x, rhs }),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn relation(&self) -> Option<&Relation> {
        self.relation.as_ref()
    }

    pub fn relators(&self) -> Vec<Word> {
        self.relation.iter().map(Relation::relator).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_relator_text() {
        let p = Presentation::g_family(1, 2);
        let names = p.names();
        assert_eq!(
            p.relators()[0].display(&names),
            "z^2 w^-1 z^-1 w^2 y^-1 z^-2 y"
        );
    }

    #[test]
    fn out_of_range_generator_rejected() {
        let rel = Relation {
            lhs: Word::gen(3),
            rhs: Word::identity(),
        };
        assert!(Presentation::new(&["a", "b"], Some(rel)).is_err());
    }
}
