//! Comparison of invariant profiles of two groups of the same family.

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::gfamily::invariant_profile_g;
use crate::hfamily::invariant_profile_h;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    G,
    H,
}

/// An invariant that differs between the two groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub invariant: &'static str,
    pub left: i64,
    pub right: i64,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.invariant, self.left, self.right).serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub family: Family,
    pub distinguished: bool,
    /// Differing invariants, in the order the argument deduces them.
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    fn from_pairs(family: Family, pairs: Vec<(&'static str, i64, i64)>) -> Self {
        let witnesses: Vec<Witness> = pairs
            .into_iter()
            .filter(|(_, l, r)| l != r)
            .map(|(invariant, left, right)| Witness {
                invariant,
                left,
                right,
            })
            .collect();
        Verdict {
            family,
            distinguished: !witnesses.is_empty(),
            witnesses,
        }
    }

    /// The first witness, if any.
    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

/// Compares `G(m,n)` with `G(m2,n2)`.
pub fn distinguish_g(m: i64, n: i64, m2: i64, n2: i64) -> Result<Verdict> {
    let (a, b) = (invariant_profile_g(m, n)?, invariant_profile_g(m2, n2)?);
    Ok(Verdict::from_pairs(
        Family::G,
        vec![
            (
                "anti_diagonal",
                a.anti_diagonal as i64,
                b.anti_diagonal as i64,
            ),
            (
                "two_dim_fiber_components",
                a.two_dim_fiber_components,
                b.two_dim_fiber_components,
            ),
            ("g", a.g, b.g),
            ("sum_abs", a.sum_abs, b.sum_abs),
            ("ell", a.ell, b.ell),
            ("count_c_cstar", a.count_c_cstar, b.count_c_cstar),
        ],
    ))
}

/// Compares `H(m,n)` with `H(m2,n2)` through the measured fiber cardinality
/// and the puncture count.
pub fn distinguish_h(m: i64, n: i64, m2: i64, n2: i64) -> Result<Verdict> {
    let (a, b) = (invariant_profile_h(m, n)?, invariant_profile_h(m2, n2)?);
    Ok(Verdict::from_pairs(
        Family::H,
        vec![
            ("m", a.m, b.m),
            (
                "puncture_count",
                a.puncture_count as i64,
                b.puncture_count as i64,
            ),
        ],
    ))
}

pub fn distinguish(family: Family, m: i64, n: i64, m2: i64, n2: i64) -> Result<Verdict> {
    match family {
        Family::G => distinguish_g(m, n, m2, n2),
        Family::H => distinguish_h(m, n, m2, n2),
    }
}
