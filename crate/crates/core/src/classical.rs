//! Ordinary matroids given by their bases.
//!
//! This module is the independent reference used to cross-check tract-level computations.
//! It deliberately uses the textbook definitions (minimal dependent sets, closure-closed sets,
//! basis complements) and shares nothing with the Grassmann-Plücker code paths apart from the
//! bitmask subset type.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{self, Mask};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalMatroid {
    n: usize,
    rank: usize,
    /// Sorted ascending as integers.
    bases: Vec<Mask>,
}

impl ClassicalMatroid {
    /// Builds a matroid and checks the basis exchange axiom.
    pub fn new(n: usize, bases: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if n > subset::MAX_GROUND {
            return Err(Error::Bounds(format!("ground set of size {n}")));
        }
        let set: BTreeSet<Mask> = bases.into_iter().collect();
        let bases: Vec<Mask> = set.into_iter().collect();
        let Some(&first) = bases.first() else {
            return Err(Error::Invalid("a matroid needs at least one basis".into()));
        };
        let rank = subset::size(first);
        if bases.iter().any(|&b| subset::size(b) != rank || b & !subset::full(n) != 0) {
            return Err(Error::Invalid("bases must be equicardinal subsets of the ground set".into()));
        }
        let m = ClassicalMatroid { n, rank, bases };
        if !m.has_exchange() {
            return Err(Error::Invalid("basis exchange fails".into()));
        }
        Ok(m)
    }

    /// Builds from 1-based element lists.
    pub fn from_lists(n: usize, bases: &[&[usize]]) -> Result<Self> {
        Self::new(
            n,
            bases
                .iter()
                .map(|b| b.iter().fold(0, |m, &e| m | (1 << (e - 1)))),
        )
    }

    pub fn uniform(r: usize, n: usize) -> Self {
        Self::new(n, subset::k_subsets(n, r)).expect("uniform matroids are matroids")
    }

    fn has_exchange(&self) -> bool {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in subset::elements(b1 & !b2) {
                    let ok = subset::elements(b2 & !b1)
                        .any(|y| self.is_basis((b1 & !(1 << x)) | (1 << y)));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn rank_of(&self, s: Mask) -> usize {
        self.bases.iter().map(|&b| subset::size(b & s)).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rank_of(s) == subset::size(s)
    }

    pub fn closure(&self, s: Mask) -> Mask {
        let r = self.rank_of(s);
        (0..self.n)
            .filter(|&e| self.rank_of(s | (1 << e)) == r)
            .fold(s, |acc, e| acc | (1 << e))
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> BTreeSet<Mask> {
        (0..=subset::full(self.n))
            .filter(|&s| {
                !self.is_independent(s)
                    && subset::elements(s).all(|e| self.is_independent(s & !(1 << e)))
            })
            .collect()
    }

    pub fn flats(&self) -> BTreeSet<Mask> {
        (0..=subset::full(self.n))
            .filter(|&s| self.closure(s) == s)
            .collect()
    }

    pub fn dual(&self) -> ClassicalMatroid {
        let full = subset::full(self.n);
        let mut bases: Vec<Mask> = self.bases.iter().map(|&b| full & !b).collect();
        bases.sort_unstable();
        ClassicalMatroid { n: self.n, rank: self.n - self.rank, bases }
    }

    pub fn cocircuits(&self) -> BTreeSet<Mask> {
        self.dual().circuits()
    }

    /// Restriction to the complement of `del` followed by contraction of `con`, with the
    /// surviving elements renumbered in order.
    pub fn minor(&self, del: Mask, con: Mask) -> Result<ClassicalMatroid> {
        if del & con != 0 {
            return Err(Error::Invalid("deleted and contracted sets overlap".into()));
        }
        let gone = del | con;
        if subset::size(gone) >= self.n {
            return Err(Error::Invalid("minor would have an empty ground set".into()));
        }
        let keep = subset::full(self.n) & !del;
        let restricted_rank = self.rank_of(keep);
        let con_rank = self.rank_of(con);
        // B ⊆ E\del is a basis of the restriction; among those, contraction keeps the ones
        // meeting `con` in a maximal independent set.
        let bases: BTreeSet<Mask> = self
            .bases
            .iter()
            .map(|&b| b & keep)
            .filter(|&b| subset::size(b) == restricted_rank && subset::size(b & con) == con_rank)
            .map(|b| subset::compress(b & !con, gone))
            .collect();
        ClassicalMatroid::new(self.n - subset::size(gone), bases)
    }

    pub fn delete(&self, del: Mask) -> Result<ClassicalMatroid> {
        self.minor(del, 0)
    }

    pub fn contract(&self, con: Mask) -> Result<ClassicalMatroid> {
        self.minor(0, con)
    }

    /// Every matroid of rank `r` on `n` elements, by brute force over basis families.
    pub fn all(n: usize, r: usize) -> Result<Vec<ClassicalMatroid>> {
        let candidates = subset::k_subsets(n, r);
        if candidates.len() > 20 {
            return Err(Error::Bounds(format!("{} candidate bases", candidates.len())));
        }
        let mut out = Vec::new();
        for family in 1u32..(1 << candidates.len()) {
            let bases = subset::elements(family).map(|i| candidates[i]);
            if let Ok(m) = ClassicalMatroid::new(n, bases) {
                out.push(m);
            }
        }
        out.sort();
        Ok(out)
    }

    /// 1-based basis lists, for dumps.
    pub fn basis_lists(&self) -> Vec<Vec<usize>> {
        self.bases
            .iter()
            .map(|&b| subset::elements(b).map(|e| e + 1).collect())
            .collect()
    }
}

/// Every flat of `m` is a flat of `n`.
pub fn quotient_by_flats(n: &ClassicalMatroid, m: &ClassicalMatroid) -> bool {
    let nf = n.flats();
    m.flats().iter().all(|f| nf.contains(f))
}

/// Every cocircuit of `m` is a union of cocircuits of `n`.
pub fn quotient_by_cocircuits(n: &ClassicalMatroid, m: &ClassicalMatroid) -> bool {
    let nd = n.cocircuits();
    m.cocircuits().iter().all(|&d| {
        let covered = nd.iter().filter(|&&c| c & !d == 0).fold(0, |acc, &c| acc | c);
        covered == d
    })
}

/// Whether `m` is a quotient of `n` (a strong map `n → m`). Both characterizations are
/// evaluated and must agree.
pub fn classical_quotient(n: &ClassicalMatroid, m: &ClassicalMatroid) -> Result<bool> {
    if n.n != m.n {
        return Err(Error::GroundMismatch(n.n, m.n));
    }
    let by_flats = quotient_by_flats(n, m);
    let by_cocircuits = quotient_by_cocircuits(n, m);
    assert_eq!(by_flats, by_cocircuits, "flat and cocircuit quotient tests disagree");
    Ok(by_flats)
}

#[derive(Serialize, Deserialize)]
struct BasisDump {
    n: usize,
    bases: Vec<Vec<usize>>,
}

impl ClassicalMatroid {
    /// JSON dump `{"n": .., "bases": [[1,2], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BasisDump { n: self.n, bases: self.basis_lists() })
            .expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let dump: BasisDump =
            serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        let lists: Vec<&[usize]> = dump.bases.iter().map(|b| b.as_slice()).collect();
        if dump.bases.iter().flatten().any(|&e| e == 0 || e > dump.n) {
            return Err(Error::Invalid("basis element out of range".into()));
        }
        Self::from_lists(dump.n, &lists)
    }
}
