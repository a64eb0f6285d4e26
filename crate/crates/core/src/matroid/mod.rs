//! Grassmann-Plücker functions and the matroids they represent.

pub mod circuits;
pub mod minors;
pub(crate) mod plucker;

use crate::classical::ClassicalMatroid;
use crate::error::{Error, Result};
use crate::subset::{self, Mask};
use crate::tract::{Element, Tract, TractMorphism};
use crate::verdict::{Verdict, Witness};

pub use circuits::{CircuitFamily, TractVector};

/// Which Plücker relations to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpMode {
    /// Every relation.
    Full,
    /// Matroid support plus the three-term relations; sufficient over perfect tracts only.
    ThreeTerm,
}

/// An alternating map `E^r → F`, stored on the strictly increasing `r`-tuples in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GpFunction {
    n: usize,
    rank: usize,
    tract: Tract,
    values: Vec<Element>,
}

fn check_shape(n: usize, rank: usize) -> Result<()> {
    if n == 0 || n > subset::MAX_GROUND {
        return Err(Error::Bounds(format!("ground set size {n} outside 1..={}", subset::MAX_GROUND)));
    }
    if rank > n {
        return Err(Error::Invalid(format!("rank {rank} exceeds ground set size {n}")));
    }
    Ok(())
}

impl GpFunction {
    /// `values` are listed in lexicographic order of the sorted `rank`-subsets.
    pub fn new(n: usize, rank: usize, tract: Tract, values: Vec<Element>) -> Result<Self> {
        check_shape(n, rank)?;
        if values.len() != subset::binomial(n, rank) {
            return Err(Error::Invalid(format!(
                "expected {} values, got {}",
                subset::binomial(n, rank),
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| v.tract() != tract) {
            return Err(Error::TractMismatch { expected: tract, found: bad.tract() });
        }
        Ok(GpFunction { n, rank, tract, values })
    }

    /// Builds from a function of the sorted 0-based tuple.
    pub fn from_fn(
        n: usize,
        rank: usize,
        tract: Tract,
        mut f: impl FnMut(&[usize]) -> Element,
    ) -> Result<Self> {
        check_shape(n, rank)?;
        let values = subset::k_subsets(n, rank)
            .into_iter()
            .map(|m| f(&subset::to_vec(m)))
            .collect();
        Self::new(n, rank, tract, values)
    }

    /// Builds from 1-based sorted keys; absent keys are zero.
    pub fn from_entries(
        n: usize,
        rank: usize,
        tract: Tract,
        entries: &[(&[usize], Element)],
    ) -> Result<Self> {
        check_shape(n, rank)?;
        let mut values = vec![tract.zero(); subset::binomial(n, rank)];
        for (key, v) in entries {
            if key.len() != rank
                || key.iter().any(|&e| e == 0 || e > n)
                || key.windows(2).any(|w| w[0] >= w[1])
            {
                return Err(Error::Invalid(format!("bad key {key:?}")));
            }
            let mask = key.iter().fold(0, |m, &e| m | (1 << (e - 1)));
            values[subset::lex_rank(mask, n)] = v.clone();
        }
        Self::new(n, rank, tract, values)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    /// Value on a sorted subset.
    pub fn value(&self, mask: Mask) -> &Element {
        &self.values[subset::lex_rank(mask, self.n)]
    }

    /// `(subset, value)` pairs in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Mask, &Element)> {
        subset::k_subsets(self.n, self.rank).into_iter().zip(self.values.iter())
    }

    /// Value on an arbitrary 0-based tuple, using the alternating extension.
    pub fn eval(&self, tuple: &[usize]) -> Element {
        debug_assert_eq!(tuple.len(), self.rank);
        match subset::sort_parity(tuple) {
            None => self.tract.zero(),
            Some(odd) => self.value(subset::from_slice(tuple)).times_eps(odd),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }

    /// Supports of the nonzero values, in lexicographic order.
    /// Subsets with nonzero value, as masks in increasing numeric order.
    pub fn support(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self
            .entries()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, _)| m)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn scaled(&self, a: &Element) -> Result<GpFunction> {
        if a.tract() != self.tract {
            return Err(Error::TractMismatch { expected: self.tract, found: a.tract() });
        }
        Ok(self.map_values(|v| v.times(a)))
    }

    pub(crate) fn map_values(&self, f: impl Fn(&Element) -> Element) -> GpFunction {
        GpFunction {
            n: self.n,
            rank: self.rank,
            tract: self.tract,
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Scales so that the value on the lexicographically least basis is `1`.
    pub fn canonical(&self) -> Option<GpFunction> {
        let lead = self.values.iter().find(|v| !v.is_zero())?;
        let inv = lead.inverse().expect("nonzero elements are units");
        Some(self.map_values(|v| v.times(&inv)))
    }

    pub fn validate(&self, mode: GpMode) -> Result<Verdict> {
        if mode == GpMode::ThreeTerm && !self.tract.is_perfect() {
            return Err(Error::NotPerfect(self.tract));
        }
        if self.is_zero() {
            return Ok(Verdict::fail(Witness::AllZero));
        }
        if mode == GpMode::ThreeTerm && !support_has_exchange(&self.support()) {
            return Ok(Verdict::fail(Witness::NotMatroid));
        }
        let plan = plucker::plan(self.n, self.rank, self.rank, mode == GpMode::ThreeTerm);
        Ok(
            match plucker::first_failure(&plan, self.tract, &self.values, &self.values) {
                None => Verdict::pass(),
                Some(i) => {
                    let rel = &plan.relations[i];
                    Verdict::fail(relation_witness(rel.x, rel.y))
                }
            },
        )
    }
}

pub(crate) fn relation_witness(x: Mask, y: Mask) -> Witness {
    let one_based = |m| subset::elements(m).map(|e| e + 1).collect();
    Witness::Relation { x: one_based(x), y: one_based(y) }
}

fn support_has_exchange(bases: &[Mask]) -> bool {
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            subset::elements(b1 & !b2).all(|x| {
                subset::elements(b2 & !b1)
                    .any(|y| bases.binary_search(&((b1 & !(1 << x)) | (1 << y))).is_ok())
            })
        })
    })
}

/// An `F`-matroid, i.e. a Grassmann-Plücker function up to a global unit, stored in
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FMatroid {
    gp: GpFunction,
}

impl FMatroid {
    /// Validates all Plücker relations and canonicalizes.
    pub fn new(gp: GpFunction) -> Result<Self> {
        let verdict = gp.validate(GpMode::Full)?;
        if !verdict.ok {
            return Err(Error::NotGp(format!("{:?}", verdict.witness.unwrap())));
        }
        Ok(Self::from_valid(gp))
    }

    /// Canonicalizes a function already known to satisfy the Plücker relations.
    pub(crate) fn from_valid(gp: GpFunction) -> Self {
        FMatroid { gp: gp.canonical().expect("valid functions are nonzero") }
    }

    pub fn gp(&self) -> &GpFunction {
        &self.gp
    }

    pub fn ground_size(&self) -> usize {
        self.gp.n
    }

    pub fn rank(&self) -> usize {
        self.gp.rank
    }

    pub fn tract(&self) -> Tract {
        self.gp.tract
    }

    pub fn bases(&self) -> Vec<Mask> {
        self.gp.support()
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        subset::size(s) == self.rank() && !self.gp.value(s).is_zero()
    }

    pub fn rank_of(&self, s: Mask) -> usize {
        self.bases().iter().map(|&b| subset::size(b & s)).max().unwrap_or(0)
    }

    /// The underlying ordinary matroid: bases are the supports of nonzero values.
    pub fn underlying(&self) -> ClassicalMatroid {
        ClassicalMatroid::new(self.gp.n, self.bases())
            .expect("supports of Grassmann-Plücker functions are matroids")
    }

    /// `φ*(x) = sign(x, x') · τ(φ(x'))` where `x'` is the sorted complement of `x`.
    pub fn dual(&self) -> FMatroid {
        let n = self.gp.n;
        let full = subset::full(n);
        let tract = self.gp.tract;
        let values = subset::k_subsets(n, n - self.gp.rank)
            .into_iter()
            .map(|x| {
                let rest = full & !x;
                tract
                    .involution(self.gp.value(rest))
                    .times_eps(subset::shuffle_parity(x, rest))
            })
            .collect();
        FMatroid::from_valid(GpFunction { n, rank: n - self.gp.rank, tract, values })
    }

    /// Change of coefficients along a tract morphism.
    pub fn pushforward(&self, f: &TractMorphism) -> Result<FMatroid> {
        if f.source() != self.tract() {
            return Err(Error::TractMismatch { expected: f.source(), found: self.tract() });
        }
        let gp = GpFunction {
            n: self.gp.n,
            rank: self.gp.rank,
            tract: f.target(),
            values: self.gp.values.iter().map(|v| f.apply_unchecked(v)).collect(),
        };
        Ok(FMatroid::from_valid(gp))
    }

    /// Uniform matroid over `tract` with every value `1`. Only a matroid over tracts where
    /// that function satisfies the Plücker relations (e.g. Krasner, tropical, or rank ≤ 1).
    pub fn all_ones(n: usize, rank: usize, tract: Tract) -> Result<FMatroid> {
        FMatroid::new(GpFunction::from_fn(n, rank, tract, |_| tract.one())?)
    }

    /// The Krasner matroid with the given underlying matroid.
    pub fn from_classical(m: &ClassicalMatroid) -> FMatroid {
        let n = m.ground_size();
        let gp = GpFunction::from_fn(n, m.rank(), Tract::Krasner, |t| {
            Element::krasner(m.is_basis(subset::from_slice(t)))
        })
        .expect("shape comes from a valid matroid");
        FMatroid::from_valid(gp)
    }
}
