//! Flag matroids over tracts: sequences of matroids each a quotient of all later ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{plucker, relation_witness, FMatroid, GpFunction, GpMode};
use crate::subset::{self, Mask};
use crate::tract::{Element, TractMorphism};
use crate::verdict::{Verdict, Witness};

/// Whether `small` is a quotient of `big`, i.e. all Plücker flag relations
/// `Σ_k ε^k ν(y_1, .., ŷ_k, .., y_{w+1}) μ(y_k, x_1, .., x_{r-1})` are null.
///
/// A quotient never has larger rank, so that case is reported as an error.
pub fn quotient_check(big: &FMatroid, small: &FMatroid) -> Result<Verdict> {
    if big.tract() != small.tract() {
        return Err(Error::TractMismatch { expected: big.tract(), found: small.tract() });
    }
    if big.ground_size() != small.ground_size() {
        return Err(Error::GroundMismatch(big.ground_size(), small.ground_size()));
    }
    if small.rank() > big.rank() {
        return Err(Error::RankOrder { quotient: small.rank(), over: big.rank() });
    }
    let plan = plucker::plan(big.ground_size(), big.rank(), small.rank(), false);
    let failure =
        plucker::first_failure(&plan, big.tract(), big.gp().values(), small.gp().values());
    Ok(match failure {
        None => Verdict::pass(),
        Some(i) => Verdict::fail(relation_witness(plan.relations[i].x, plan.relations[i].y)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagMode {
    /// Every pair `i < j`.
    Pairwise,
    /// Consecutive pairs only; equivalent to pairwise over perfect tracts.
    Adjacent,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Ranks(pub Vec<usize>);

/// A sequence `(M_1, .., M_s)` of matroids on a common ground set over a common tract, with
/// nondecreasing ranks and equal components wherever ranks are equal. Whether the sequence
/// is actually a flag is decided by [`FlagMatroid::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagMatroid {
    components: Vec<FMatroid>,
}

impl FlagMatroid {
    pub fn new(components: Vec<FMatroid>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Invalid("a flag needs at least one component".into()));
        };
        for c in &components[1..] {
            if c.tract() != first.tract() {
                return Err(Error::TractMismatch { expected: first.tract(), found: c.tract() });
            }
            if c.ground_size() != first.ground_size() {
                return Err(Error::GroundMismatch(first.ground_size(), c.ground_size()));
            }
        }
        for w in components.windows(2) {
            if w[0].rank() > w[1].rank() {
                return Err(Error::RankOrder { quotient: w[1].rank(), over: w[0].rank() });
            }
            if w[0].rank() == w[1].rank() && w[0] != w[1] {
                return Err(Error::Invalid("components of equal rank must coincide".into()));
            }
        }
        Ok(FlagMatroid { components })
    }

    pub fn components(&self) -> &[FMatroid] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn tract(&self) -> crate::tract::Tract {
        self.components[0].tract()
    }

    pub fn ground_size(&self) -> usize {
        self.components[0].ground_size()
    }

    pub fn ranks(&self) -> Ranks {
        Ranks(self.components.iter().map(FMatroid::rank).collect())
    }

    pub fn validate(&self, mode: FlagMode) -> Result<Verdict> {
        if mode == FlagMode::Adjacent && !self.tract().is_perfect() {
            return Err(Error::NotPerfect(self.tract()));
        }
        let s = self.components.len();
        for i in 0..s {
            for j in (i + 1)..s {
                if mode == FlagMode::Adjacent && j != i + 1 {
                    continue;
                }
                let v = quotient_check(&self.components[j], &self.components[i])?;
                if !v.ok {
                    return Ok(Verdict::fail(Witness::Pair {
                        i: i + 1,
                        j: j + 1,
                        inner: Box::new(v.witness.expect("failures carry witnesses")),
                    }));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// Every cocircuit of `M_i` is a covector of `M_j` for all `i < j`.
    pub fn cryptomorphic_check(&self) -> Verdict {
        let s = self.components.len();
        let cocircuits: Vec<_> = self.components.iter().map(FMatroid::cocircuits).collect();
        for j in 1..s {
            let circuits = self.components[j].circuits();
            for (i, cocirc) in cocircuits.iter().enumerate().take(j) {
                for z in cocirc.representatives() {
                    if !circuits.all_orthogonal_to(z).expect("same tract and ground set") {
                        return Verdict::fail(Witness::Covector {
                            i: i + 1,
                            j: j + 1,
                            support: subset::elements(z.support()).map(|e| e + 1).collect(),
                        });
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// `(M_s*, .., M_1*)`.
    pub fn dual(&self) -> FlagMatroid {
        FlagMatroid { components: self.components.iter().rev().map(FMatroid::dual).collect() }
    }

    /// Componentwise `M_k \ del / con`.
    pub fn minor(&self, del: Mask, con: Mask) -> Result<FlagMatroid> {
        let components = self
            .components
            .iter()
            .map(|m| m.minor(del, con))
            .collect::<Result<Vec<_>>>()?;
        FlagMatroid::new(components)
    }

    pub fn pushforward(&self, f: &TractMorphism) -> Result<FlagMatroid> {
        let components = self
            .components
            .iter()
            .map(|m| m.pushforward(f))
            .collect::<Result<Vec<_>>>()?;
        FlagMatroid::new(components)
    }

    /// Components at the given 1-based, strictly increasing positions.
    pub fn subflag(&self, indices: &[usize]) -> Result<FlagMatroid> {
        if indices.is_empty()
            || indices.windows(2).any(|w| w[0] >= w[1])
            || indices[0] == 0
            || *indices.last().unwrap() > self.components.len()
        {
            return Err(Error::Invalid(format!("bad component indices {indices:?}")));
        }
        FlagMatroid::new(indices.iter().map(|&i| self.components[i - 1].clone()).collect())
    }

    /// Extension `M̂` of rank `r + 1` on `E ⊔ {e}` with `M̂/e = M_1` and `M̂\e = M_2`, for
    /// a flag of rank `(r, r + 1)` over a perfect tract. The new element is `n + 1`.
    ///
    /// `φ(x) = β·ν(x)` when `e ∉ x`, and `φ(.., e at slot ℓ, ..) = ε^{r+1-ℓ} α·μ(x - e)`.
    /// Distinct ratios `α/β` give distinct matroids.
    pub fn lift(&self, alpha: &Element, beta: &Element) -> Result<FMatroid> {
        let tract = self.tract();
        if !tract.is_perfect() {
            return Err(Error::NotPerfect(tract));
        }
        let ranks = self.ranks().0;
        if ranks.len() != 2 || ranks[1] != ranks[0] + 1 {
            return Err(Error::Invalid(format!("lift needs rank (r, r+1), got {ranks:?}")));
        }
        for a in [alpha, beta] {
            if a.tract() != tract {
                return Err(Error::TractMismatch { expected: tract, found: a.tract() });
            }
            if a.is_zero() {
                return Err(Error::Invalid("scales must be units".into()));
            }
        }
        let n = self.ground_size();
        if n + 1 > subset::MAX_GROUND {
            return Err(Error::Bounds(format!("lift of a flag on {n} elements")));
        }
        let (mu, nu) = (self.components[0].gp(), self.components[1].gp());
        // In sorted order e = n is always in the last slot, so the ε exponent vanishes.
        let gp = GpFunction::from_fn(n + 1, ranks[1], tract, |t| match t.split_last() {
            Some((&last, head)) if last == n => {
                alpha.times(mu.value(subset::from_slice(head)))
            }
            _ => beta.times(nu.value(subset::from_slice(t))),
        })?;
        let verdict = gp.validate(GpMode::Full)?;
        if !verdict.ok {
            return Err(Error::NotGp(format!(
                "lift fails the Plücker relations at {:?}; the input is not a flag",
                verdict.witness.unwrap()
            )));
        }
        Ok(FMatroid::from_valid(gp))
    }
}

/// Flag of minors `M_i = M' \ I_i / J_i` of a matroid `M'` on `{1, .., n + p}`, with
/// `J_i = {n+1, .., n+n_i}` and `I_i = {n+n_i+1, .., n+p}` for cuts `n_1 ≥ .. ≥ n_s`.
pub fn flags_of_minors(mprime: &FMatroid, n: usize, cuts: &[usize]) -> Result<FlagMatroid> {
    let total = mprime.ground_size();
    if n == 0 || n > total {
        return Err(Error::Invalid(format!("cannot cut {total} elements down to {n}")));
    }
    let p = total - n;
    if cuts.is_empty() || cuts.windows(2).any(|w| w[0] < w[1]) || cuts.iter().any(|&c| c > p) {
        return Err(Error::Invalid(format!("cuts {cuts:?} must be nonincreasing and at most {p}")));
    }
    let span = |from: usize, to: usize| -> Mask { (from..to).fold(0, |m, e| m | (1 << e)) };
    let components = cuts
        .iter()
        .map(|&c| mprime.minor(span(n + c, total), span(n, n + c)))
        .collect::<Result<Vec<_>>>()?;
    FlagMatroid::new(components)
}
