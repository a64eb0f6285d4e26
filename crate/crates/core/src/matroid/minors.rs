//! Contraction and deletion. The surviving elements are renumbered in increasing order.

use crate::error::{Error, Result};
use crate::matroid::{FMatroid, GpFunction};
use crate::subset::{self, Mask};

fn check_removal(m: &FMatroid, a: Mask) -> Result<()> {
    let n = m.ground_size();
    if a & !subset::full(n) != 0 {
        return Err(Error::Invalid(format!("{} is not a subset of the ground set", subset::format_key(a))));
    }
    if subset::size(a) >= n {
        return Err(Error::Invalid("minor would have an empty ground set".into()));
    }
    Ok(())
}

/// `g(x_1, .., x_k) = φ(x_1, .., x_k, tail..)` on the ground set with `removed` dropped.
fn restrict_with_tail(m: &FMatroid, removed: Mask, tail: &[usize]) -> FMatroid {
    let n = m.ground_size();
    let k = m.rank() - tail.len();
    let new_n = n - subset::size(removed);
    let gp = GpFunction::from_fn(new_n, k, m.tract(), |t| {
        let mut tuple: Vec<usize> =
            subset::elements(subset::expand(subset::from_slice(t), removed, n)).collect();
        tuple.extend_from_slice(tail);
        m.gp().eval(&tuple)
    })
    .expect("minor shape is in range");
    FMatroid::from_valid(gp)
}

impl FMatroid {
    /// Greedy maximal independent subset of `a`, in increasing order.
    pub fn max_independent_in(&self, a: Mask) -> Vec<usize> {
        let mut chosen: Mask = 0;
        for e in subset::elements(a) {
            if self.rank_of(chosen | (1 << e)) == subset::size(chosen) + 1 {
                chosen |= 1 << e;
            }
        }
        subset::to_vec(chosen)
    }

    /// `(φ/A)(x) = φ(x, a_1, .., a_ℓ)` for a maximal independent `{a_1, .., a_ℓ} ⊆ A`.
    pub fn contract(&self, a: Mask) -> Result<FMatroid> {
        let indep = self.max_independent_in(a);
        self.contract_with(a, &indep)
    }

    /// Contraction with an explicit maximal independent subset of `a` (0-based, any order).
    pub fn contract_with(&self, a: Mask, indep: &[usize]) -> Result<FMatroid> {
        check_removal(self, a)?;
        let chosen = subset::from_slice(indep);
        if chosen & !a != 0
            || subset::size(chosen) != indep.len()
            || self.rank_of(chosen) != indep.len()
            || self.rank_of(a) != indep.len()
        {
            return Err(Error::Invalid("not a maximal independent subset".into()));
        }
        Ok(restrict_with_tail(self, a, indep))
    }

    /// A subset of `a` completing a basis of `E \ A` to a basis of the whole matroid.
    pub fn deletion_tail(&self, a: Mask) -> Vec<usize> {
        let keep = subset::full(self.ground_size()) & !a;
        let k = self.rank_of(keep);
        let b = self
            .bases()
            .into_iter()
            .find(|&b| subset::size(b & keep) == k)
            .expect("some basis meets E \\ A in a maximal independent set");
        subset::to_vec(b & a)
    }

    /// `(φ\A)(x) = φ(x, a_1, .., a_{r-k})` where `{a_i}` is a basis of `M / (E \ A)`.
    pub fn delete(&self, a: Mask) -> Result<FMatroid> {
        let tail = self.deletion_tail(a);
        self.delete_with(a, &tail)
    }

    /// Deletion with an explicit basis `tail ⊆ A` of the contraction by `E \ A`.
    pub fn delete_with(&self, a: Mask, tail: &[usize]) -> Result<FMatroid> {
        check_removal(self, a)?;
        let keep = subset::full(self.ground_size()) & !a;
        let t = subset::from_slice(tail);
        let k = self.rank_of(keep);
        if t & !a != 0
            || subset::size(t) != tail.len()
            || tail.len() + k != self.rank()
            || self.rank_of(keep | t) != self.rank()
        {
            return Err(Error::Invalid("not a basis of the contraction by the complement".into()));
        }
        Ok(restrict_with_tail(self, a, tail))
    }

    /// `M \ I / J`: delete `del`, then contract `con` (both given on the original ground set).
    pub fn minor(&self, del: Mask, con: Mask) -> Result<FMatroid> {
        if del & con != 0 {
            return Err(Error::Invalid("deleted and contracted sets overlap".into()));
        }
        check_removal(self, del | con)?;
        let deleted = if del == 0 { self.clone() } else { self.delete(del)? };
        if con == 0 {
            return Ok(deleted);
        }
        deleted.contract(subset::compress(con, del))
    }
}
