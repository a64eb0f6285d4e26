//! Brute-force enumeration of matroids and flag matroids over finite tracts, the
//! specialization order on Krasner flags, and representation search.
//!
//! Candidates are generated modulo the unit group by fixing the value on the
//! lexicographically least basis to `1`, and pruned as soon as a Plücker relation has all of
//! its values assigned. Results come out in lexicographic order of the value lists (zero
//! first, then units in [`Tract::units`] order) regardless of the thread count.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flag::{quotient_check, FlagMatroid};
use crate::matroid::{plucker, FMatroid, GpFunction};
use crate::subset;
use crate::tract::{Element, Tract, TractMorphism};

pub const MAX_MATROID_GROUND: usize = 6;
pub const MAX_FLAG_GROUND: usize = 5;

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub tract: Tract,
    pub n: usize,
    pub ranks: Vec<usize>,
    pub count: usize,
    pub items: Option<Vec<FlagMatroid>>,
    pub elapsed: Duration,
}

/// Which values a position may take.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Zero,
    Unit,
}

struct Search<'a> {
    tract: Tract,
    units: Vec<Element>,
    slots: Vec<Slot>,
    plan: &'a plucker::Plan,
    /// Relations whose largest value index is `i`.
    closing: Vec<Vec<usize>>,
    limit: Option<usize>,
}

impl Search<'_> {
    fn choices(&self, i: usize, have_unit: bool) -> Vec<Element> {
        let zero = std::iter::once(self.tract.zero());
        let units: Vec<Element> = if have_unit {
            self.units.clone()
        } else {
            vec![self.tract.one()]
        };
        match self.slots[i] {
            Slot::Zero => vec![self.tract.zero()],
            Slot::Unit => units,
            Slot::Free => zero.chain(units).collect(),
        }
    }

    fn consistent(&self, i: usize, values: &[Element]) -> bool {
        self.closing[i]
            .iter()
            .all(|&ri| plucker::is_null(self.tract, &self.plan.relations[ri], values, values))
    }

    fn extend(&self, values: &mut Vec<Element>, out: &mut Vec<Vec<Element>>) {
        if self.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let i = values.len();
        if i == self.slots.len() {
            if values.iter().any(|v| !v.is_zero()) {
                out.push(values.clone());
            }
            return;
        }
        let have_unit = values.iter().any(|v| !v.is_zero());
        for c in self.choices(i, have_unit) {
            values.push(c);
            if self.consistent(i, values) {
                self.extend(values, out);
            }
            values.pop();
        }
    }

    /// Consistent prefixes of the given length, in order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<Element>> {
        let mut level = vec![Vec::new()];
        for i in 0..depth.min(self.slots.len()) {
            let mut next = Vec::new();
            for p in level {
                let have_unit = p.iter().any(|v: &Element| !v.is_zero());
                for c in self.choices(i, have_unit) {
                    let mut q = p.clone();
                    q.push(c);
                    if self.consistent(i, &q) {
                        next.push(q);
                    }
                }
            }
            level = next;
        }
        level
    }
}

/// Canonical Grassmann-Plücker functions of rank `r` on `n` elements over a finite tract,
/// optionally with prescribed support (`true` = nonzero) and a cap on the number returned.
fn search_gp(
    tract: Tract,
    n: usize,
    r: usize,
    support: Option<&[bool]>,
    limit: Option<usize>,
) -> Result<Vec<GpFunction>> {
    let units = tract.units()?;
    let plan = plucker::plan(n, r, r, false);
    let len = subset::binomial(n, r);
    let mut closing = vec![Vec::new(); len];
    for (ri, rel) in plan.relations.iter().enumerate() {
        let last = rel
            .terms
            .iter()
            .map(|t| t.big.max(t.small) as usize)
            .max()
            .expect("relations have terms");
        closing[last].push(ri);
    }
    let slots = match support {
        None => vec![Slot::Free; len],
        Some(s) => s.iter().map(|&b| if b { Slot::Unit } else { Slot::Zero }).collect(),
    };
    let search = Search { tract, units, slots, plan: &plan, closing, limit };
    let found: Vec<Vec<Element>> = if limit.is_some() {
        let mut out = Vec::new();
        search.extend(&mut Vec::new(), &mut out);
        out
    } else {
        let prefixes = search.prefixes(len.min(4));
        prefixes
            .into_par_iter()
            .map(|mut p| {
                let mut out = Vec::new();
                search.extend(&mut p, &mut out);
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    found
        .into_iter()
        .map(|values| GpFunction::new(n, r, tract, values))
        .collect()
}

fn check_finite(t: Tract) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::InfiniteTract(t))
    }
}

/// All matroids of rank `r` on `n ≤ 6` elements over a finite tract, canonical and sorted.
pub fn matroids(t: Tract, r: usize, n: usize) -> Result<Vec<FMatroid>> {
    check_finite(t)?;
    if n == 0 || n > MAX_MATROID_GROUND || r > n {
        return Err(Error::Bounds(format!("rank {r} on {n} elements")));
    }
    Ok(search_gp(t, n, r, None, None)?
        .into_iter()
        .map(FMatroid::from_valid)
        .collect())
}

pub fn enumerate_matroids(t: Tract, r: usize, n: usize, keep_items: bool) -> Result<EnumerationReport> {
    let start = Instant::now();
    let found = matroids(t, r, n)?;
    let count = found.len();
    let items = keep_items.then(|| {
        found
            .into_iter()
            .map(|m| FlagMatroid::new(vec![m]).expect("single components are flags"))
            .collect()
    });
    Ok(EnumerationReport { tract: t, n, ranks: vec![r], count, items, elapsed: start.elapsed() })
}

/// Extends flags component by component, keeping only sequences that pass every pairwise
/// quotient check.
fn assemble_flags(candidates: &[Vec<FMatroid>], limit: Option<usize>) -> Vec<FlagMatroid> {
    fn extend(
        candidates: &[Vec<FMatroid>],
        chosen: &mut Vec<FMatroid>,
        out: &mut Vec<FlagMatroid>,
        limit: Option<usize>,
    ) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let k = chosen.len();
        if k == candidates.len() {
            out.push(FlagMatroid::new(chosen.clone()).expect("checked while assembling"));
            return;
        }
        for c in &candidates[k] {
            if let Some(prev) = chosen.last() {
                if prev.rank() == c.rank() && prev != c {
                    continue;
                }
            }
            let ok = chosen
                .iter()
                .all(|m| quotient_check(c, m).map(|v| v.ok).unwrap_or(false));
            if ok {
                chosen.push(c.clone());
                extend(candidates, chosen, out, limit);
                chosen.pop();
            }
        }
    }
    if candidates.is_empty() {
        return Vec::new();
    }
    if limit.is_some() {
        let mut out = Vec::new();
        extend(candidates, &mut Vec::new(), &mut out, limit);
        return out;
    }
    candidates[0]
        .par_iter()
        .map(|first| {
            let mut out = Vec::new();
            extend(candidates, &mut vec![first.clone()], &mut out, None);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn check_flag_shape(ranks: &[usize], n: usize) -> Result<()> {
    if n == 0 || n > MAX_FLAG_GROUND {
        return Err(Error::Bounds(format!("flags on {n} elements (at most {MAX_FLAG_GROUND})")));
    }
    if ranks.is_empty() || ranks.windows(2).any(|w| w[0] > w[1]) || ranks.iter().any(|&r| r > n) {
        return Err(Error::Invalid(format!("ranks {ranks:?} must be nondecreasing and at most {n}")));
    }
    Ok(())
}

/// All flag matroids of the given rank vector on `n ≤ 5` elements over a finite tract.
pub fn flag_matroids(t: Tract, ranks: &[usize], n: usize) -> Result<Vec<FlagMatroid>> {
    check_finite(t)?;
    check_flag_shape(ranks, n)?;
    let mut per_rank = std::collections::BTreeMap::new();
    for &r in ranks {
        if let std::collections::btree_map::Entry::Vacant(e) = per_rank.entry(r) {
            e.insert(matroids(t, r, n)?);
        }
    }
    let candidates: Vec<Vec<FMatroid>> = ranks.iter().map(|r| per_rank[r].clone()).collect();
    Ok(assemble_flags(&candidates, None))
}

pub fn enumerate_flag_matroids(
    t: Tract,
    ranks: &[usize],
    n: usize,
    keep_items: bool,
) -> Result<EnumerationReport> {
    let start = Instant::now();
    let found = flag_matroids(t, ranks, n)?;
    Ok(EnumerationReport {
        tract: t,
        n,
        ranks: ranks.to_vec(),
        count: found.len(),
        items: keep_items.then_some(found),
        elapsed: start.elapsed(),
    })
}

/// Krasner flags ordered componentwise by containment of basis sets.
#[derive(Clone, Debug)]
pub struct SpecializationPoset {
    pub nodes: Vec<FlagMatroid>,
    /// Cover relations `(lower, upper)` of the strict order.
    pub covers: Vec<(usize, usize)>,
    /// The unique maximal node, if there is exactly one.
    pub top: Option<usize>,
}

/// Every basis of each component of `a` is a basis of the matching component of `b`.
pub fn specializes(a: &FlagMatroid, b: &FlagMatroid) -> bool {
    a.components()
        .iter()
        .zip(b.components())
        .all(|(x, y)| x.bases().iter().all(|&s| y.is_basis(s)))
}

impl SpecializationPoset {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        specializes(&self.nodes[a], &self.nodes[b])
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.nodes.len()).all(|a| {
            (0..self.nodes.len()).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a)))
        })
    }
}

pub fn k_specialization_poset(ranks: &[usize], n: usize) -> Result<SpecializationPoset> {
    let nodes = flag_matroids(Tract::Krasner, ranks, n)?;
    let len = nodes.len();
    let below: Vec<Vec<bool>> = (0..len)
        .map(|a| (0..len).map(|b| a != b && specializes(&nodes[a], &nodes[b])).collect())
        .collect();
    let mut covers = Vec::new();
    for a in 0..len {
        for b in 0..len {
            if below[a][b] && !(0..len).any(|c| below[a][c] && below[c][b]) {
                covers.push((a, b));
            }
        }
    }
    let maximal: Vec<usize> = (0..len).filter(|&a| !below[a].iter().any(|&x| x)).collect();
    let top = (maximal.len() == 1).then(|| maximal[0]);
    Ok(SpecializationPoset { nodes, covers, top })
}

fn support_pattern(m: &FMatroid) -> Vec<bool> {
    m.gp().values().iter().map(|v| !v.is_zero()).collect()
}

fn representations(fk: &FlagMatroid, t: Tract, limit: Option<usize>) -> Result<Vec<FlagMatroid>> {
    if fk.tract() != Tract::Krasner {
        return Err(Error::TractMismatch { expected: Tract::Krasner, found: fk.tract() });
    }
    check_finite(t)?;
    let n = fk.ground_size();
    let candidates = fk
        .components()
        .iter()
        .map(|m| {
            let found = search_gp(t, n, m.rank(), Some(&support_pattern(m)), None)?;
            Ok(found.into_iter().map(FMatroid::from_valid).collect())
        })
        .collect::<Result<Vec<Vec<FMatroid>>>>()?;
    Ok(assemble_flags(&candidates, limit))
}

/// All canonical flags over `t` whose push-forward to the Krasner hyperfield is `fk`.
pub fn representation_search(fk: &FlagMatroid, t: Tract) -> Result<Vec<FlagMatroid>> {
    if fk.ground_size() > MAX_FLAG_GROUND {
        return Err(Error::Bounds(format!("representation search on {} elements", fk.ground_size())));
    }
    representations(fk, t, None)
}

/// Result of the binary-and-orientable-implies-regular construction for rank `(r, r+1)`.
#[derive(Clone, Debug)]
pub struct RegularityOutcome {
    /// A flag over the regular partial field pushing forward to the input.
    pub regular: Option<FlagMatroid>,
    pub reason: Option<String>,
    pub binary: Option<FlagMatroid>,
    pub oriented: Option<FlagMatroid>,
    /// The single-element extension of the input whose minors are the input.
    pub extension: Option<FMatroid>,
}

impl RegularityOutcome {
    fn stop(reason: &str, binary: Option<FlagMatroid>, oriented: Option<FlagMatroid>) -> Self {
        RegularityOutcome { regular: None, reason: Some(reason.into()), binary, oriented, extension: None }
    }
}

/// Finds GF(2) and sign representations of a Krasner flag of rank `(r, r+1)`, extends them
/// by one element, and searches a regular representation of the extension, whose minors by
/// the new element give a regular representation of the flag.
pub fn regularity_pipeline(fk: &FlagMatroid) -> Result<RegularityOutcome> {
    let ranks = fk.ranks().0;
    if ranks.len() != 2 || ranks[1] != ranks[0] + 1 {
        return Err(Error::Invalid(format!("expected rank (r, r+1), got {ranks:?}")));
    }
    if fk.ground_size() > MAX_FLAG_GROUND {
        return Err(Error::Bounds(format!("regularity search on {} elements", fk.ground_size())));
    }
    let f2 = Tract::FiniteField(2);
    let Some(binary) = representations(fk, f2, Some(1))?.pop() else {
        return Ok(RegularityOutcome::stop("no GF(2) representation", None, None));
    };
    let Some(oriented) = representations(fk, Tract::Sign, Some(1))?.pop() else {
        return Ok(RegularityOutcome::stop("no sign representation", Some(binary), None));
    };
    let k1 = Tract::Krasner.one();
    let extension = fk.lift(&k1, &k1)?;
    for (flag, t) in [(&binary, f2), (&oriented, Tract::Sign)] {
        let lifted = flag.lift(&t.one(), &t.one())?;
        debug_assert_eq!(lifted.pushforward(&TractMorphism::terminal(t))?, extension);
    }
    let n = fk.ground_size();
    let regular_ext = search_gp(
        Tract::RegularPartial,
        n + 1,
        extension.rank(),
        Some(&support_pattern(&extension)),
        Some(1),
    )?
    .pop()
    .map(FMatroid::from_valid);
    let Some(regular_ext) = regular_ext else {
        let mut out = RegularityOutcome::stop(
            "no regular representation of the extension",
            Some(binary),
            Some(oriented),
        );
        out.extension = Some(extension);
        return Ok(out);
    };
    let e: subset::Mask = 1 << n;
    let regular = FlagMatroid::new(vec![regular_ext.contract(e)?, regular_ext.delete(e)?])?;
    Ok(RegularityOutcome {
        regular: Some(regular),
        reason: None,
        binary: Some(binary),
        oriented: Some(oriented),
        extension: Some(extension),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(matroids(Tract::Krasner, 1, 2).unwrap().len(), 3);
        assert_eq!(matroids(Tract::Krasner, 1, 3).unwrap().len(), 7);
        assert_eq!(matroids(Tract::Sign, 1, 2).unwrap().len(), 4);
        assert_eq!(flag_matroids(Tract::Krasner, &[1, 1], 2).unwrap().len(), 3);
    }

    #[test]
    fn bounds() {
        assert!(matroids(Tract::Phase, 1, 2).is_err());
        assert!(matroids(Tract::Sign, 1, 7).is_err());
        assert!(flag_matroids(Tract::Sign, &[2, 1], 3).is_err());
        assert!(flag_matroids(Tract::Sign, &[1], 6).is_err());
    }

    #[test]
    fn output_is_sorted_and_canonical() {
        let ms = matroids(Tract::Sign, 2, 4).unwrap();
        for m in &ms {
            assert!(m.gp().values().iter().find(|v| !v.is_zero()).unwrap().is_one());
        }
        let mut sorted = ms.clone();
        sorted.sort_by_key(value_key);
        assert_eq!(ms, sorted);
    }

    fn value_key(m: &FMatroid) -> Vec<usize> {
        let units = m.tract().units().unwrap();
        m.gp()
            .values()
            .iter()
            .map(|v| if v.is_zero() { 0 } else { 1 + units.iter().position(|u| u == v).unwrap() })
            .collect()
    }

    #[test]
    fn rank_one_poset() {
        let p = k_specialization_poset(&[1], 2).unwrap();
        assert_eq!(p.nodes.len(), 3);
        let top = p.top.unwrap();
        assert_eq!(p.nodes[top].components()[0].bases(), vec![0b01, 0b10]);
        assert_eq!(p.covers.len(), 2);
        assert!(p.covers.iter().all(|&(_, u)| u == top));
    }

    #[test]
    fn krasner_search_is_identity() {
        let fk = FlagMatroid::new(vec![FMatroid::all_ones(3, 2, Tract::Krasner).unwrap()]).unwrap();
        assert_eq!(representation_search(&fk, Tract::Krasner).unwrap(), vec![fk]);
    }
}
