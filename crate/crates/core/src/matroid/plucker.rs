//! Precomputed index tables for the (flag) Plücker relations between a Grassmann-Plücker
//! function of rank `w` ("big") and one of rank `r` ("small") on `n` elements:
//!
//! `Σ_k ε^k · big(y \ y_k) · small(y_k, x_1, .., x_{r-1})`
//!
//! for sorted distinct `x` of size `r - 1` and `y` of size `w + 1`. Tuples with repeats or
//! out of order only produce unit multiples of these sums or trivially null ones.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::subset::{self, Mask};
use crate::tract::{Element, FormalSum, Tract};

pub(crate) struct Term {
    pub big: u32,
    pub small: u32,
    /// Parity of the exponent of `ε`.
    pub odd: bool,
}

pub(crate) struct Relation {
    pub x: Mask,
    pub y: Mask,
    pub terms: Vec<Term>,
}

pub(crate) struct Plan {
    pub relations: Vec<Relation>,
}

type Key = (usize, usize, usize, bool);

fn build(n: usize, w: usize, r: usize, three_term: bool) -> Plan {
    let mut relations = Vec::new();
    if r == 0 || w + 1 > n {
        return Plan { relations };
    }
    let xs = subset::k_subsets(n, r - 1);
    let ys = subset::k_subsets(n, w + 1);
    for &x in &xs {
        for &y in &ys {
            if three_term && subset::size(y & !x) != 3 {
                continue;
            }
            let mut terms = Vec::new();
            for (k, yk) in subset::elements(y).enumerate() {
                if subset::contains(x, yk) {
                    continue;
                }
                let k = k + 1;
                terms.push(Term {
                    big: subset::lex_rank(y & !(1 << yk), n) as u32,
                    small: subset::lex_rank(x | (1 << yk), n) as u32,
                    odd: (k + subset::count_below(x, yk)) % 2 == 1,
                });
            }
            if !terms.is_empty() {
                relations.push(Relation { x, y, terms });
            }
        }
    }
    Plan { relations }
}

/// Shared plan for the given shape; plans are cached for the life of the process.
pub(crate) fn plan(n: usize, w: usize, r: usize, three_term: bool) -> Arc<Plan> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Plan>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, w, r, three_term);
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = Arc::new(build(n, w, r, three_term));
    cache.lock().unwrap().entry(key).or_insert(p).clone()
}

pub(crate) fn is_null(tract: Tract, rel: &Relation, big: &[Element], small: &[Element]) -> bool {
    let mut sum = FormalSum::new(tract);
    for t in &rel.terms {
        let a = &big[t.big as usize];
        let b = &small[t.small as usize];
        if a.is_zero() || b.is_zero() {
            continue;
        }
        sum.push_unchecked(a.times(b).times_eps(t.odd));
    }
    sum.is_null()
}

const PARALLEL_THRESHOLD: usize = 20_000;

/// Index of the first relation (in lexicographic `(x, y)` order) that is not null.
pub(crate) fn first_failure(
    plan: &Plan,
    tract: Tract,
    big: &[Element],
    small: &[Element],
) -> Option<usize> {
    if plan.relations.len() >= PARALLEL_THRESHOLD {
        plan.relations
            .par_iter()
            .position_first(|rel| !is_null(tract, rel, big, small))
    } else {
        plan.relations
            .iter()
            .position(|rel| !is_null(tract, rel, big, small))
    }
}
