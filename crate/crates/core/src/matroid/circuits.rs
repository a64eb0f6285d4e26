//! Tract-valued vectors, circuits, cocircuits and orthogonality.

use std::collections::BTreeMap;

use crate::classical::ClassicalMatroid;
use crate::error::{Error, Result};
use crate::matroid::FMatroid;
use crate::subset::{self, Mask};
use crate::tract::{Element, FormalSum, Tract};
use crate::verdict::Verdict;

/// An element of `F^E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TractVector {
    tract: Tract,
    coords: Vec<Element>,
}

impl TractVector {
    pub fn new(tract: Tract, coords: Vec<Element>) -> Result<Self> {
        if coords.is_empty() || coords.len() > subset::MAX_GROUND {
            return Err(Error::Bounds(format!("vector of length {}", coords.len())));
        }
        if let Some(bad) = coords.iter().find(|c| c.tract() != tract) {
            return Err(Error::TractMismatch { expected: tract, found: bad.tract() });
        }
        Ok(TractVector { tract, coords })
    }

    pub fn zero(tract: Tract, n: usize) -> Self {
        TractVector { tract, coords: vec![tract.zero(); n] }
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Element] {
        &self.coords
    }

    pub fn support(&self) -> Mask {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn scaled(&self, a: &Element) -> Result<TractVector> {
        if a.tract() != self.tract {
            return Err(Error::TractMismatch { expected: self.tract, found: a.tract() });
        }
        Ok(TractVector { tract: self.tract, coords: self.coords.iter().map(|c| c.times(a)).collect() })
    }

    /// Scales so that the first nonzero coordinate is `1`; the zero vector is unchanged.
    pub fn canonical(&self) -> TractVector {
        match self.coords.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inverse().expect("nonzero elements are units");
                TractVector {
                    tract: self.tract,
                    coords: self.coords.iter().map(|c| c.times(&inv)).collect(),
                }
            }
        }
    }

    fn check(&self, other: &TractVector) -> Result<()> {
        if self.tract != other.tract {
            return Err(Error::TractMismatch { expected: self.tract, found: other.tract });
        }
        if self.len() != other.len() {
            return Err(Error::GroundMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// `X · Y = Σ X_i · τ(Y_i)` as a formal sum.
    pub fn inner_product(&self, other: &TractVector) -> Result<FormalSum> {
        self.check(other)?;
        let mut sum = FormalSum::new(self.tract);
        for (a, b) in self.coords.iter().zip(&other.coords) {
            sum.push_unchecked(a.times(&self.tract.involution(b)));
        }
        Ok(sum)
    }

    pub fn is_orthogonal(&self, other: &TractVector) -> Result<bool> {
        Ok(self.inner_product(other)?.is_null())
    }
}

/// One canonical representative per circuit of the underlying matroid; the family stands
/// for all unit multiples of its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    tract: Tract,
    n: usize,
    reps: Vec<TractVector>,
}

impl CircuitFamily {
    /// Representatives are canonicalized and ordered by support.
    pub fn new(tract: Tract, n: usize, reps: Vec<TractVector>) -> Result<Self> {
        let mut out = Vec::with_capacity(reps.len());
        for r in reps {
            if r.tract != tract {
                return Err(Error::TractMismatch { expected: tract, found: r.tract });
            }
            if r.len() != n {
                return Err(Error::GroundMismatch(n, r.len()));
            }
            out.push(r.canonical());
        }
        out.sort_by_key(|r| (r.support(), r.clone()));
        Ok(CircuitFamily { tract, n, reps: out })
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn representatives(&self) -> &[TractVector] {
        &self.reps
    }

    pub fn supports(&self) -> Vec<Mask> {
        self.reps.iter().map(TractVector::support).collect()
    }

    /// Every representative is orthogonal to `x`.
    pub fn all_orthogonal_to(&self, x: &TractVector) -> Result<bool> {
        for r in &self.reps {
            if !x.is_orthogonal(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks that this is a signature of `m`: no zero vector, pairwise non-proportional
    /// representatives on distinct supports, and supports exactly the circuits of `m`.
    pub fn is_signature_of(&self, m: &ClassicalMatroid) -> std::result::Result<(), String> {
        if m.ground_size() != self.n {
            return Err("ground set size differs".into());
        }
        let mut seen = std::collections::BTreeSet::new();
        for r in &self.reps {
            let s = r.support();
            if s == 0 {
                return Err("contains the zero vector".into());
            }
            if !seen.insert(s) {
                return Err(format!("two non-proportional vectors on support {}", subset::format_key(s)));
            }
        }
        if seen != m.circuits() {
            return Err("supports differ from the circuits".into());
        }
        Ok(())
    }
}

impl FMatroid {
    /// Circuit representatives: for each circuit `C` pick `y_0 ∈ C` and a basis
    /// `{y_1, .., y_r} ⊇ C - y_0`, and set `X(y_i) = ε^i · φ(y_0, .., ŷ_i, .., y_r)`.
    ///
    /// Circuits are reached as fundamental circuits `y_0 ∉ B`, `C ⊆ B + y_0`.
    pub fn circuits(&self) -> CircuitFamily {
        let gp = self.gp();
        let n = gp.ground_size();
        let tract = gp.tract();
        let bases = self.bases();
        let is_basis = |s: Mask| bases.binary_search(&s).is_ok();
        let mut found: BTreeMap<Mask, TractVector> = BTreeMap::new();
        for &b in &bases {
            for e in (0..n).filter(|&e| !subset::contains(b, e)) {
                let support = subset::elements(b)
                    .filter(|&x| is_basis((b & !(1 << x)) | (1 << e)))
                    .fold(1 << e, |m, x| m | (1 << x));
                if found.contains_key(&support) {
                    continue;
                }
                let y: Vec<usize> = std::iter::once(e).chain(subset::elements(b)).collect();
                let mut coords = vec![tract.zero(); n];
                let mut rest = Vec::with_capacity(y.len() - 1);
                for (i, &yi) in y.iter().enumerate() {
                    rest.clear();
                    rest.extend(y.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                    coords[yi] = gp.eval(&rest).times_eps(i % 2 == 1);
                }
                let x = TractVector { tract, coords }.canonical();
                debug_assert_eq!(x.support(), support);
                found.insert(support, x);
            }
        }
        CircuitFamily { tract, n, reps: found.into_values().collect() }
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> CircuitFamily {
        self.dual().circuits()
    }

    fn check_vector(&self, x: &TractVector) -> Result<()> {
        if x.tract() != self.tract() {
            return Err(Error::TractMismatch { expected: self.tract(), found: x.tract() });
        }
        if x.len() != self.ground_size() {
            return Err(Error::GroundMismatch(self.ground_size(), x.len()));
        }
        Ok(())
    }

    /// Orthogonal to every circuit.
    pub fn is_covector(&self, x: &TractVector) -> Result<bool> {
        self.check_vector(x)?;
        self.circuits().all_orthogonal_to(x)
    }

    /// Orthogonal to every cocircuit.
    pub fn is_vector(&self, x: &TractVector) -> Result<bool> {
        self.check_vector(x)?;
        self.cocircuits().all_orthogonal_to(x)
    }
}

/// Whether `(c, d)` is a dual pair of signatures of `m`: `c` a signature of `m`, `d` one of
/// its dual, and every member of `c` orthogonal to every member of `d`.
pub fn dual_pair_validate(m: &ClassicalMatroid, c: &CircuitFamily, d: &CircuitFamily) -> Verdict {
    if c.tract != d.tract || c.n != d.n {
        return Verdict::signature("families live over different tracts or ground sets");
    }
    if let Err(e) = c.is_signature_of(m) {
        return Verdict::signature(format!("first family: {e}"));
    }
    if let Err(e) = d.is_signature_of(&m.dual()) {
        return Verdict::signature(format!("second family: {e}"));
    }
    for x in &c.reps {
        for y in &d.reps {
            if !x.is_orthogonal(y).unwrap_or(false) {
                return Verdict::signature(format!(
                    "circuit on {} is not orthogonal to cocircuit on {}",
                    subset::format_key(x.support()),
                    subset::format_key(y.support())
                ));
            }
        }
    }
    Verdict::pass()
}
