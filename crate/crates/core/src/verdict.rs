use serde::Serialize;

/// Why a validation failed. Element lists are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The function vanishes identically.
    AllZero,
    /// The support is not the basis family of a matroid.
    NotMatroid,
    /// The Plücker (flag) relation indexed by the sorted tuples `x` and `y` is not null.
    Relation { x: Vec<usize>, y: Vec<usize> },
    /// Component `i` is not a quotient of component `j` (1-based).
    Pair { i: usize, j: usize, inner: Box<Witness> },
    /// A cocircuit of component `i` with the given support is not a covector of component `j`.
    Covector { i: usize, j: usize, support: Vec<usize> },
    /// A dual-pair condition failed.
    Signature { reason: String },
}

/// A boolean answer together with the lexicographically least counterexample, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { ok: true, witness: None }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict { ok: false, witness: Some(w) }
    }

    pub fn signature(reason: impl Into<String>) -> Self {
        Verdict::fail(Witness::Signature { reason: reason.into() })
    }
}
