//! Parameterized Schur-product expansions used in the extension case analysis,
//! written out term by term so they can be compared with the LR engine.

use crate::partition::{Partition, PartitionMultiset};

/// A generic term: coefficient times a shape depending on `(k, l)`.
pub(crate) struct Term {
    pub coefficient: u64,
    pub shape: fn(i64, i64) -> Vec<i64>,
    /// Display form of the generic shape.
    pub label: &'static str,
}

/// Which parameters an expansion uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Params {
    None,
    K,
    /// `k >= l >= 1`.
    KL,
}

pub(crate) struct Expansion {
    pub name: &'static str,
    pub params: Params,
    /// Factors of the product as raw shapes in `(k, l)`.
    pub factors: fn(i64, i64) -> Vec<Vec<i64>>,
    pub terms: Vec<Term>,
    /// Terms known to be misprinted, with their replacement.
    pub corrections: Vec<Correction>,
}

pub(crate) struct Correction {
    pub printed: &'static str,
    pub corrected: Term,
}

macro_rules! term {
    ($c:expr, $label:expr, |$k:ident, $l:ident| $shape:expr) => {
        Term {
            coefficient: $c,
            shape: {
                #[allow(unused_variables)]
                fn f($k: i64, $l: i64) -> Vec<i64> {
                    $shape
                }
                f
            },
            label: $label,
        }
    };
}

pub(crate) fn expansions() -> Vec<Expansion> {
    vec![
        Expansion {
            name: "[k,l]·[1,1]",
            params: Params::KL,
            factors: |k, l| vec![vec![k, l], vec![1, 1]],
            terms: vec![
                term!(1, "[k+1,l+1]", |k, l| vec![k + 1, l + 1]),
                term!(1, "[k+1,l,1]", |k, l| vec![k + 1, l, 1]),
                term!(1, "[k,l+1,1]", |k, l| vec![k, l + 1, 1]),
                term!(1, "[k,l,1,1]", |k, l| vec![k, l, 1, 1]),
            ],
            corrections: vec![],
        },
        Expansion {
            name: "[k,1,1]·[1,1]",
            params: Params::K,
            factors: |k, _| vec![vec![k, 1, 1], vec![1, 1]],
            terms: vec![
                term!(1, "[k+1,2,1]", |k, l| vec![k + 1, 2, 1]),
                term!(1, "[k+1,1,1,1]", |k, l| vec![k + 1, 1, 1, 1]),
                term!(1, "[k,2,2]", |k, l| vec![k, 2, 2]),
                term!(1, "[k,2,1,1]", |k, l| vec![k, 2, 1, 1]),
                term!(1, "[k,1,1,1,1]", |k, l| vec![k, 1, 1, 1, 1]),
            ],
            corrections: vec![],
        },
        Expansion {
            name: "[2,2,1]·[1,1]",
            params: Params::None,
            factors: |_, _| vec![vec![2, 2, 1], vec![1, 1]],
            terms: vec![
                term!(1, "[3,3,1]", |k, l| vec![3, 3, 1]),
                term!(1, "[3,2,2]", |k, l| vec![3, 2, 2]),
                term!(1, "[3,2,1,1]", |k, l| vec![3, 2, 1, 1]),
                term!(1, "[2,2,2,1]", |k, l| vec![2, 2, 2, 1]),
                term!(1, "[2,2,1,1,1]", |k, l| vec![2, 2, 1, 1, 1]),
            ],
            corrections: vec![],
        },
        Expansion {
            name: "[1,1,1]·[k]",
            params: Params::K,
            factors: |k, _| vec![vec![1, 1, 1], vec![k]],
            terms: vec![
                term!(1, "[k+1,1,1]", |k, l| vec![k + 1, 1, 1]),
                term!(1, "[k,1,1,1]", |k, l| vec![k, 1, 1, 1]),
            ],
            corrections: vec![],
        },
        Expansion {
            name: "[1,1,1,1]·[1,1]",
            params: Params::None,
            factors: |_, _| vec![vec![1, 1, 1, 1], vec![1, 1]],
            terms: vec![
                term!(1, "[2,2,1,1]", |k, l| vec![2, 2, 1, 1]),
                term!(1, "[2,1,1,1,1]", |k, l| vec![2, 1, 1, 1, 1]),
                term!(1, "[1,1,1,1,1,1]", |k, l| vec![1, 1, 1, 1, 1, 1]),
            ],
            corrections: vec![],
        },
        Expansion {
            name: "[k]·[1,1,1]·[1,1]",
            params: Params::K,
            factors: |k, _| vec![vec![k], vec![1, 1, 1], vec![1, 1]],
            terms: vec![
                term!(1, "[k+2,1,1,1]", |k, l| vec![k + 2, 1, 1, 1]),
                term!(2, "[k+1,2,1,1]", |k, l| vec![k + 1, 2, 1, 1]),
                term!(2, "[k+1,1,1,1,1]", |k, l| vec![k + 1, 1, 1, 1, 1]),
                term!(1, "[k,2,2,1]", |k, l| vec![k, 2, 2, 1]),
                term!(1, "[k,2,1,1,1]", |k, l| vec![k, 2, 1, 1, 1]),
                term!(1, "[k,1,1,1,1,1]", |k, l| vec![k, 1, 1, 1, 1, 1]),
                term!(1, "[k+1,2,1]", |k, l| vec![k + 1, 2, 1]),
                term!(1, "[k+1,2,2]", |k, l| vec![k + 1, 2, 2]),
            ],
            corrections: vec![Correction {
                printed: "[k+1,2,1]",
                corrected: term!(1, "[k+2,2,1]", |k, l| vec![k + 2, 2, 1]),
            }],
        },
    ]
}

/// A raw shape is kept iff it is a partition with positive parts.
pub(crate) fn valid_shape(raw: &[i64]) -> Option<Partition> {
    if raw.iter().any(|&x| x <= 0) || raw.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::normalize(raw).ok()
}

/// Sum of the valid instances of `terms` at `(k, l)`.
pub(crate) fn evaluate<'a>(
    terms: impl IntoIterator<Item = &'a Term>,
    k: i64,
    l: i64,
) -> PartitionMultiset {
    let mut out = PartitionMultiset::new();
    for t in terms {
        if let Some(p) = valid_shape(&(t.shape)(k, l)) {
            out.add(p, t.coefficient);
        }
    }
    out
}
