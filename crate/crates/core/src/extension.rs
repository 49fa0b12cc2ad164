//! Abelian extensions `0 -> H -> G -> K -> 0` via the Littlewood-Richardson criterion.
//!
//! An extension splits into independent extensions of Sylow subgroups, and for
//! p-groups of types `mu`, `lambda`, `nu` a sequence `0 -> H_p -> G_p -> K_p -> 0`
//! exists iff `c^lambda_{mu,nu} > 0`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::lr::{lr_positive, lr_product};
use crate::partition::Partition;

/// One isomorphism class of middle group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Middle {
    pub group: AbelianGroup,
    /// `true` iff `group` is `H x K`.
    pub split: bool,
}

/// All isomorphism classes of `G` fitting in `0 -> sub -> G -> quot -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionResult {
    pub sub: AbelianGroup,
    pub quot: AbelianGroup,
    /// Sorted by group.
    pub middles: Vec<Middle>,
    /// Set when a cap stopped the enumeration early.
    pub truncated: bool,
}

impl ExtensionResult {
    pub fn groups(&self) -> impl Iterator<Item = &AbelianGroup> {
        self.middles.iter().map(|m| &m.group)
    }

    pub fn contains(&self, g: &AbelianGroup) -> bool {
        self.middles.iter().any(|m| &m.group == g)
    }
}

/// `true` iff some abelian `G` of this type is an extension of `k` by `h`
/// (`h` the subgroup, `k` the quotient).
pub fn extension_exists(h: &AbelianGroup, k: &AbelianGroup, g: &AbelianGroup) -> bool {
    if h.order().checked_mul(k.order()) != Some(g.order()) {
        return false;
    }
    g.sylow_types()
        .all(|(p, lambda)| lr_positive(lambda, &h.p_type(p), &k.p_type(p)))
}

/// Every middle group of `0 -> h -> G -> k -> 0`.
pub fn enumerate_extensions(h: &AbelianGroup, k: &AbelianGroup) -> ExtensionResult {
    enumerate_extensions_capped(h, k, None)
}

/// As [`enumerate_extensions`], stopping after `cap` middles.
pub fn enumerate_extensions_capped(
    h: &AbelianGroup,
    k: &AbelianGroup,
    cap: Option<usize>,
) -> ExtensionResult {
    let primes: BTreeSet<u64> = h.primes().chain(k.primes()).collect();
    // per prime: candidate types, the split (merged) shape first
    let per_prime: Vec<(u64, Vec<Partition>)> = primes
        .into_iter()
        .map(|p| {
            let (mu, nu) = (h.p_type(p), k.p_type(p));
            let split = mu.union(&nu);
            let mut shapes = vec![split.clone()];
            shapes.extend(
                lr_product(&mu, &nu)
                    .support()
                    .filter(|l| **l != split)
                    .cloned(),
            );
            (p, shapes)
        })
        .collect();

    let limit = cap.unwrap_or(usize::MAX);
    let mut middles = Vec::new();
    let mut truncated = false;
    let mut idx = vec![0usize; per_prime.len()];
    'outer: loop {
        if middles.len() >= limit {
            truncated = true;
            break;
        }
        let primary = per_prime
            .iter()
            .zip(&idx)
            .map(|((p, shapes), &i)| (*p, shapes[i].clone()))
            .collect();
        let group = AbelianGroup::from_primary(primary).expect("order bounded by |H||K|");
        let split = idx.iter().all(|&i| i == 0);
        middles.push(Middle { group, split });
        for slot in (0..idx.len()).rev() {
            idx[slot] += 1;
            if idx[slot] < per_prime[slot].1.len() {
                continue 'outer;
            }
            idx[slot] = 0;
        }
        break;
    }
    middles.sort();
    ExtensionResult {
        sub: h.clone(),
        quot: k.clone(),
        middles,
        truncated,
    }
}

/// Splits off a maximal cyclic factor: returns `(exponent of G, complement)`
/// with `G = Z/exponent x complement`.
pub fn max_cyclic_split(g: &AbelianGroup) -> Result<(u64, AbelianGroup)> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let primary = g
        .sylow_types()
        .map(|(p, lambda)| (p, Partition::from_sorted(lambda.parts()[1..].to_vec())))
        .collect();
    let complement = AbelianGroup::from_primary(primary)?;
    Ok((g.exponent(), complement))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> AbelianGroup {
        AbelianGroup::from_cyclic_factors(orders).unwrap()
    }

    #[test]
    fn existence_examples() {
        assert!(extension_exists(&g(&[2]), &g(&[2]), &g(&[4])));
        assert!(extension_exists(&g(&[2]), &g(&[2]), &g(&[2, 2])));
        assert!(!extension_exists(&g(&[2, 2]), &g(&[2, 2]), &g(&[8, 2])));
        assert!(!extension_exists(&g(&[2]), &g(&[2]), &g(&[8])));
    }

    #[test]
    fn klein_by_klein_times_two_case() {
        // H = (Z/2)^2, K = Z/2 x (Z/2)^2, 2-types [1,1] and [1,1,1]
        let h = g(&[2, 2]);
        let k = g(&[2, 2, 2]);
        let want = [
            g(&[4, 4, 2]),       // [2,2,1]
            g(&[4, 2, 2, 2]),    // [2,1,1,1]
            g(&[2, 2, 2, 2, 2]), // [1,1,1,1,1]
        ];
        for m in &want {
            assert!(extension_exists(&h, &k, m), "{m}");
        }
        let res = enumerate_extensions(&h, &k);
        assert_eq!(res.middles.len(), 3);
        assert!(want.iter().all(|m| res.contains(m)));
        // everything else of order 32 is excluded
        for other in AbelianGroup::all_of_order(32) {
            assert_eq!(
                extension_exists(&h, &k, &other),
                want.contains(&other),
                "{other}"
            );
        }
    }

    #[test]
    fn enumerate_examples() {
        let res = enumerate_extensions(&g(&[2]), &g(&[2]));
        assert_eq!(
            res.middles,
            vec![
                Middle {
                    group: g(&[2, 2]),
                    split: true
                },
                Middle {
                    group: g(&[4]),
                    split: false
                },
            ]
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
        );

        let res = enumerate_extensions(&g(&[2, 2]), &g(&[3, 3, 3]));
        assert_eq!(
            res.middles,
            vec![Middle {
                group: g(&[2, 2, 3, 3, 3]),
                split: true
            }]
        );

        let res = enumerate_extensions(&g(&[2, 2]), &g(&[4, 4, 2]));
        let mut want = vec![
            g(&[8, 8, 2]),
            g(&[8, 4, 4]),
            g(&[8, 4, 2, 2]),
            g(&[4, 4, 4, 2]),
            g(&[4, 4, 2, 2, 2]),
        ];
        want.sort();
        assert_eq!(res.groups().cloned().collect::<Vec<_>>(), want);
        let split: Vec<_> = res.middles.iter().filter(|m| m.split).collect();
        assert_eq!(split.len(), 1);
        assert_eq!(split[0].group, g(&[4, 4, 2, 2, 2]));
    }

    #[test]
    fn cap_reports_truncation() {
        let res = enumerate_extensions_capped(&g(&[2, 2]), &g(&[4, 4, 2]), Some(2));
        assert!(res.truncated);
        assert_eq!(res.middles.len(), 2);
        assert!(res.middles.iter().any(|m| m.split));
        let res = enumerate_extensions_capped(&g(&[2, 2]), &g(&[4, 4, 2]), Some(5));
        assert!(!res.truncated);
    }

    #[test]
    fn max_cyclic_split_examples() {
        assert_eq!(max_cyclic_split(&g(&[4, 2])).unwrap(), (4, g(&[2])));
        assert_eq!(
            max_cyclic_split(&g(&[6])).unwrap(),
            (6, AbelianGroup::trivial())
        );
        assert_eq!(
            max_cyclic_split(&g(&[2, 2, 4, 3])).unwrap(),
            (12, g(&[2, 2]))
        );
        assert_eq!(
            max_cyclic_split(&AbelianGroup::trivial()),
            Err(Error::TrivialGroup)
        );
    }
}
