//! Finite abelian groups in primary-decomposition canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization `n = prod p^e`, primes ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::OrderOverflow)
}

/// A finite abelian group, stored as prime -> type of its Sylow subgroup.
///
/// Trivial Sylow subgroups are never stored, so two groups are isomorphic
/// exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    primary: BTreeMap<u64, Partition>,
    order: u64,
}

impl Default for AbelianGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            primary: BTreeMap::new(),
            order: 1,
        }
    }

    /// `Z/n`. Panics on `n = 0`; use [`AbelianGroup::from_cyclic_factors`] for fallible input.
    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_factors(&[n]).expect("cyclic group of order 0")
    }

    /// `(Z/n)^k`.
    pub fn elementary(n: u64, k: usize) -> Self {
        Self::from_cyclic_factors(&vec![n; k]).expect("invalid cyclic order")
    }

    /// Builds the group from its Sylow types, dropping empty partitions.
    pub fn from_primary(primary: BTreeMap<u64, Partition>) -> Result<Self> {
        let mut order = 1u64;
        let mut cleaned = BTreeMap::new();
        for (p, lambda) in primary {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if lambda.is_empty() {
                continue;
            }
            order = order
                .checked_mul(checked_pow(p, lambda.size())?)
                .ok_or(Error::OrderOverflow)?;
            cleaned.insert(p, lambda);
        }
        Ok(AbelianGroup {
            primary: cleaned,
            order,
        })
    }

    /// A p-group of the given type.
    pub fn p_group(p: u64, lambda: Partition) -> Result<Self> {
        Self::from_primary(BTreeMap::from([(p, lambda)]))
    }

    /// `Z/n1 x Z/n2 x ...`, for any orders `>= 1`.
    pub fn from_cyclic_factors(orders: &[u64]) -> Result<Self> {
        let mut exps: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::InvalidOrder(0));
            }
            for (p, e) in factorize(n) {
                exps.entry(p).or_default().push(e);
            }
        }
        let primary = exps
            .into_iter()
            .map(|(p, mut e)| {
                e.sort_unstable_by(|a, b| b.cmp(a));
                (p, Partition::from_sorted(e))
            })
            .collect();
        Self::from_primary(primary)
    }

    /// Signed variant of [`AbelianGroup::from_cyclic_factors`] for raw user input.
    pub fn from_signed_factors(orders: &[i64]) -> Result<Self> {
        let orders = orders
            .iter()
            .map(|&n| {
                u64::try_from(n)
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or(Error::InvalidOrder(n))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_cyclic_factors(&orders)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.primary.is_empty()
    }

    /// Primes dividing the order, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primary.keys().copied()
    }

    /// `(p, type of G_p)` pairs, primes ascending.
    pub fn sylow_types(&self) -> impl Iterator<Item = (u64, &Partition)> {
        self.primary.iter().map(|(&p, l)| (p, l))
    }

    /// Type of the p-Sylow subgroup (empty if `p` does not divide the order).
    pub fn p_type(&self, p: u64) -> Partition {
        self.primary.get(&p).cloned().unwrap_or_default()
    }

    /// Rank of the p-Sylow subgroup.
    pub fn p_rank(&self, p: u64) -> usize {
        self.primary.get(&p).map_or(0, Partition::len)
    }

    /// Largest p-rank over primes `p != exclude`.
    pub fn max_rank_excluding(&self, exclude: u64) -> usize {
        self.sylow_types()
            .filter(|&(p, _)| p != exclude)
            .map(|(_, l)| l.len())
            .max()
            .unwrap_or(0)
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.primary.values().map(Partition::len).max().unwrap_or(0)
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// `G_p`.
    pub fn p_part(&self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.restrict(|q| q == p))
    }

    /// `G_{!=p}`.
    pub fn coprime_part(&self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.restrict(|q| q != p))
    }

    fn restrict(&self, keep: impl Fn(u64) -> bool) -> Self {
        let primary = self
            .primary
            .iter()
            .filter(|(&q, _)| keep(q))
            .map(|(&q, l)| (q, l.clone()))
            .collect();
        Self::from_primary(primary).expect("restriction of a valid group")
    }

    /// `A x B`.
    pub fn direct_product(&self, other: &AbelianGroup) -> Result<Self> {
        let mut primary = self.primary.clone();
        for (&p, lambda) in &other.primary {
            let merged = match primary.get(&p) {
                Some(existing) => existing.union(lambda),
                None => lambda.clone(),
            };
            primary.insert(p, merged);
        }
        Self::from_primary(primary)
    }

    /// The divisibility chain `d1 | d2 | ... | dr`, ascending; empty for the trivial group.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let r = self.rank();
        let mut out = vec![1u64; r];
        for (&p, lambda) in &self.primary {
            // the i-th largest part goes to the i-th largest invariant factor
            for (i, &e) in lambda.parts().iter().enumerate() {
                out[r - 1 - i] *= p.pow(e);
            }
        }
        out
    }

    /// Largest element order.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors().last().copied().unwrap_or(1)
    }

    /// Isomorphism types of all subgroups, sorted; stops after `max_count` types if given.
    ///
    /// A p-group of type `lambda` has a subgroup of type `mu` iff `mu` fits
    /// inside `lambda` part by part. Quotient types of an abelian group are the
    /// same set.
    pub fn subgroup_types(&self, max_count: Option<usize>) -> Vec<AbelianGroup> {
        let per_prime: Vec<(u64, Vec<Partition>)> = self
            .primary
            .iter()
            .map(|(&p, l)| (p, l.contained_partitions()))
            .collect();
        let mut out = Vec::new();
        let limit = max_count.unwrap_or(usize::MAX);
        let mut idx = vec![0usize; per_prime.len()];
        'outer: loop {
            if out.len() >= limit {
                break;
            }
            let primary = per_prime
                .iter()
                .zip(&idx)
                .map(|((p, opts), &i)| (*p, opts[i].clone()))
                .collect();
            out.push(Self::from_primary(primary).expect("subgroup of a valid group"));
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < per_prime[k].1.len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
        out.sort();
        out
    }

    /// `true` iff `other` is isomorphic to a subgroup of `self`.
    pub fn has_subgroup_type(&self, other: &AbelianGroup) -> bool {
        other
            .primary
            .iter()
            .all(|(&p, mu)| self.primary.get(&p).is_some_and(|l| l.contains(mu)))
    }

    /// Every abelian group of order exactly `n`.
    pub fn all_of_order(n: u64) -> Vec<AbelianGroup> {
        let mut out = vec![BTreeMap::new()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for prefix in &out {
                for lambda in partitions_of(e) {
                    let mut m: BTreeMap<u64, Partition> = prefix.clone();
                    m.insert(p, lambda);
                    next.push(m);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|m| Self::from_primary(m).expect("valid factorization"))
            .collect()
    }

    /// Every abelian group of order `1..=n`, by order.
    pub fn all_up_to(n: u64) -> Vec<AbelianGroup> {
        (1..=n).flat_map(Self::all_of_order).collect()
    }
}

impl fmt::Display for AbelianGroup {
    /// Invariant-factor notation, e.g. `Z2 x Z2 x Z12`; the trivial group is `Z1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return f.write_str("Z1");
        }
        for (i, d) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{d}")?;
        }
        Ok(())
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::notation::parse_group(s)
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
