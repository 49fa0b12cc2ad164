//! Explicit finite abelian groups as residue tuples, with brute-force subgroup
//! enumeration. Nothing here uses the partition calculus of the fast path.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::snf::{group_from_relations, left_kernel, IntegerMatrix};

/// Default largest group order the oracle accepts.
pub const DEFAULT_ORACLE_LIMIT: u64 = 64;
/// No override may raise the oracle limit above this.
pub const HARD_ORACLE_LIMIT: u64 = 512;
/// Environment variable overriding [`DEFAULT_ORACLE_LIMIT`].
pub const ORACLE_LIMIT_ENV: &str = "ABELIAN_CREMONA_ORACLE_LIMIT";

/// The configured oracle limit: [`ORACLE_LIMIT_ENV`] if set, else the default.
pub fn oracle_limit() -> Result<u64> {
    match std::env::var(ORACLE_LIMIT_ENV) {
        Ok(text) => {
            let limit: u64 = text.trim().parse().map_err(|_| {
                Error::parse(0, format!("{ORACLE_LIMIT_ENV}=`{text}` is not an integer"))
            })?;
            if limit > HARD_ORACLE_LIMIT {
                return Err(Error::OracleLimitTooLarge(limit));
            }
            Ok(limit)
        }
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

fn admit(order: u64, limit: u64) -> Result<()> {
    if limit > HARD_ORACLE_LIMIT {
        return Err(Error::OracleLimitTooLarge(limit));
    }
    if order > limit {
        return Err(Error::OracleRefused { order, limit });
    }
    Ok(())
}

/// `Z/m1 x ... x Z/mk` with elements as residue tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGroup {
    moduli: Vec<u64>,
    order: u64,
}

/// A subgroup found by enumeration, with the generators that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSubgroup {
    pub generators: Vec<Vec<u64>>,
    pub order: u64,
}

impl ExplicitGroup {
    /// Every modulus must be at least 2; an empty list is the trivial group.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        let mut order = 1u64;
        for &m in &moduli {
            if m < 2 {
                return Err(Error::InvalidOrder(m as i64));
            }
            order = order.checked_mul(m).ok_or(Error::OrderOverflow)?;
        }
        Ok(ExplicitGroup { moduli, order })
    }

    /// Realization by invariant factors.
    pub fn from_group(g: &AbelianGroup) -> Self {
        Self::new(g.invariant_factors()).expect("invariant factors are at least 2")
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Residue tuple of the element with mixed-radix index `idx`.
    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = idx as u64 % m;
                idx /= m as usize;
                c
            })
            .collect()
    }

    fn index(&self, coords: &[u64]) -> usize {
        let mut idx = 0usize;
        for (&c, &m) in coords.iter().zip(&self.moduli).rev() {
            idx = idx * m as usize + c as usize;
        }
        idx
    }

    fn check_element(&self, e: &[u64]) -> Result<()> {
        if e.len() != self.moduli.len() || e.iter().zip(&self.moduli).any(|(c, m)| c >= m) {
            return Err(Error::ElementOutOfRange);
        }
        Ok(())
    }

    fn relation_diagonal(&self) -> Result<IntegerMatrix> {
        let d: Vec<i64> = self
            .moduli
            .iter()
            .map(|&m| i64::try_from(m).map_err(|_| Error::MatrixOverflow))
            .collect::<Result<_>>()?;
        Ok(IntegerMatrix::diagonal(&d))
    }

    fn generator_rows(&self, gens: &[Vec<u64>]) -> Result<IntegerMatrix> {
        let rows: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| g.iter().map(|&c| c as i64).collect())
            .collect();
        IntegerMatrix::from_rows(self.moduli.len(), &rows)
    }

    /// Type of the subgroup generated by `gens`.
    ///
    /// With generator rows `A` and `D = diag(moduli)`, the subgroup is
    /// `Z^t / {x : xA in rowspace(D)}`, the projection of the left kernel of `[A; D]`.
    pub fn subgroup_type(&self, gens: &[Vec<u64>]) -> Result<AbelianGroup> {
        for g in gens {
            self.check_element(g)?;
        }
        let t = gens.len();
        if t == 0 {
            return Ok(AbelianGroup::trivial());
        }
        let stacked = self
            .generator_rows(gens)?
            .stack(&self.relation_diagonal()?)?;
        let kernel = left_kernel(&stacked)?;
        let projected: Vec<Vec<i64>> = (0..kernel.rows())
            .map(|i| kernel.row(i)[..t].to_vec())
            .collect();
        group_from_relations(&IntegerMatrix::from_rows(t, &projected)?)
    }

    /// Type of the quotient by the subgroup generated by `gens`.
    pub fn quotient_type(&self, gens: &[Vec<u64>]) -> Result<AbelianGroup> {
        for g in gens {
            self.check_element(g)?;
        }
        let stacked = self
            .relation_diagonal()?
            .stack(&self.generator_rows(gens)?)?;
        group_from_relations(&stacked)
    }

    /// Every subgroup, by breadth-first closure `<S, g>` from the trivial
    /// subgroup, deduplicated by element set.
    pub fn subgroups(&self, limit: u64) -> Result<Vec<ExplicitSubgroup>> {
        admit(self.order, limit)?;
        let n = self.order as usize;
        let words = n.div_ceil(64);
        let elements: Vec<Vec<u64>> = (0..n).map(|i| self.element(i)).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let sum: Vec<u64> = elements[a]
                    .iter()
                    .zip(&elements[b])
                    .zip(&self.moduli)
                    .map(|((x, y), m)| (x + y) % m)
                    .collect();
                let s = self.index(&sum) as u32;
                table[a * n + b] = s;
                table[b * n + a] = s;
            }
        }
        let add = |a: usize, b: usize| table[a * n + b] as usize;

        let mut trivial = vec![0u64; words];
        trivial[0] = 1;
        let mut seen: HashSet<Vec<u64>> = HashSet::from([trivial.clone()]);
        let mut queue = vec![(trivial, Vec::<usize>::new())];
        let mut head = 0;
        while head < queue.len() {
            let (bits, gens) = queue[head].clone();
            head += 1;
            let members: Vec<usize> = (0..n)
                .filter(|&i| bits[i / 64] >> (i % 64) & 1 == 1)
                .collect();
            for g in 0..n {
                if bits[g / 64] >> (g % 64) & 1 == 1 {
                    continue;
                }
                let mut cyclic = vec![0usize];
                let mut x = g;
                while x != 0 {
                    cyclic.push(x);
                    x = add(x, g);
                }
                let mut next = vec![0u64; words];
                for &s in &members {
                    for &c in &cyclic {
                        let e = add(s, c);
                        next[e / 64] |= 1 << (e % 64);
                    }
                }
                if seen.insert(next.clone()) {
                    let mut ng = gens.clone();
                    ng.push(g);
                    queue.push((next, ng));
                }
            }
        }
        Ok(queue
            .into_iter()
            .map(|(bits, gens)| ExplicitSubgroup {
                generators: gens.into_iter().map(|i| elements[i].clone()).collect(),
                order: bits.iter().map(|w| u64::from(w.count_ones())).sum(),
            })
            .collect())
    }
}

/// Distinct subgroup types of `e`, under the configured oracle limit.
pub fn oracle_subgroup_types(e: &ExplicitGroup) -> Result<BTreeSet<AbelianGroup>> {
    oracle_subgroup_types_with_limit(e, oracle_limit()?)
}

pub fn oracle_subgroup_types_with_limit(
    e: &ExplicitGroup,
    limit: u64,
) -> Result<BTreeSet<AbelianGroup>> {
    e.subgroups(limit)?
        .iter()
        .map(|s| e.subgroup_type(&s.generators))
        .collect()
}

/// Type of `e / <generators>`.
pub fn oracle_quotient_type(e: &ExplicitGroup, generators: &[Vec<u64>]) -> Result<AbelianGroup> {
    e.quotient_type(generators)
}

type PairSet = BTreeSet<(AbelianGroup, AbelianGroup)>;

/// `(subgroup type, quotient type)` over all subgroups of `g`, cached per group.
fn sub_quot_pairs(g: &AbelianGroup, limit: u64) -> Result<Arc<PairSet>> {
    static CACHE: OnceLock<Mutex<HashMap<AbelianGroup, Arc<PairSet>>>> = OnceLock::new();
    admit(g.order(), limit)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(g) {
        return Ok(Arc::clone(hit));
    }
    let e = ExplicitGroup::from_group(g);
    let pairs: PairSet = e
        .subgroups(limit)?
        .iter()
        .map(|s| {
            Ok((
                e.subgroup_type(&s.generators)?,
                e.quotient_type(&s.generators)?,
            ))
        })
        .collect::<Result<_>>()?;
    let pairs = Arc::new(pairs);
    cache
        .lock()
        .expect("cache lock")
        .insert(g.clone(), Arc::clone(&pairs));
    Ok(pairs)
}

/// Every `G` of order `|H||K|` with a subgroup of type `h` whose quotient has type `k`.
pub fn oracle_extensions(h: &AbelianGroup, k: &AbelianGroup) -> Result<BTreeSet<AbelianGroup>> {
    oracle_extensions_with_limit(h, k, oracle_limit()?)
}

pub fn oracle_extensions_with_limit(
    h: &AbelianGroup,
    k: &AbelianGroup,
    limit: u64,
) -> Result<BTreeSet<AbelianGroup>> {
    let order = h
        .order()
        .checked_mul(k.order())
        .ok_or(Error::OrderOverflow)?;
    admit(order, limit)?;
    let key = (h.clone(), k.clone());
    let mut out = BTreeSet::new();
    for g in AbelianGroup::all_of_order(order) {
        if sub_quot_pairs(&g, limit)?.contains(&key) {
            out.insert(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> AbelianGroup {
        AbelianGroup::from_cyclic_factors(orders).unwrap()
    }

    #[test]
    fn subgroup_type_examples() {
        let types = |m: Vec<u64>| {
            oracle_subgroup_types_with_limit(&ExplicitGroup::new(m).unwrap(), 64).unwrap()
        };
        assert_eq!(types(vec![4]), BTreeSet::from([g(&[1]), g(&[2]), g(&[4])]));
        assert_eq!(
            types(vec![2, 2]),
            BTreeSet::from([g(&[1]), g(&[2]), g(&[2, 2])])
        );
        assert_eq!(types(vec![4, 2]).len(), 5);
        assert_eq!(
            ExplicitGroup::new(vec![4, 2])
                .unwrap()
                .subgroups(64)
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            ExplicitGroup::new(vec![2, 2, 2])
                .unwrap()
                .subgroups(64)
                .unwrap()
                .len(),
            16
        );
    }

    #[test]
    fn quotient_examples() {
        let e = ExplicitGroup::new(vec![4]).unwrap();
        assert_eq!(oracle_quotient_type(&e, &[vec![2]]).unwrap(), g(&[2]));
        let e = ExplicitGroup::new(vec![2, 2]).unwrap();
        assert_eq!(oracle_quotient_type(&e, &[vec![1, 1]]).unwrap(), g(&[2]));
        let e = ExplicitGroup::new(vec![4, 4]).unwrap();
        assert_eq!(oracle_quotient_type(&e, &[vec![2, 2]]).unwrap(), g(&[4, 2]));
        assert_eq!(e.subgroup_type(&[vec![2, 2]]).unwrap(), g(&[2]));
        assert_eq!(
            e.quotient_type(&[vec![5, 0]]),
            Err(Error::ElementOutOfRange)
        );
    }

    #[test]
    fn extension_examples() {
        assert_eq!(
            oracle_extensions_with_limit(&g(&[2]), &g(&[2]), 64).unwrap(),
            BTreeSet::from([g(&[4]), g(&[2, 2])])
        );
        assert_eq!(
            oracle_extensions_with_limit(&g(&[2, 2]), &g(&[2]), 64).unwrap(),
            BTreeSet::from([g(&[2, 2, 2]), g(&[4, 2])])
        );
        assert_eq!(
            oracle_extensions_with_limit(&g(&[3]), &g(&[2]), 64).unwrap(),
            BTreeSet::from([g(&[6])])
        );
    }

    #[test]
    fn refusals() {
        let big = ExplicitGroup::new(vec![2; 7]).unwrap();
        assert_eq!(
            big.subgroups(64).unwrap_err(),
            Error::OracleRefused {
                order: 128,
                limit: 64
            }
        );
        assert_eq!(
            big.subgroups(1024).unwrap_err(),
            Error::OracleLimitTooLarge(1024)
        );
        assert!(ExplicitGroup::new(vec![1]).is_err());
    }
}
