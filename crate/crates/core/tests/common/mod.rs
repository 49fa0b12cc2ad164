//! Test-only oracles that share no code with the library's LR engine.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

/// Partitions of `n` as plain vectors, lexicographically decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Content vector (length `vars`) -> number of semistandard tableaux of `shape`
/// with entries in `1..=vars`.
pub fn ssyt_contents(shape: &[usize], vars: usize) -> HashMap<Vec<u8>, u64> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u8; vars];
    let mut out = HashMap::new();

    fn fill(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u8>>,
        content: &mut Vec<u8>,
        vars: usize,
        out: &mut HashMap<Vec<u8>, u64>,
    ) {
        if i == cells.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[i];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=vars as u8 {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            fill(i + 1, cells, grid, content, vars, out);
            content[v as usize - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, &mut content, vars, &mut out);
    out
}

/// Schur products by polynomial peeling.
///
/// Expands `s_mu * s_nu` in `|mu| + |nu|` variables by monomials, then strips
/// Schur functions off from the dominant end using Kostka numbers, all counted
/// directly from tableaux.
pub struct PeelingOracle {
    cache: HashMap<(Vec<usize>, usize), HashMap<Vec<u8>, u64>>,
}

impl PeelingOracle {
    pub fn new() -> Self {
        PeelingOracle {
            cache: HashMap::new(),
        }
    }

    fn contents(&mut self, shape: &[usize], vars: usize) -> &HashMap<Vec<u8>, u64> {
        self.cache
            .entry((shape.to_vec(), vars))
            .or_insert_with(|| ssyt_contents(shape, vars))
    }

    /// Partition (as vector) -> coefficient of `s_lambda` in `s_mu s_nu`.
    pub fn product(&mut self, mu: &[usize], nu: &[usize]) -> BTreeMap<Vec<usize>, u64> {
        let n: usize = mu.iter().sum::<usize>() + nu.iter().sum::<usize>();
        let mut out = BTreeMap::new();
        if n == 0 {
            out.insert(Vec::new(), 1);
            return out;
        }
        let a: Vec<(Vec<u8>, u64)> = self
            .contents(mu, n)
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        let b: Vec<(Vec<u8>, u64)> = self
            .contents(nu, n)
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect();

        // coefficient of each partition-shaped monomial in the product
        let mut monomial: HashMap<Vec<u8>, u64> = HashMap::new();
        for (ca, va) in &a {
            for (cb, vb) in &b {
                let sum: Vec<u8> = ca.iter().zip(cb).map(|(x, y)| x + y).collect();
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    *monomial.entry(sum).or_insert(0) += va * vb;
                }
            }
        }

        let shapes = partitions(n);
        let as_content = |p: &[usize]| {
            let mut v = vec![0u8; n];
            for (i, &x) in p.iter().enumerate() {
                v[i] = x as u8;
            }
            v
        };
        let mut found: Vec<(Vec<usize>, u64)> = Vec::new();
        // lexicographically decreasing order refines dominance
        for alpha in &shapes {
            let key = as_content(alpha);
            let mut rest = *monomial.get(&key).unwrap_or(&0) as i64;
            for (lambda, c) in &found {
                let kostka = *self.contents(lambda, n).get(&key).unwrap_or(&0);
                rest -= (*c * kostka) as i64;
            }
            assert!(rest >= 0, "peeling went negative at {alpha:?}");
            if rest > 0 {
                found.push((alpha.clone(), rest as u64));
            }
        }
        found.into_iter().collect()
    }
}
