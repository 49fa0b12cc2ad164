//! The Littlewood-Richardson rule.
//!
//! A Littlewood-Richardson tableau of shape `lambda/mu` and content `nu` is built
//! letter by letter: the boxes holding letter `j` form a horizontal strip added to
//! the shape reached after letters `0..j`, and the reverse reading word (right to
//! left, top to bottom) must be a lattice word. Boxes of one letter are placed
//! row by row, which is where the lattice condition is checked.

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionMultiset};

struct Search<'a> {
    content: &'a [u32],
    bound: Option<&'a [u32]>,
    shape: Vec<u32>,
    /// `placed[j][r]`: number of boxes with letter `j` in row `r`.
    placed: Vec<Vec<u32>>,
}

impl<'a> Search<'a> {
    fn new(outer: &Partition, content: &'a Partition, bound: Option<&'a Partition>) -> Self {
        let rows = match bound {
            Some(b) => b.len(),
            None => outer.len() + content.len(),
        };
        let mut shape = vec![0; rows];
        shape[..outer.len()].copy_from_slice(outer.parts());
        Search {
            content: content.parts(),
            bound: bound.map(Partition::parts),
            shape,
            placed: vec![vec![0; rows]; content.len()],
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[u32])) {
        self.letter(0, emit);
    }

    fn letter(&mut self, j: usize, emit: &mut dyn FnMut(&[u32])) {
        if j == self.content.len() {
            emit(&self.shape);
            return;
        }
        let before = self.shape.clone();
        self.row(j, 0, self.content[j], &before, 0, 0, emit);
    }

    /// Places letter `j` in rows `r..`. `this_so_far` counts letter `j` in rows
    /// `< r`; `prev_so_far` counts letter `j - 1` in rows `< r`.
    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        j: usize,
        r: usize,
        remaining: u32,
        before: &[u32],
        this_so_far: u32,
        prev_so_far: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if remaining == 0 {
            self.letter(j + 1, emit);
            return;
        }
        if r >= self.shape.len() {
            return;
        }
        let mut max = remaining;
        if r > 0 {
            // horizontal strip: row r may not overhang row r-1 of the previous shape
            max = max.min(before[r - 1] - before[r]);
        }
        if let Some(bound) = self.bound {
            max = max.min(bound[r] - self.shape[r]);
        }
        if j > 0 {
            // lattice word: letter j in rows <= r never outnumbers letter j-1 in rows < r
            max = max.min(prev_so_far - this_so_far);
        }
        let prev_here = if j > 0 { self.placed[j - 1][r] } else { 0 };
        for n in 0..=max {
            self.shape[r] += n;
            self.placed[j][r] = n;
            self.row(
                j,
                r + 1,
                remaining - n,
                before,
                this_so_far + n,
                prev_so_far + prev_here,
                emit,
            );
            self.shape[r] -= n;
        }
        self.placed[j][r] = 0;
    }
}

fn trimmed(shape: &[u32]) -> Partition {
    let len = shape.iter().take_while(|&&x| x > 0).count();
    Partition::from_sorted(shape[..len].to_vec())
}

/// The coefficient of `s_lambda` in `s_mu * s_nu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let mut count = 0u64;
    let mut search = Search::new(mu, nu, Some(lambda));
    search.run(&mut |shape| {
        debug_assert_eq!(trimmed(shape), *lambda);
        count += 1;
    });
    count
}

/// `true` iff `c^lambda_{mu,nu} > 0`; stops at the first tableau found.
pub fn lr_positive(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    // Nothing to short-circuit in the recursion without threading a flag through,
    // and the searches here are tiny, so count.
    lr_coefficient(lambda, mu, nu) > 0
}

/// Full expansion of `s_mu * s_nu`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> PartitionMultiset {
    let mut out = PartitionMultiset::new();
    let mut search = Search::new(mu, nu, None);
    search.run(&mut |shape| out.add(trimmed(shape), 1));
    debug_assert!(out.support().all(|l| l.size() == mu.size() + nu.size()));
    out
}

/// Product of several Schur functions, folded from the left.
pub fn lr_product_multi(factors: &[Partition]) -> Result<PartitionMultiset> {
    let (first, rest) = factors
        .split_first()
        .ok_or(Error::Empty("lr_product_multi needs at least one factor"))?;
    let mut acc = PartitionMultiset::singleton(first.clone());
    for factor in rest {
        let mut next = PartitionMultiset::new();
        for (lambda, c) in acc.iter() {
            for (nu, d) in lr_product(lambda, factor).iter() {
                next.add(nu.clone(), c * d);
            }
        }
        acc = next;
    }
    Ok(acc)
}
