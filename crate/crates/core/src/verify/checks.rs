use std::collections::{BTreeMap, BTreeSet};

use super::expansions::{evaluate, expansions, valid_shape, Params};
use super::explicit::{oracle_extensions_with_limit, oracle_limit, ExplicitGroup};
use super::{par_map, Counterexample, Outcome};
use crate::classify::{
    cr2_families, cr2_family, klein_even_even_params, product_type_rows, product_type_witness,
    rank_bound, rank_bound_check, terminal_admissible, RankSetting,
};
use crate::error::{Error, Result};
use crate::extension::enumerate_extensions;
use crate::group::AbelianGroup;
use crate::lr::lr_product_multi;
use crate::partition::Partition;

type Found = (u64, Vec<Counterexample>);

pub(crate) fn run(name: &str, bound: u64) -> Result<Outcome> {
    match name {
        "cyclic-splitting" => cyclic_splitting(bound),
        "fulton-oracle" => extension_oracle(bound),
        "lemma-r2-4" => lemma_r2_4(bound),
        "lr-paper-expansions" => case_expansions(bound),
        "prop-cr1-cr1" => prop_cr1_cr1(bound),
        "prop-cr1-cr2" => prop_cr1_cr2(bound),
        "rank-sharpness" => rank_sharpness(bound),
        "subgroup-criterion" => subgroup_criterion(bound),
        "table1-closure" => table1_closure(bound),
        "terminal-product" => terminal_product(bound),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

fn show_set<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> String {
    let items: Vec<String> = groups.into_iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn merge(outcome: &mut Outcome, results: Vec<Found>) {
    for r in results {
        outcome.absorb(r);
    }
}

/// Finite abelian subgroups of `PGL(2)` of order at most `bound`.
fn cr1_list(bound: u64) -> Vec<AbelianGroup> {
    let mut out: Vec<AbelianGroup> = (1..=bound).map(AbelianGroup::cyclic).collect();
    if bound >= 4 {
        out.push(AbelianGroup::elementary(2, 2));
    }
    out
}

/// Groups of order at most `bound` in one of the plane families.
fn cr2_list(bound: u64) -> Vec<AbelianGroup> {
    AbelianGroup::all_up_to(bound)
        .into_iter()
        .filter(|g| cr2_family(g).is_some())
        .collect()
}

fn oracle_bound(bound: u64) -> Result<u64> {
    let limit = oracle_limit()?;
    if bound > limit {
        return Err(Error::OracleRefused {
            order: bound,
            limit,
        });
    }
    Ok(limit)
}

/// Ordered pairs `(h, k)` drawn from `hs` and `ks` with `|h||k| <= bound`.
fn pairs_within(
    hs: &[AbelianGroup],
    ks: &[AbelianGroup],
    bound: u64,
) -> Vec<(AbelianGroup, AbelianGroup)> {
    let mut out = Vec::new();
    for h in hs {
        for k in ks {
            if h.order().saturating_mul(k.order()) <= bound {
                out.push((h.clone(), k.clone()));
            }
        }
    }
    out
}

fn extension_oracle(bound: u64) -> Result<Outcome> {
    let limit = oracle_bound(bound)?;
    let groups = AbelianGroup::all_up_to(bound);
    // fill the oracle cache one group per worker before pairing
    for r in par_map(&groups, |g| {
        oracle_extensions_with_limit(g, &AbelianGroup::trivial(), limit)
    }) {
        r?;
    }
    let pairs = pairs_within(&groups, &groups, bound);
    let results = par_map(&pairs, |(h, k)| -> Result<Found> {
        let fast: BTreeSet<AbelianGroup> = enumerate_extensions(h, k).groups().cloned().collect();
        let oracle = oracle_extensions_with_limit(h, k, limit)?;
        let found = if fast == oracle {
            Vec::new()
        } else {
            vec![Counterexample::new(
                format!("H={h}, K={k}"),
                show_set(&oracle),
                show_set(&fast),
            )]
        };
        Ok((1, found))
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results.into_iter().collect::<Result<_>>()?);
    Ok(outcome)
}

fn case_expansions(grid: u64) -> Result<Outcome> {
    let grid = grid as i64;
    let mut outcome = Outcome::default().with_param("grid", grid as u64);
    for exp in expansions() {
        let instances: Vec<(i64, i64)> = match exp.params {
            Params::None => vec![(0, 0)],
            Params::K => (1..=grid).map(|k| (k, 0)).collect(),
            Params::KL => (1..=grid)
                .flat_map(|k| (1..=k).map(move |l| (k, l)))
                .collect(),
        };
        let mut fired: BTreeMap<&str, (&str, i64)> = BTreeMap::new();
        for &(k, l) in &instances {
            outcome.cases += 1;
            let input = match exp.params {
                Params::None => exp.name.to_string(),
                Params::K => format!("{} at k={k}", exp.name),
                Params::KL => format!("{} at k={k}, l={l}", exp.name),
            };
            let factors: Vec<Partition> = (exp.factors)(k, l)
                .iter()
                .map(|raw| Partition::normalize(raw))
                .collect::<Result<_>>()?;
            let size: i64 = factors.iter().map(|p| i64::from(p.size())).sum();
            let product = lr_product_multi(&factors)?;

            let mut terms = Vec::new();
            for t in &exp.terms {
                let raw = (t.shape)(k, l);
                let wrong_size = valid_shape(&raw).is_some() && raw.iter().sum::<i64>() != size;
                if !wrong_size {
                    terms.push(t);
                    continue;
                }
                match exp.corrections.iter().find(|c| c.printed == t.label) {
                    Some(c) => {
                        fired.insert(
                            c.printed,
                            (c.corrected.label, raw.iter().sum::<i64>() - size),
                        );
                        terms.push(&c.corrected);
                    }
                    None => outcome.counterexamples.push(Counterexample::new(
                        input.clone(),
                        format!("every term of size {size}"),
                        format!("{} of size {}", t.label, raw.iter().sum::<i64>()),
                    )),
                }
            }
            let got = evaluate(terms, k, l);
            if got != product {
                outcome.counterexamples.push(Counterexample::new(
                    input,
                    product.to_string(),
                    got.to_string(),
                ));
            }
        }
        for (printed, (corrected, diff)) in fired {
            outcome.notes.push(format!(
                "{}: printed term {printed} has {} box(es) {} the product size; the derived correction {corrected} reproduces every instance on the grid",
                exp.name,
                diff.abs(),
                if diff < 0 { "fewer than" } else { "more than" },
            ));
        }
    }
    Ok(outcome)
}

/// Every middle of both `h`-by-`k` and `k`-by-`h` extensions.
fn middles_both_ways(h: &AbelianGroup, k: &AbelianGroup) -> Vec<(String, AbelianGroup)> {
    let mut out = Vec::new();
    for (sub, quot) in [(h, k), (k, h)] {
        for g in enumerate_extensions(sub, quot).groups() {
            out.push((format!("0 -> {sub} -> G -> {quot} -> 0"), g.clone()));
        }
    }
    out
}

fn prop_cr1_cr1(bound: u64) -> Result<Outcome> {
    let list = cr1_list(bound);
    let pairs = pairs_within(&list, &list, bound);
    let results = par_map(&pairs, |(h, k)| {
        let mut found = Vec::new();
        let middles = middles_both_ways(h, k);
        for (input, g) in &middles {
            let fams: Vec<u8> = cr2_families(g).iter().map(|f| f.index()).collect();
            if !fams.iter().any(|i| [1, 2, 5].contains(i)) {
                found.push(Counterexample::new(
                    format!("{input}, G={g}"),
                    "family 1, 2 or 5",
                    format!("families {fams:?}"),
                ));
            }
        }
        (middles.len() as u64, found)
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results);
    Ok(outcome)
}

fn product_type_failure(input: String, g: &AbelianGroup) -> Option<Counterexample> {
    match product_type_witness(g) {
        Ok(Some(_)) => None,
        Ok(None) => Some(Counterexample::new(
            input,
            "product type",
            "not product type",
        )),
        Err(e) => Some(Counterexample::new(input, "product type", e.to_string())),
    }
}

fn prop_cr1_cr2(bound: u64) -> Result<Outcome> {
    let h_bound = bound / 2;
    let hs = cr1_list(h_bound);
    let ks = cr2_list(bound);
    let pairs = pairs_within(&hs, &ks, u64::MAX);
    let results = par_map(&pairs, |(h, k)| {
        let middles = middles_both_ways(h, k);
        let found = middles
            .iter()
            .filter_map(|(input, g)| product_type_failure(format!("{input}, G={g}"), g))
            .collect();
        (middles.len() as u64, found)
    });
    let mut outcome = Outcome::default()
        .with_param("h_bound", h_bound)
        .with_param("k_bound", bound);
    merge(&mut outcome, results);
    Ok(outcome)
}

fn lemma_r2_4(bound: u64) -> Result<Outcome> {
    let hs: Vec<AbelianGroup> = cr2_list(bound)
        .into_iter()
        .filter(|h| {
            cr2_families(h)
                .iter()
                .any(|f| [1, 2, 5].contains(&f.index()))
        })
        .collect();
    let cyclic: Vec<AbelianGroup> = (1..=bound).map(AbelianGroup::cyclic).collect();
    let pairs = pairs_within(&hs, &cyclic, bound);
    let results = par_map(&pairs, |(h, c)| {
        let mut found = Vec::new();
        let mut rank_four = 0u64;
        for (input, g) in middles_both_ways(h, c) {
            if g.p_rank(2) != 4 {
                continue;
            }
            rank_four += 1;
            let odd = g.max_rank_excluding(2);
            if odd > 2 || klein_even_even_params(&g).is_empty() {
                found.push(Counterexample::new(
                    format!("{input}, G={g}"),
                    "Z2^2 x Z2n x Z2m with odd ranks <= 2",
                    format!("odd rank {odd}"),
                ));
            }
        }
        (rank_four, found)
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results);
    outcome.notes.push(
        "cases counts the middles of 2-rank 4; all other middles are outside the claim".into(),
    );
    Ok(outcome)
}

fn table1_closure(bound: u64) -> Result<Outcome> {
    let cr2_bound = bound / 2;
    let groups = AbelianGroup::all_up_to(bound);
    let results = par_map(&groups, |g| {
        let mut cases = 0;
        let mut found = Vec::new();
        if !product_type_rows(g).is_empty() {
            for s in g.subgroup_types(None) {
                cases += 1;
                if product_type_rows(&s).is_empty() {
                    found.push(Counterexample::new(
                        format!("product-type G={g}, subgroup or quotient {s}"),
                        "product type",
                        "no table row",
                    ));
                }
            }
        }
        if g.order() <= cr2_bound && cr2_family(g).is_some() {
            for s in g.subgroup_types(None) {
                cases += 1;
                if cr2_family(&s).is_none() {
                    found.push(Counterexample::new(
                        format!("plane-family G={g}, subgroup or quotient {s}"),
                        "a plane family",
                        "none",
                    ));
                }
            }
        }
        (cases, found)
    });
    let mut outcome = Outcome::default()
        .with_param("bound", bound)
        .with_param("cr2_bound", cr2_bound);
    merge(&mut outcome, results);
    outcome.notes.push(
        "quotient types of a finite abelian group coincide with its subgroup types; this duality is validated against the explicit oracle by subgroup-criterion".into(),
    );
    Ok(outcome)
}

fn subgroup_criterion(bound: u64) -> Result<Outcome> {
    let limit = oracle_bound(bound)?;
    let groups = AbelianGroup::all_up_to(bound);
    let results = par_map(&groups, |g| -> Result<Found> {
        let e = ExplicitGroup::from_group(g);
        let mut subs: BTreeMap<AbelianGroup, u64> = BTreeMap::new();
        let mut quots: BTreeMap<AbelianGroup, u64> = BTreeMap::new();
        for s in e.subgroups(limit)? {
            *subs.entry(e.subgroup_type(&s.generators)?).or_default() += 1;
            *quots.entry(e.quotient_type(&s.generators)?).or_default() += 1;
        }
        let mut found = Vec::new();
        let oracle: Vec<AbelianGroup> = subs.keys().cloned().collect();
        let fast = g.subgroup_types(None);
        if fast != oracle {
            found.push(Counterexample::new(
                format!("subgroup types of {g}"),
                show_set(&oracle),
                show_set(&fast),
            ));
        }
        if subs != quots {
            let render = |m: &BTreeMap<AbelianGroup, u64>| {
                m.iter()
                    .map(|(t, c)| format!("{c}x{t}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            found.push(Counterexample::new(
                format!("subgroup/quotient duality in {g}"),
                render(&subs),
                render(&quots),
            ));
        }
        Ok((1, found))
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results.into_iter().collect::<Result<_>>()?);
    Ok(outcome)
}

fn cyclic_splitting(bound: u64) -> Result<Outcome> {
    let groups = AbelianGroup::all_up_to(bound);
    let cyclic: Vec<AbelianGroup> = (1..=bound).map(AbelianGroup::cyclic).collect();
    let pairs = pairs_within(&cyclic, &groups, bound);
    let results = par_map(&pairs, |(h, k)| {
        let m = h.order();
        let quotients = k.subgroup_types(None);
        let res = enumerate_extensions(h, k);
        let mut found = Vec::new();
        for g in res.groups() {
            if Ok(g) == h.direct_product(k).as_ref() {
                continue;
            }
            let splits = quotients.iter().any(|kq| {
                let plus = g.order() / kq.order();
                plus > m
                    && plus % m == 0
                    && AbelianGroup::cyclic(plus).direct_product(kq).as_ref() == Ok(g)
            });
            if !splits {
                found.push(Counterexample::new(
                    format!("0 -> {h} -> G -> {k} -> 0, G={g}"),
                    "H x K or Z/m+ x K- with m | m+",
                    "neither",
                ));
            }
        }
        (res.middles.len() as u64, found)
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results);
    Ok(outcome)
}

fn rank_sharpness(bound: u64) -> Result<Outcome> {
    let groups = AbelianGroup::all_up_to(bound);
    let results = par_map(&groups, |g| {
        let mut cases = 0;
        let mut found = Vec::new();
        if cr2_family(g).is_some() {
            cases += 1;
            if !rank_bound_check(g, RankSetting::Surface) {
                found.push(Counterexample::new(
                    format!("plane-family G={g}"),
                    "surface rank bounds",
                    "violated",
                ));
            }
        }
        if !product_type_rows(g).is_empty() {
            cases += 1;
            if !rank_bound_check(g, RankSetting::Threefold) {
                found.push(Counterexample::new(
                    format!("product-type G={g}"),
                    "threefold rank bounds",
                    "violated",
                ));
            }
        }
        (cases, found)
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results);

    let witnesses: [(u64, usize, RankSetting, &str); 6] = [
        (2, 4, RankSetting::Surface, "plane family"),
        (3, 3, RankSetting::Surface, "plane family"),
        (5, 2, RankSetting::Surface, "plane family"),
        (2, 6, RankSetting::Threefold, "product type"),
        (3, 4, RankSetting::Threefold, "product type"),
        (5, 3, RankSetting::Threefold, "product type"),
    ];
    for (p, k, setting, list) in witnesses {
        outcome.cases += 1;
        let w = AbelianGroup::elementary(p, k);
        let member = match setting {
            RankSetting::Threefold => !product_type_rows(&w).is_empty(),
            _ => cr2_family(&w).is_some(),
        };
        let sharp = w.p_rank(p) == rank_bound(setting, p);
        if !(member && sharp) {
            outcome.counterexamples.push(Counterexample::new(
                format!("sharpness witness {w} for p={p}"),
                format!("{list} member attaining rank {}", rank_bound(setting, p)),
                format!("member={member}, rank={}", w.p_rank(p)),
            ));
        }
    }
    Ok(outcome)
}

fn terminal_product(bound: u64) -> Result<Outcome> {
    let groups = AbelianGroup::all_up_to(bound);
    let results = par_map(&groups, |g| {
        if !terminal_admissible(g).admissible {
            return (0, Vec::new());
        }
        let found = product_type_failure(format!("terminal-admissible G={g}"), g)
            .into_iter()
            .collect();
        (1, found)
    });
    let mut outcome = Outcome::default().with_param("bound", bound);
    merge(&mut outcome, results);
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_cr1;

    #[test]
    fn cr1_list_is_cr1() {
        assert!(cr1_list(50).iter().all(is_cr1));
        assert_eq!(cr1_list(3).len(), 3);
    }
}
