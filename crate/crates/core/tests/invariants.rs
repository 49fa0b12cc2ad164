//! Exhaustive desk-scale invariants of extensions and classification.

use abelian_cremona::classify::{
    cr2_families, cr2_family, elliptic_action_rows, is_cr1, product_decomposition,
    product_type_rows, product_type_witness, terminal_admissible, Cr2Family,
};
use abelian_cremona::group::factorize;
use abelian_cremona::{enumerate_extensions, extension_exists, AbelianGroup};

#[test]
fn membership_symmetry_and_ranks_up_to_256() {
    let groups = AbelianGroup::all_up_to(128);
    for h in &groups {
        for k in &groups {
            let order = h.order() * k.order();
            if order > 256 {
                continue;
            }
            let res = enumerate_extensions(h, k);
            for g in AbelianGroup::all_of_order(order) {
                let exists = extension_exists(h, k, &g);
                assert_eq!(res.contains(&g), exists, "H={h} K={k} G={g}");
                assert_eq!(exists, extension_exists(k, h, &g), "H={h} K={k} G={g}");
                if exists {
                    assert!(g.rank() >= h.rank().max(k.rank()), "H={h} K={k} G={g}");
                    assert!(g.rank() <= h.rank() + k.rank(), "H={h} K={k} G={g}");
                }
            }
        }
    }
}

#[test]
fn table_match_agrees_with_decomposition_search() {
    for g in AbelianGroup::all_up_to(1024) {
        if factorize(g.order()).len() > 3 {
            continue;
        }
        // product_type_witness errors out on disagreement
        let w = product_type_witness(&g).unwrap();
        assert_eq!(w.is_some(), !product_type_rows(&g).is_empty(), "{g}");
        assert_eq!(w.is_some(), product_decomposition(&g).is_some(), "{g}");
    }
}

#[test]
fn list_monotonicity_up_to_256() {
    for g in AbelianGroup::all_up_to(256) {
        if is_cr1(&g) {
            assert!(cr2_family(&g).is_some(), "{g}");
        }
        if cr2_family(&g).is_some() {
            assert!(product_type_witness(&g).unwrap().is_some(), "{g}");
        }
    }
}

#[test]
fn family_parameters_describe_the_group() {
    for g in AbelianGroup::all_up_to(512) {
        for fam in cr2_families(&g) {
            let rebuilt = match fam {
                Cr2Family::RankTwo { n, m } => {
                    assert_eq!(m % n, 0, "{g}");
                    AbelianGroup::from_cyclic_factors(&[n, m])
                }
                Cr2Family::KleinTimesEven { n } => {
                    AbelianGroup::from_cyclic_factors(&[2 * n, 2, 2])
                }
                Cr2Family::Z4SquaredZ2 => AbelianGroup::from_cyclic_factors(&[4, 4, 2]),
                Cr2Family::Z3Cubed => AbelianGroup::from_cyclic_factors(&[3, 3, 3]),
                Cr2Family::Z2Fourth => AbelianGroup::from_cyclic_factors(&[2, 2, 2, 2]),
            };
            assert_eq!(rebuilt.unwrap(), g);
        }
    }
}

#[test]
fn terminal_parameters_describe_the_group() {
    for g in AbelianGroup::all_up_to(512) {
        let t = terminal_admissible(&g);
        for &(n, m) in &t.klein_params {
            assert!(n <= m);
            let rebuilt = AbelianGroup::from_cyclic_factors(&[2, 2, 2 * n, 2 * m]).unwrap();
            assert_eq!(rebuilt, g);
        }
    }
}

#[test]
fn genus_one_groups_embed_in_the_plane_group() {
    for g in AbelianGroup::all_up_to(256) {
        for row in elliptic_action_rows(&g) {
            assert!(cr2_family(&g).is_some(), "{g} row {}", row.row);
            if row.row == 1 {
                assert_eq!(row.min_orbit, g.order());
            }
        }
    }
}
