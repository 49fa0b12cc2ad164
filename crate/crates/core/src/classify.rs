//! Membership predicates for the abelian subgroup lists of the Cremona groups of
//! rank 1 and 2, the product-type table, terminal-point admissibility, genus-one
//! curve actions, actions on spheres, K3 type and p-rank bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extension::extension_exists;
use crate::group::AbelianGroup;
use crate::partition::Partition;

fn parts(p: &[u32]) -> Partition {
    Partition::from_sorted(p.to_vec())
}

/// Order of the part of `g` supported away from `p`.
fn order_away_from(g: &AbelianGroup, p: u64) -> u64 {
    g.coprime_part(p).map(|c| c.order()).unwrap_or(1)
}

/// `g` with the parts `removed` deleted from its `p`-type, if they are all present.
fn without_parts(g: &AbelianGroup, p: u64, removed: &[u32]) -> Option<AbelianGroup> {
    let rest = g.p_type(p).remove_parts(&parts(removed))?;
    let mut primary: BTreeMap<u64, Partition> =
        g.sylow_types().map(|(q, l)| (q, l.clone())).collect();
    primary.insert(p, rest);
    AbelianGroup::from_primary(primary).ok()
}

fn write_params(
    serializer_name: &'static str,
    index: u8,
    params: Vec<(&'static str, u64)>,
) -> impl Serialize {
    struct Out(&'static str, u8, Vec<(&'static str, u64)>);
    impl Serialize for Out {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut st = s.serialize_struct(self.0, 2)?;
            st.serialize_field("index", &self.1)?;
            let params: BTreeMap<&str, u64> = self.2.iter().copied().collect();
            st.serialize_field("params", &params)?;
            st.end()
        }
    }
    Out(serializer_name, index, params)
}

// ---------------------------------------------------------------------------
// rank 1

/// Finite abelian subgroups of `PGL(2)`: cyclic groups and the Klein group.
pub fn is_cr1(g: &AbelianGroup) -> bool {
    g.is_cyclic() || is_klein(g)
}

fn is_klein(g: &AbelianGroup) -> bool {
    g.order() == 4 && g.p_type(2) == parts(&[1, 1])
}

// ---------------------------------------------------------------------------
// rank 2

/// The five families of finite abelian groups in the plane Cremona group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cr2Family {
    /// `Z/n x Z/m` with `n | m`: every group of rank at most 2.
    RankTwo { n: u64, m: u64 },
    /// `Z/2n x (Z/2)^2`.
    KleinTimesEven { n: u64 },
    /// `(Z/4)^2 x Z/2`.
    Z4SquaredZ2,
    /// `(Z/3)^3`.
    Z3Cubed,
    /// `(Z/2)^4`.
    Z2Fourth,
}

impl Cr2Family {
    pub fn index(&self) -> u8 {
        match self {
            Cr2Family::RankTwo { .. } => 1,
            Cr2Family::KleinTimesEven { .. } => 2,
            Cr2Family::Z4SquaredZ2 => 3,
            Cr2Family::Z3Cubed => 4,
            Cr2Family::Z2Fourth => 5,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            Cr2Family::RankTwo { n, m } => vec![("n", n), ("m", m)],
            Cr2Family::KleinTimesEven { n } => vec![("n", n)],
            _ => Vec::new(),
        }
    }
}

impl Serialize for Cr2Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        write_params("Cr2Family", self.index(), self.params()).serialize(s)
    }
}

/// Every family `g` belongs to, by increasing index.
pub fn cr2_families(g: &AbelianGroup) -> Vec<Cr2Family> {
    let mut out = Vec::new();
    if g.rank() <= 2 {
        let f = g.invariant_factors();
        let (n, m) = match f.as_slice() {
            [] => (1, 1),
            [m] => (1, *m),
            [n, m] => (*n, *m),
            _ => unreachable!(),
        };
        out.push(Cr2Family::RankTwo { n, m });
    }
    let two = g.p_type(2);
    if two.len() == 3 && two.part(1) == 1 && g.max_rank_excluding(2) <= 1 {
        // Z/2n = Z/2^a x (odd cyclic part)
        let n = (1u64 << (two.part(0) - 1)) * order_away_from(g, 2);
        out.push(Cr2Family::KleinTimesEven { n });
    }
    if *g == AbelianGroup::from_cyclic_factors(&[4, 4, 2]).expect("valid") {
        out.push(Cr2Family::Z4SquaredZ2);
    }
    if *g == AbelianGroup::elementary(3, 3) {
        out.push(Cr2Family::Z3Cubed);
    }
    if *g == AbelianGroup::elementary(2, 4) {
        out.push(Cr2Family::Z2Fourth);
    }
    out
}

/// The smallest-index family containing `g`.
pub fn cr2_family(g: &AbelianGroup) -> Option<Cr2Family> {
    cr2_families(g).into_iter().next()
}

// ---------------------------------------------------------------------------
// product type

/// Rows of the table of groups `G1 x G2` with `G1` in rank 1 and `G2` in rank 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductTypeRow {
    /// `Z/k x Z/l x Z/m`, `k | l | m`.
    RankThree { k: u64, l: u64, m: u64 },
    /// `Z/2k x (Z/4)^2 x Z/2`.
    EvenZ4SquaredZ2 { k: u64 },
    /// `Z/3k x (Z/3)^3`.
    ThreeKZ3Cubed { k: u64 },
    /// `Z/2k x Z/2l x (Z/2)^2`, `k | l`.
    EvenEvenKlein { k: u64, l: u64 },
    /// `Z/2n x (Z/2)^4`.
    EvenZ2Fourth { n: u64 },
    /// `(Z/4)^2 x (Z/2)^3`.
    Z4SquaredZ2Cubed,
    /// `(Z/2)^6`.
    Z2Sixth,
}

impl ProductTypeRow {
    pub fn index(&self) -> u8 {
        match self {
            ProductTypeRow::RankThree { .. } => 1,
            ProductTypeRow::EvenZ4SquaredZ2 { .. } => 2,
            ProductTypeRow::ThreeKZ3Cubed { .. } => 3,
            ProductTypeRow::EvenEvenKlein { .. } => 4,
            ProductTypeRow::EvenZ2Fourth { .. } => 5,
            ProductTypeRow::Z4SquaredZ2Cubed => 6,
            ProductTypeRow::Z2Sixth => 7,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            ProductTypeRow::RankThree { k, l, m } => vec![("k", k), ("l", l), ("m", m)],
            ProductTypeRow::EvenZ4SquaredZ2 { k } | ProductTypeRow::ThreeKZ3Cubed { k } => {
                vec![("k", k)]
            }
            ProductTypeRow::EvenEvenKlein { k, l } => vec![("k", k), ("l", l)],
            ProductTypeRow::EvenZ2Fourth { n } => vec![("n", n)],
            _ => Vec::new(),
        }
    }
}

impl Serialize for ProductTypeRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        write_params("ProductTypeRow", self.index(), self.params()).serialize(s)
    }
}

/// Pattern match against the seven product-type families; all matching rows.
pub fn product_type_rows(g: &AbelianGroup) -> Vec<ProductTypeRow> {
    let mut out = Vec::new();
    if g.rank() <= 3 {
        let mut f = g.invariant_factors();
        while f.len() < 3 {
            f.insert(0, 1);
        }
        out.push(ProductTypeRow::RankThree {
            k: f[0],
            l: f[1],
            m: f[2],
        });
    }
    if let Some(rest) = without_parts(g, 2, &[2, 2, 1]) {
        if rest.p_rank(2) == 1 && rest.rank() == 1 {
            out.push(ProductTypeRow::EvenZ4SquaredZ2 {
                k: rest.order() / 2,
            });
        }
    }
    if let Some(rest) = without_parts(g, 3, &[1, 1, 1]) {
        if rest.p_rank(3) == 1 && rest.rank() == 1 {
            out.push(ProductTypeRow::ThreeKZ3Cubed {
                k: rest.order() / 3,
            });
        }
    }
    if let Some(rest) = without_parts(g, 2, &[1, 1]) {
        if rest.p_rank(2) == 2 && rest.rank() == 2 {
            let f = rest.invariant_factors();
            out.push(ProductTypeRow::EvenEvenKlein {
                k: f[0] / 2,
                l: f[1] / 2,
            });
        }
    }
    if let Some(rest) = without_parts(g, 2, &[1, 1, 1, 1]) {
        if rest.p_rank(2) == 1 && rest.rank() == 1 {
            out.push(ProductTypeRow::EvenZ2Fourth {
                n: rest.order() / 2,
            });
        }
    }
    if *g == AbelianGroup::from_cyclic_factors(&[4, 4, 2, 2, 2]).expect("valid") {
        out.push(ProductTypeRow::Z4SquaredZ2Cubed);
    }
    if *g == AbelianGroup::elementary(2, 6) {
        out.push(ProductTypeRow::Z2Sixth);
    }
    out
}

/// Evidence that `g` is of product type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductTypeWitness {
    /// Smallest matching table row.
    pub row: ProductTypeRow,
    pub matching_rows: Vec<u8>,
    /// `G1`, a finite abelian subgroup of `PGL(2)`.
    pub cr1_factor: AbelianGroup,
    /// `G2`, in one of the plane families.
    pub cr2_factor: AbelianGroup,
    pub cr2_family: Cr2Family,
}

/// Searches all ways of distributing the Sylow factors of `g` between two groups
/// `G1 x G2` with `G1` in rank 1 and `G2` in rank 2.
pub fn product_decomposition(g: &AbelianGroup) -> Option<(AbelianGroup, AbelianGroup, Cr2Family)> {
    let per_prime: Vec<(u64, &Partition, Vec<Partition>)> = g
        .sylow_types()
        .map(|(p, l)| (p, l, l.sub_multisets()))
        .collect();
    let mut idx = vec![0usize; per_prime.len()];
    loop {
        let mut first = BTreeMap::new();
        let mut second = BTreeMap::new();
        for ((p, lambda, subs), &i) in per_prime.iter().zip(&idx) {
            let chosen = &subs[i];
            first.insert(*p, chosen.clone());
            second.insert(*p, lambda.remove_parts(chosen).expect("sub-multiset"));
        }
        let g1 = AbelianGroup::from_primary(first).expect("factor of a valid group");
        if is_cr1(&g1) {
            let g2 = AbelianGroup::from_primary(second).expect("factor of a valid group");
            if let Some(fam) = cr2_family(&g2) {
                return Some((g1, g2, fam));
            }
        }
        let mut slot = idx.len();
        loop {
            if slot == 0 {
                return None;
            }
            slot -= 1;
            idx[slot] += 1;
            if idx[slot] < per_prime[slot].2.len() {
                break;
            }
            idx[slot] = 0;
        }
    }
}

/// Product-type witness from the table pattern match, cross-checked against
/// [`product_decomposition`]. Disagreement is reported as an error.
pub fn product_type_witness(g: &AbelianGroup) -> Result<Option<ProductTypeWitness>> {
    let rows = product_type_rows(g);
    let decomposition = product_decomposition(g);
    match (rows.first(), decomposition) {
        (None, None) => Ok(None),
        (Some(&row), Some((g1, g2, fam))) => {
            debug_assert_eq!(g1.direct_product(&g2).as_ref(), Ok(g));
            Ok(Some(ProductTypeWitness {
                row,
                matching_rows: rows.iter().map(ProductTypeRow::index).collect(),
                cr1_factor: g1,
                cr2_factor: g2,
                cr2_family: fam,
            }))
        }
        (Some(row), None) => Err(Error::Inconsistent {
            group: g.to_string(),
            detail: format!("matches row {} but no decomposition exists", row.index()),
        }),
        (None, Some((g1, g2, _))) => Err(Error::Inconsistent {
            group: g.to_string(),
            detail: format!("decomposes as ({g1}) x ({g2}) but matches no row"),
        }),
    }
}

// ---------------------------------------------------------------------------
// terminal points

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminalClause {
    RankAtMostThree,
    /// `(Z/2)^2 x Z/2n x Z/2m`.
    KleinTimesEvenEven,
}

impl TerminalClause {
    pub fn tag(&self) -> &'static str {
        match self {
            TerminalClause::RankAtMostThree => "rank≤3",
            TerminalClause::KleinTimesEvenEven => "klein×2n×2m",
        }
    }
}

impl Serialize for TerminalClause {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerminalVerdict {
    pub admissible: bool,
    pub clause: Option<TerminalClause>,
    /// All `(n, m)` with `n <= m` and `G = (Z/2)^2 x Z/2n x Z/2m`.
    pub klein_params: Vec<(u64, u64)>,
}

/// Groups that can act on a germ of a threefold terminal singularity:
/// rank at most 3, or `(Z/2)^2 x Z/2n x Z/2m`.
pub fn terminal_admissible(g: &AbelianGroup) -> TerminalVerdict {
    if g.rank() <= 3 {
        return TerminalVerdict {
            admissible: true,
            clause: Some(TerminalClause::RankAtMostThree),
            klein_params: Vec::new(),
        };
    }
    let klein_params = klein_even_even_params(g);
    TerminalVerdict {
        admissible: !klein_params.is_empty(),
        clause: (!klein_params.is_empty()).then_some(TerminalClause::KleinTimesEvenEven),
        klein_params,
    }
}

/// All `(n, m)`, `n <= m`, with `g = (Z/2)^2 x Z/2n x Z/2m`; empty if none.
pub fn klein_even_even_params(g: &AbelianGroup) -> Vec<(u64, u64)> {
    let Some(rest) = without_parts(g, 2, &[1, 1]) else {
        return Vec::new();
    };
    if rest.p_rank(2) != 2 || rest.rank() > 2 {
        return Vec::new();
    }
    // distribute each Sylow type of the rest over two cyclic slots
    let mut pairs: BTreeSet<(u64, u64)> = BTreeSet::from([(1, 1)]);
    for (p, lambda) in rest.sylow_types() {
        let (a, b) = (p.pow(lambda.part(0)), p.pow(lambda.part(1)));
        pairs = pairs
            .into_iter()
            .flat_map(|(x, y)| [(x * a, y * b), (x * b, y * a)])
            .collect();
    }
    let out: BTreeSet<(u64, u64)> = pairs
        .into_iter()
        .map(|(x, y)| (x.min(y) / 2, x.max(y) / 2))
        .collect();
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// genus one curves

/// A row of the table of finite abelian groups acting on genus-one curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EllipticActionRow {
    pub row: u8,
    /// Minimal length of an orbit.
    pub min_orbit: u64,
    /// Whether the group contains the inversion `x -> -x`.
    pub contains_antipodal: bool,
}

/// Rows 2..=9: (row, group factors, min orbit, contains antipodal).
const ELLIPTIC_ROWS: [(u8, &[u64], u64, bool); 8] = [
    (2, &[2], 1, true),
    (3, &[2, 2], 2, true),
    (4, &[2, 2, 2], 4, true),
    (5, &[4], 1, true),
    (6, &[2, 4], 2, true),
    (7, &[3], 1, false),
    (8, &[3, 3], 3, false),
    (9, &[6], 1, true),
];

/// Every table row whose group is isomorphic to `g`, by row number.
pub fn elliptic_action_rows(g: &AbelianGroup) -> Vec<EllipticActionRow> {
    let mut out = Vec::new();
    if g.rank() <= 2 {
        // translations: every orbit has length |G|
        out.push(EllipticActionRow {
            row: 1,
            min_orbit: g.order(),
            contains_antipodal: false,
        });
    }
    for (row, factors, min_orbit, contains_antipodal) in ELLIPTIC_ROWS {
        if *g == AbelianGroup::from_cyclic_factors(factors).expect("valid") {
            out.push(EllipticActionRow {
                row,
                min_orbit,
                contains_antipodal,
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// circle and 2-sphere

/// Finite abelian groups acting faithfully on a circle: cyclic or Klein.
pub fn can_act_on_circle(g: &AbelianGroup) -> bool {
    g.is_cyclic() || is_klein(g)
}

/// Finite abelian subgroups of `O(3)`: subgroups of `Z/n x Z/2`, or `(Z/2)^3`.
pub fn can_act_on_sphere2(g: &AbelianGroup) -> bool {
    match g.invariant_factors().as_slice() {
        [] | [_] => true,
        [2, _] => true,
        _ => *g == AbelianGroup::elementary(2, 3),
    }
}

// ---------------------------------------------------------------------------
// K3 type

/// A K3 surface group shipped with the crate. The list is partial.
pub const SHIPPED_K3_LIST: &str = include_str!("../data/k3_abelian_partial.txt");

/// Parses a K3 group list: one group expression per line, `#` starts a comment.
pub fn parse_k3_list(text: &str) -> Result<Vec<AbelianGroup>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let g = content.parse::<AbelianGroup>().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

/// The list in [`SHIPPED_K3_LIST`].
pub fn shipped_k3_groups() -> Vec<AbelianGroup> {
    parse_k3_list(SHIPPED_K3_LIST).expect("shipped K3 list parses")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K3Witness {
    /// Order of the cyclic kernel.
    pub m: u64,
    pub base: AbelianGroup,
}

/// Smallest `m` such that `0 -> Z/m -> g -> H -> 0` for some `H` in `k3_groups`.
///
/// `None` only means no such `H` exists in the supplied list. Ties on `m` go to
/// the earliest list entry.
pub fn k3_type_check(g: &AbelianGroup, k3_groups: &[AbelianGroup]) -> Result<Option<K3Witness>> {
    if k3_groups.is_empty() {
        return Err(Error::Empty("K3 group list"));
    }
    let best = k3_groups
        .iter()
        .filter(|h| g.order().is_multiple_of(h.order()))
        .map(|h| (g.order() / h.order(), h))
        .filter(|(m, h)| extension_exists(&AbelianGroup::cyclic(*m), h, g))
        .min_by_key(|(m, _)| *m);
    Ok(best.map(|(m, h)| K3Witness { m, base: h.clone() }))
}

// ---------------------------------------------------------------------------
// p-rank bounds

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankSetting {
    /// Rational surfaces: 4, 3, 2 for p = 2, 3, >= 5.
    Surface,
    /// Rationally connected threefolds: 6, 4, 3 for p = 2, 3, >= 5.
    Threefold,
    /// Rationally connected n-folds: `floor(p n / (p - 1))`.
    General(u32),
}

/// Largest admissible rank of an abelian p-group in `setting`.
pub fn rank_bound(setting: RankSetting, p: u64) -> usize {
    match (setting, p) {
        (RankSetting::Surface, 2) => 4,
        (RankSetting::Surface, 3) => 3,
        (RankSetting::Surface, _) => 2,
        (RankSetting::Threefold, 2) => 6,
        (RankSetting::Threefold, 3) => 4,
        (RankSetting::Threefold, _) => 3,
        (RankSetting::General(n), p) => ((p * u64::from(n)) / (p - 1)) as usize,
    }
}

/// `true` iff every Sylow subgroup respects the rank bound of `setting`.
pub fn rank_bound_check(g: &AbelianGroup, setting: RankSetting) -> bool {
    g.sylow_types()
        .all(|(p, l)| l.len() <= rank_bound(setting, p))
}

// ---------------------------------------------------------------------------
// aggregate

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBoundVerdict {
    pub surface: bool,
    pub threefold: bool,
}

/// Every predicate of this module evaluated on one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub group: AbelianGroup,
    pub order: u64,
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
    pub cr1: bool,
    pub cr2_family: Option<Cr2Family>,
    /// Indices of every matching plane family.
    pub cr2_families: Vec<u8>,
    pub product_type: Option<ProductTypeWitness>,
    pub terminal: TerminalVerdict,
    pub elliptic_rows: Vec<EllipticActionRow>,
    pub circle_action: bool,
    pub sphere2_action: bool,
    /// Only computed when a K3 list is supplied.
    pub k3_type: Option<K3Witness>,
    pub rank_bounds: RankBoundVerdict,
}

pub fn classify(
    g: &AbelianGroup,
    k3_groups: Option<&[AbelianGroup]>,
) -> Result<ClassificationVerdict> {
    let families = cr2_families(g);
    let k3_type = match k3_groups {
        Some(list) => k3_type_check(g, list)?,
        None => None,
    };
    Ok(ClassificationVerdict {
        group: g.clone(),
        order: g.order(),
        rank: g.rank(),
        invariant_factors: g.invariant_factors(),
        cr1: is_cr1(g),
        cr2_family: families.first().copied(),
        cr2_families: families.iter().map(Cr2Family::index).collect(),
        product_type: product_type_witness(g)?,
        terminal: terminal_admissible(g),
        elliptic_rows: elliptic_action_rows(g),
        circle_action: can_act_on_circle(g),
        sphere2_action: can_act_on_sphere2(g),
        k3_type,
        rank_bounds: RankBoundVerdict {
            surface: rank_bound_check(g, RankSetting::Surface),
            threefold: rank_bound_check(g, RankSetting::Threefold),
        },
    })
}

fn fmt_params(params: &[(&str, u64)]) -> String {
    if params.is_empty() {
        return String::new();
    }
    let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(" ({})", inner.join(", "))
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "group:            {}", self.group)?;
        writeln!(f, "order:            {}", self.order)?;
        writeln!(f, "rank:             {}", self.rank)?;
        writeln!(f, "Cr1:              {}", yes(self.cr1))?;
        match &self.cr2_family {
            Some(fam) => writeln!(
                f,
                "Cr2 family:       {}{}",
                fam.index(),
                fmt_params(&fam.params())
            )?,
            None => writeln!(f, "Cr2 family:       none")?,
        }
        match &self.product_type {
            Some(w) => writeln!(
                f,
                "product type:     row {}{} = ({}) x ({})",
                w.row.index(),
                fmt_params(&w.row.params()),
                w.cr1_factor,
                w.cr2_factor
            )?,
            None => writeln!(f, "product type:     no")?,
        }
        match self.terminal.clause {
            Some(c) => writeln!(f, "terminal:         yes [{}]", c.tag())?,
            None => writeln!(f, "terminal:         no")?,
        }
        if self.elliptic_rows.is_empty() {
            writeln!(f, "genus-1 rows:     none")?;
        } else {
            let rows: Vec<String> = self
                .elliptic_rows
                .iter()
                .map(|r| {
                    format!(
                        "{} (orbit {}{})",
                        r.row,
                        r.min_orbit,
                        if r.contains_antipodal { ", -1" } else { "" }
                    )
                })
                .collect();
            writeln!(f, "genus-1 rows:     {}", rows.join("; "))?;
        }
        writeln!(f, "circle action:    {}", yes(self.circle_action))?;
        writeln!(f, "sphere action:    {}", yes(self.sphere2_action))?;
        if let Some(k3) = &self.k3_type {
            writeln!(f, "K3 type:          m={} over {}", k3.m, k3.base)?;
        }
        write!(
            f,
            "rank bounds:      surface {}, threefold {}",
            yes(self.rank_bounds.surface),
            yes(self.rank_bounds.threefold)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> AbelianGroup {
        AbelianGroup::from_cyclic_factors(orders).unwrap()
    }

    #[test]
    fn cr1_examples() {
        assert!(is_cr1(&g(&[12])));
        assert!(is_cr1(&g(&[2, 2])));
        assert!(!is_cr1(&g(&[2, 4])));
        assert!(is_cr1(&AbelianGroup::trivial()));
    }

    #[test]
    fn cr2_examples() {
        assert_eq!(
            cr2_family(&g(&[4, 2, 2])),
            Some(Cr2Family::KleinTimesEven { n: 2 })
        );
        assert_eq!(cr2_family(&g(&[3, 3, 3])), Some(Cr2Family::Z3Cubed));
        assert_eq!(cr2_family(&AbelianGroup::elementary(2, 5)), None);
        assert_eq!(
            cr2_family(&g(&[6, 4])),
            Some(Cr2Family::RankTwo { n: 2, m: 12 })
        );
        assert_eq!(
            cr2_family(&g(&[2, 2, 6])),
            Some(Cr2Family::KleinTimesEven { n: 3 })
        );
        assert_eq!(cr2_family(&g(&[4, 4, 2])), Some(Cr2Family::Z4SquaredZ2));
        assert_eq!(
            cr2_family(&AbelianGroup::elementary(2, 4)),
            Some(Cr2Family::Z2Fourth)
        );
        // odd part of rank 2 is not allowed next to the Klein factor
        assert_eq!(cr2_family(&g(&[2, 2, 6, 3])), None);
    }

    #[test]
    fn product_type_examples() {
        let w = product_type_witness(&g(&[4, 4, 2, 2, 2])).unwrap().unwrap();
        assert_eq!(w.row, ProductTypeRow::Z4SquaredZ2Cubed);
        assert_eq!(w.cr1_factor, g(&[2, 2]));
        assert_eq!(w.cr2_factor, g(&[4, 4, 2]));

        let w = product_type_witness(&AbelianGroup::elementary(3, 4))
            .unwrap()
            .unwrap();
        assert_eq!(w.row, ProductTypeRow::ThreeKZ3Cubed { k: 1 });
        assert_eq!(w.cr1_factor, g(&[3]));
        assert_eq!(w.cr2_factor, g(&[3, 3, 3]));

        assert_eq!(
            product_type_witness(&AbelianGroup::elementary(3, 5)).unwrap(),
            None
        );

        let w = product_type_witness(&AbelianGroup::elementary(2, 6))
            .unwrap()
            .unwrap();
        assert_eq!(w.row, ProductTypeRow::Z2Sixth);
    }

    #[test]
    fn table_rows_overlap_reports_all() {
        // [2,2,1,1] is row 2 with k = 1 and row 4 with k = l = 2
        let rows = product_type_rows(&g(&[4, 4, 2, 2]));
        let idx: Vec<u8> = rows.iter().map(ProductTypeRow::index).collect();
        assert_eq!(idx, vec![2, 4]);
        assert_eq!(rows[0], ProductTypeRow::EvenZ4SquaredZ2 { k: 1 });
        assert_eq!(rows[1], ProductTypeRow::EvenEvenKlein { k: 2, l: 2 });
    }

    #[test]
    fn terminal_examples() {
        let t = terminal_admissible(&g(&[2, 2, 4, 6]));
        assert!(t.admissible);
        assert_eq!(t.clause, Some(TerminalClause::KleinTimesEvenEven));
        assert!(t.klein_params.contains(&(2, 3)), "{:?}", t.klein_params);
        assert_eq!(t.klein_params, vec![(1, 6), (2, 3)]);

        let t = terminal_admissible(&g(&[5, 25, 5]));
        assert_eq!(t.clause, Some(TerminalClause::RankAtMostThree));

        let t = terminal_admissible(&AbelianGroup::elementary(2, 5));
        assert!(!t.admissible);
        assert_eq!(t.clause, None);
    }

    #[test]
    fn elliptic_examples() {
        assert_eq!(
            elliptic_action_rows(&g(&[2, 2, 2])),
            vec![EllipticActionRow {
                row: 4,
                min_orbit: 4,
                contains_antipodal: true
            }]
        );
        assert_eq!(
            elliptic_action_rows(&g(&[2, 4])),
            vec![
                EllipticActionRow {
                    row: 1,
                    min_orbit: 8,
                    contains_antipodal: false
                },
                EllipticActionRow {
                    row: 6,
                    min_orbit: 2,
                    contains_antipodal: true
                },
            ]
        );
        assert!(elliptic_action_rows(&AbelianGroup::elementary(2, 4)).is_empty());
        let rows: Vec<u8> = elliptic_action_rows(&g(&[3, 3]))
            .iter()
            .map(|r| r.row)
            .collect();
        assert_eq!(rows, vec![1, 8]);
    }

    #[test]
    fn circle_and_sphere_examples() {
        let a = g(&[6, 2]);
        assert!(!can_act_on_circle(&a) && can_act_on_sphere2(&a));
        let b = g(&[2, 2, 2]);
        assert!(!can_act_on_circle(&b) && can_act_on_sphere2(&b));
        let c = g(&[3, 3]);
        assert!(!can_act_on_circle(&c) && !can_act_on_sphere2(&c));
        assert!(can_act_on_circle(&g(&[2, 2])) && can_act_on_sphere2(&g(&[2, 2])));
        assert!(!can_act_on_sphere2(&g(&[4, 4])));
    }

    #[test]
    fn k3_examples() {
        let list = vec![g(&[4, 4, 4]), g(&[2, 2])];
        let w = k3_type_check(&AbelianGroup::elementary(4, 4), &list)
            .unwrap()
            .unwrap();
        assert_eq!(
            w,
            K3Witness {
                m: 4,
                base: g(&[4, 4, 4])
            }
        );

        let w = k3_type_check(&g(&[2, 2]), &list).unwrap().unwrap();
        assert_eq!(
            w,
            K3Witness {
                m: 1,
                base: g(&[2, 2])
            }
        );

        assert_eq!(
            k3_type_check(&AbelianGroup::elementary(7, 5), &list).unwrap(),
            None
        );
        assert_eq!(
            k3_type_check(&AbelianGroup::elementary(7, 5), &shipped_k3_groups()).unwrap(),
            None
        );
        assert!(k3_type_check(&g(&[2]), &[]).is_err());
    }

    #[test]
    fn shipped_list_parses_and_contains_fermat_quartic_group() {
        let list = shipped_k3_groups();
        assert!(list.len() >= 10);
        assert!(list.contains(&g(&[4, 4, 4])));
    }

    #[test]
    fn k3_list_errors_name_the_line() {
        match parse_k3_list("# header\nZ2\nZ0\n") {
            Err(Error::Parse { message, .. }) => {
                assert!(message.starts_with("line 3"), "{message}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rank_bound_examples() {
        let a = AbelianGroup::elementary(2, 4)
            .direct_product(&AbelianGroup::elementary(3, 3))
            .unwrap();
        assert!(rank_bound_check(&a, RankSetting::Surface));
        assert!(!rank_bound_check(
            &AbelianGroup::elementary(5, 3),
            RankSetting::Surface
        ));
        assert!(rank_bound_check(
            &AbelianGroup::elementary(2, 6),
            RankSetting::Threefold
        ));
        assert!(!rank_bound_check(
            &AbelianGroup::elementary(2, 7),
            RankSetting::Threefold
        ));
    }

    #[test]
    fn general_bound_matches_named_settings() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(
                rank_bound(RankSetting::General(2), p),
                rank_bound(RankSetting::Surface, p)
            );
            assert_eq!(
                rank_bound(RankSetting::General(3), p),
                rank_bound(RankSetting::Threefold, p)
            );
        }
        assert_eq!(rank_bound(RankSetting::General(1), 2), 2);
    }

    #[test]
    fn classify_examples() {
        let v = classify(&AbelianGroup::elementary(2, 6), None).unwrap();
        assert_eq!(v.product_type.as_ref().map(|w| w.row.index()), Some(7));
        assert!(!v.terminal.admissible);
        assert_eq!(v.cr2_family, None);

        let v = classify(&g(&[3]), None).unwrap();
        assert!(v.cr1 && v.circle_action);
        assert_eq!(v.cr2_family.map(|f| f.index()), Some(1));
        assert_eq!(v.product_type.as_ref().map(|w| w.row.index()), Some(1));

        let v = classify(&g(&[2, 2, 2, 4, 6]), None).unwrap();
        let w = v.product_type.expect("product type");
        // 2-type [2,1,1,1,1], 3-type [1]: Z/12 x (Z/2)^4
        assert_eq!(w.row, ProductTypeRow::EvenZ2Fourth { n: 6 });
        assert!(v.elliptic_rows.is_empty());
        assert_eq!(v.k3_type, None);
    }
}
