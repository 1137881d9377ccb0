//! Block theory relative to a normal subgroup: class fusion, restriction,
//! covering, inflation from quotients, and checks of the classical lemmas.

mod checks;

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::blocks::BlockDecomposition;
use crate::chartab::{compute_table, CharacterTable};
use crate::cyclo::{weighted_sum_of_products, Cyclotomic};
use crate::perm::{
    center, centralizer_of_subgroup, coset_action, derived_subgroup, is_normal, normal_closure,
    normal_subgroups, sylow_subgroup, PermGroup, Quotient,
};
use crate::{Error, Result};

pub use checks::{
    check_blockabove, check_covering, check_isomblocks, check_onlycovering, check_quotient_inflation,
    check_restnumber, check_tech, check_unique_block, CheckOutcome,
};

/// For each class of `N`, the class of `G` containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionMap {
    pub map: Vec<usize>,
}

pub fn class_fusion(g: &PermGroup, n: &PermGroup) -> Result<FusionMap> {
    if !n.is_subgroup_of(g) {
        return Err(Error::Domain("class fusion of a non-subgroup".into()));
    }
    let gd = g.class_data()?;
    let nd = n.class_data()?;
    let map = nd
        .classes()
        .iter()
        .map(|c| gd.class_of(&c.representative).expect("N lies in G"))
        .collect::<Vec<_>>();
    let mut meet = vec![0u64; gd.len()];
    for (i, x) in gd.elements().iter().enumerate() {
        if n.contains(x) {
            meet[gd.class_of_index(i)] += 1;
        }
    }
    let mut fused = vec![0u64; gd.len()];
    for (c, &k) in nd.classes().iter().zip(&map) {
        if c.element_order != gd.classes()[k].element_order {
            return Err(Error::InvariantViolation("fusion does not respect element orders".into()));
        }
        fused[k] += c.size;
    }
    if fused != meet {
        return Err(Error::InvariantViolation("fused class sizes do not match |K ∩ N|".into()));
    }
    Ok(FusionMap { map })
}

/// Values of `χ_N` on the classes of `N`.
pub fn restrict(t_g: &CharacterTable, fusion: &FusionMap, chi: usize) -> Vec<Cyclotomic> {
    fusion.map.iter().map(|&c| t_g.value(chi, c).clone()).collect()
}

/// `(θ, ⟨χ_N, θ⟩)` for every constituent `θ` of `χ_N`, ascending in `θ`.
pub fn restriction_constituents(
    t_g: &CharacterTable,
    t_n: &CharacterTable,
    fusion: &FusionMap,
    chi: usize,
) -> Result<Vec<(usize, u64)>> {
    let conj = embedded_conjugates(t_g, t_n)?;
    constituents_with(t_g, t_n, fusion, &conj, chi)
}

fn embedded_conjugates(t_g: &CharacterTable, t_n: &CharacterTable) -> Result<Vec<Vec<Cyclotomic>>> {
    t_n.irr()
        .iter()
        .map(|r| r.iter().map(|v| v.conj().embed(t_g.exponent())).collect::<Result<Vec<_>>>())
        .collect()
}

fn constituents_with(
    t_g: &CharacterTable,
    t_n: &CharacterTable,
    fusion: &FusionMap,
    conj: &[Vec<Cyclotomic>],
    chi: usize,
) -> Result<Vec<(usize, u64)>> {
    let res = restrict(t_g, fusion, chi);
    let mut out = Vec::new();
    let mut degree_sum = 0u64;
    for (theta, row) in conj.iter().enumerate() {
        let s = weighted_sum_of_products(
            t_g.exponent(),
            (0..res.len()).map(|c| (t_n.classes()[c].size as i128, &res[c], &row[c])),
        );
        let total = s
            .to_integer()
            .ok_or_else(|| Error::InvariantViolation(format!("⟨χ_N, θ⟩ is not an integer for χ = {chi}")))?;
        if total % t_n.order() as i128 != 0 || total < 0 {
            return Err(Error::InvariantViolation(format!("⟨χ_N, θ⟩ is not a multiplicity for χ = {chi}")));
        }
        let m = (total / t_n.order() as i128) as u64;
        if m > 0 {
            out.push((theta, m));
            degree_sum += m * t_n.degree(theta);
        }
    }
    if degree_sum != t_g.degree(chi) {
        return Err(Error::InvariantViolation(format!(
            "Σ m_θ θ(1) = {degree_sum} ≠ χ(1) = {} for χ = {chi}",
            t_g.degree(chi)
        )));
    }
    Ok(out)
}

/// A normal subgroup together with both character tables, the fusion map, and
/// every restriction decomposed.
#[derive(Clone, Debug)]
pub struct NormalPair {
    pub g: PermGroup,
    pub n: PermGroup,
    pub t_g: Arc<CharacterTable>,
    pub t_n: Arc<CharacterTable>,
    pub fusion: FusionMap,
    constituents: Vec<Vec<(usize, u64)>>,
}

impl NormalPair {
    pub fn new(g: &PermGroup, t_g: Arc<CharacterTable>, n: &PermGroup) -> Result<Self> {
        let t_n = if n.order() == g.order() { t_g.clone() } else { Arc::new(compute_table(n, "N")?) };
        Self::with_tables(g, t_g, n, t_n)
    }

    pub fn with_tables(g: &PermGroup, t_g: Arc<CharacterTable>, n: &PermGroup, t_n: Arc<CharacterTable>) -> Result<Self> {
        if !is_normal(g, n)? {
            return Err(Error::Domain("subgroup is not normal".into()));
        }
        let fusion = class_fusion(g, n)?;
        let conj = embedded_conjugates(&t_g, &t_n)?;
        let constituents = (0..t_g.num_classes())
            .map(|chi| constituents_with(&t_g, &t_n, &fusion, &conj, chi))
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalPair { g: g.clone(), n: n.clone(), t_g, t_n, fusion, constituents })
    }

    pub fn index(&self) -> u64 {
        self.g.order() / self.n.order()
    }

    pub fn constituents(&self, chi: usize) -> &[(usize, u64)] {
        &self.constituents[chi]
    }

    /// Rows of `G` whose kernel contains `N`, i.e. the characters of `G/N`.
    pub fn kernel_rows(&self) -> Vec<usize> {
        (0..self.t_g.num_classes())
            .filter(|&chi| self.constituents[chi] == [(0, self.t_g.degree(chi))])
            .collect()
    }

    /// `(B, b)` pairs with `B` covering `b`, as block indices.
    pub fn covering(&self, dg: &BlockDecomposition, dn: &BlockDecomposition) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (chi, cons) in self.constituents.iter().enumerate() {
            let b = dg.block_of(chi);
            for &(theta, _) in cons {
                out.insert((b, dn.block_of(theta)));
            }
        }
        out
    }
}

/// `(B, b)` with `B ∈ Bl(G)` covering `b ∈ Bl(N)`.
pub fn covering_blocks(
    t_g: &CharacterTable,
    t_n: &CharacterTable,
    fusion: &FusionMap,
    p: u64,
) -> Result<BTreeSet<(usize, usize)>> {
    let dg = crate::blocks::block_partition(t_g, p)?;
    let dn = crate::blocks::block_partition(t_n, p)?;
    let conj = embedded_conjugates(t_g, t_n)?;
    let mut out = BTreeSet::new();
    for chi in 0..t_g.num_classes() {
        for (theta, _) in constituents_with(t_g, t_n, fusion, &conj, chi)? {
            out.insert((dg.block_of(chi), dn.block_of(theta)));
        }
    }
    Ok(out)
}

/// Characters of `G/N` computed from the coset action, and their inflations.
#[derive(Clone, Debug)]
pub struct Inflation {
    pub quotient: Quotient,
    pub table: CharacterTable,
    /// Class of `G/N` containing the image of each class of `G`.
    pub class_map: Vec<usize>,
    /// Row of `G`'s table equal to each inflated character of `G/N`.
    pub rows: Vec<usize>,
}

pub fn inflation(g: &PermGroup, t_g: &CharacterTable, n: &PermGroup) -> Result<Inflation> {
    let quotient = coset_action(g, n)?;
    let table = compute_table(&quotient.group, "quotient")?;
    let qd = quotient.group.class_data()?;
    let class_map = g
        .class_data()?
        .classes()
        .iter()
        .map(|c| Ok(qd.class_of(&quotient.image(&c.representative)?).expect("images lie in the quotient")))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(table.num_classes());
    for beta in 0..table.num_classes() {
        let lifted: Vec<Cyclotomic> = class_map.iter().map(|&q| table.value(beta, q).clone()).collect();
        let row = (0..t_g.num_classes())
            .find(|&chi| t_g.row(chi) == lifted.as_slice())
            .ok_or_else(|| Error::InvariantViolation(format!("inflation of quotient character {beta} is not irreducible")))?;
        rows.push(row);
    }
    Ok(Inflation { quotient, table, class_map, rows })
}

/// Normal subgroups used by the verification harness: all of them when
/// `|G| ≤ 2000`, otherwise the trivial group, derived subgroup, center, normal
/// closures of Sylow subgroups and `G`.
pub fn harness_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    if g.order() <= 2000 {
        return normal_subgroups(g);
    }
    let mut list = vec![g.subgroup(Vec::new())?, derived_subgroup(g)?, center(g)?];
    for p in crate::arith::prime_factors(g.order()) {
        list.push(normal_closure(g, &sylow_subgroup(g, p)?)?);
    }
    list.push(g.clone());
    let mut out: Vec<PermGroup> = Vec::new();
    for n in list {
        if !out.iter().any(|m| m.same_group(&n)) {
            out.push(n);
        }
    }
    out.sort_by_key(PermGroup::order);
    Ok(out)
}

/// `P·C_G(P)` for a Sylow `p`-subgroup `P`, together with `P`.
pub fn sylow_with_centralizer(g: &PermGroup, p: u64) -> Result<(PermGroup, PermGroup)> {
    let sylow = sylow_subgroup(g, p)?;
    let c = centralizer_of_subgroup(g, &sylow)?;
    let pc = g.subgroup_from_elements(sylow.generators().iter().chain(c.generators()));
    Ok((sylow, pc))
}
