use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::{inflation, NormalPair};
use crate::blocks::{block_partition, BlockDecomposition};
use crate::chartab::CharacterTable;
use crate::perm::{center, is_p_solvable, o_p_prime, PermGroup};
use crate::Result;

/// Result of checking one statement on one input. `holds` is vacuously true
/// when the hypotheses fail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub applicable: bool,
    pub holds: bool,
    pub detail: Value,
}

impl CheckOutcome {
    fn skipped(detail: Value) -> Self {
        CheckOutcome { applicable: false, holds: true, detail }
    }

    fn checked(holds: bool, detail: Value) -> Self {
        CheckOutcome { applicable: true, holds, detail }
    }
}

fn covers_of(cov: &BTreeSet<(usize, usize)>, b: usize) -> Vec<usize> {
    cov.iter().filter(|&&(_, x)| x == b).map(|&(bg, _)| bg).collect()
}

/// Every character of the principal block of `N` lies under some character of
/// the principal block of `G`.
pub fn check_blockabove(pair: &NormalPair, dg: &BlockDecomposition, dn: &BlockDecomposition) -> CheckOutcome {
    let b0g = dg.principal();
    let mut orphans = Vec::new();
    for &theta in &dn.principal().chars {
        let above = b0g.chars.iter().any(|&chi| pair.constituents(chi).iter().any(|&(t, _)| t == theta));
        if !above {
            orphans.push(theta);
        }
    }
    CheckOutcome::checked(orphans.is_empty(), json!({ "orphans": orphans }))
}

/// If `B` is the only block covering `b`, then every character of `G` lying
/// over a character of `b` belongs to `B`.
pub fn check_covering(pair: &NormalPair, dg: &BlockDecomposition, dn: &BlockDecomposition) -> CheckOutcome {
    let cov = pair.covering(dg, dn);
    let mut unique = 0usize;
    let mut strays = Vec::new();
    for (b, block) in dn.blocks.iter().enumerate() {
        let covers = covers_of(&cov, b);
        if covers.len() != 1 {
            continue;
        }
        unique += 1;
        for chi in 0..pair.t_g.num_classes() {
            let over = pair.constituents(chi).iter().any(|(t, _)| block.chars.contains(t));
            if over && dg.block_of(chi) != covers[0] {
                strays.push(json!([chi, b]));
            }
        }
    }
    if unique == 0 {
        return CheckOutcome::skipped(json!({ "uniquely_covered": 0 }));
    }
    CheckOutcome::checked(strays.is_empty(), json!({ "uniquely_covered": unique, "strays": strays }))
}

/// With `P·C_G(P) ⊆ M`, the principal block of `G` is the only block covering
/// the principal block of `M`, and `k(G/M) < k(B_0(G))` when `P > 1`.
pub fn check_onlycovering(
    pair: &NormalPair,
    dg: &BlockDecomposition,
    dn: &BlockDecomposition,
    pc: &PermGroup,
    sylow_order: u64,
) -> CheckOutcome {
    if !pc.is_subgroup_of(&pair.n) {
        return CheckOutcome::skipped(json!({ "reason": "P·C_G(P) not contained in M" }));
    }
    let covers = covers_of(&pair.covering(dg, dn), dn.principal_index);
    let only = covers == [dg.principal_index];
    let k_quotient = pair.kernel_rows().len();
    let k_b0 = dg.principal().k;
    let bound = sylow_order == 1 || k_quotient < k_b0;
    CheckOutcome::checked(
        only && bound,
        json!({ "covers": covers, "k_quotient": k_quotient, "k_B0": k_b0 }),
    )
}

/// With `P·C_G(P) ⊆ M` and `k(B_0(G)) = 5`, `k(b_0) ∈ {4, 5, 7, 11, 13}`, and
/// `k(b_0) = 7` if moreover `p = 2` and `M < G`.
pub fn check_tech(
    pair: &NormalPair,
    dg: &BlockDecomposition,
    dn: &BlockDecomposition,
    pc: &PermGroup,
) -> CheckOutcome {
    let k_b0g = dg.principal().k;
    if k_b0g != 5 || !pc.is_subgroup_of(&pair.n) {
        return CheckOutcome::skipped(json!({ "k_B0": k_b0g }));
    }
    let k = dn.principal().k;
    let mut holds = matches!(k, 4 | 5 | 7 | 11 | 13);
    if dg.p == 2 && pair.index() > 1 {
        holds &= k == 7;
    }
    CheckOutcome::checked(holds, json!({ "k_b0": k }))
}

/// When `G/N` is a `p'`-group and `G = N·C_G(P)`, restriction is a bijection
/// from the principal block of `G` onto the principal block of `N`.
pub fn check_isomblocks(
    pair: &NormalPair,
    dg: &BlockDecomposition,
    dn: &BlockDecomposition,
    pc: &PermGroup,
) -> CheckOutcome {
    if pair.index().is_multiple_of(dg.p) {
        return CheckOutcome::skipped(json!({ "reason": "p divides |G/N|" }));
    }
    let ncp = pair.g.subgroup_from_elements(pair.n.generators().iter().chain(pc.generators()));
    if ncp.order() != pair.g.order() {
        return CheckOutcome::skipped(json!({ "reason": "G ≠ N·C_G(P)" }));
    }
    let b0n = &dn.principal().chars;
    let mut image = Vec::new();
    let mut reducible = Vec::new();
    for &chi in &dg.principal().chars {
        match pair.constituents(chi) {
            [(theta, 1)] => image.push(*theta),
            _ => reducible.push(chi),
        }
    }
    image.sort_unstable();
    let bijective = reducible.is_empty() && image == *b0n;
    CheckOutcome::checked(bijective, json!({ "reducible": reducible, "image": image, "target": b0n }))
}

/// When `G/N` is cyclic, the number of irreducible constituents of `χ_N`
/// equals the number of `β ∈ Irr(G/N)` with `χβ = χ`.
pub fn check_restnumber(pair: &NormalPair) -> Result<CheckOutcome> {
    let inf = inflation(&pair.g, &pair.t_g, &pair.n)?;
    let q = &inf.quotient.group;
    if !q.is_abelian() || q.exponent()? != q.order() {
        return Ok(CheckOutcome::skipped(json!({ "reason": "G/N is not cyclic" })));
    }
    let t = &pair.t_g;
    let mut mismatches = Vec::new();
    for chi in 0..t.num_classes() {
        let constituents = pair.constituents(chi).len();
        let fixing = (0..inf.table.num_classes())
            .filter(|&beta| {
                (0..t.num_classes()).all(|k| {
                    let b = inf.table.value(beta, inf.class_map[k]).embed(t.exponent()).expect("exp G/N divides exp G");
                    &(t.value(chi, k) * &b) == t.value(chi, k)
                })
            })
            .count();
        if constituents != fixing {
            mismatches.push(json!({ "chi": chi, "constituents": constituents, "fixing": fixing }));
        }
    }
    Ok(CheckOutcome::checked(mismatches.is_empty(), json!({ "index": pair.index(), "mismatches": mismatches })))
}

/// Two characters of `G/Z(G)` share a block of `G/Z(G)` exactly when their
/// inflations share a block of `G`.
pub fn check_quotient_inflation(g: &PermGroup, t_g: &CharacterTable, dg: &BlockDecomposition) -> Result<CheckOutcome> {
    let z = center(g)?;
    if z.is_trivial() {
        return Ok(CheckOutcome::skipped(json!({ "reason": "trivial center" })));
    }
    let inf = inflation(g, t_g, &z)?;
    let dq = block_partition(&inf.table, dg.p)?;
    let mut disagreements = Vec::new();
    for a in 0..inf.rows.len() {
        for b in a + 1..inf.rows.len() {
            let in_quotient = dq.block_of(a) == dq.block_of(b);
            let in_group = dg.block_of(inf.rows[a]) == dg.block_of(inf.rows[b]);
            if in_quotient != in_group {
                disagreements.push([a, b]);
            }
        }
    }
    Ok(CheckOutcome::checked(
        disagreements.is_empty(),
        json!({ "center_order": z.order(), "disagreements": disagreements }),
    ))
}

/// A `p`-solvable group with `O_{p'}(G) = 1` has a single `p`-block.
pub fn check_unique_block(g: &PermGroup, dg: &BlockDecomposition) -> Result<CheckOutcome> {
    let p = dg.p;
    if !g.order().is_multiple_of(p) || !o_p_prime(g, p)?.is_trivial() || !is_p_solvable(g, p)? {
        return Ok(CheckOutcome::skipped(json!({ "reason": "hypotheses fail" })));
    }
    Ok(CheckOutcome::checked(dg.blocks.len() == 1, json!({ "blocks": dg.blocks.len() })))
}
