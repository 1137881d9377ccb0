use serde::{Deserialize, Serialize};

use super::block_partition;
use crate::arith::p_part;
use crate::chartab::{compute_table, CharacterTable};
use crate::perm::{centralizer, centralizer_of_subgroup, classify_sylow, normalizer, p_elements_class_reps, sylow_subgroup, PermGroup};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerTerm {
    /// Class of `G` containing the `p`-element.
    pub class_index: usize,
    pub centralizer_order: u64,
    /// `l` of the principal block of the centralizer.
    pub l: usize,
}

/// Both sides of `k(B₀) = |Z(G)|_p · l(B₀) + Σ_x l(B₀(C_G(x)))`, the sum running
/// over classes of non-central `p`-elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerIdentity {
    pub p: u64,
    pub lhs: usize,
    pub center_p_part: u64,
    pub l_principal: usize,
    pub terms: Vec<CentralizerTerm>,
    pub rhs: usize,
}

impl BrauerIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of the class-counting identity; each centralizer gets
/// its own character table.
pub fn brauer_count_identity(g: &PermGroup, t: &CharacterTable, p: u64) -> Result<BrauerIdentity> {
    let d = block_partition(t, p)?;
    let lhs = d.principal().k;
    let l_principal = d.principal().l;
    let center_order: u64 = t.classes().iter().filter(|c| c.size == 1).count() as u64;
    let center_p_part = p_part(center_order, p);
    let reps = p_elements_class_reps(g, p)?;
    let cd = g.class_data()?;
    let mut terms = Vec::with_capacity(reps.non_central.len());
    for class in &reps.non_central {
        let c = centralizer(g, &class.representative)?;
        let ct = compute_table(&c, "centralizer")?;
        terms.push(CentralizerTerm {
            class_index: cd.class_of(&class.representative).expect("representative lies in G"),
            centralizer_order: c.order(),
            l: block_partition(&ct, p)?.principal().l,
        });
    }
    let rhs = center_p_part as usize * l_principal + terms.iter().map(|t| t.l).sum::<usize>();
    Ok(BrauerIdentity { p, lhs, center_p_part, l_principal, terms, rhs })
}

/// `e = |N_G(P) : C_G(P)|` and the predicted `k(B₀) = e + (|P| − 1)/e` for a
/// cyclic Sylow `p`-subgroup `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicDefect {
    pub e: u64,
    pub sylow_order: u64,
    pub predicted: u64,
}

pub fn cyclic_defect_count(g: &PermGroup, p: u64) -> Result<CyclicDefect> {
    let sylow = sylow_subgroup(g, p)?;
    let desc = classify_sylow(&sylow, p)?;
    if !desc.is_cyclic() {
        return Err(Error::Domain(format!("Sylow {p}-subgroup is {} and not cyclic", desc.tag)));
    }
    let n = normalizer(g, &sylow)?;
    let c = centralizer_of_subgroup(g, &sylow)?;
    let e = n.order() / c.order();
    let q = sylow.order();
    Ok(CyclicDefect { e, sylow_order: q, predicted: e + (q - 1) / e })
}
