//! `p`-blocks of a character table and their invariants.

mod identities;
mod predicates;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_one_mod, rank_mod, root_of_unity_mod, valuation};
use crate::chartab::CharacterTable;
use crate::cyclo::{prime_ideal_with, Cyclotomic, Rational, Residue, DEFAULT_FACTOR_SEED};
use crate::perm::{classify_sylow, sylow_subgroup, PermGroup, SylowDescriptor};
use crate::{Error, Result};

pub use identities::{brauer_count_identity, cyclic_defect_count, BrauerIdentity, CentralizerTerm, CyclicDefect};
pub use predicates::{
    brauer_bound_holds, divisibility2_holds, divisibility3_holds, height_zero_holds, small_k_holds,
    theorem_a_holds,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub p: u64,
    /// Row indices into the table, ascending.
    pub chars: Vec<usize>,
    pub defect: u32,
    pub principal: bool,
    pub k: usize,
    pub k0: usize,
    pub l: usize,
    pub heights: BTreeMap<usize, u32>,
}

impl Block {
    /// `|D| = p^d`.
    pub fn defect_group_order(&self) -> u64 {
        self.p.pow(self.defect)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub p: u64,
    /// Blocks ordered by their smallest character, so the principal block is first.
    pub blocks: Vec<Block>,
    pub principal_index: usize,
    /// Sylow descriptor, when the group itself was available.
    pub sylow: Option<SylowDescriptor>,
}

impl BlockDecomposition {
    pub fn principal(&self) -> &Block {
        &self.blocks[self.principal_index]
    }

    /// Index of the block containing row `chi`.
    pub fn block_of(&self, chi: usize) -> usize {
        self.blocks.iter().position(|b| b.chars.contains(&chi)).expect("blocks partition the rows")
    }
}

/// `ω_χ(K̂) = |K| χ(x_K) / χ(1)`.
pub fn central_character(t: &CharacterTable, chi: usize, k: usize) -> Cyclotomic {
    let size = Rational::from_integer(t.classes()[k].size as i128);
    let deg = Rational::from_integer(t.degree(chi) as i128);
    t.value(chi, k).scale(size / deg)
}

/// Partition of `Irr(G)` into `p`-blocks, using the first sorted prime ideal above `p`.
pub fn block_partition(t: &CharacterTable, p: u64) -> Result<BlockDecomposition> {
    block_partition_with_ideal(t, p, 0)
}

/// As [`block_partition`], reducing modulo the `choice`-th prime ideal above `p`
/// in sorted order.
pub fn block_partition_with_ideal(t: &CharacterTable, p: u64, choice: usize) -> Result<BlockDecomposition> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let k = t.num_classes();
    let ideal = prime_ideal_with(p, t.exponent(), choice, DEFAULT_FACTOR_SEED)?;
    let groups: Vec<Vec<usize>> = if !t.order().is_multiple_of(p) {
        (0..k).map(|i| vec![i]).collect()
    } else {
        let mut index: HashMap<Vec<Residue>, usize> = HashMap::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for chi in 0..k {
            let key = (0..k)
                .map(|c| ideal.reduce(&central_character(t, chi, c)))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::InvariantViolation(format!("central character is not integral: {e}")))?;
            match index.get(&key) {
                Some(&b) => groups[b].push(chi),
                None => {
                    index.insert(key, groups.len());
                    groups.push(vec![chi]);
                }
            }
        }
        groups
    };
    let a = valuation(t.order(), p);
    let mut blocks: Vec<Block> = groups
        .into_iter()
        .map(|chars| {
            let vals: Vec<u32> = chars.iter().map(|&c| valuation(t.degree(c), p)).collect();
            let min = *vals.iter().min().expect("blocks are nonempty");
            let defect = a - min;
            let heights: BTreeMap<usize, u32> = chars.iter().zip(&vals).map(|(&c, &v)| (c, v - min)).collect();
            let k0 = heights.values().filter(|&&h| h == 0).count();
            Block { p, k: chars.len(), principal: chars.contains(&0), chars, defect, k0, l: 0, heights }
        })
        .collect();
    let regular = t.p_regular_classes(p).len();
    for b in &mut blocks {
        b.l = l_of_block(t, b)?;
    }
    if blocks.iter().map(|b| b.l).sum::<usize>() != regular {
        for b in &mut blocks {
            b.l = exact_l(t, b)?;
        }
        let total: usize = blocks.iter().map(|b| b.l).sum();
        if total != regular {
            return Err(Error::InvariantViolation(format!(
                "Σ l(B) = {total} ≠ {regular} p-regular classes"
            )));
        }
    }
    let principal_index = blocks.iter().position(|b| b.principal).expect("row 0 lies in a block");
    Ok(BlockDecomposition { p, blocks, principal_index, sylow: None })
}

/// Blocks together with the Sylow descriptor of `g`.
pub fn analyze(g: &PermGroup, t: &CharacterTable, p: u64) -> Result<BlockDecomposition> {
    let mut d = block_partition(t, p)?;
    d.sylow = Some(defect_group_descriptor(g, p)?);
    Ok(d)
}

pub fn principal_block(d: &BlockDecomposition) -> &Block {
    d.principal()
}

/// Descriptor of a Sylow `p`-subgroup, the defect group of the principal block.
pub fn defect_group_descriptor(g: &PermGroup, p: u64) -> Result<SylowDescriptor> {
    classify_sylow(&sylow_subgroup(g, p)?, p)
}

fn restricted_rows<'a>(t: &'a CharacterTable, b: &Block) -> Vec<Vec<&'a Cyclotomic>> {
    let cols = t.p_regular_classes(b.p);
    b.chars.iter().map(|&c| cols.iter().map(|&k| t.value(c, k)).collect()).collect()
}

/// `l(B)`: rank of the block's rows on `p`-regular classes. Ranks modulo two
/// large primes are compared; disagreement falls back to exact elimination.
pub fn l_of_block(t: &CharacterTable, b: &Block) -> Result<usize> {
    let n = t.exponent() as u64;
    let rows = restricted_rows(t, b);
    let l1 = prime_one_mod(n, 1 << 20);
    let l2 = prime_one_mod(n, l1);
    let rank_at = |l: u64| {
        let z = root_of_unity_mod(n, l);
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v.to_residue_mod(l, z)).collect()).collect();
        rank_mod(&m, l)
    };
    let (r1, r2) = (rank_at(l1), rank_at(l2));
    if r1 == r2 {
        Ok(r1)
    } else {
        exact_l(t, b)
    }
}

/// Rank over `Q(ζ_N)` by Gaussian elimination.
pub fn exact_l(t: &CharacterTable, b: &Block) -> Result<usize> {
    let mut m: Vec<Vec<Cyclotomic>> =
        restricted_rows(t, b).into_iter().map(|r| r.into_iter().cloned().collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inverse()?;
        let pivot_row: Vec<Cyclotomic> = m[rank].iter().map(|v| v * &inv).collect();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                m[r][c] = &m[r][c] - &(&f * &pivot_row[c]);
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    Ok(rank)
}

/// Machine-readable block summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub group: String,
    pub p: u64,
    pub sylow: Option<SylowDescriptor>,
    pub blocks: Vec<BlockSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub chars: Vec<usize>,
    pub defect: u32,
    pub k: usize,
    pub k0: usize,
    pub l: usize,
    pub principal: bool,
}

impl BlockReport {
    pub fn new(group: impl Into<String>, d: &BlockDecomposition) -> Self {
        BlockReport {
            group: group.into(),
            p: d.p,
            sylow: d.sylow.clone(),
            blocks: d
                .blocks
                .iter()
                .map(|b| BlockSummary {
                    chars: b.chars.clone(),
                    defect: b.defect,
                    k: b.k,
                    k0: b.k0,
                    l: b.l,
                    principal: b.principal,
                })
                .collect(),
        }
    }
}
