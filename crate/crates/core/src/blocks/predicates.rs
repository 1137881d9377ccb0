//! Corpus-wide assertions about block invariants, as pure predicates.

use super::Block;
use crate::perm::{SylowDescriptor, SylowTag};

/// `k(B₀) = 5` forces a Sylow subgroup in `{C5, C7, D8, Q8}`.
pub fn theorem_a_holds(k: usize, sylow: &SylowDescriptor) -> bool {
    k != 5 || matches!(sylow.tag, SylowTag::C5 | SylowTag::C7 | SylowTag::D8 | SylowTag::Q8)
}

/// Principal-block counts 1 to 4: `k = 1` iff `P = 1`, `k = 2` iff `P ≅ C2`,
/// `k = 3` iff `P ≅ C3`, and `k = 4` forces `P ∈ {C2×C2, C4, C5}`.
pub fn small_k_holds(k: usize, sylow: &SylowDescriptor) -> bool {
    let tag = &sylow.tag;
    (k == 1) == (*tag == SylowTag::Trivial)
        && (k == 2) == (*tag == SylowTag::C2)
        && (k == 3) == (*tag == SylowTag::C3)
        && (k != 4 || matches!(tag, SylowTag::C2xC2 | SylowTag::C4 | SylowTag::C5))
}

/// For a 2-block: `2 | |D| ⇒ 2 | k₀`, `4 | |D| ⇒ 4 | k₀`, and `|D| = 2 ⇔ k₀ = 2`.
pub fn divisibility2_holds(b: &Block) -> bool {
    debug_assert_eq!(b.p, 2);
    let d = b.defect;
    (d < 1 || b.k0.is_multiple_of(2)) && (d < 2 || b.k0.is_multiple_of(4)) && ((d == 1) == (b.k0 == 2))
}

/// For a principal 3-block: `3 | |D| ⇒ 3 | k₀` and `|D| = 3 ⇔ k₀ = 3`.
pub fn divisibility3_holds(b: &Block) -> bool {
    debug_assert_eq!(b.p, 3);
    (b.defect < 1 || b.k0.is_multiple_of(3)) && ((b.defect == 1) == (b.k0 == 3))
}

/// Abelian defect group of the principal block forces `k = k₀`.
pub fn height_zero_holds(b: &Block, sylow: &SylowDescriptor) -> bool {
    !sylow.is_abelian() || b.k == b.k0
}

/// `k(B) ≤ |D|`.
pub fn brauer_bound_holds(b: &Block) -> bool {
    b.k as u64 <= b.defect_group_order()
}
