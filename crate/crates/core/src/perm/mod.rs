//! Permutation groups: membership and order through stabilizer chains, and
//! class-level structure (conjugacy classes, centralizers, Sylow subgroups,
//! quotients) through full element enumeration under a configurable bound.

mod chain;
mod classes;
mod permutation;
mod quotient;
mod sylow;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use chain::StabChain;
pub use classes::{
    center, centralizer, centralizer_of_subgroup, conjugacy_classes, is_normal, normalizer,
    p_elements_class_reps, ClassData, ConjClass, PElementClasses,
};
pub use permutation::Permutation;
pub use quotient::{
    coset_action, derived_subgroup, is_p_solvable, is_solvable, normal_closure, normal_subgroups,
    o_p, o_p_prime, Quotient,
};
pub use sylow::{abelian_invariants, classify_sylow, sylow_subgroup, SylowDescriptor, SylowTag};

use crate::{Error, Result};

/// Default limit on `|G|` for operations that enumerate every element.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 100_000;

/// Every element of a group, sorted lexicographically by image list.
#[derive(Debug)]
pub struct Elements {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl Elements {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.list[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.list.iter()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }
}

/// An immutable permutation group with a certified order.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabChain>,
    bound: u64,
    elements: OnceLock<Arc<Elements>>,
    classes: OnceLock<Arc<ClassData>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Group generated by `gens` acting on `degree` points.
pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Input(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        let chain = StabChain::new(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(chain),
            bound: DEFAULT_ENUMERATION_BOUND,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group is always valid")
    }

    /// Same group with a different enumeration bound.
    pub fn with_enumeration_bound(&self, bound: u64) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            bound,
            elements: self.elements.clone(),
            classes: self.classes.clone(),
        }
    }

    pub fn enumeration_bound(&self) -> u64 {
        self.bound
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub(crate) fn check_capacity(&self) -> Result<()> {
        let order = self.order();
        if order > self.bound {
            return Err(Error::Capacity { order, bound: self.bound });
        }
        Ok(())
    }

    /// Every element, sorted; fails when `|G|` exceeds the enumeration bound.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        if let Some(e) = self.elements.get() {
            return Ok(e.clone());
        }
        self.check_capacity()?;
        let mut list = self.chain.elements();
        list.sort_unstable();
        let index = list.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        let e = Arc::new(Elements { list, index });
        Ok(self.elements.get_or_init(|| e).clone())
    }

    /// Subgroup generated by `gens` (which must act on the same points).
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        Ok(PermGroup::new(self.degree, gens)?.with_enumeration_bound(self.bound))
    }

    /// Subgroup generated by the given elements, keeping only the elements that
    /// enlarge the group seen so far as generators.
    pub fn subgroup_from_elements<'a, I>(&self, elems: I) -> PermGroup
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut gens = Vec::new();
        for g in elems {
            if !chain.contains(g) {
                chain.extend(g);
                gens.push(g.clone());
            }
        }
        PermGroup {
            degree: self.degree,
            generators: gens,
            chain: Arc::new(chain),
            bound: self.bound,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    /// Exponent: least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let cd = self.class_data()?;
        Ok(cd.classes().iter().fold(1, |acc, c| crate::arith::lcm(acc, c.element_order)))
    }
}
