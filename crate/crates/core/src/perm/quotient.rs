use std::collections::BTreeMap;
use std::sync::Arc;

use super::{is_normal, Elements, PermGroup, Permutation};
use crate::arith::{gcd, is_prime, p_power_exponent};
use crate::{Error, Result};

/// `G/N` realised as a permutation group on the cosets of `N`.
///
/// When `N` is trivial the quotient is `G` itself on its original points, so
/// quotients by the trivial subgroup never pay for a regular representation.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    kernel_order: u64,
    source: Option<Arc<Elements>>,
    coset_of: Vec<u32>,
    reps: Vec<Permutation>,
}

impl Quotient {
    pub fn kernel_order(&self) -> u64 {
        self.kernel_order
    }

    /// Number of cosets (the degree of the action unless `N` is trivial).
    pub fn index(&self) -> usize {
        match self.source {
            None => self.group.order() as usize,
            Some(_) => self.reps.len(),
        }
    }

    /// Coset containing `x`, numbered by smallest member.
    pub fn coset_index(&self, x: &Permutation) -> Option<usize> {
        let src = self.source.as_ref()?;
        src.index_of(x).map(|i| self.coset_of[i] as usize)
    }

    /// Image of `x ∈ G` in the quotient.
    pub fn image(&self, x: &Permutation) -> Result<Permutation> {
        let Some(src) = &self.source else {
            if !self.group.contains(x) {
                return Err(Error::Membership(x.to_string()));
            }
            return Ok(x.clone());
        };
        if src.index_of(x).is_none() {
            return Err(Error::Membership(x.to_string()));
        }
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| {
                let y = r * x;
                self.coset_of[src.index_of(&y).expect("closed under multiplication")]
            })
            .collect();
        Permutation::from_images(&images)
    }
}

/// The action of `G` on the cosets of a normal subgroup `N`.
pub fn coset_action(g: &PermGroup, n: &PermGroup) -> Result<Quotient> {
    if !is_normal(g, n)? {
        return Err(Error::Domain("coset action needs a normal subgroup".into()));
    }
    if n.is_trivial() {
        return Ok(Quotient {
            group: g.clone(),
            kernel_order: 1,
            source: None,
            coset_of: Vec::new(),
            reps: Vec::new(),
        });
    }
    let elems = g.elements()?;
    let n_elems = n.elements()?;
    let mut coset_of = vec![u32::MAX; elems.len()];
    let mut reps = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        for m in n_elems.iter() {
            let j = elems.index_of(&(m * x)).expect("N is contained in G");
            coset_of[j] = c;
        }
        reps.push(x.clone());
    }
    let mut q = Quotient {
        group: PermGroup::trivial(reps.len()),
        kernel_order: n.order(),
        source: Some(elems),
        coset_of,
        reps,
    };
    let gens = g
        .generators()
        .iter()
        .map(|s| q.image(s))
        .collect::<Result<Vec<_>>>()?;
    q.group = PermGroup::new(q.reps.len(), gens)?.with_enumeration_bound(g.enumeration_bound());
    if q.group.order() * n.order() != g.order() {
        return Err(Error::InvariantViolation("coset action has the wrong order".into()));
    }
    Ok(q)
}

/// Smallest normal subgroup of `G` containing `H`.
pub fn normal_closure(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Domain("normal closure of a non-subgroup".into()));
    }
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    let mut closure = g.subgroup_from_elements(gens.iter());
    let mut i = 0;
    while i < gens.len() {
        for t in g.generators() {
            let c = gens[i].conjugate_by(t);
            if !closure.contains(&c) {
                gens.push(c);
                closure = g.subgroup_from_elements(gens.iter());
            }
        }
        i += 1;
    }
    Ok(closure)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = &(&a.inverse() * &b.inverse()) * &(a * b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &g.subgroup(comms)?)
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    let mut h = g.clone();
    loop {
        if h.is_trivial() {
            return Ok(true);
        }
        let d = derived_subgroup(&h)?;
        if d.order() == h.order() {
            return Ok(false);
        }
        h = d;
    }
}

fn class_mask(g: &PermGroup, h: &PermGroup) -> Result<Vec<bool>> {
    let cd = g.class_data()?;
    Ok(cd.classes().iter().map(|c| h.contains(&c.representative)).collect())
}

/// Normal closures of the class representatives, in class order.
fn class_closures(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let cd = g.class_data()?;
    cd.classes()
        .iter()
        .map(|c| normal_closure(g, &g.subgroup(vec![c.representative.clone()])?))
        .collect()
}

fn join(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> PermGroup {
    g.subgroup_from_elements(a.generators().iter().chain(b.generators()))
}

/// Every normal subgroup, ordered by `(order, class membership)`.
///
/// Normal subgroups are unions of classes, and each one is the join of the
/// normal closures of its classes, so closing the class closures under joins
/// finds them all.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let closures = class_closures(g)?;
    let mut found: BTreeMap<(u64, Vec<bool>), PermGroup> = BTreeMap::new();
    let trivial = g.subgroup(Vec::new())?;
    let mut queue = vec![trivial.clone()];
    found.insert((1, class_mask(g, &trivial)?), trivial);
    while let Some(n) = queue.pop() {
        for c in &closures {
            if c.is_subgroup_of(&n) {
                continue;
            }
            let j = join(g, &n, c);
            let key = (j.order(), class_mask(g, &j)?);
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
                e.insert(j.clone());
                queue.push(j);
            }
        }
    }
    Ok(found.into_values().collect())
}

fn join_of_closures<F>(g: &PermGroup, keep: F) -> Result<PermGroup>
where
    F: Fn(u64) -> bool,
{
    let mut acc = g.subgroup(Vec::new())?;
    for c in class_closures(g)? {
        if keep(c.order()) && !c.is_subgroup_of(&acc) {
            acc = join(g, &acc, &c);
        }
    }
    Ok(acc)
}

/// Largest normal `p`-subgroup.
pub fn o_p(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    join_of_closures(g, |order| p_power_exponent(order, p).is_some())
}

/// Largest normal subgroup of order prime to `p`.
pub fn o_p_prime(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    join_of_closures(g, |order| gcd(order, p) == 1)
}

/// Whether every composition factor is a `p`-group or a `p'`-group.
pub fn is_p_solvable(g: &PermGroup, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if !g.order().is_multiple_of(p) || is_solvable(g)? {
        return Ok(true);
    }
    let mut h = g.clone();
    loop {
        if h.is_trivial() {
            return Ok(true);
        }
        let mut n = o_p_prime(&h, p)?;
        if n.is_trivial() {
            n = o_p(&h, p)?;
        }
        if n.is_trivial() {
            return Ok(false);
        }
        h = coset_action(&h, &n)?.group;
    }
}
