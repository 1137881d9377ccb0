use std::sync::Arc;

use super::{Elements, PermGroup, Permutation};
use crate::arith::{is_prime, p_power_exponent};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Lexicographically smallest element of the class.
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    pub class_index: usize,
}

/// Canonically ordered classes plus the class index of every element.
#[derive(Debug)]
pub struct ClassData {
    classes: Vec<ConjClass>,
    // indexed like Elements
    class_of: Vec<u32>,
    elements: Arc<Elements>,
}

impl ClassData {
    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.class_of[i] as usize)
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    /// Element indices of class `c`.
    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of.iter().enumerate().filter(move |(_, &k)| k as usize == c).map(|(i, _)| i)
    }
}

impl PermGroup {
    /// Conjugacy classes in canonical order: identity first, then ascending
    /// `(element order, class size, representative)`.
    pub fn class_data(&self) -> Result<Arc<ClassData>> {
        if let Some(c) = self.classes.get() {
            return Ok(c.clone());
        }
        let elements = self.elements()?;
        let n = elements.len();
        let gens: Vec<&Permutation> = self.generators.iter().filter(|g| !g.is_identity()).collect();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw: Vec<(usize, Vec<usize>)> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start];
            let mut idx = 0;
            while idx < orbit.len() {
                let x = elements.get(orbit[idx]);
                for g in &gens {
                    let y = x.conjugate_by(g);
                    let j = elements.index_of(&y).expect("conjugate lies in the group");
                    if raw_class[j] == u32::MAX {
                        raw_class[j] = id;
                        orbit.push(j);
                    }
                }
                idx += 1;
            }
            raw.push((start, orbit));
        }
        // the first element visited is the smallest of its class
        let mut order: Vec<usize> = (0..raw.len()).collect();
        let keys: Vec<(u64, u64, usize)> = raw
            .iter()
            .map(|(rep, orbit)| (elements.get(*rep).order(), orbit.len() as u64, *rep))
            .collect();
        order.sort_by_key(|&i| keys[i]);
        let mut remap = vec![0u32; raw.len()];
        let mut classes = Vec::with_capacity(raw.len());
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
            let (ord, size, rep) = keys[old];
            classes.push(ConjClass {
                representative: elements.get(rep).clone(),
                size,
                element_order: ord,
                class_index: new,
            });
        }
        let class_of = raw_class.iter().map(|&c| remap[c as usize]).collect();
        let data = Arc::new(ClassData { classes, class_of, elements });
        Ok(self.classes.get_or_init(|| data).clone())
    }

    /// Elements of the group satisfying `pred`, as a subgroup (the predicate must
    /// cut out a subgroup).
    pub(crate) fn filter_subgroup<F>(&self, pred: F) -> Result<PermGroup>
    where
        F: Fn(&Permutation) -> bool,
    {
        let elements = self.elements()?;
        Ok(self.subgroup_from_elements(elements.iter().filter(|g| pred(g))))
    }
}

pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjClass>> {
    Ok(g.class_data()?.classes().to_vec())
}

/// `C_G(x)`.
pub fn centralizer(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !g.contains(x) {
        return Err(Error::Membership(x.to_string()));
    }
    g.filter_subgroup(|y| y.commutes_with(x))
}

/// `C_G(H)` for a subgroup `H` given by generators.
pub fn centralizer_of_subgroup(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    g.filter_subgroup(|y| h.generators().iter().all(|s| y.commutes_with(s)))
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    centralizer_of_subgroup(g, g)
}

/// `N_G(H)`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Domain("normalizer of a non-subgroup".into()));
    }
    g.filter_subgroup(|y| h.generators().iter().all(|s| h.contains(&s.conjugate_by(y))))
}

/// Whether `N` is a normal subgroup of `G`; a domain error if `N ⊄ G`.
pub fn is_normal(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    if !n.is_subgroup_of(g) {
        return Err(Error::Domain("not a subgroup".into()));
    }
    Ok(n
        .generators()
        .iter()
        .all(|s| g.generators().iter().all(|t| n.contains(&s.conjugate_by(t)))))
}

/// Classes of nontrivial `p`-elements, split by whether they are central.
#[derive(Clone, Debug)]
pub struct PElementClasses {
    pub central: Vec<ConjClass>,
    pub non_central: Vec<ConjClass>,
}

pub fn p_elements_class_reps(g: &PermGroup, p: u64) -> Result<PElementClasses> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let mut out = PElementClasses { central: Vec::new(), non_central: Vec::new() };
    for c in g.class_data()?.classes() {
        if c.element_order == 1 || p_power_exponent(c.element_order, p).is_none() {
            continue;
        }
        if c.size == 1 {
            out.central.push(c.clone());
        } else {
            out.non_central.push(c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::group_from_generators;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> PermGroup {
        group_from_generators(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    fn s3() -> PermGroup {
        group_from_generators(3, vec![perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn canonical_order_of_s4_classes() {
        let cls = conjugacy_classes(&s4()).unwrap();
        let shape: Vec<(u64, u64)> = cls.iter().map(|c| (c.element_order, c.size)).collect();
        assert_eq!(shape, vec![(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]);
        assert!(cls[0].representative.is_identity());
    }

    #[test]
    fn centralizer_examples() {
        let g = s3();
        let c = centralizer(&g, &perm(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(centralizer(&g, &g.identity()).unwrap().order(), 6);
        let outside = perm(4, &[&[0, 1]]);
        assert!(matches!(centralizer(&g, &outside), Err(Error::Membership(_))));
    }

    #[test]
    fn center_of_s4_is_trivial() {
        assert_eq!(center(&s4()).unwrap().order(), 1);
    }

    #[test]
    fn normality() {
        let g = s4();
        let a4 = g.subgroup(vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
        assert!(is_normal(&g, &a4).unwrap());
        let s3 = g.subgroup(vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2]])]).unwrap();
        assert!(!is_normal(&g, &s3).unwrap());
        let foreign = g.subgroup(vec![]).unwrap();
        assert!(is_normal(&g, &foreign).unwrap());
    }
}
