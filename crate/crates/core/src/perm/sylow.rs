use std::fmt;

use serde::{Deserialize, Serialize};

use super::{center, PermGroup};
use crate::arith::{is_prime, lcm, p_part, p_power_exponent, prime_factors};
use crate::{Error, Result};

/// Isomorphism type of a Sylow (or defect) group: exact up to order 8, structural
/// invariants above that.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum SylowTag {
    Trivial,
    C2,
    C3,
    C4,
    #[serde(rename = "C2xC2")]
    C2xC2,
    C5,
    C7,
    C8,
    #[serde(rename = "C4xC2")]
    C4xC2,
    #[serde(rename = "C2xC2xC2")]
    C2xC2xC2,
    D8,
    Q8,
    /// Cyclic of order greater than 8.
    CyclicLarge,
    AbelianLarge { invariants: Vec<u64> },
    NonabelianLarge { order: u64, exponent: u64, center_order: u64, involutions: u64 },
}

impl fmt::Display for SylowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SylowTag::C2xC2 => write!(f, "C2xC2"),
            SylowTag::C4xC2 => write!(f, "C4xC2"),
            SylowTag::C2xC2xC2 => write!(f, "C2xC2xC2"),
            SylowTag::AbelianLarge { invariants } => {
                let parts: Vec<String> = invariants.iter().map(u64::to_string).collect();
                write!(f, "AbelianLarge({})", parts.join(","))
            }
            SylowTag::NonabelianLarge { order, exponent, center_order, involutions } => write!(
                f,
                "NonabelianLarge(order={order},exp={exponent},center={center_order},inv={involutions})"
            ),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowDescriptor {
    pub p: u64,
    pub order: u64,
    #[serde(flatten)]
    pub tag: SylowTag,
}

impl SylowDescriptor {
    pub fn is_cyclic(&self) -> bool {
        matches!(
            self.tag,
            SylowTag::Trivial
                | SylowTag::C2
                | SylowTag::C3
                | SylowTag::C4
                | SylowTag::C5
                | SylowTag::C7
                | SylowTag::C8
                | SylowTag::CyclicLarge
        )
    }

    pub fn is_abelian(&self) -> bool {
        !matches!(self.tag, SylowTag::D8 | SylowTag::Q8 | SylowTag::NonabelianLarge { .. })
    }
}

/// A Sylow `p`-subgroup, grown one step of order `p` at a time inside normalizers.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let target = p_part(g.order(), p);
    let mut q = g.subgroup(Vec::new())?;
    if target == 1 {
        return Ok(q);
    }
    let elements = g.elements()?;
    while q.order() < target {
        let gens = q.generators().to_vec();
        let x = elements
            .iter()
            .find(|x| {
                !q.contains(x)
                    && q.contains(&x.pow(p as i64))
                    && gens.iter().all(|s| q.contains(&s.conjugate_by(x)))
            })
            .ok_or_else(|| Error::InvariantViolation("normalizer ascent stalled".into()))?;
        let mut next = gens;
        next.push(x.clone());
        q = g.subgroup_from_elements(next.iter());
    }
    Ok(q)
}

/// Abelian invariants as ascending prime powers (empty for the trivial group).
pub fn abelian_invariants(g: &PermGroup) -> Result<Vec<u64>> {
    if !g.is_abelian() {
        return Err(Error::Domain("group is not abelian".into()));
    }
    let classes = g.class_data()?;
    let orders: Vec<u64> = classes.classes().iter().map(|c| c.element_order).collect();
    let mut out = Vec::new();
    for q in prime_factors(g.order()) {
        // s[i] = log_q #{x : x^(q^i) = 1}
        let top = p_power_exponent(p_part(g.order(), q), q).unwrap();
        let mut s = vec![0u32];
        for i in 1..=top {
            let qi = q.pow(i);
            let count = orders.iter().filter(|&&o| qi % o == 0 && p_part(o, q) == o).count() as u64;
            s.push(p_power_exponent(count, q).expect("Ω_i of an abelian group is a q-group"));
        }
        // r[i] = number of cyclic factors of order >= q^i
        let r: Vec<u32> = (1..=top as usize).map(|i| s[i] - s[i - 1]).collect();
        for i in 1..=top as usize {
            let at_least = r[i - 1];
            let more = r.get(i).copied().unwrap_or(0);
            for _ in 0..(at_least - more) {
                out.push(q.pow(i as u32));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn classify_sylow(pg: &PermGroup, p: u64) -> Result<SylowDescriptor> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let order = pg.order();
    if p_power_exponent(order, p).is_none() {
        return Err(Error::Domain(format!("group of order {order} is not a {p}-group")));
    }
    let classes = pg.class_data()?;
    let exponent = classes.classes().iter().fold(1, |acc, c| lcm(acc, c.element_order));
    let involutions: u64 =
        classes.classes().iter().filter(|c| c.element_order == 2).map(|c| c.size).sum();
    let abelian = pg.is_abelian();
    let tag = if order == 1 {
        SylowTag::Trivial
    } else if abelian && exponent == order {
        match order {
            2 => SylowTag::C2,
            3 => SylowTag::C3,
            4 => SylowTag::C4,
            5 => SylowTag::C5,
            7 => SylowTag::C7,
            8 => SylowTag::C8,
            _ => SylowTag::CyclicLarge,
        }
    } else if abelian {
        let invariants = abelian_invariants(pg)?;
        match invariants.as_slice() {
            [2, 2] => SylowTag::C2xC2,
            [2, 4] => SylowTag::C4xC2,
            [2, 2, 2] => SylowTag::C2xC2xC2,
            _ => SylowTag::AbelianLarge { invariants },
        }
    } else if order == 8 && involutions == 1 {
        SylowTag::Q8
    } else if order == 8 && involutions == 5 {
        SylowTag::D8
    } else {
        SylowTag::NonabelianLarge {
            order,
            exponent,
            center_order: center(pg)?.order(),
            involutions,
        }
    };
    Ok(SylowDescriptor { p, order, tag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{group_from_generators, Permutation};

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> PermGroup {
        group_from_generators(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    #[test]
    fn sylow_of_s4() {
        let g = s4();
        let p2 = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(p2.order(), 8);
        assert!(p2.is_subgroup_of(&g));
        assert_eq!(classify_sylow(&p2, 2).unwrap().tag, SylowTag::D8);
        assert_eq!(sylow_subgroup(&g, 5).unwrap().order(), 1);
        assert_eq!(classify_sylow(&sylow_subgroup(&g, 3).unwrap(), 3).unwrap().tag, SylowTag::C3);
    }

    #[test]
    fn classify_small_groups() {
        let c7 = group_from_generators(7, vec![perm(7, &[&[0, 1, 2, 3, 4, 5, 6]])]).unwrap();
        assert_eq!(classify_sylow(&c7, 7).unwrap().tag, SylowTag::C7);
        let v4 = group_from_generators(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])])
            .unwrap();
        assert_eq!(classify_sylow(&v4, 2).unwrap().tag, SylowTag::C2xC2);
        assert!(matches!(classify_sylow(&s4(), 2), Err(Error::Domain(_))));
        let c9 = group_from_generators(9, vec![perm(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]).unwrap();
        assert_eq!(classify_sylow(&c9, 3).unwrap().tag, SylowTag::CyclicLarge);
    }

    #[test]
    fn abelian_invariant_examples() {
        let g = group_from_generators(
            6,
            vec![perm(6, &[&[0, 1, 2, 3]]), perm(6, &[&[4, 5]])],
        )
        .unwrap();
        assert_eq!(abelian_invariants(&g).unwrap(), vec![2, 4]);
        assert!(abelian_invariants(&s4()).is_err());
    }

    #[test]
    fn descriptor_json_is_flat() {
        let d = SylowDescriptor { p: 2, order: 8, tag: SylowTag::D8 };
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"p":2,"order":8,"tag":"D8"}"#);
        let d = SylowDescriptor { p: 3, order: 9, tag: SylowTag::AbelianLarge { invariants: vec![3, 3] } };
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"p":3,"order":9,"tag":"AbelianLarge","invariants":[3,3]}"#
        );
    }
}
