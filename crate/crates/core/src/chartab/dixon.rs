use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modlin::{char_poly, null_space, rref};
use super::{sort_rows, CharacterTable, ClassInfo};
use crate::arith::{inv_mod, isqrt, is_prime, mul_mod, pow_mod, prime_factors, prime_one_mod, root_of_unity_mod};
use crate::cyclo::fpoly::FpPoly;
use crate::cyclo::Cyclotomic;
use crate::perm::PermGroup;
use crate::{Error, Result};

const ROOT_SEED: u64 = 0xd1c5;
const PRIME_ATTEMPTS: usize = 12;

/// Class-level data extracted from the group once.
struct ClassStructure {
    order: u64,
    exponent: u64,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    inverse: Vec<usize>,
    /// `coeffs[j][i][k] = #{x ∈ K_j : x⁻¹ g_k ∈ K_i}`
    coeffs: Vec<Vec<Vec<u32>>>,
    /// `powers[j][t]` is the class of `g_j^t` for `0 ≤ t < o(g_j)`.
    powers: Vec<Vec<usize>>,
}

fn class_structure(g: &PermGroup) -> Result<ClassStructure> {
    let cd = g.class_data()?;
    let elems = cd.elements();
    let k = cd.len();
    let n = elems.len();
    let inv_idx: Vec<usize> = elems
        .iter()
        .map(|x| elems.index_of(&x.inverse()).expect("inverse lies in the group"))
        .collect();
    let mut coeffs = vec![vec![vec![0u32; k]; k]; k];
    for (kk, class) in cd.classes().iter().enumerate() {
        let gk = &class.representative;
        for x in 0..n {
            let j = cd.class_of_index(x);
            let y = elems.get(inv_idx[x]) * gk;
            let i = cd.class_of_index(elems.index_of(&y).expect("product lies in the group"));
            coeffs[j][i][kk] += 1;
        }
    }
    let mut powers = Vec::with_capacity(k);
    let mut inverse = Vec::with_capacity(k);
    for class in cd.classes() {
        let rep = &class.representative;
        let mut row = Vec::with_capacity(class.element_order as usize);
        let mut acc = g.identity();
        for _ in 0..class.element_order {
            row.push(cd.class_of(&acc).expect("powers lie in the group"));
            acc = &acc * rep;
        }
        inverse.push(cd.class_of(&rep.inverse()).expect("inverse lies in the group"));
        powers.push(row);
    }
    let orders: Vec<u64> = cd.classes().iter().map(|c| c.element_order).collect();
    let exponent = orders.iter().fold(1, |a, &o| crate::arith::lcm(a, o));
    Ok(ClassStructure {
        order: g.order(),
        exponent,
        sizes: cd.classes().iter().map(|c| c.size).collect(),
        orders,
        inverse,
        coeffs,
        powers,
    })
}

/// Character table of `g`, computed exactly.
///
/// Uses the smallest prime `l ≡ 1 (mod N)` above `2√|G|`; if that prime fails to
/// separate the characters, the next such primes are tried in order.
pub fn compute_table(g: &PermGroup, name: &str) -> Result<CharacterTable> {
    let cs = class_structure(g)?;
    let mut l = prime_one_mod(cs.exponent, isqrt(4 * cs.order));
    for _ in 0..PRIME_ATTEMPTS {
        if let Some(rows) = characters_mod(&cs, l) {
            return assemble(&cs, name, rows);
        }
        l = prime_one_mod(cs.exponent, l);
    }
    Err(Error::InvariantViolation(format!(
        "no prime among the first {PRIME_ATTEMPTS} candidates separated the characters"
    )))
}

/// As [`compute_table`], with an explicit prime `l ≡ 1 (mod N)`, `l > 2√|G|`.
pub fn compute_table_with_prime(g: &PermGroup, name: &str, l: u64) -> Result<CharacterTable> {
    let cs = class_structure(g)?;
    if !is_prime(l) || !(l - 1).is_multiple_of(cs.exponent) || l * l <= 4 * cs.order {
        return Err(Error::Domain(format!("{l} is not a usable prime for this group")));
    }
    let rows = characters_mod(&cs, l)
        .ok_or_else(|| Error::Domain(format!("the prime {l} does not separate the characters")))?;
    assemble(&cs, name, rows)
}

fn assemble(cs: &ClassStructure, name: &str, rows: Vec<Vec<Cyclotomic>>) -> Result<CharacterTable> {
    let mut irr = rows;
    sort_rows(&mut irr);
    let primes = prime_factors(cs.exponent);
    let classes = (0..cs.sizes.len())
        .map(|j| ClassInfo {
            size: cs.sizes[j],
            order: cs.orders[j],
            powermaps: primes
                .iter()
                .map(|&p| (p, cs.powers[j][(p % cs.orders[j]) as usize]))
                .collect::<BTreeMap<_, _>>(),
        })
        .collect();
    CharacterTable::new(name, cs.order, cs.exponent as u32, classes, irr)
}

/// Simultaneous eigenvectors of the class matrices over `F_l`, normalised so the
/// identity coordinate is 1. `None` when `l` fails to split the algebra.
fn central_characters_mod(cs: &ClassStructure, l: u64) -> Option<Vec<Vec<u64>>> {
    let k = cs.sizes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SEED);
    let identity: Vec<Vec<u64>> =
        (0..k).map(|i| (0..k).map(|c| u64::from(i == c)).collect()).collect();
    let mut spaces = vec![identity];
    for j in 1..k {
        if spaces.iter().all(|w| w.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let d = w.len();
            let pivots: Vec<usize> =
                w.iter().map(|v| v.iter().position(|&x| x != 0).expect("basis rows are nonzero")).collect();
            let mut r = vec![vec![0u64; d]; d];
            for (col, v) in w.iter().enumerate() {
                for (s, &pc) in pivots.iter().enumerate() {
                    let row = &cs.coeffs[j][pc];
                    let mut acc = 0u64;
                    for (kk, &c) in row.iter().enumerate() {
                        if c != 0 && v[kk] != 0 {
                            acc = (acc + mul_mod(c as u64, v[kk], l)) % l;
                        }
                    }
                    r[s][col] = acc;
                }
            }
            let cp = FpPoly::new(l, char_poly(&r, l));
            let mut found = 0;
            for lambda in cp.roots(&mut rng) {
                let mut m = r.clone();
                for (s, row) in m.iter_mut().enumerate() {
                    row[s] = (row[s] + l - lambda) % l;
                }
                let mut sub: Vec<Vec<u64>> = null_space(&m, l)
                    .iter()
                    .map(|x| {
                        let mut v = vec![0u64; k];
                        for (s, &xs) in x.iter().enumerate() {
                            if xs == 0 {
                                continue;
                            }
                            for (acc, &ws) in v.iter_mut().zip(&w[s]) {
                                *acc = (*acc + mul_mod(xs, ws, l)) % l;
                            }
                        }
                        v
                    })
                    .collect();
                rref(&mut sub, l);
                found += sub.len();
                next.push(sub);
            }
            if found != d {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|w| w.len() != 1) {
        return None;
    }
    spaces
        .into_iter()
        .map(|mut w| {
            let v = w.pop().unwrap();
            (v[0] != 0).then(|| {
                let inv = inv_mod(v[0], l);
                v.iter().map(|&x| mul_mod(x, inv, l)).collect()
            })
        })
        .collect()
}

/// Irreducible characters as exact cyclotomic rows, or `None` if `l` is unusable.
fn characters_mod(cs: &ClassStructure, l: u64) -> Option<Vec<Vec<Cyclotomic>>> {
    let k = cs.sizes.len();
    let n = cs.exponent;
    let z = root_of_unity_mod(n, l);
    let omegas = central_characters_mod(cs, l)?;
    let root = isqrt(cs.order);
    let mut rows = Vec::with_capacity(k);
    for w in omegas {
        let mut s = 0u64;
        for j in 0..k {
            let t = mul_mod(w[j], w[cs.inverse[j]], l);
            s = (s + mul_mod(t, inv_mod(cs.sizes[j] % l, l), l)) % l;
        }
        if s == 0 {
            return None;
        }
        let target = mul_mod(cs.order % l, inv_mod(s, l), l);
        let d = (1..=root).find(|&d| cs.order.is_multiple_of(d) && mul_mod(d, d, l) == target)?;
        let chi: Vec<u64> = (0..k)
            .map(|j| mul_mod(mul_mod(d % l, w[j], l), inv_mod(cs.sizes[j] % l, l), l))
            .collect();
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let o = cs.orders[j];
            let zo = pow_mod(z, n / o, l);
            let zo_inv = inv_mod(zo, l);
            let o_inv = inv_mod(o % l, l);
            let mut sums = vec![0i64; n as usize];
            let mut total = 0u64;
            for s in 0..o {
                let step = pow_mod(zo_inv, s, l);
                let mut acc = 0u64;
                let mut zp = 1u64;
                for t in 0..o as usize {
                    acc = (acc + mul_mod(chi[cs.powers[j][t]], zp, l)) % l;
                    zp = mul_mod(zp, step, l);
                }
                let m = mul_mod(acc, o_inv, l);
                if m > d {
                    return None;
                }
                total += m;
                sums[(s * (n / o)) as usize] = m as i64;
            }
            if total != d {
                return None;
            }
            row.push(Cyclotomic::from_root_sum(n as u32, &sums));
        }
        rows.push(row);
    }
    Some(rows)
}
