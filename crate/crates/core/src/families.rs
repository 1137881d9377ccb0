//! Constructors for the standard families of small groups used by the corpus.

use crate::arith::{gcd, is_prime, pow_mod, primitive_root};
use crate::perm::{coset_action, PermGroup, Permutation};
use crate::{Error, Result};

fn build(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("constructed generators share a degree")
}

fn from_images(images: Vec<usize>) -> Permutation {
    Permutation::from_images(&images).expect("constructed maps are bijections")
}

pub fn cyclic(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    build(n, vec![from_images((0..n).map(|i| (i + 1) % n).collect())])
}

/// Dihedral group of order `2n`, acting on the `n` vertices of a polygon
/// (`n ≥ 3`); orders 2 and 4 fall back to `C2` and `C2 × C2`.
pub fn dihedral(n: usize) -> PermGroup {
    match n {
        0 | 1 => cyclic(2),
        2 => direct_product(&cyclic(2), &cyclic(2)),
        _ => build(
            n,
            vec![
                from_images((0..n).map(|i| (i + 1) % n).collect()),
                from_images((0..n).map(|i| (n - i) % n).collect()),
            ],
        ),
    }
}

pub fn symmetric(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    if n == 2 {
        return cyclic(2);
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    build(n, vec![from_images(swap), from_images((0..n).map(|i| (i + 1) % n).collect())])
}

pub fn alternating(n: usize) -> PermGroup {
    if n <= 2 {
        return PermGroup::trivial(n.max(1));
    }
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).expect("valid 3-cycle"))
        .collect();
    build(n, gens)
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut im: Vec<usize> = g.images().iter().map(|&x| x as usize).collect();
        im.extend(da..da + db);
        gens.push(from_images(im));
    }
    for g in b.generators() {
        let mut im: Vec<usize> = (0..da).collect();
        im.extend(g.images().iter().map(|&x| x as usize + da));
        gens.push(from_images(im));
    }
    build(da + db, gens)
}

/// Right regular representation of the group on `0..order` with multiplication
/// `mul`, generated by the listed elements.
pub fn regular_from_rule<F>(order: usize, gens: &[usize], mul: F) -> Result<PermGroup>
where
    F: Fn(usize, usize) -> usize,
{
    let perms = gens
        .iter()
        .map(|&s| Permutation::from_images(&(0..order).map(|x| mul(x, s)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(order.max(1), perms)?;
    if g.order() != order as u64 {
        return Err(Error::Input(format!("rule generates a group of order {} not {order}", g.order())));
    }
    Ok(g)
}

/// `C_m ⋊ C_n = ⟨a, b | a^m = b^n = 1, b a b⁻¹ = a^r⟩` in its regular representation.
pub fn metacyclic(m: usize, n: usize, r: usize) -> Result<PermGroup> {
    if pow_mod(r as u64, n as u64, m as u64) != 1 % m as u64 || gcd(r as u64, m as u64) != 1 {
        return Err(Error::Domain(format!("{r} does not define an action of C{n} on C{m}")));
    }
    // element a^i b^j is i + m·j; b^j a^k = a^{k r^j} b^j
    let rule = move |x: usize, y: usize| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let twist = pow_mod(r as u64, j as u64, m as u64) as usize;
        (i + k * twist) % m + m * ((j + l) % n)
    };
    let gens: Vec<usize> = [1 % m, m % (m * n)].into_iter().filter(|&x| x != 0).collect();
    regular_from_rule(m * n, &gens, rule)
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n} = 1, x² = a^n, x a x⁻¹ = a⁻¹⟩`.
/// `n = 2` gives `Q8`.
pub fn dicyclic(n: usize) -> Result<PermGroup> {
    let m = 2 * n;
    // element a^i x^e is i + m·e
    let rule = move |p: usize, q: usize| {
        let (i, e) = (p % m, p / m);
        let (k, f) = (q % m, q / m);
        let k = if e == 1 { (m - k) % m } else { k };
        let mut i = (i + k) % m;
        if e + f == 2 {
            i = (i + n) % m;
        }
        i + m * ((e + f) % 2)
    };
    regular_from_rule(4 * n, &[1, m], rule)
}

pub fn quaternion() -> PermGroup {
    dicyclic(2).expect("Q8 rule is valid")
}

/// Dihedral group of order 8 in its regular representation on 8 points.
pub fn d8_regular() -> PermGroup {
    metacyclic(4, 2, 3).expect("D8 rule is valid")
}

/// Heisenberg group of order `p³` (exponent `p` for odd `p`).
pub fn heisenberg(p: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let enc = move |a: usize, b: usize, c: usize| a + p * b + p * p * c;
    let rule = move |x: usize, y: usize| {
        let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
        let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
        enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
    };
    regular_from_rule(p * p * p, &[enc(1, 0, 0), enc(0, 1, 0)], rule)
}

/// `A × B / ⟨(z_A, z_B)⟩` for central involutions `z_A`, `z_B`, acting on cosets.
pub fn central_product(
    a: &PermGroup,
    za: &Permutation,
    b: &PermGroup,
    zb: &Permutation,
) -> Result<PermGroup> {
    let ab = direct_product(a, b);
    let mut im: Vec<u32> = za.images().to_vec();
    im.extend(zb.images().iter().map(|&x| x + a.degree() as u32));
    let z = Permutation::from_images(&im)?;
    let n = ab.subgroup(vec![z])?;
    Ok(coset_action(&ab, &n)?.group)
}

/// Extraspecial 2-groups of order 32: `D8 ∘ D8` (`plus = true`) or `D8 ∘ Q8`.
pub fn extraspecial_32(plus: bool) -> Result<PermGroup> {
    let d8 = dihedral(4);
    let zd = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?;
    if plus {
        central_product(&d8, &zd, &d8, &zd)
    } else {
        let q8 = quaternion();
        let zq = crate::perm::center(&q8)?
            .generators()
            .first()
            .cloned()
            .ok_or_else(|| Error::InvariantViolation("Q8 has a central involution".into()))?;
        central_product(&d8, &zd, &q8, &zq)
    }
}

/// Frobenius group `C_p ⋊ C_d` acting on `F_p` by `x ↦ a x + b`, `d | p − 1`.
pub fn affine(p: usize, d: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) || !(p - 1).is_multiple_of(d) {
        return Err(Error::Domain(format!("C{d} does not act on F_{p}")));
    }
    let a = pow_mod(primitive_root(p as u64), ((p - 1) / d) as u64, p as u64) as usize;
    let mut gens = vec![from_images((0..p).map(|x| (x + 1) % p).collect())];
    if d > 1 {
        gens.push(from_images((0..p).map(|x| x * a % p).collect()));
    }
    Ok(build(p, gens))
}

/// Finite field of order `p^e`, elements encoded as base-`p` digit strings.
struct SmallField {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    primitive: usize,
}

impl SmallField {
    /// `modulus` is monic of degree `e`, coefficients low to high, leading term
    /// omitted.
    fn new(p: usize, e: usize, modulus: &[usize]) -> Self {
        let q = p.pow(e as u32);
        let digits = |x: usize| -> Vec<usize> { (0..e).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let encode = |v: &[usize]| -> usize { v.iter().enumerate().map(|(i, &c)| c * p.pow(i as u32)).sum() };
        let mut add = vec![vec![0; q]; q];
        let mut mul = vec![vec![0; q]; q];
        for x in 0..q {
            for y in 0..q {
                let (a, b) = (digits(x), digits(y));
                let s: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
                add[x][y] = encode(&s);
                let mut prod = vec![0usize; 2 * e];
                for i in 0..e {
                    for j in 0..e {
                        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                    }
                }
                for i in (e..2 * e - 1).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    // x^e = −Σ modulus[k] x^k
                    for (k, &m) in modulus.iter().enumerate() {
                        prod[i - e + k] = (prod[i - e + k] + (p - m % p) * c) % p;
                    }
                }
                mul[x][y] = encode(&prod[..e]);
            }
        }
        let order_of = |x: usize| {
            let mut acc = x;
            let mut k = 1;
            while acc != 1 {
                acc = mul[acc][x];
                k += 1;
            }
            k
        };
        let primitive = (2..q).find(|&x| order_of(x) == q - 1).unwrap_or(1);
        SmallField { q, add, mul, primitive }
    }

    fn neg(&self, x: usize) -> usize {
        (0..self.q).find(|&y| self.add[x][y] == 0).unwrap()
    }

    fn inv(&self, x: usize) -> usize {
        (1..self.q).find(|&y| self.mul[x][y] == 1).unwrap()
    }

    fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, _| self.mul[acc][x])
    }

    /// `x ↦ (a x + b)/(c x + d)` on the projective line, `∞` encoded as `q`.
    fn mobius(&self, [a, b, c, d]: [usize; 4]) -> Permutation {
        let q = self.q;
        let images = (0..=q)
            .map(|x| {
                let (num, den) = if x == q {
                    (a, c)
                } else {
                    (self.add[self.mul[a][x]][b], self.add[self.mul[c][x]][d])
                };
                if den == 0 {
                    q
                } else {
                    self.mul[num][self.inv(den)]
                }
            })
            .collect();
        from_images(images)
    }
}

fn field_for(q: usize) -> Result<SmallField> {
    Ok(match q {
        2 | 3 | 5 | 7 | 11 | 13 => SmallField::new(q, 1, &[0]),
        4 => SmallField::new(2, 2, &[1, 1]),
        8 => SmallField::new(2, 3, &[1, 1, 0]),
        9 => SmallField::new(3, 2, &[1, 0]),
        _ => return Err(Error::Domain(format!("no field of order {q} in the table"))),
    })
}

/// `PSL(2, q)` acting on the `q + 1` points of the projective line.
pub fn psl2(q: usize) -> Result<PermGroup> {
    let f = field_for(q)?;
    let w = f.primitive;
    let one = 1;
    let gens = vec![
        f.mobius([one, one, 0, one]),
        f.mobius([one, w, 0, one]),
        f.mobius([f.pow(w, 2), 0, 0, one]),
        f.mobius([0, f.neg(one), one, 0]),
    ];
    Ok(build(q + 1, gens))
}

/// `PGL(2, q)` on the projective line.
pub fn pgl2(q: usize) -> Result<PermGroup> {
    let f = field_for(q)?;
    let w = f.primitive;
    let gens = vec![f.mobius([1, 1, 0, 1]), f.mobius([1, w, 0, 1]), f.mobius([w, 0, 0, 1]), f.mobius([0, 1, 1, 0])];
    Ok(build(q + 1, gens))
}

/// `GL(3, 2)` acting on the seven nonzero vectors of `F_2^3`.
pub fn psl3_2() -> PermGroup {
    let apply = |m: [[usize; 3]; 3]| {
        let images = (1..8usize)
            .map(|v| {
                let bits = [v & 1, (v >> 1) & 1, (v >> 2) & 1];
                let out: usize = (0..3).map(|r| ((m[r][0] * bits[0] + m[r][1] * bits[1] + m[r][2] * bits[2]) % 2) << r).sum();
                out - 1
            })
            .collect();
        from_images(images)
    };
    build(7, vec![apply([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), apply([[0, 0, 1], [1, 0, 0], [0, 1, 0]])])
}

/// `SL(2, 3)` acting on the eight nonzero vectors of `F_3^2`.
pub fn sl2_3() -> PermGroup {
    let vecs: Vec<(usize, usize)> = (0..9).map(|v| (v % 3, v / 3)).filter(|&v| v != (0, 0)).collect();
    let apply = |m: [[usize; 2]; 2]| {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                let img = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vecs.iter().position(|&v| v == img).unwrap()
            })
            .collect();
        from_images(images)
    };
    build(8, vec![apply([[1, 1], [0, 1]]), apply([[1, 0], [1, 1]])])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(dihedral(7).order(), 14);
        assert_eq!(dihedral(2).order(), 4);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(dicyclic(3).unwrap().order(), 12);
        assert_eq!(metacyclic(7, 3, 2).unwrap().order(), 21);
        assert!(metacyclic(7, 3, 3).is_err());
        assert_eq!(heisenberg(3).unwrap().order(), 27);
        assert_eq!(affine(5, 4).unwrap().order(), 20);
        assert_eq!(sl2_3().order(), 24);
        assert_eq!(psl3_2().order(), 168);
        assert_eq!(extraspecial_32(true).unwrap().order(), 32);
        assert_eq!(extraspecial_32(false).unwrap().order(), 32);
    }

    #[test]
    fn projective_groups() {
        for (q, order) in [(4, 60), (5, 60), (7, 168), (8, 504), (9, 360), (11, 660)] {
            assert_eq!(psl2(q).unwrap().order(), order, "PSL(2,{q})");
        }
        assert_eq!(pgl2(7).unwrap().order(), 336);
    }
}
