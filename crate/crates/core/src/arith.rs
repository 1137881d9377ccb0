//! Small integer and modular helpers shared by the table and block code.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// The `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    p.pow(valuation(n, p))
}

/// Returns `Some(a)` when `n == p^a`.
pub fn p_power_exponent(n: u64, p: u64) -> Option<u32> {
    let a = valuation(n, p);
    (p.pow(a) == n).then_some(a)
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let mut m = n;
    let mut sign = 1;
    for p in prime_factors(n) {
        m /= p;
        if m.is_multiple_of(p) {
            return 0;
        }
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let upper: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&q| q * q != n).collect();
    out.extend(upper);
    out
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Multiplicative order of `a` modulo `m` (`gcd(a, m) = 1`).
pub fn mult_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Smallest prime `l` with `l ≡ 1 (mod n)` and `l > lower`.
pub fn prime_one_mod(n: u64, lower: u64) -> u64 {
    let mut l = (lower / n + 1) * n + 1;
    while !is_prime(l) {
        l += n;
    }
    l
}

/// Primitive `n`-th root of unity in `F_l` (requires `n | l - 1`), derived from the
/// smallest primitive root so the choice is deterministic.
pub fn root_of_unity_mod(n: u64, l: u64) -> u64 {
    debug_assert_eq!((l - 1) % n, 0);
    pow_mod(primitive_root(l), (l - 1) / n, l)
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Rank of a matrix over `F_l` by Gaussian elimination.
pub fn rank_mod(rows: &[Vec<u64>], l: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][col], l);
        for c in col..ncols {
            m[rank][c] = mul_mod(m[rank][c], inv, l);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..ncols {
                    let sub = mul_mod(f, m[rank][c], l);
                    m[r][c] = (m[r][c] + l - sub) % l;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_helpers() {
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(valuation(24, 2), 3);
        assert_eq!(p_part(24, 3), 3);
        assert_eq!(p_power_exponent(27, 3), Some(3));
        assert_eq!(p_power_exponent(12, 2), None);
        assert_eq!(euler_phi(420), 96);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(prime_one_mod(420, 142), 421);
        assert_eq!(prime_one_mod(5, 4), 11);
        let z = root_of_unity_mod(12, 13);
        assert_eq!(mult_order(z, 13), 12);
        assert_eq!(isqrt(24), 4);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 5]], 7), 2);
    }
}
