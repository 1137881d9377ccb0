use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{divisors, euler_phi};

/// Precomputed data for `Q(ζ_n)`: the cyclotomic polynomial and the reduced
/// power-basis image of every `ζ^j`, `0 <= j < n`.
#[derive(Debug)]
pub struct CycloField {
    pub(crate) n: u32,
    pub(crate) phi: usize,
    /// `Φ_n`, monic, lowest degree first.
    pub(crate) poly: Vec<i64>,
    pub(crate) powers: Vec<Vec<i64>>,
}

impl CycloField {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// Power-basis coordinates of `ζ^j` (any `j`, reduced mod `n`).
    pub fn power(&self, j: u64) -> &[i64] {
        &self.powers[(j % self.n as u64) as usize]
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<CycloField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared field data for conductor `n` (`n >= 1`).
pub fn field(n: u32) -> Arc<CycloField> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(f) = cache().lock().unwrap().get(&n) {
        return f.clone();
    }
    let poly = cyclotomic_poly(n);
    let f = Arc::new(build(n, poly));
    cache().lock().unwrap().entry(n).or_insert(f).clone()
}

/// `Φ_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let den = field(d as u32).poly.clone();
        num = exact_div(&num, &den);
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i];
        quot[i - dd] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i - dd + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn build(n: u32, poly: Vec<i64>) -> CycloField {
    let phi = euler_phi(n as u64) as usize;
    debug_assert_eq!(poly.len(), phi + 1);
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce the overflow coefficient with Φ_n
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..phi - 1]);
        if top != 0 {
            for (i, c) in next.iter_mut().enumerate() {
                *c -= top * poly[i];
            }
        }
        cur = next;
    }
    CycloField { n, phi, poly, powers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn power_table_wraps() {
        let f = field(6);
        assert_eq!(f.power(3), &[-1, 0]);
        assert_eq!(f.power(6), &[1, 0]);
        assert_eq!(f.power(5), &[1, -1]);
    }
}
