//! Dense linear algebra over `F_l` for eigenspace splitting.

use crate::arith::{inv_mod, mul_mod};

fn sub_mod(a: u64, b: u64, l: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + l - b
    }
}

/// Reduced row echelon form in place; returns the pivot column of each nonzero row
/// (zero rows are dropped).
pub(crate) fn rref(m: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
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
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for c in col..ncols {
                    row[c] = sub_mod(row[c], mul_mod(f, pivot_row[c], l), l);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    pivots
}

/// Basis of `{x : M x = 0}` for a square matrix `M`.
pub(crate) fn null_space(m: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut r = m.to_vec();
    let pivots = rref(&mut r, l);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = sub_mod(0, row[free], l);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(xI − M)`, coefficients low to high, through a
/// similarity reduction to upper Hessenberg form.
pub(crate) fn char_poly(m: &[Vec<u64>], l: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for k in 1..n.saturating_sub(1) {
        let Some(piv) = (k..n).find(|&i| h[i][k - 1] != 0) else {
            continue;
        };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let inv = inv_mod(h[k][k - 1], l);
        for r in k + 1..n {
            if h[r][k - 1] == 0 {
                continue;
            }
            let u = mul_mod(h[r][k - 1], inv, l);
            for c in 0..n {
                let s = mul_mod(u, h[k][c], l);
                h[r][c] = sub_mod(h[r][c], s, l);
            }
            for row in h.iter_mut() {
                let s = mul_mod(u, row[r], l);
                row[k] = (row[k] + s) % l;
            }
        }
    }
    // p_{k+1} = (x − h_kk) p_k − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % l;
            next[i] = sub_mod(next[i], mul_mod(h[k][k], c, l), l);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[i + 1][i], l);
            let coef = mul_mod(h[i][k], prod, l);
            if coef == 0 {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                next[t] = sub_mod(next[t], mul_mod(coef, c, l), l);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
