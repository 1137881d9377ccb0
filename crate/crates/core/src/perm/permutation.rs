use std::fmt;
use std::ops::Mul;

use crate::arith::lcm;
use crate::{Error, Result};

/// A permutation of `{0, …, degree-1}`, acting on the right: the product
/// `a * b` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images<T: Copy + TryInto<u32>>(images: &[T]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, &im) in images.iter().enumerate() {
            let v: u32 = im
                .try_into()
                .ok()
                .filter(|&v| (v as usize) < n)
                .ok_or_else(|| Error::Input(format!("image of point {i} is out of range")))?;
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::Input(format!("point {v} is hit twice; images are not a bijection")));
            }
            out.push(v);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a >= degree || b >= degree {
                    return Err(Error::Input(format!("cycle point out of range for degree {degree}")));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::Input(format!("point {a} appears in two cycles")));
                }
                images[a] = b;
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images: out }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| other.images[v as usize] == self.images[other.images[i] as usize])
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.image(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image(cur);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &v)| *i as u32 != v).map(|(i, _)| i)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
