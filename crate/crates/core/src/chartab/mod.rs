//! Character tables: exact construction by the Dixon–Schneider method, validation
//! of the orthogonality relations, and a portable JSON format.

mod dixon;
mod modlin;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm, prime_factors};
use crate::cyclo::{weighted_sum_of_products, Cyclotomic, Rational};
use crate::{Error, Result};

pub use dixon::{compute_table, compute_table_with_prime};

/// Per-class data kept in a table: size, element order, and `p`-th power maps for
/// each prime `p` dividing the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: u64,
    pub order: u64,
    pub powermaps: BTreeMap<u64, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    exponent: u32,
    classes: Vec<ClassInfo>,
    irr: Vec<Vec<Cyclotomic>>,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    name: String,
    order: u64,
    exponent: u32,
    classes: Vec<ClassInfo>,
    irr: Vec<Vec<Cyclotomic>>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::InvariantViolation(msg.into())
}

impl CharacterTable {
    /// Assembles and validates a table. Values are embedded into the exponent's
    /// cyclotomic field.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        exponent: u32,
        classes: Vec<ClassInfo>,
        irr: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let k = classes.len();
        if k == 0 {
            return Err(violation("a table needs at least one class"));
        }
        if irr.len() != k || irr.iter().any(|r| r.len() != k) {
            return Err(violation(format!("irr must be a {k}×{k} matrix")));
        }
        if exponent == 0 {
            return Err(violation("exponent must be positive"));
        }
        let irr = irr
            .into_iter()
            .map(|row| row.iter().map(|v| v.embed(exponent)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|_| violation(format!("a value does not lie in Q(ζ_{exponent})")))?;
        let mut t = CharacterTable { name: name.into(), order, exponent, classes, irr, inverse: Vec::new() };
        t.inverse = t.find_inverse_classes()?;
        t.validate()?;
        Ok(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// The conductor `N` shared by every value.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn irr(&self) -> &[Vec<Cyclotomic>] {
        &self.irr
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.irr[i]
    }

    pub fn value(&self, i: usize, k: usize) -> &Cyclotomic {
        &self.irr[i][k]
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.irr[i][0].to_integer().expect("degrees are validated integers") as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.irr.len()).map(|i| self.degree(i)).collect()
    }

    /// Class of `x^{-1}` for `x` in class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse[k]
    }

    /// Class of `x^p`, for `p` dividing the exponent.
    pub fn power_class(&self, k: usize, p: u64) -> Option<usize> {
        self.classes[k].powermaps.get(&p).copied()
    }

    /// Classes whose elements have order prime to `p`.
    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.classes.len()).filter(|&k| !self.classes[k].order.is_multiple_of(p)).collect()
    }

    /// Classes on which `χ_i` takes the value `χ_i(1)`, i.e. those inside its kernel.
    pub fn kernel_classes(&self, i: usize) -> Vec<usize> {
        let d = &self.irr[i][0];
        (0..self.classes.len()).filter(|&k| &self.irr[i][k] == d).collect()
    }

    pub fn is_trivial_row(&self, i: usize) -> bool {
        self.irr[i].iter().all(|v| v.to_integer() == Some(1))
    }

    /// `(1/|G|) Σ_K |K| a(K) conj(b(K))`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Rational> {
        let k = self.classes.len();
        if a.len() != k || b.len() != k {
            return Err(Error::Input(format!(
                "class functions of length {} and {} on a table with {k} classes",
                a.len(),
                b.len()
            )));
        }
        let conj: Vec<Cyclotomic> = b.iter().map(Cyclotomic::conj).collect();
        let s = weighted_sum_of_products(
            self.exponent,
            (0..k).map(|c| (self.classes[c].size as i128, &a[c], &conj[c])),
        );
        let r = s
            .to_rational()
            .ok_or_else(|| Error::Domain("inner product is not rational".into()))?;
        Ok(r / Rational::from_integer(self.order as i128))
    }

    fn find_inverse_classes(&self) -> Result<Vec<usize>> {
        let k = self.classes.len();
        let cols: Vec<Vec<&Cyclotomic>> =
            (0..k).map(|c| self.irr.iter().map(|r| &r[c]).collect()).collect();
        (0..k)
            .map(|c| {
                let conj: Vec<Cyclotomic> = cols[c].iter().map(|v| v.conj()).collect();
                (0..k)
                    .find(|&d| cols[d].iter().zip(&conj).all(|(x, y)| *x == y))
                    .ok_or_else(|| violation(format!("class {c} has no inverse class")))
            })
            .collect()
    }

    /// Checks every table invariant, naming the first relation that fails.
    pub fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        let order = self.order;
        let c0 = &self.classes[0];
        if c0.size != 1 || c0.order != 1 {
            return Err(violation("class 0 must be the identity class"));
        }
        let mut total = 0u64;
        let mut exp = 1u64;
        for (c, info) in self.classes.iter().enumerate() {
            if info.size == 0 || !order.is_multiple_of(info.size) {
                return Err(violation(format!("class {c} size {} does not divide |G| = {order}", info.size)));
            }
            total += info.size;
            exp = lcm(exp, info.order);
        }
        if total != order {
            return Err(violation(format!("Σ |K| = {total} ≠ |G| = {order}")));
        }
        if exp != self.exponent as u64 {
            return Err(violation(format!("exponent {} ≠ lcm of class orders {exp}", self.exponent)));
        }
        let primes = prime_factors(exp);
        for (c, info) in self.classes.iter().enumerate() {
            let keys: Vec<u64> = info.powermaps.keys().copied().collect();
            if keys != primes {
                return Err(violation(format!("class {c} power maps cover {keys:?}, expected {primes:?}")));
            }
            for (&p, &t) in &info.powermaps {
                let want = info.order / gcd(info.order, p);
                if t >= k || self.classes[t].order != want {
                    return Err(violation(format!("class {c} has an ill-defined {p}-th power map")));
                }
            }
        }
        if !self.is_trivial_row(0) {
            return Err(violation("row 0 is not the trivial character"));
        }
        let mut sq = 0u128;
        for (i, row) in self.irr.iter().enumerate() {
            let d = row[0].to_integer().filter(|&d| d > 0).ok_or_else(|| {
                violation(format!("degree of row {i} is not a positive integer"))
            })?;
            if order as i128 % d != 0 {
                return Err(violation(format!("degree {d} of row {i} does not divide |G| = {order}")));
            }
            sq += (d * d) as u128;
        }
        if sq != order as u128 {
            return Err(violation(format!("Σ χ(1)² = {sq} ≠ |G| = {order}")));
        }
        let conj: Vec<Vec<Cyclotomic>> =
            self.irr.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
        for i in 0..k {
            for j in i..k {
                let s = weighted_sum_of_products(
                    self.exponent,
                    (0..k).map(|c| (self.classes[c].size as i128, &self.irr[i][c], &conj[j][c])),
                );
                let want = if i == j { order as i128 } else { 0 };
                if s.to_integer() != Some(want) {
                    return Err(violation(format!(
                        "row orthogonality: Σ |K| χ_{i}(K) conj(χ_{j}(K)) = {s}, expected {want}"
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s = weighted_sum_of_products(
                    self.exponent,
                    (0..k).map(|i| (1, &self.irr[i][a], &conj[i][b])),
                );
                let want = if a == b { (order / self.classes[a].size) as i128 } else { 0 };
                if s.to_integer() != Some(want) {
                    return Err(violation(format!(
                        "column orthogonality: Σ χ(K_{a}) conj(χ(K_{b})) = {s}, expected {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same table with columns sorted by `(order, size, multiset of values)` and
    /// rows in the canonical order. Ties between columns keep their relative order.
    pub fn canonicalize(&self) -> CharacterTable {
        let k = self.classes.len();
        let col_key = |c: usize| {
            let mut vals: Vec<&Cyclotomic> = self.irr.iter().map(|r| &r[c]).collect();
            vals.sort_by(|a, b| a.cmp_coords(b));
            vals
        };
        let keys: Vec<Vec<&Cyclotomic>> = (0..k).map(col_key).collect();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.sort_by(|&a, &b| {
            let (x, y) = (&self.classes[a], &self.classes[b]);
            (x.order, x.size).cmp(&(y.order, y.size)).then_with(|| cmp_values(&keys[a], &keys[b]))
        });
        let mut pos = vec![0usize; k];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let classes = perm
            .iter()
            .map(|&old| {
                let mut info = self.classes[old].clone();
                for t in info.powermaps.values_mut() {
                    *t = pos[*t];
                }
                info
            })
            .collect();
        let mut irr: Vec<Vec<Cyclotomic>> =
            self.irr.iter().map(|r| perm.iter().map(|&c| r[c].clone()).collect()).collect();
        sort_rows(&mut irr);
        let inverse = perm.iter().map(|&old| pos[self.inverse[old]]).collect();
        CharacterTable { name: self.name.clone(), order: self.order, exponent: self.exponent, classes, irr, inverse }
    }

    /// Equality of everything except the name.
    pub fn same_content(&self, other: &CharacterTable) -> bool {
        self.order == other.order
            && self.exponent == other.exponent
            && self.classes == other.classes
            && self.irr == other.irr
    }

    pub fn to_json(&self) -> String {
        let file = TableFile {
            name: self.name.clone(),
            order: self.order,
            exponent: self.exponent,
            classes: self.classes.clone(),
            irr: self.irr.clone(),
        };
        serde_json::to_string_pretty(&file).expect("tables always serialize")
    }

    /// Parses and validates a table; `locus` names the source in parse errors.
    pub fn from_json(text: &str, locus: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            locus: format!("{locus}:{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        CharacterTable::new(file.name, file.order, file.exponent, file.classes, file.irr)
    }
}

fn cmp_values(a: &[&Cyclotomic], b: &[&Cyclotomic]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| x.cmp_coords(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

/// Canonical row order: degree, then the trivial character, then lexicographic
/// power-basis coordinates class by class.
pub(crate) fn sort_rows(irr: &mut [Vec<Cyclotomic>]) {
    let trivial = |r: &[Cyclotomic]| r.iter().all(|v| v.to_integer() == Some(1));
    irr.sort_by(|a, b| {
        let da = a[0].to_integer().unwrap_or(0);
        let db = b[0].to_integer().unwrap_or(0);
        da.cmp(&db)
            .then_with(|| trivial(b).cmp(&trivial(a)))
            .then_with(|| {
                a.iter().zip(b.iter()).map(|(x, y)| x.cmp_coords(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
            })
    });
}

pub fn write_table(t: &CharacterTable, path: impl AsRef<Path>) -> Result<()> {
    let mut text = t.to_json();
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_table(path: impl AsRef<Path>) -> Result<CharacterTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    CharacterTable::from_json(&text, &path.display().to_string())
}
