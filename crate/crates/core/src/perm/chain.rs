//! Deterministic Schreier–Sims stabilizer chains.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    orbit: Vec<usize>,
    // transversal[u] maps the base point to u
    transversal: Vec<Option<Permutation>>,
    generators: Vec<Permutation>,
}

/// Base, strong generators and transversals of a permutation group.
///
/// New base points are always the smallest point moved by the element that
/// forces a new level, so the chain depends only on the generator sequence.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in generators {
            chain.extend(g);
        }
        chain
    }

    /// Adds `g` to the group; no-op when `g` is already a member.
    pub fn extend(&mut self, g: &Permutation) {
        let (residue, _) = self.sift(g, 0);
        if !residue.is_identity() {
            self.add_generator(0, g.clone());
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64).expect("group order exceeds u64")
        })
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Strips `g` through the levels starting at `from`; returns the residue and
    /// the level where stripping stopped.
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let u = h.image(level.base);
            match &level.transversal[u] {
                Some(t) => h = h.then(&t.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn add_generator(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = g.first_moved().expect("identity is never added as a generator");
            self.levels.push(Level {
                base,
                orbit: vec![base],
                transversal: Vec::new(),
                generators: Vec::new(),
            });
        }
        self.levels[i].generators.push(g);
        self.rebuild_orbit(i);
        // every Schreier generator of level i must sift through the levels below
        let mut idx = 0;
        while idx < self.levels[i].orbit.len() {
            let u = self.levels[i].orbit[idx];
            let ngens = self.levels[i].generators.len();
            for s in 0..ngens {
                let (schreier, v) = {
                    let level = &self.levels[i];
                    let gen = &level.generators[s];
                    let v = gen.image(u);
                    let tu = level.transversal[u].as_ref().unwrap();
                    (tu.then(gen), v)
                };
                let tv = self.levels[i].transversal[v].as_ref().unwrap().inverse();
                let schreier = schreier.then(&tv);
                let (residue, _) = self.sift(&schreier, i + 1);
                if !residue.is_identity() {
                    self.add_generator(i + 1, residue);
                }
            }
            idx += 1;
        }
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let degree = self.degree;
        let level = &mut self.levels[i];
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[level.base] = Some(Permutation::identity(degree));
        let mut orbit = vec![level.base];
        let mut idx = 0;
        while idx < orbit.len() {
            let u = orbit[idx];
            for g in &level.generators {
                let v = g.image(u);
                if transversal[v].is_none() {
                    transversal[v] = Some(transversal[u].as_ref().unwrap().then(g));
                    orbit.push(v);
                }
            }
            idx += 1;
        }
        level.orbit = orbit;
        level.transversal = transversal;
    }

    /// All group elements, in no particular order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for &u in &level.orbit {
                let t = level.transversal[u].as_ref().unwrap();
                next.extend(elems.iter().map(|h| h.then(t)));
            }
            elems = next;
        }
        elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_chain() {
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let chain = StabChain::new(4, &[t, c]);
        assert_eq!(chain.order(), 24);
        assert_eq!(chain.base(), vec![0, 1, 2]);
        assert_eq!(chain.elements().len(), 24);
    }

    #[test]
    fn membership() {
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let chain = StabChain::new(4, std::slice::from_ref(&c));
        assert!(chain.contains(&c.pow(2)));
        assert!(!chain.contains(&Permutation::from_cycles(4, &[&[0, 1]]).unwrap()));
    }
}
