//! Deterministic Schreier–Sims stabilizer chains.

use std::sync::OnceLock;

use num_bigint::BigUint;

use super::perm::Permutation;
use crate::error::{invalid, Result};

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// `transversal[x]` maps `base` to `x` for `x` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        Self {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    fn rebuild_orbit(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.transversal[self.base] = Some(Permutation::identity(n));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let ux = self.transversal[x].clone().expect("orbit point");
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(g));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = Self {
            degree,
            levels: Vec::new(),
        };
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in strong.clone() {
            if chain.levels.iter().all(|l| g.fixes(l.base)) {
                let b = chain.choose_base_point(&strong, &g);
                chain.levels.push(Level::new(b, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let prefix: Vec<usize> = chain.levels[..i].iter().map(|l| l.base).collect();
            chain.levels[i].gens = strong
                .iter()
                .filter(|g| prefix.iter().all(|&b| g.fixes(b)))
                .cloned()
                .collect();
            chain.levels[i].rebuild_orbit();
        }

        let mut i = chain.levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            let orbit = chain.levels[level].orbit.clone();
            let gens = chain.levels[level].gens.clone();
            for &x in &orbit {
                let ux = chain.levels[level].transversal[x]
                    .clone()
                    .expect("orbit point");
                for s in &gens {
                    let y = s.apply(x);
                    let uy = chain.levels[level].transversal[y]
                        .as_ref()
                        .expect("orbit closed");
                    let schreier = ux.then(s).then(&uy.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, drop) = chain.sift_from(schreier, level + 1);
                    if drop == chain.levels.len() && h.is_identity() {
                        continue;
                    }
                    if drop == chain.levels.len() {
                        strong.push(h.clone());
                        let b = chain.choose_base_point(&strong, &h);
                        chain.levels.push(Level::new(b, degree));
                    } else {
                        strong.push(h.clone());
                    }
                    for l in level + 1..=drop {
                        chain.levels[l].gens.push(h.clone());
                        chain.levels[l].rebuild_orbit();
                    }
                    i = drop + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
        chain
    }

    /// Among the points moved by `g`, the one with the largest orbit under
    /// the strong generators that fix every current base point (ties go to
    /// the smallest point).
    fn choose_base_point(&self, strong: &[Permutation], g: &Permutation) -> usize {
        let fixing: Vec<&Permutation> = strong
            .iter()
            .filter(|s| self.levels.iter().all(|l| s.fixes(l.base)))
            .chain(std::iter::once(g))
            .collect();
        let mut best = (0usize, usize::MAX);
        for x in g.support() {
            let size = orbit_of(self.degree, &fixing, x).len();
            if size > best.0 {
                best = (size, x);
            }
        }
        best.1
    }

    /// Strip `g` through the levels starting at `start`. Returns the residue
    /// and the index of the level where it dropped out (or `levels.len()`).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base);
            match &level.transversal[x] {
                None => return (g, i),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, drop) = self.sift_from(g.clone(), 0);
        drop == self.levels.len() && h.is_identity()
    }
}

pub(crate) fn orbit_of(n: usize, gens: &[&Permutation], x: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut orbit = vec![x];
    let mut i = 0;
    while i < orbit.len() {
        let y = orbit[i];
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                orbit.push(z);
            }
        }
        i += 1;
    }
    orbit
}

/// Permutation group given by generators; the stabilizer chain is built on
/// first use.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(invalid(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    /// Sym(n) from a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()]).expect("valid");
        Self::new(
            degree,
            vec![Permutation::transposition(degree, 0, 1), cycle],
        )
        .expect("valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u128` when it fits.
    pub fn order_u128(&self) -> Option<u128> {
        u128::try_from(self.order()).ok()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(invalid(format!(
                "permutation of degree {} tested against a group of degree {}",
                g.degree(),
                self.degree
            )));
        }
        Ok(self.chain().contains(g))
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let gens: Vec<&Permutation> = self.generators.iter().collect();
        orbit_of(self.degree, &gens, x)
    }

    /// Point orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            let mut o = self.orbit(x);
            o.sort_unstable();
            for &y in &o {
                seen[y] = true;
            }
            out.push(o);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Breadth-first closure of the generators.
    fn closure(n: usize, gens: &[Permutation], cap: usize) -> Option<HashSet<Permutation>> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(n);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(g) = queue.pop() {
            for s in gens {
                let h = g.then(s);
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push(h);
                }
            }
        }
        Some(seen)
    }

    #[test]
    fn trivial_and_cyclic() {
        assert_eq!(PermutationGroup::trivial(5).order(), BigUint::from(1u32));
        let c = Permutation::from_cycles(9, &[(0..9).collect()]).unwrap();
        assert_eq!(
            PermutationGroup::new(9, vec![c]).unwrap().order(),
            BigUint::from(9u32)
        );
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(PermutationGroup::symmetric(6).order_u128(), Some(720));
        assert_eq!(PermutationGroup::symmetric(1).order_u128(), Some(1));
        let s42 = PermutationGroup::symmetric(42).order();
        assert_eq!(s42, (1..=42u32).map(BigUint::from).product::<BigUint>());
    }

    #[test]
    fn membership() {
        let a4 = PermutationGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order_u128(), Some(12));
        assert!(a4.contains(&Permutation::identity(4)).unwrap());
        assert!(!a4.contains(&Permutation::transposition(4, 0, 1)).unwrap());
        assert!(a4
            .contains(&Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap())
            .unwrap());
        assert!(a4.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn matches_closure_on_assorted_groups() {
        let n = 7;
        let cases: Vec<Vec<Permutation>> = vec![
            vec![Permutation::from_cycles(n, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap()],
            vec![
                Permutation::from_cycles(n, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap(),
                Permutation::from_cycles(n, &[vec![1, 2, 4], vec![3, 6, 5]]).unwrap(),
            ],
            vec![
                Permutation::from_cycles(n, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Permutation::from_cycles(n, &[vec![4, 5, 6]]).unwrap(),
            ],
        ];
        for gens in cases {
            let g = PermutationGroup::new(n, gens.clone()).unwrap();
            let elems = closure(n, &gens, 10_000).unwrap();
            assert_eq!(g.order_u128(), Some(elems.len() as u128));
            for e in &elems {
                assert!(g.contains(e).unwrap());
            }
        }
    }

    #[test]
    fn base_points_are_moved() {
        let g = PermutationGroup::symmetric(5);
        let base = g.chain().base();
        assert_eq!(base.len(), 4);
        let sizes = g.chain().basic_orbit_sizes();
        assert_eq!(sizes.iter().product::<usize>(), 120);
    }
}
