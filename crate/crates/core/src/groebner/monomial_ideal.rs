use crate::monomial::Monomial;

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl InitialIdeal {
    pub fn new(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents())));
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for g in gens {
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        InitialIdeal { nvars, gens: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    /// Largest number of variables no generator is supported in; `None` for
    /// the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let masks: Vec<u32> = self.gens.iter().map(|g| g.support_mask()).collect();
        let mut best = 0;
        for s in 0u32..(1u32 << self.nvars) {
            let size = s.count_ones() as usize;
            if size > best && masks.iter().all(|&m| m & !s != 0) {
                best = size;
            }
        }
        Some(best)
    }

    /// Monomials outside the ideal, grouped by degree, for degrees `0..=max`.
    pub fn standard_monomials(&self, max_degree: u32) -> Vec<Vec<Monomial>> {
        let mut out: Vec<Vec<Monomial>> = Vec::new();
        if self.is_unit() {
            return vec![Vec::new(); max_degree as usize + 1];
        }
        out.push(vec![Monomial::one(self.nvars)]);
        for _ in 0..max_degree {
            let prev = out.last().unwrap();
            let mut next = Vec::new();
            for m in prev {
                let last = (0..self.nvars).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
                for i in last..self.nvars {
                    let c = m.mul(&Monomial::var(self.nvars, i));
                    if !self.contains(&c) {
                        next.push(c);
                    }
                }
            }
            out.push(next);
        }
        out
    }

    /// Hilbert function of the quotient for degrees `0..=max`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        self.standard_monomials(max_degree)
            .iter()
            .map(|v| v.len() as u64)
            .collect()
    }

    /// Vector-space dimension of the quotient when finite.
    pub fn colength(&self) -> Option<u64> {
        if self.is_unit() {
            return Some(0);
        }
        if self.dimension()? > 0 {
            return None;
        }
        let mut total = 0u64;
        let mut layer = vec![Monomial::one(self.nvars)];
        while !layer.is_empty() {
            total += layer.len() as u64;
            let mut next = Vec::new();
            for m in &layer {
                let last = (0..self.nvars).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
                for i in last..self.nvars {
                    let c = m.mul(&Monomial::var(self.nvars, i));
                    if !self.contains(&c) {
                        next.push(c);
                    }
                }
            }
            layer = next;
        }
        Some(total)
    }
}
