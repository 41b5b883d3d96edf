//! Hilbert function, length, dimension and depth of presented modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;

use super::engine::Budget;
use super::kernel;
use super::matrix::GradedMatrix;
use super::resolution::minimal_resolution;
use super::PresentedModule;

/// Length of a module: a natural number or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Length {
    Finite(u64),
    #[serde(serialize_with = "infinite")]
    Infinite,
}

fn infinite<S: serde::Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str("INFINITE")
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl std::fmt::Display for Length {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl PresentedModule {
    /// `dim_k M_d`, counted on standard monomials.
    pub fn hilbert_value(&self, d: i32) -> u64 {
        self.initial_ideals()
            .iter()
            .zip(self.generator_degrees())
            .map(|(ini, &t)| {
                if d < t {
                    0
                } else {
                    let e = (d - t) as u32;
                    ini.hilbert_function(e)[e as usize]
                }
            })
            .sum()
    }

    /// Hilbert function on the degrees `lo..=hi`.
    pub fn hilbert_function(&self, lo: i32, hi: i32) -> Vec<u64> {
        let inis = self.initial_ideals();
        let mut out = vec![0u64; (hi - lo + 1).max(0) as usize];
        for (ini, &t) in inis.iter().zip(self.generator_degrees()) {
            if hi < t {
                continue;
            }
            let hf = ini.hilbert_function((hi - t) as u32);
            for (e, v) in hf.iter().enumerate() {
                let d = t + e as i32;
                if d >= lo {
                    out[(d - lo) as usize] += v;
                }
            }
        }
        out
    }

    pub fn length(&self) -> Length {
        let mut total = 0u64;
        for ini in self.initial_ideals() {
            match ini.colength() {
                Some(n) => total += n,
                None => return Length::Infinite,
            }
        }
        Length::Finite(total)
    }

    /// Krull dimension, from the initial module.
    pub fn dimension(&self) -> Result<usize> {
        self.initial_ideals()
            .iter()
            .filter_map(|i| i.dimension())
            .max()
            .ok_or(Error::ZeroModule)
    }

    /// `(0 :_M m) != 0`, i.e. depth zero.
    pub fn has_socle(&self, budget: &Budget) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let ring = self.ring();
        let amb = ring.ambient();
        let n = ring.nvars();
        let r = self.num_generators();
        let f0 = self.generator_degrees();
        // e_i -> (x_1 e_i, ..., x_n e_i) in F^n, relations U in every copy
        let mut target = Vec::with_capacity(n * r);
        for _ in 0..n {
            target.extend_from_slice(f0);
        }
        let mut cols = Vec::with_capacity(r);
        for i in 0..r {
            let mut col = vec![amb.zero(); n * r];
            for v in 0..n {
                col[v * r + i] = amb.var(v);
            }
            cols.push(col);
        }
        let map = GradedMatrix::from_parts_unchecked(amb, target.clone(), f0.iter().map(|t| t + 1).collect(), cols);
        let p = self.presentation();
        let mut rel_cols = Vec::new();
        let mut rel_src = Vec::new();
        for v in 0..n {
            for (j, c) in p.columns().iter().enumerate() {
                let mut col = vec![amb.zero(); n * r];
                for (k, e) in c.iter().enumerate() {
                    col[v * r + k] = e.clone();
                }
                rel_cols.push(col);
                rel_src.push(p.source()[j]);
            }
        }
        let rels = GradedMatrix::from_parts_unchecked(amb, target, rel_src, rel_cols);
        let k = kernel::kernel(ring, &map, Some(&rels), false, Default::default(), budget)?;
        if k.truncated {
            return Err(Error::Budget("socle computation truncated".into()));
        }
        Ok(!self.contains_columns(&k.syzygies)?)
    }

    /// Whether multiplication by `f` is injective on `M`.
    pub fn is_regular_element(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        let ring = self.ring();
        let amb = ring.ambient();
        let f = ring.normal_form(f)?;
        let d = f.homogeneous_degree()?.ok_or(Error::ZeroElement)? as i32;
        let r = self.num_generators();
        let f0 = self.generator_degrees();
        let cols = (0..r)
            .map(|i| (0..r).map(|k| if k == i { f.clone() } else { amb.zero() }).collect())
            .collect();
        let map = GradedMatrix::from_parts_unchecked(amb, f0.to_vec(), f0.iter().map(|t| t + d).collect(), cols);
        let k = kernel::kernel(ring, &map, Some(self.presentation()), false, Default::default(), budget)?;
        if k.truncated {
            return Err(Error::Budget("annihilator computation truncated".into()));
        }
        Ok(self.contains_columns(&k.syzygies)?)
    }

    /// Depth at the homogeneous maximal ideal.
    ///
    /// Linear forms regular on `M` are peeled off one at a time until the
    /// socle is nonzero. If no candidate form is regular although the socle
    /// vanishes (which can happen over small fields), the remaining depth is
    /// read off the resolution over the ambient polynomial ring:
    /// `depth = n - pd_S`.
    pub fn depth(&self, budget: &Budget) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let candidates = linear_candidates(self.ring());
        let mut m = self.clone();
        let mut count = 0;
        loop {
            if m.has_socle(budget)? {
                return Ok(count);
            }
            let mut found = None;
            for l in &candidates {
                if m.is_regular_element(l, budget)? {
                    found = Some(l.clone());
                    break;
                }
            }
            match found {
                Some(l) => {
                    m = m.quotient_by_element(&l)?;
                    count += 1;
                }
                None => return Ok(count + m.depth_over_ambient(budget)?),
            }
        }
    }

    /// `n - pd_S(M)` with `S` the ambient polynomial ring. `pd_S M` is also
    /// the top degree in which the Koszul homology `H_i(x; M)` on all
    /// variables is nonzero.
    pub fn depth_over_ambient(&self, budget: &Budget) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let s = self.over_ambient()?;
        let n = self.ring().nvars();
        let res = minimal_resolution(&s, n + 1, budget)?;
        if !res.finished {
            return Err(Error::Budget("resolution over the polynomial ring incomplete".into()));
        }
        Ok(n - res.projective_dimension().unwrap())
    }

    /// The same module viewed over the ambient polynomial ring.
    pub fn over_ambient(&self) -> Result<PresentedModule> {
        let ring = self.ring();
        let amb = ring.ambient();
        let s = QuotientRing::polynomial(amb);
        let r = self.num_generators();
        let f0 = self.generator_degrees();
        let mut m = self.presentation().clone();
        let mut cols = Vec::new();
        let mut src = Vec::new();
        for g in ring.ideal().basis() {
            let d = g.degree().unwrap() as i32;
            for i in 0..r {
                let col = (0..r).map(|k| if k == i { g.clone() } else { amb.zero() }).collect();
                cols.push(col);
                src.push(f0[i] + d);
            }
        }
        m = m.concat(&GradedMatrix::from_parts_unchecked(amb, f0.to_vec(), src, cols))?;
        PresentedModule::new(&s, m)
    }
}

/// Linear forms tried as regular elements: the variables (last first),
/// sums of pairs, the sum of all variables, then a few fixed pseudo-random
/// forms.
fn linear_candidates(ring: &QuotientRing) -> Vec<Polynomial> {
    let amb = ring.ambient();
    let n = amb.nvars();
    let vars = amb.vars();
    let mut out: Vec<Polynomial> = vars.iter().rev().cloned().collect();
    for i in (0..n).rev() {
        for j in (0..i).rev() {
            out.push(&vars[i] + &vars[j]);
        }
    }
    out.push(vars.iter().fold(amb.zero(), |a, v| &a + v));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let p = amb.characteristic();
    for _ in 0..16 {
        let mut f = amb.zero();
        for v in &vars {
            f = &f + &v.scale(rng.gen_range(0..p));
        }
        if !f.is_zero() {
            out.push(f);
        }
    }
    out.into_iter()
        .filter_map(|f| ring.normal_form(&f).ok())
        .filter(|f| !f.is_zero())
        .collect()
}
