//! Finitely presented graded modules over a quotient ring.

mod complex;
pub(crate) mod engine;
mod invariants;
pub(crate) mod kernel;
mod matrix;
mod resolution;

use std::sync::{Arc, OnceLock};

pub use complex::FreeComplex;
pub use engine::{Budget, ModuleOrder};
pub use invariants::Length;
pub use matrix::{GradedFreeModule, GradedMatrix};
pub use resolution::{minimal_resolution, BettiTable, PdVerdict, Resolution};

use crate::error::{Error, Result};
use crate::groebner::InitialIdeal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;

use engine::{Engine, Layout, MTerm};
use kernel::{column_terms, terms_to_column};

/// The cokernel of a graded matrix over a quotient ring: generators in the
/// target degrees, one relation per column.
#[derive(Clone)]
pub struct PresentedModule {
    ring: QuotientRing,
    presentation: GradedMatrix,
    basis: Arc<OnceLock<Vec<Vec<MTerm>>>>,
}

impl std::fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "coker {:?}", self.presentation)
    }
}

impl PresentedModule {
    /// Entries are reduced modulo the defining ideal and zero relations
    /// dropped.
    pub fn new(ring: &QuotientRing, presentation: GradedMatrix) -> Result<Self> {
        ring.ambient().check(presentation.ring())?;
        let mut cols = Vec::new();
        let mut src = Vec::new();
        for (j, c) in presentation.columns().iter().enumerate() {
            let col = c.iter().map(|e| ring.normal_form(e)).collect::<Result<Vec<_>>>()?;
            if col.iter().any(|e| !e.is_zero()) {
                cols.push(col);
                src.push(presentation.source()[j]);
            }
        }
        let presentation =
            GradedMatrix::from_parts_unchecked(ring.ambient(), presentation.target().to_vec(), src, cols);
        Ok(PresentedModule {
            ring: ring.clone(),
            presentation,
            basis: Arc::new(OnceLock::new()),
        })
    }

    /// `R / (gens)`.
    pub fn cyclic(ring: &QuotientRing, gens: &[Polynomial]) -> Result<Self> {
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::new(ring, GradedMatrix::from_columns(ring.ambient(), vec![0], cols)?)
    }

    pub fn free(ring: &QuotientRing, twists: Vec<i32>) -> Self {
        let m = GradedMatrix::zero(ring.ambient(), twists, Vec::new());
        Self::new(ring, m).unwrap()
    }

    pub fn zero(ring: &QuotientRing) -> Self {
        Self::free(ring, Vec::new())
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &QuotientRing) -> Self {
        Self::cyclic(ring, &ring.ambient().vars()).unwrap()
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn presentation(&self) -> &GradedMatrix {
        &self.presentation
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.presentation.target()
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.nrows()
    }

    pub(crate) fn layout(&self) -> Layout<'_> {
        Layout {
            order: self.ring.ambient().order(),
            twists: self.generator_degrees().to_vec(),
            ntop: self.num_generators(),
            kind: ModuleOrder::default(),
        }
    }

    /// Gröbner basis of the relations together with `J F`.
    pub(crate) fn relation_basis(&self) -> &[Vec<MTerm>] {
        self.basis.get_or_init(|| {
            kernel::submodule_basis(
                &self.ring,
                self.generator_degrees(),
                &self.presentation,
                ModuleOrder::default(),
                &Budget::unlimited(),
            )
            .expect("unbudgeted computation")
            .0
        })
    }

    fn reducer(&self) -> Engine<'_> {
        let mut e = Engine::new(self.ring.ambient().field(), self.layout(), self.ring.reducers());
        for t in self.relation_basis() {
            e.load(t.clone());
        }
        e
    }

    /// Normal form of a vector of the free module modulo the relations.
    pub fn reduce_vector(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.num_generators() {
            return Err(Error::LengthMismatch(v.len(), self.num_generators()));
        }
        let e = self.reducer();
        let t = e.layout().sort(self.ring.ambient().field(), column_terms(v, 0));
        let r = e.reduce(t);
        Ok(terms_to_column(&self.ring, &r, 0, self.num_generators()))
    }

    /// Whether every column of `m` lies in the relation module.
    pub fn contains_columns(&self, m: &GradedMatrix) -> Result<bool> {
        let e = self.reducer();
        for c in m.columns() {
            let t = e.layout().sort(self.ring.ambient().field(), column_terms(c, 0));
            if !e.reduce(t).is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The reduced Gröbner basis of the relation module, as columns.
    pub fn reduced_relations(&self) -> Vec<Vec<Polynomial>> {
        self.reducer()
            .reduced_basis()
            .iter()
            .map(|t| terms_to_column(&self.ring, t, 0, self.num_generators()))
            .collect()
    }

    /// Equality of presentations up to the choice of relation generators.
    pub fn same_presentation(&self, other: &PresentedModule) -> Result<bool> {
        self.ring.check(&other.ring)?;
        Ok(self.generator_degrees() == other.generator_degrees()
            && self.reduced_relations() == other.reduced_relations())
    }

    /// For each generator, the initial ideal of the relations in that
    /// component (including the defining ideal).
    pub fn initial_ideals(&self) -> Vec<InitialIdeal> {
        let n = self.ring.nvars();
        let base: Vec<Monomial> = self.ring.reducers().iter().map(|g| g.lead).collect();
        let mut per: Vec<Vec<Monomial>> = vec![base; self.num_generators()];
        for t in self.relation_basis() {
            per[t[0].1 as usize].push(t[0].0);
        }
        per.into_iter().map(|g| InitialIdeal::new(n, g)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.initial_ideals().iter().all(|i| i.is_unit())
    }

    /// Adds relations.
    pub fn quotient_by(&self, extra: &GradedMatrix) -> Result<PresentedModule> {
        PresentedModule::new(&self.ring, self.presentation.concat(extra)?)
    }

    /// `M / f M` for a homogeneous `f`.
    pub fn quotient_by_element(&self, f: &Polynomial) -> Result<PresentedModule> {
        let d = f.homogeneous_degree()?.unwrap_or(0) as i32;
        let r = self.num_generators();
        let amb = self.ring.ambient();
        let cols = (0..r)
            .map(|i| (0..r).map(|k| if k == i { f.clone() } else { amb.zero() }).collect())
            .collect();
        let src = self.generator_degrees().iter().map(|t| t + d).collect();
        let extra = GradedMatrix::new(amb, self.generator_degrees().to_vec(), src, cols)?;
        self.quotient_by(&extra)
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        self.ring.check(&other.ring)?;
        PresentedModule::new(&self.ring, self.presentation.direct_sum(&other.presentation)?)
    }

    /// Shifts all degrees by `s`: the module `M(-s)`.
    pub fn shifted(&self, s: i32) -> PresentedModule {
        let p = &self.presentation;
        let m = GradedMatrix::from_parts_unchecked(
            p.ring(),
            p.target().iter().map(|t| t + s).collect(),
            p.source().iter().map(|t| t + s).collect(),
            p.columns().to_vec(),
        );
        PresentedModule::new(&self.ring, m).unwrap()
    }

    /// A minimal presentation: no unit entries and no superfluous relations.
    pub fn minimal_presentation(&self) -> Result<PresentedModule> {
        let pruned = resolution::prune_units(&self.ring, &self.presentation)?;
        let kept = kernel::minimal_columns(&self.ring, &pruned, &Budget::unlimited())?;
        PresentedModule::new(&self.ring, pruned.select_columns(&kept))
    }
}

#[cfg(test)]
mod tests;

impl QuotientRing {
    /// A minimal homogeneous generating set of the defining ideal.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let amb = self.ambient();
        let s = QuotientRing::polynomial(amb);
        let cols: Vec<Vec<Polynomial>> = self.ideal().basis().into_iter().map(|g| vec![g]).collect();
        let m = GradedMatrix::from_columns(amb, vec![0], cols)?;
        let kept = kernel::minimal_columns(&s, &m, &Budget::unlimited())?;
        Ok(kept.into_iter().map(|j| m.entry(0, j).clone()).collect())
    }

    /// Whether the defining ideal is generated by `codim` elements.
    pub fn is_complete_intersection(&self) -> Result<bool> {
        let codim = self.nvars() - self.krull_dimension()?;
        Ok(self.minimal_generators()?.len() == codim)
    }

    /// Depth of the ring at its homogeneous maximal ideal.
    pub fn depth(&self, budget: &Budget) -> Result<usize> {
        PresentedModule::free(self, vec![0]).depth(budget)
    }
}
