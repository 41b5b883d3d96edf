//! Graded quotients `S/J` of a polynomial ring by a homogeneous ideal.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{Elem, GroebnerIdeal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// A quotient of the ambient polynomial ring by a homogeneous ideal whose
/// reduced basis is sealed at construction. Cheap to clone.
#[derive(Clone)]
pub struct QuotientRing(Arc<Inner>);

struct Inner {
    ideal: GroebnerIdeal,
    dimension: OnceLock<Option<usize>>,
}

impl std::fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}/{:?}", self.ambient().names(), self.ideal())
    }
}

impl QuotientRing {
    /// Rejects inhomogeneous defining ideals.
    pub fn new(ideal: GroebnerIdeal) -> Result<Self> {
        if let Some(g) = ideal.generators().iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::Inhomogeneous(g.to_string()));
        }
        ideal.sealed();
        Ok(QuotientRing(Arc::new(Inner {
            ideal,
            dimension: OnceLock::new(),
        })))
    }

    pub fn from_generators(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        Self::new(GroebnerIdeal::new(ring, gens)?)
    }

    /// The polynomial ring itself.
    pub fn polynomial(ring: &PolyRing) -> Self {
        Self::new(GroebnerIdeal::zero(ring)).unwrap()
    }

    pub fn ambient(&self) -> &PolyRing {
        self.0.ideal.ring()
    }

    pub fn ideal(&self) -> &GroebnerIdeal {
        &self.0.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ambient().nvars()
    }

    pub fn characteristic(&self) -> u32 {
        self.ambient().characteristic()
    }

    pub(crate) fn reducers(&self) -> &[Elem] {
        if self.0.ideal.is_zero() {
            &[]
        } else {
            &self.0.ideal.sealed().elems
        }
    }

    /// Identity of rings: same ambient ring and same reduced basis.
    pub fn same(&self, other: &QuotientRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.ambient().same(other.ambient()) && self.ideal().basis() == other.ideal().basis())
    }

    pub(crate) fn check(&self, other: &QuotientRing) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_zero_ring(&self) -> bool {
        self.0.ideal.is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.0.ideal.normal_form(f)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.normal_form(&self.ambient().parse(text)?)
    }

    /// Whether multiplication by `f` is injective, decided by `(J : f) = J`.
    pub fn is_nonzerodivisor(&self, f: &Polynomial) -> Result<bool> {
        let f = self.normal_form(f)?;
        if f.is_zero() {
            return Err(Error::ZeroElement);
        }
        if f.is_constant() {
            return Ok(true);
        }
        let colon = self.0.ideal.colon(&f)?;
        self.0.ideal.contains_ideal(&colon)
    }

    /// Krull dimension, read off the initial ideal.
    pub fn krull_dimension(&self) -> Result<usize> {
        self.0
            .dimension
            .get_or_init(|| self.0.ideal.initial_ideal().dimension())
            .ok_or(Error::UnitIdeal)
    }

    /// `R / (extra)`.
    pub fn quotient_by(&self, extra: &[Polynomial]) -> Result<QuotientRing> {
        QuotientRing::new(self.0.ideal.extend(extra)?)
    }

    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        self.0.ideal.initial_ideal().hilbert_function(max_degree)
    }

    /// Monomials outside the initial ideal, a basis of `R` in each degree.
    pub fn standard_monomials(&self, max_degree: u32) -> Vec<Vec<Monomial>> {
        self.0.ideal.initial_ideal().standard_monomials(max_degree)
    }

    /// Vector-space dimension of `R` when finite.
    pub fn length(&self) -> Option<u64> {
        self.0.ideal.initial_ideal().colength()
    }
}
