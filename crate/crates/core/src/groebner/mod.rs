//! Ideals of a polynomial ring with their reduced Gröbner bases.

mod buchberger;
mod monomial_ideal;

use std::sync::{Arc, OnceLock};

pub use monomial_ideal::InitialIdeal;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

pub(crate) use buchberger::{Context, Elem};

/// The reduced Gröbner basis of an ideal, with lookup data for reduction.
pub(crate) struct Basis {
    pub elems: Vec<Elem>,
}

/// An ideal of the ambient polynomial ring. The reduced Gröbner basis is
/// computed on first use and sealed afterwards.
#[derive(Clone)]
pub struct GroebnerIdeal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    basis: Arc<OnceLock<Basis>>,
}

/// Cofactors expressing each reduced basis element in the generators:
/// `basis[k] = sum_l cofactors[k][l] * generators[l]`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub cofactors: Vec<Vec<Polynomial>>,
}

impl std::fmt::Debug for GroebnerIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.generators.iter()).finish()
    }
}

impl GroebnerIdeal {
    /// The ideal generated by `gens`; zero generators are dropped. The basis is
    /// not computed yet.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            ring.check(g.ring())?;
        }
        Ok(GroebnerIdeal {
            ring: ring.clone(),
            generators: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()]).unwrap()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub(crate) fn sealed(&self) -> &Basis {
        self.basis.get_or_init(|| {
            let gens = self.generators.iter().map(|g| g.terms().to_vec()).collect();
            let elems = buchberger::groebner(self.ring.field(), self.ring.order(), gens, false);
            Basis { elems }
        })
    }

    /// The reduced Gröbner basis: monic, sorted by degree, then by leading
    /// monomial descending.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.sealed()
            .elems
            .iter()
            .map(|e| Polynomial::from_canonical(&self.ring, e.terms.clone()))
            .collect()
    }

    pub fn basis_len(&self) -> usize {
        self.sealed().elems.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        let b = &self.sealed().elems;
        b.len() == 1 && b[0].lead.is_one()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check(f.ring())?;
        Ok(Polynomial::from_canonical(&self.ring, self.reduce_terms(f.terms().to_vec())))
    }

    pub(crate) fn reduce_terms(&self, terms: Vec<Term>) -> Vec<Term> {
        if self.is_zero() {
            return terms;
        }
        let ctx = Context {
            field: self.ring.field(),
            order: self.ring.order(),
        };
        ctx.reduce(terms, &self.sealed().elems, None)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &GroebnerIdeal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &GroebnerIdeal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        Ok(self.basis() == other.basis())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sealed().elems.iter().map(|e| e.lead).collect()
    }

    pub fn initial_ideal(&self) -> InitialIdeal {
        InitialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    /// Recomputes the basis while tracking how each element arises from the
    /// generators.
    pub fn certificate(&self) -> Certificate {
        let gens: Vec<Vec<Term>> = self.generators.iter().map(|g| g.terms().to_vec()).collect();
        let elems = buchberger::groebner(self.ring.field(), self.ring.order(), gens, true);
        Certificate {
            cofactors: elems
                .into_iter()
                .map(|e| {
                    e.cof
                        .unwrap()
                        .into_iter()
                        .map(|c| Polynomial::from_canonical(&self.ring, c))
                        .collect()
                })
                .collect(),
        }
    }

    /// Sum of two ideals.
    pub fn sum(&self, other: &GroebnerIdeal) -> Result<GroebnerIdeal> {
        self.ring.check(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        GroebnerIdeal::new(&self.ring, gens)
    }

    /// The ideal generated by `self` and `extra`.
    pub fn extend(&self, extra: &[Polynomial]) -> Result<GroebnerIdeal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        GroebnerIdeal::new(&self.ring, gens)
    }

    /// `I^{[q]}`: the ideal generated by the `q`-th powers of the generators.
    pub fn bracket_power(&self, q: u64) -> Result<GroebnerIdeal> {
        self.ring.field().log_q(q)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.frobenius_power(q))
            .collect::<Result<Vec<_>>>()?;
        GroebnerIdeal::new(&self.ring, gens)
    }

    /// `I ∩ J`, as the `t`-free part of `tI + (1 - t)J` under an order in
    /// which `t` dominates.
    pub fn intersect(&self, other: &GroebnerIdeal) -> Result<GroebnerIdeal> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(GroebnerIdeal::zero(&self.ring));
        }
        let big = self.ring.with_elimination_variable("t")?;
        let t = big.var(big.nvars() - 1);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.embed(&big)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.embed(&big)?);
        }
        let elim = GroebnerIdeal::new(&big, gens)?;
        let tvar = big.nvars() - 1;
        let kept = elim
            .basis()
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(tvar) == 0))
            .map(|g| g.restrict(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        GroebnerIdeal::new(&self.ring, kept)
    }

    /// `(I : f) = {g : g f ∈ I}`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<GroebnerIdeal> {
        self.ring.check(f.ring())?;
        if f.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.is_zero() {
            return Ok(GroebnerIdeal::zero(&self.ring));
        }
        let principal = GroebnerIdeal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .generators()
            .iter()
            .map(|g| g.exact_div(f))
            .collect::<Result<Vec<_>>>()?;
        GroebnerIdeal::new(&self.ring, gens)
    }

    /// `(I : J)` as the intersection of the colons by the generators of `J`.
    pub fn colon_ideal(&self, other: &GroebnerIdeal) -> Result<GroebnerIdeal> {
        let mut acc: Option<GroebnerIdeal> = None;
        for g in other.generators() {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| GroebnerIdeal::unit(&self.ring)))
    }

    /// The same ideal viewed under another order on the same variables.
    pub fn reorder(&self, ring: &PolyRing) -> Result<GroebnerIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.embed(ring))
            .collect::<Result<Vec<_>>>()?;
        GroebnerIdeal::new(ring, gens)
    }

    /// S-polynomials of the reduced basis all reduce to zero.
    pub fn verify_buchberger_criterion(&self) -> bool {
        let b = self.basis();
        let field = self.ring.field();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let (li, lj) = (b[i].leading_monomial().unwrap(), b[j].leading_monomial().unwrap());
                let l = li.lcm(&lj);
                let s = b[i]
                    .mul_term(&li.quotient_of(&l).unwrap(), 1)
                    .add_scaled(field.neg(1), &lj.quotient_of(&l).unwrap(), &b[j])
                    .unwrap();
                if !self.normal_form(&s).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The reduced-basis axioms: monic, and no term of any element divisible by
    /// another element's leading monomial.
    pub fn verify_reduced(&self) -> bool {
        let b = self.basis();
        let leads: Vec<Monomial> = b.iter().map(|g| g.leading_monomial().unwrap()).collect();
        b.iter().enumerate().all(|(i, g)| {
            g.leading_coeff() == Some(1)
                && g.terms().iter().all(|(m, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// All generators must share one ambient ring (whose order is used).
/// An empty or all-zero list yields the zero ideal.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerIdeal> {
    let ideal = GroebnerIdeal::new(ring, gens.to_vec())?;
    ideal.sealed();
    Ok(ideal)
}

#[cfg(test)]
mod tests;
