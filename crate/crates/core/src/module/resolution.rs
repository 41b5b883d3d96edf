//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;

use super::engine::{Budget, ModuleOrder};
use super::kernel;
use super::matrix::GradedMatrix;
use super::{FreeComplex, PresentedModule};

/// Graded Betti numbers `beta_{i,j}`, keyed by homological degree `i` and
/// internal degree `j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn from_ranks(twists: &[Vec<i32>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, t) in twists.iter().enumerate() {
            for &j in t {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti number `beta_i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, i32::MIN)..=(i, i32::MAX)).map(|(_, v)| v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|k| k.0).max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|i| self.total(i)).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (&(i, j), b) in &self.entries {
            map.serialize_entry(&format!("{i},{j}"), b)?;
        }
        map.end()
    }
}

/// A minimal free resolution, possibly cut off by a degree cap or a step
/// count.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub complex: FreeComplex,
    pub betti: BettiTable,
    /// Degree cap in force; Betti numbers are exact in internal degrees up to
    /// it.
    pub degree_cap: Option<i32>,
    /// Whether some step had work above the cap.
    pub truncated: bool,
    /// Whether the resolution reached a zero module (so it is complete).
    pub finished: bool,
}

impl Resolution {
    /// Length, known only when the resolution finished.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.finished {
            return None;
        }
        Some(self.complex.len())
    }

    /// Whether the first `steps` differentials are known in every degree.
    pub fn exact_through(&self, steps: usize) -> bool {
        self.finished || (!self.truncated && self.complex.len() >= steps)
    }
}

/// Deletes unit entries: each nonzero constant at `(i, j)` lets generator `i`
/// and relation `j` be removed after clearing row `i`.
pub(crate) fn prune_units(ring: &QuotientRing, m: &GradedMatrix) -> Result<GradedMatrix> {
    let amb = m.ring().clone();
    let field = amb.field();
    let mut target = m.target().to_vec();
    let mut source = m.source().to_vec();
    let mut cols: Vec<Vec<Polynomial>> = m.columns().to_vec();
    loop {
        let mut hit = None;
        'search: for (j, c) in cols.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                if !e.is_zero() && e.is_constant() {
                    hit = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = hit else { break };
        let pivot = cols[j].clone();
        let inv = field.inv(pivot[i].leading_coeff().unwrap());
        let one = crate::monomial::Monomial::one(amb.nvars());
        for (l, col) in cols.iter_mut().enumerate() {
            if l == j || col[i].is_zero() {
                continue;
            }
            let factor = col[i].scale(field.neg(inv));
            for (r, e) in col.iter_mut().enumerate() {
                if !pivot[r].is_zero() {
                    let prod = &factor * &pivot[r];
                    *e = ring.normal_form(&e.add_scaled(1, &one, &prod)?)?;
                }
            }
        }
        cols.remove(j);
        source.remove(j);
        for col in cols.iter_mut() {
            col.remove(i);
        }
        target.remove(i);
        cols.retain(|c| c.iter().any(|e| !e.is_zero()));
        source = Vec::new();
        for c in &cols {
            let (r, e) = c.iter().enumerate().find(|(_, e)| !e.is_zero()).unwrap();
            source.push(target[r] + e.degree().unwrap() as i32);
        }
    }
    Ok(GradedMatrix::from_parts_unchecked(&amb, target, source, cols))
}

/// Minimal graded free resolution of `m` through `steps` differentials.
///
/// With a degree cap every step is computed only up to that internal degree;
/// the Betti numbers reported are then exact in degrees `<= cap`.
pub fn minimal_resolution(m: &PresentedModule, steps: usize, budget: &Budget) -> Result<Resolution> {
    minimal_resolution_with(m, steps, budget, ModuleOrder::default())
}

pub(crate) fn minimal_resolution_with(
    m: &PresentedModule,
    steps: usize,
    budget: &Budget,
    order: ModuleOrder,
) -> Result<Resolution> {
    let ring = m.ring();
    let mut phi = prune_units(ring, m.presentation())?;
    let mut maps: Vec<GradedMatrix> = Vec::new();
    let mut twists: Vec<Vec<i32>> = vec![phi.target().to_vec()];
    let mut truncated = false;
    let mut finished = phi.nrows() == 0;
    if !finished {
        for step in 1..=steps {
            budget.check(0)?;
            let k = kernel::kernel(ring, &phi, None, true, order, budget)?;
            truncated |= k.truncated;
            let kept = phi.select_columns(&k.kept);
            if kept.ncols() == 0 && !truncated {
                finished = true;
                break;
            }
            twists.push(kept.source().to_vec());
            maps.push(kept);
            phi = k.syzygies;
            if step == steps && phi.ncols() == 0 && !truncated {
                finished = true;
            }
        }
    }
    let complex = FreeComplex::from_parts(ring, twists.clone(), maps);
    Ok(Resolution {
        complex,
        betti: BettiTable::from_ranks(&twists),
        degree_cap: budget.max_degree,
        truncated,
        finished,
    })
}

/// Outcome of the finite projective dimension test.
#[derive(Debug, Clone)]
pub struct PdVerdict {
    pub finite: bool,
    /// The projective dimension when finite.
    pub pd: Option<usize>,
    pub depth_ring: usize,
    pub betti: BettiTable,
    /// Degree cap under which the certificate was obtained (`None` when the
    /// resolution was computed in all degrees).
    pub certified_degree: Option<i32>,
}

impl PresentedModule {
    /// Decides `pd M < infinity` by the Auslander–Buchsbaum bound: the answer
    /// is yes iff `beta_{depth R + 1}(M) = 0`. Nonvanishing is certified by a
    /// degree-capped resolution; vanishing needs one computed in every degree.
    pub fn is_finite_pd(&self, budget: &Budget) -> Result<PdVerdict> {
        let depth_ring = PresentedModule::free(self.ring(), vec![0]).depth(budget)?;
        self.is_finite_pd_given_depth(depth_ring, budget)
    }

    pub fn is_finite_pd_given_depth(&self, depth_ring: usize, budget: &Budget) -> Result<PdVerdict> {
        let k = depth_ring + 1;
        let base = self.generator_degrees().iter().copied().max().unwrap_or(0);
        let user_cap = budget.max_degree;
        let mut caps: Vec<Option<i32>> = (1..=3)
            .map(|t| Some(base + (t * k) as i32))
            .filter(|c| user_cap.map_or(true, |u| c.unwrap() < u))
            .collect();
        caps.push(user_cap);
        for cap in caps {
            let b = Budget {
                max_degree: cap,
                ..budget.clone()
            };
            let res = minimal_resolution(self, k, &b)?;
            if res.betti.total(k) > 0 {
                return Ok(PdVerdict {
                    finite: false,
                    pd: None,
                    depth_ring,
                    betti: res.betti,
                    certified_degree: cap,
                });
            }
            if !res.truncated {
                return Ok(PdVerdict {
                    finite: true,
                    pd: Some(res.betti.totals().len().saturating_sub(1)),
                    depth_ring,
                    betti: res.betti,
                    certified_degree: None,
                });
            }
        }
        Err(Error::Budget(format!(
            "beta_{k} vanishes through degree {} but the resolution was truncated",
            user_cap.unwrap_or(0)
        )))
    }
}
