use crate::error::{Error, Result};
use crate::quotient::QuotientRing;

use super::engine::{Budget, ModuleOrder};
use super::kernel;
use super::matrix::GradedMatrix;
use super::resolution::prune_units;
use super::PresentedModule;

/// A complex of graded free modules `C_0 <- C_1 <- ... <- C_n`.
#[derive(Debug, Clone)]
pub struct FreeComplex {
    ring: QuotientRing,
    twists: Vec<Vec<i32>>,
    maps: Vec<GradedMatrix>,
}

impl FreeComplex {
    /// `maps[i]` is `d_{i+1}: C_{i+1} -> C_i`. Shapes are checked, and so is
    /// `d_i d_{i+1} = 0`.
    pub fn new(ring: &QuotientRing, maps: Vec<GradedMatrix>) -> Result<Self> {
        let mut twists = Vec::new();
        if let Some(first) = maps.first() {
            twists.push(first.target().to_vec());
        }
        for (i, m) in maps.iter().enumerate() {
            ring.ambient().check(m.ring())?;
            if m.target() != twists[i].as_slice() {
                return Err(Error::Invalid(format!("d{} does not land in C{}", i + 1, i)));
            }
            twists.push(m.source().to_vec());
        }
        let c = FreeComplex {
            ring: ring.clone(),
            twists,
            maps,
        };
        c.check()?;
        Ok(c)
    }

    pub(crate) fn from_parts(ring: &QuotientRing, twists: Vec<Vec<i32>>, maps: Vec<GradedMatrix>) -> Self {
        FreeComplex {
            ring: ring.clone(),
            twists,
            maps,
        }
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Number of differentials.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Degrees of the basis of `C_i` (empty beyond the ends).
    pub fn twists(&self, i: usize) -> &[i32] {
        self.twists.get(i).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }

    /// `d_i: C_i -> C_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<&GradedMatrix> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.maps
    }

    /// Verifies `d_i d_{i+1} = 0` over the ring.
    pub fn check(&self) -> Result<()> {
        for i in 1..self.maps.len() {
            let comp = self.maps[i - 1].compose(&self.maps[i], &self.ring)?;
            if !comp.is_zero() {
                return Err(Error::NotAComplex(i, i + 1));
            }
        }
        Ok(())
    }

    /// The complex with every differential raised to the `q`-th power.
    pub fn frobenius(&self, q: u64) -> Result<FreeComplex> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.frobenius(q, &self.ring))
            .collect::<Result<Vec<_>>>()?;
        let mut twists: Vec<Vec<i32>> = Vec::new();
        for t in &self.twists {
            twists.push(
                t.iter()
                    .map(|&a| {
                        a.checked_mul(q as i32)
                            .ok_or_else(|| Error::Overflow(format!("twist {a} * {q}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(FreeComplex::from_parts(&self.ring, twists, maps))
    }

    /// `H_i = ker d_i / im d_{i+1}`.
    pub fn homology(&self, i: usize, budget: &Budget) -> Result<PresentedModule> {
        homology_of(
            &self.ring,
            self.twists(i),
            self.differential(i),
            self.differential(i + 1),
            None,
            None,
            budget,
        )
    }

    /// `H_i(C ⊗ M)`.
    pub fn homology_with(&self, m: &PresentedModule, i: usize, budget: &Budget) -> Result<PresentedModule> {
        self.ring.check(m.ring())?;
        let f0 = m.generator_degrees();
        let here = tensor_twists(self.twists(i), f0);
        let d_i = self.differential(i).map(|d| tensor_map(d, f0));
        let d_next = self.differential(i + 1).map(|d| tensor_map(d, f0));
        let rel_here = tensor_relations(&self.ring, self.twists(i), m);
        let rel_prev = if i > 0 {
            Some(tensor_relations(&self.ring, self.twists(i - 1), m))
        } else {
            None
        };
        homology_of(
            &self.ring,
            &here,
            d_i.as_ref(),
            d_next.as_ref(),
            rel_prev.as_ref(),
            Some(&rel_here),
            budget,
        )
    }
}

fn tensor_twists(c: &[i32], f0: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(c.len() * f0.len());
    for &a in c {
        for &b in f0 {
            out.push(a + b);
        }
    }
    out
}

/// `d ⊗ id_F` on bases ordered block by block.
fn tensor_map(d: &GradedMatrix, f0: &[i32]) -> GradedMatrix {
    let r = f0.len();
    let amb = d.ring();
    let target = tensor_twists(d.target(), f0);
    let source = tensor_twists(d.source(), f0);
    let mut cols = Vec::with_capacity(source.len());
    for j in 0..d.ncols() {
        for s in 0..r {
            let mut col = vec![amb.zero(); target.len()];
            for i in 0..d.nrows() {
                col[i * r + s] = d.entry(i, j).clone();
            }
            cols.push(col);
        }
    }
    GradedMatrix::from_parts_unchecked(amb, target, source, cols)
}

/// The relations of `C ⊗ M` in one homological degree.
fn tensor_relations(ring: &QuotientRing, c: &[i32], m: &PresentedModule) -> GradedMatrix {
    let p = m.presentation();
    let r = p.nrows();
    let amb = ring.ambient();
    let target = tensor_twists(c, p.target());
    let mut source = Vec::new();
    let mut cols = Vec::new();
    for (a, &ta) in c.iter().enumerate() {
        for (j, col) in p.columns().iter().enumerate() {
            let mut v = vec![amb.zero(); target.len()];
            for (k, e) in col.iter().enumerate() {
                v[a * r + k] = e.clone();
            }
            cols.push(v);
            source.push(ta + p.source()[j]);
        }
    }
    GradedMatrix::from_parts_unchecked(amb, target, source, cols)
}

/// Homology at a spot of a complex of presented modules whose free parts
/// are `C` and whose relations are `U`: cycles are `{a : d a in U_{i-1}}`,
/// boundaries are `im d_{i+1} + U_i`.
pub(crate) fn homology_of(
    ring: &QuotientRing,
    here: &[i32],
    d_i: Option<&GradedMatrix>,
    d_next: Option<&GradedMatrix>,
    rel_prev: Option<&GradedMatrix>,
    rel_here: Option<&GradedMatrix>,
    budget: &Budget,
) -> Result<PresentedModule> {
    let amb = ring.ambient();
    let cycles = match d_i {
        Some(d) if d.nrows() > 0 => {
            let k = kernel::kernel(ring, d, rel_prev, false, ModuleOrder::default(), budget)?;
            if k.truncated {
                return Err(Error::Budget("cycles truncated by the degree cap".into()));
            }
            k.syzygies
        }
        _ => GradedMatrix::identity(amb, here.to_vec()),
    };
    if cycles.ncols() == 0 {
        return Ok(PresentedModule::zero(ring));
    }
    let mut boundary = GradedMatrix::zero(amb, here.to_vec(), Vec::new());
    if let Some(d) = d_next {
        boundary = boundary.concat(d)?;
    }
    if let Some(u) = rel_here {
        boundary = boundary.concat(u)?;
    }
    let k = kernel::kernel(ring, &cycles, Some(&boundary), false, ModuleOrder::default(), budget)?;
    if k.truncated {
        return Err(Error::Budget("relations of homology truncated by the degree cap".into()));
    }
    let pres = prune_units(ring, &k.syzygies)?;
    PresentedModule::new(ring, pres)
}
