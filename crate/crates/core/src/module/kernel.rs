//! Kernels of maps into quotients of free modules, via the engine.

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::{normalize, Polynomial, Term};
use crate::quotient::QuotientRing;

use super::engine::{Budget, Engine, Input, Layout, MTerm, ModuleOrder, Output};
use super::matrix::GradedMatrix;

pub(crate) fn column_terms(col: &[Polynomial], offset: u32) -> Vec<MTerm> {
    let mut out = Vec::new();
    for (i, p) in col.iter().enumerate() {
        for &(m, c) in p.terms() {
            out.push((m, i as u32 + offset, c));
        }
    }
    out
}

pub(crate) fn terms_to_column(ring: &QuotientRing, terms: &[MTerm], offset: u32, len: usize) -> Vec<Polynomial> {
    let mut rows: Vec<Vec<Term>> = vec![Vec::new(); len];
    for &(m, c, k) in terms {
        rows[(c - offset) as usize].push((m, k));
    }
    let amb = ring.ambient();
    rows.into_iter()
        .map(|t| Polynomial::from_canonical(amb, normalize(amb.field(), amb.order(), t)))
        .collect()
}

/// Result of [`kernel`].
pub(crate) struct Kernel {
    /// Generators of the kernel, as columns over the kept source basis.
    pub syzygies: GradedMatrix,
    /// Source columns retained (all of them unless redundant ones were dropped).
    pub kept: Vec<usize>,
    pub truncated: bool,
}

/// `{a in F_src : psi(a) in U + J F_tgt}` for `psi = map` and `U` the columns of
/// `relations`. With `drop_redundant`, source columns that are superfluous
/// generators of `im(psi) + U` (modulo `U`) are deleted first; the syzygies
/// returned are then minimal.
pub(crate) fn kernel(
    ring: &QuotientRing,
    map: &GradedMatrix,
    relations: Option<&GradedMatrix>,
    drop_redundant: bool,
    order: ModuleOrder,
    budget: &Budget,
) -> Result<Kernel> {
    let ntop = map.nrows();
    let mut twists = map.target().to_vec();
    twists.extend_from_slice(map.source());
    let layout = Layout {
        order: ring.ambient().order(),
        twists,
        ntop,
        kind: order,
    };
    let nvars = ring.nvars();
    let mut inputs = Vec::new();
    if let Some(u) = relations {
        for col in u.columns() {
            inputs.push(Input {
                terms: column_terms(col, 0),
            });
        }
    }
    let nrel = inputs.len();
    for (k, col) in map.columns().iter().enumerate() {
        let mut t = column_terms(col, 0);
        t.push((Monomial::one(nvars), (ntop + k) as u32, 1));
        inputs.push(Input { terms: t });
    }
    let engine = Engine::new(ring.ambient().field(), layout, ring.reducers());
    let out: Output = engine.run(inputs, drop_redundant, budget)?;

    let mut kept: Vec<usize> = (0..map.ncols()).collect();
    if drop_redundant {
        let dropped: Vec<usize> = out.redundant.iter().filter(|&&k| k >= nrel).map(|k| k - nrel).collect();
        kept.retain(|k| !dropped.contains(k));
    }
    let mut position = vec![usize::MAX; map.ncols()];
    for (p, &k) in kept.iter().enumerate() {
        position[k] = p;
    }
    let src: Vec<i32> = kept.iter().map(|&k| map.source()[k]).collect();
    let mut columns = Vec::with_capacity(out.syzygies.len());
    let mut degrees = Vec::with_capacity(out.syzygies.len());
    for s in &out.syzygies {
        let remapped: Vec<MTerm> = s
            .iter()
            .map(|&(m, c, k)| (m, position[c as usize - ntop] as u32, k))
            .collect();
        let (m0, c0, _) = remapped[0];
        degrees.push(m0.degree() as i32 + src[c0 as usize]);
        columns.push(terms_to_column(ring, &remapped, 0, kept.len()));
    }
    let syzygies = GradedMatrix::from_parts_unchecked(ring.ambient(), src, degrees, columns);
    Ok(Kernel {
        syzygies,
        kept,
        truncated: out.truncated,
    })
}

/// Basis of `U + J F` with top leading terms, in creation order.
pub(crate) fn submodule_basis(
    ring: &QuotientRing,
    twists: &[i32],
    relations: &GradedMatrix,
    order: ModuleOrder,
    budget: &Budget,
) -> Result<(Vec<Vec<MTerm>>, bool)> {
    let layout = Layout {
        order: ring.ambient().order(),
        twists: twists.to_vec(),
        ntop: twists.len(),
        kind: order,
    };
    let inputs = relations
        .columns()
        .iter()
        .map(|c| Input {
            terms: column_terms(c, 0),
        })
        .collect();
    let engine = Engine::new(ring.ambient().field(), layout, ring.reducers());
    let out = engine.run(inputs, false, budget)?;
    Ok((out.top, out.truncated))
}

/// Indices of columns forming a minimal generating set of their span, found
/// by discarding each column that reduces to zero against the basis of the
/// earlier ones (taken degree by degree).
pub(crate) fn minimal_columns(ring: &QuotientRing, map: &GradedMatrix, budget: &Budget) -> Result<Vec<usize>> {
    let layout = Layout {
        order: ring.ambient().order(),
        twists: map.target().to_vec(),
        ntop: map.nrows(),
        kind: ModuleOrder::default(),
    };
    let inputs = map
        .columns()
        .iter()
        .map(|c| Input {
            terms: column_terms(c, 0),
        })
        .collect();
    let engine = Engine::new(ring.ambient().field(), layout, ring.reducers());
    let mut kept = engine.run(inputs, true, budget)?.kept;
    kept.sort_unstable();
    Ok(kept)
}
