//! Brute-force graded linear algebra over `F_p`.
//!
//! Every question is answered one degree at a time: the relevant graded piece
//! of a free module over the polynomial ring is spanned by explicit monomial
//! vectors, submodules are spanned by all monomial multiples of their
//! generators, and ranks come from Gaussian elimination. Nothing here uses
//! Groebner bases, so agreement with the main engine is an independent check
//! valid up to the degree examined.

mod echelon;

use std::collections::{BTreeMap, HashMap};

use echelon::Echelon;
use frobrig::{GradedMatrix, Polynomial, PresentedModule, QuotientRing};

/// Exponent vector.
pub type Exps = Vec<u32>;

/// Polynomial as a list of exponent vectors with coefficients in `[0, p)`.
pub type Poly = Vec<(Exps, u64)>;

/// A homogeneous matrix over the polynomial ring, stored by columns.
#[derive(Debug, Clone)]
pub struct Matrix {
    pub target: Vec<i32>,
    pub source: Vec<i32>,
    pub columns: Vec<Vec<Poly>>,
}

pub fn poly(f: &Polynomial) -> Poly {
    f.terms().iter().map(|(m, c)| (m.exponents().to_vec(), *c as u64)).collect()
}

pub fn matrix(m: &GradedMatrix) -> Matrix {
    Matrix {
        target: m.target().to_vec(),
        source: m.source().to_vec(),
        columns: m.columns().iter().map(|c| c.iter().map(poly).collect()).collect(),
    }
}

fn degree(f: &Poly) -> Option<i32> {
    f.first().map(|(e, _)| e.iter().sum::<u32>() as i32)
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: i32) -> Vec<Exps> {
    fn rec(n: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

fn times(a: &Exps, b: &Exps) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Degree `d` piece of a free module with the given twists, modulo a
/// submodule given by spanning columns.
struct Piece {
    index: HashMap<(usize, Exps), usize>,
    relations: Echelon,
}

impl Piece {
    fn dim(&self) -> usize {
        self.index.len() - self.relations.rank()
    }

    fn vector(&self, p: u64, entries: &[(usize, &Poly, &Exps, u64)]) -> BTreeMap<usize, u64> {
        let mut v = BTreeMap::new();
        for &(comp, f, m, scale) in entries {
            for (e, c) in f {
                let key = (comp, times(e, m));
                let col = self.index[&key];
                let slot = v.entry(col).or_insert(0);
                *slot = (*slot + c * scale) % p;
            }
        }
        v.retain(|_, c| *c != 0);
        v
    }

    /// Coordinates of the basis vectors outside the pivot columns.
    fn complement(&self) -> Vec<(usize, Exps)> {
        let mut out: Vec<_> = self
            .index
            .iter()
            .filter(|(_, &col)| !self.relations.is_pivot(col))
            .map(|(k, &col)| (col, k.clone()))
            .collect();
        out.sort();
        out.into_iter().map(|(_, k)| k).collect()
    }
}

/// The degreewise oracle for a quotient ring `S / J`.
#[derive(Debug, Clone)]
pub struct Oracle {
    p: u64,
    nvars: usize,
    ideal: Vec<Poly>,
}

impl Oracle {
    /// `ideal` lists generators of `J`; the engine's reduced basis is not used.
    pub fn new(p: u64, nvars: usize, ideal: Vec<Poly>) -> Self {
        let ideal = ideal.into_iter().filter(|f| !f.is_empty()).collect();
        Oracle { p, nvars, ideal }
    }

    pub fn for_ring(r: &QuotientRing) -> Self {
        Self::new(
            r.characteristic() as u64,
            r.nvars(),
            r.ideal().generators().iter().map(poly).collect(),
        )
    }

    /// The same ring with more generators added to the ideal.
    pub fn with_ideal(&self, extra: &[Poly]) -> Self {
        let mut all = self.ideal.clone();
        all.extend(extra.iter().cloned());
        Self::new(self.p, self.nvars, all)
    }

    fn piece(&self, twists: &[i32], relations: &[&Matrix], d: i32) -> Piece {
        let mut index = HashMap::new();
        for (k, &t) in twists.iter().enumerate() {
            for m in monomials(self.nvars, d - t) {
                let n = index.len();
                index.insert((k, m), n);
            }
        }
        let mut piece = Piece {
            index,
            relations: Echelon::new(self.p),
        };
        let mut rows = Vec::new();
        for (k, &t) in twists.iter().enumerate() {
            for g in &self.ideal {
                let Some(dg) = degree(g) else { continue };
                for m in monomials(self.nvars, d - t - dg) {
                    rows.push(piece.vector(self.p, &[(k, g, &m, 1)]));
                }
            }
        }
        for rel in relations {
            for (j, col) in rel.columns.iter().enumerate() {
                for m in monomials(self.nvars, d - rel.source[j]) {
                    let entries: Vec<_> = col.iter().enumerate().filter(|(_, f)| !f.is_empty()).map(|(k, f)| (k, f, &m, 1)).collect();
                    rows.push(piece.vector(self.p, &entries));
                }
            }
        }
        for r in rows {
            piece.relations.insert(r);
        }
        piece
    }

    /// `dim_k (S/J)_d`.
    pub fn ring_hilbert(&self, d: i32) -> u64 {
        self.piece(&[0], &[], d).dim() as u64
    }

    pub fn ring_hilbert_series(&self, max: i32) -> Vec<u64> {
        (0..=max).map(|d| self.ring_hilbert(d)).collect()
    }

    /// Whether `f` lies in `J`, tested on each homogeneous component.
    pub fn contains(&self, f: &Poly) -> bool {
        let mut by_degree: BTreeMap<i32, Poly> = BTreeMap::new();
        for t in f {
            by_degree.entry(t.0.iter().sum::<u32>() as i32).or_default().push(t.clone());
        }
        by_degree.into_iter().all(|(d, g)| {
            let mut piece = self.piece(&[0], &[], d);
            let one = vec![0; self.nvars];
            let v = piece.vector(self.p, &[(0, &g, &one, 1)]);
            !piece.relations.insert(v)
        })
    }

    /// `dim_k M_d` for `M = coker(presentation)` over `S/J`.
    pub fn module_hilbert(&self, presentation: &Matrix, d: i32) -> u64 {
        self.piece(&presentation.target, &[presentation], d).dim() as u64
    }

    pub fn module_hilbert_series(&self, presentation: &Matrix, lo: i32, hi: i32) -> Vec<u64> {
        (lo..=hi).map(|d| self.module_hilbert(presentation, d)).collect()
    }

    /// `dim_k H_i(C ⊗ M)_d` for a complex of free `S/J`-modules given by its
    /// differentials (`maps[i]` is `C_{i+1} -> C_i`) and an optional module
    /// `M` (the ring when absent).
    pub fn homology(&self, maps: &[Matrix], module: Option<&Matrix>, i: usize, d: i32) -> u64 {
        let unit = Matrix {
            target: vec![0],
            source: vec![],
            columns: vec![],
        };
        let m = module.unwrap_or(&unit);
        let rank_at = |k: usize| -> Vec<i32> {
            if k == 0 {
                maps.first().map(|f| f.target.clone()).unwrap_or_else(|| vec![0])
            } else {
                maps[k - 1].source.clone()
            }
        };
        let tw = |k: usize| -> Vec<i32> {
            let mut out = Vec::new();
            for a in rank_at(k) {
                for &b in &m.target {
                    out.push(a + b);
                }
            }
            out
        };
        let rm = m.target.len();
        let blocks = |k: usize| -> Matrix {
            let ranks = rank_at(k);
            let mut columns = Vec::new();
            let mut source = Vec::new();
            for (a, &ta) in ranks.iter().enumerate() {
                for (j, col) in m.columns.iter().enumerate() {
                    let mut c = vec![Vec::new(); ranks.len() * rm];
                    for (b, f) in col.iter().enumerate() {
                        c[a * rm + b] = f.clone();
                    }
                    columns.push(c);
                    source.push(ta + m.source[j]);
                }
            }
            Matrix {
                target: tw(k),
                source,
                columns,
            }
        };
        let here_rel = blocks(i);
        let here = self.piece(&tw(i), &[&here_rel], d);
        let dim = here.dim();
        let rank_out = if i == 0 || i > maps.len() {
            0
        } else {
            let below_rel = blocks(i - 1);
            let below = self.piece(&tw(i - 1), &[&below_rel], d);
            self.map_rank(&maps[i - 1], rm, &here, &below)
        };
        let rank_in = if i >= maps.len() {
            0
        } else {
            let above_rel = blocks(i + 1);
            let above = self.piece(&tw(i + 1), &[&above_rel], d);
            self.map_rank(&maps[i], rm, &above, &here)
        };
        (dim - rank_out - rank_in) as u64
    }

    /// Rank of `f ⊗ id` from the quotient `from` to the quotient `to`.
    fn map_rank(&self, f: &Matrix, rm: usize, from: &Piece, to: &Piece) -> usize {
        let mut image = Echelon::new(self.p);
        for (comp, mon) in from.complement() {
            let (a, b) = (comp / rm, comp % rm);
            let entries: Vec<_> = f.columns[a]
                .iter()
                .enumerate()
                .filter(|(_, g)| !g.is_empty())
                .map(|(r, g)| (r * rm + b, g, &mon, 1))
                .collect();
            let mut v = to.vector(self.p, &entries);
            to.relations.reduce(&mut v);
            image.insert(v);
        }
        image.rank()
    }
}

/// Hilbert function of a presented module, from the engine types.
pub fn module_series(m: &PresentedModule, lo: i32, hi: i32) -> Vec<u64> {
    Oracle::for_ring(m.ring()).module_hilbert_series(&matrix(m.presentation()), lo, hi)
}
