use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;
use crate::ring::PolyRing;

/// A graded free module `⊕ R(-a_i)`, recorded by the degrees `a_i` of its
/// basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// A homogeneous map of graded free modules, stored by columns: column `j`
/// is the image of the `j`-th source basis element. Entry `(i, j)` is zero or
/// homogeneous of degree `source[j] - target[i]`.
#[derive(Clone)]
pub struct GradedMatrix {
    ring: PolyRing,
    target: Vec<i32>,
    source: Vec<i32>,
    columns: Vec<Vec<Polynomial>>,
}

impl std::fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{:?} <- {:?}", self.target, self.source)?;
        for i in 0..self.nrows() {
            let row: Vec<String> = self.columns.iter().map(|c| c[i].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl GradedMatrix {
    /// Checks shapes and degrees.
    pub fn new(ring: &PolyRing, target: Vec<i32>, source: Vec<i32>, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        if columns.len() != source.len() {
            return Err(Error::LengthMismatch(columns.len(), source.len()));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != target.len() {
                return Err(Error::LengthMismatch(col.len(), target.len()));
            }
            for (i, e) in col.iter().enumerate() {
                ring.check(e.ring())?;
                if e.is_zero() {
                    continue;
                }
                let d = e.homogeneous_degree()?.unwrap() as i64;
                if d != source[j] as i64 - target[i] as i64 {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i}, {j}) = {e} has degree {d}, expected {}",
                        source[j] as i64 - target[i] as i64
                    )));
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            columns,
        })
    }

    /// Infers the source degrees from the entries. Zero columns are dropped.
    pub fn from_columns(ring: &PolyRing, target: Vec<i32>, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut source = Vec::new();
        let mut kept = Vec::new();
        for col in columns {
            if col.len() != target.len() {
                return Err(Error::LengthMismatch(col.len(), target.len()));
            }
            let first = col.iter().enumerate().find(|(_, e)| !e.is_zero());
            if let Some((i, e)) = first {
                let d = e.homogeneous_degree()?.unwrap() as i32;
                source.push(target[i] + d);
                kept.push(col);
            }
        }
        Self::new(ring, target, source, kept)
    }

    pub fn zero(ring: &PolyRing, target: Vec<i32>, source: Vec<i32>) -> Self {
        let columns = source.iter().map(|_| vec![ring.zero(); target.len()]).collect();
        GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            columns,
        }
    }

    pub fn identity(ring: &PolyRing, twists: Vec<i32>) -> Self {
        let n = twists.len();
        let columns = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        GradedMatrix {
            ring: ring.clone(),
            target: twists.clone(),
            source: twists,
            columns,
        }
    }

    pub(crate) fn from_parts_unchecked(
        ring: &PolyRing,
        target: Vec<i32>,
        source: Vec<i32>,
        columns: Vec<Vec<Polynomial>>,
    ) -> Self {
        GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            columns,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn target(&self) -> &[i32] {
        &self.target
    }

    pub fn source(&self) -> &[i32] {
        &self.source
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    /// `self * other`, entries reduced in `ring`.
    pub fn compose(&self, other: &GradedMatrix, ring: &QuotientRing) -> Result<GradedMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::LengthMismatch(self.ncols(), other.nrows()));
        }
        let mut columns = Vec::with_capacity(other.ncols());
        for col in &other.columns {
            let mut out = vec![self.ring.zero(); self.nrows()];
            for (k, c) in col.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, slot) in out.iter_mut().enumerate() {
                    let a = &self.columns[k][i];
                    if !a.is_zero() {
                        *slot = &*slot + &(a * c);
                    }
                }
            }
            for slot in out.iter_mut() {
                *slot = ring.normal_form(slot)?;
            }
            columns.push(out);
        }
        Ok(GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: other.source.clone(),
            columns,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|e| e.is_zero()))
    }

    /// Entries raised to the `q`-th power and reduced in `ring`; degrees scale
    /// by `q`.
    pub fn frobenius(&self, q: u64, ring: &QuotientRing) -> Result<GradedMatrix> {
        let qi = i32::try_from(q).map_err(|_| Error::Overflow(format!("q = {q}")))?;
        let scale = |v: &[i32]| -> Result<Vec<i32>> {
            v.iter()
                .map(|&a| a.checked_mul(qi).ok_or_else(|| Error::Overflow(format!("twist {a} * {q}"))))
                .collect()
        };
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|e| ring.normal_form(&e.frobenius_power(q)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMatrix {
            ring: self.ring.clone(),
            target: scale(&self.target)?,
            source: scale(&self.source)?,
            columns,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.ring.check(&other.ring)?;
        let mut target = self.target.clone();
        target.extend_from_slice(&other.target);
        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        let zero = self.ring.zero();
        let mut columns = Vec::new();
        for c in &self.columns {
            let mut col = c.clone();
            col.extend(std::iter::repeat(zero.clone()).take(other.nrows()));
            columns.push(col);
        }
        for c in &other.columns {
            let mut col = vec![zero.clone(); self.nrows()];
            col.extend(c.iter().cloned());
            columns.push(col);
        }
        Ok(GradedMatrix {
            ring: self.ring.clone(),
            target,
            source,
            columns,
        })
    }

    /// Appends the columns of `other`, which must share the target.
    pub fn concat(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.target != other.target {
            return Err(Error::Invalid("matrices have different targets".into()));
        }
        let mut m = self.clone();
        m.source.extend_from_slice(&other.source);
        m.columns.extend(other.columns.iter().cloned());
        Ok(m)
    }

    pub fn select_columns(&self, keep: &[usize]) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: keep.iter().map(|&j| self.source[j]).collect(),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Whether some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns
            .iter()
            .any(|c| c.iter().any(|e| !e.is_zero() && e.is_constant()))
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| self.columns.iter().map(|c| c[i].to_string()).collect())
            .collect()
    }
}
