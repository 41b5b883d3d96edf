//! Koszul complexes, Euler characteristics against `R/x`, and the
//! length inequalities relating them to the Frobenius functor.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frobenius::{frobenius_module, FrobeniusPower};
use crate::module::{Budget, FreeComplex, GradedMatrix, PresentedModule};
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;

/// A finite sequence of homogeneous elements of positive degree in a
/// quotient ring.
#[derive(Debug, Clone)]
pub struct ElementSequence {
    ring: QuotientRing,
    elements: Vec<Polynomial>,
    degrees: Vec<i32>,
    regular: Option<Vec<bool>>,
}

impl ElementSequence {
    pub fn new(ring: &QuotientRing, elements: &[Polynomial]) -> Result<Self> {
        let mut out = Vec::with_capacity(elements.len());
        let mut degrees = Vec::with_capacity(elements.len());
        for f in elements {
            let g = ring.normal_form(f)?;
            match g.homogeneous_degree()? {
                None => return Err(Error::ZeroElement),
                Some(0) => return Err(Error::Invalid(format!("{g} has degree zero"))),
                Some(d) => degrees.push(d as i32),
            }
            out.push(g);
        }
        Ok(ElementSequence {
            ring: ring.clone(),
            elements: out,
            degrees,
            regular: None,
        })
    }

    pub fn parse(ring: &QuotientRing, texts: &[&str]) -> Result<Self> {
        let elems = texts.iter().map(|t| ring.parse(t)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, &elems)
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Per-prefix verdicts: entry `i` says whether element `i` is a
    /// nonzerodivisor on `R/(x_1, ..., x_{i})`. Computed once and cached.
    pub fn certify(&mut self) -> Result<&[bool]> {
        if self.regular.is_none() {
            let mut verdicts = Vec::with_capacity(self.len());
            let mut ring = self.ring.clone();
            for f in &self.elements {
                let ok = if ring.is_zero_ring() {
                    false
                } else {
                    ring.is_nonzerodivisor(&ring.normal_form(f)?).or_else(|e| match e {
                        Error::ZeroElement => Ok(false),
                        e => Err(e),
                    })?
                };
                verdicts.push(ok);
                ring = ring.quotient_by(std::slice::from_ref(f))?;
            }
            self.regular = Some(verdicts);
        }
        Ok(self.regular.as_deref().unwrap())
    }

    pub fn certificate(&self) -> Option<&[bool]> {
        self.regular.as_deref()
    }

    pub fn is_regular(&mut self) -> Result<bool> {
        Ok(self.certify()?.iter().all(|&b| b))
    }

    /// Whether the sequence is regular on `M`.
    pub fn is_regular_on(&self, m: &PresentedModule, budget: &Budget) -> Result<bool> {
        self.ring.check(m.ring())?;
        let mut cur = m.clone();
        for f in &self.elements {
            if cur.is_zero() || !cur.is_regular_element(f, budget)? {
                return Ok(false);
            }
            cur = cur.quotient_by_element(f)?;
        }
        Ok(true)
    }

    /// `M / (x) M`.
    pub fn quotient_of(&self, m: &PresentedModule) -> Result<PresentedModule> {
        let mut cur = m.clone();
        for f in &self.elements {
            cur = cur.quotient_by_element(f)?;
        }
        Ok(cur)
    }

    /// `R / (x)`.
    pub fn quotient_ring(&self) -> Result<QuotientRing> {
        self.ring.quotient_by(&self.elements)
    }
}

/// Subsets of `0..c` of size `k` in lexicographic order.
fn subsets(c: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, c: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..c {
            cur.push(s);
            rec(s + 1, c, k, cur, out);
            cur.pop();
        }
    }
    rec(0, c, k, &mut cur, &mut out);
    out
}

/// The Koszul complex `K(x)` over the ring of `x`. `K_i` has basis the
/// `i`-subsets of positions in lexicographic order, and
/// `d(e_S) = sum_k (-1)^k x_{s_k} e_{S - s_k}`.
pub fn koszul_complex(x: &ElementSequence) -> Result<FreeComplex> {
    let c = x.len();
    if c == 0 {
        return Err(Error::Invalid("empty element sequence".into()));
    }
    let amb = x.ring.ambient();
    let bases: Vec<Vec<Vec<usize>>> = (0..=c).map(|k| subsets(c, k)).collect();
    let twist = |s: &[usize]| s.iter().map(|&i| x.degrees[i]).sum::<i32>();
    let mut maps = Vec::with_capacity(c);
    for k in 1..=c {
        let target: Vec<i32> = bases[k - 1].iter().map(|s| twist(s)).collect();
        let source: Vec<i32> = bases[k].iter().map(|s| twist(s)).collect();
        let mut columns = Vec::with_capacity(bases[k].len());
        for s in &bases[k] {
            let mut col = vec![amb.zero(); bases[k - 1].len()];
            for (pos, &drop) in s.iter().enumerate() {
                let face: Vec<usize> = s.iter().copied().filter(|&t| t != drop).collect();
                let row = bases[k - 1].binary_search(&face).expect("face is a subset");
                let e = &x.elements[drop];
                col[row] = if pos % 2 == 0 { e.clone() } else { e.neg() };
            }
            columns.push(col);
        }
        maps.push(GradedMatrix::new(amb, target, source, columns)?);
    }
    FreeComplex::new(&x.ring, maps)
}

/// `H_i(x; M)`, the homology of `K(x) ⊗ M`.
pub fn koszul_homology(m: &PresentedModule, x: &ElementSequence, i: usize, budget: &Budget) -> Result<PresentedModule> {
    x.ring.check(m.ring())?;
    if i > x.len() {
        return Ok(PresentedModule::zero(m.ring()));
    }
    koszul_complex(x)?.homology_with(m, i, budget)
}

/// Lengths of `Tor_j(M, R/x)` for `j = 0..=c` with the Euler
/// characteristics built from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerData {
    pub tor_lengths: Vec<u64>,
    pub chi: i64,
    pub chi_i: Vec<i64>,
}

impl EulerData {
    pub fn from_lengths(tor_lengths: Vec<u64>) -> Result<Self> {
        let mut chi_i = vec![0i64; tor_lengths.len()];
        let mut acc: i64 = 0;
        for j in (0..tor_lengths.len()).rev() {
            let l = i64::try_from(tor_lengths[j]).map_err(|_| Error::Overflow("Tor length".into()))?;
            acc = l.checked_sub(acc).ok_or_else(|| Error::Overflow("Euler characteristic".into()))?;
            chi_i[j] = acc;
        }
        Ok(EulerData {
            chi: chi_i.first().copied().unwrap_or(0),
            tor_lengths,
            chi_i,
        })
    }

    /// `chi_i`, which is zero past the end of the complex.
    pub fn chi_at(&self, i: usize) -> i64 {
        self.chi_i.get(i).copied().unwrap_or(0)
    }
}

/// Requires `x` regular on the ring and `M/xM` of finite length.
fn require_regular_finite(m: &PresentedModule, x: &mut ElementSequence) -> Result<()> {
    x.ring.check(m.ring())?;
    if !x.is_regular()? {
        return Err(Error::UnmetHypothesis("the sequence is not regular on the ring".into()));
    }
    if x.quotient_of(m)?.length().finite().is_none() {
        return Err(Error::InfiniteLength);
    }
    Ok(())
}

/// Euler data of `M` against `R/x`. Since `x` is regular on `R`, `K(x)` is a
/// free resolution of `R/x` and its homology against `M` is `Tor(M, R/x)`.
pub fn euler_data(m: &PresentedModule, x: &mut ElementSequence, budget: &Budget) -> Result<EulerData> {
    require_regular_finite(m, x)?;
    let k = koszul_complex(x)?;
    let mut lengths = Vec::with_capacity(x.len() + 1);
    for i in 0..=x.len() {
        let h = k.homology_with(m, i, budget)?;
        lengths.push(h.length().finite().ok_or(Error::InfiniteLength)?);
    }
    EulerData::from_lengths(lengths)
}

/// `chi_i(M, R/x)`.
pub fn chi(m: &PresentedModule, x: &mut ElementSequence, i: usize, budget: &Budget) -> Result<i64> {
    Ok(euler_data(m, x, budget)?.chi_at(i))
}

#[derive(Debug, Clone, Serialize)]
pub struct LichtenbaumReport {
    pub data: EulerData,
    pub c: usize,
    pub dim_module: usize,
    /// Theorem violations; nonempty means an engine bug.
    pub violations: Vec<String>,
}

impl LichtenbaumReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `chi >= 0` with `chi = 0` exactly when `dim M < c`, and for
/// `i >= 1`, `chi_i >= 0` with `chi_i = 0` exactly when `Tor_i` vanishes.
/// Also checks the telescoping identity `chi_i = l(Tor_i) - chi_{i+1}`.
pub fn lichtenbaum_check(m: &PresentedModule, x: &mut ElementSequence, budget: &Budget) -> Result<LichtenbaumReport> {
    let data = euler_data(m, x, budget)?;
    let c = x.len();
    let dim_module = if m.is_zero() { 0 } else { m.dimension()? };
    let mut violations = Vec::new();
    let small = m.is_zero() || dim_module < c;
    if data.chi < 0 {
        violations.push(format!("chi = {} is negative", data.chi));
    }
    if (data.chi == 0) != small {
        violations.push(format!("chi = {} but dim M = {dim_module}, c = {c}", data.chi));
    }
    for i in 0..=c {
        let next = data.chi_at(i + 1);
        if data.chi_i[i] != data.tor_lengths[i] as i64 - next {
            violations.push(format!("telescoping fails at i = {i}"));
        }
        if i == 0 {
            continue;
        }
        if data.chi_i[i] < 0 {
            violations.push(format!("chi_{i} = {} is negative", data.chi_i[i]));
        }
        if (data.chi_i[i] == 0) != (data.tor_lengths[i] == 0) {
            violations.push(format!(
                "chi_{i} = {} while l(Tor_{i}) = {}",
                data.chi_i[i], data.tor_lengths[i]
            ));
        }
    }
    Ok(LichtenbaumReport {
        data,
        c,
        dim_module,
        violations,
    })
}

/// Recorded whenever the inequality is checked: the ring is a complete
/// intersection at each minimal prime of `M`.
pub const LOCAL_CI_ASSUMPTION: &str = "R_p is a complete intersection for every minimal prime p of M: assumed, not verified";

/// Recorded in certificates of equality.
pub const MINIMAL_PRIME_ASSUMPTION: &str = "pd of M_p over R_p is finite for every minimal prime p of M: assumed, not verified";

#[derive(Debug, Clone, Serialize)]
pub struct Prop43Report {
    pub n: u32,
    pub q: u64,
    pub c: usize,
    pub dim_ring: usize,
    pub dim_module: usize,
    /// `l(F^n(M) / x F^n(M))`.
    pub left: u64,
    /// `q^c chi(M, R/x)`.
    pub right: i64,
    pub euler: EulerData,
    pub inequality_holds: bool,
    pub equality: bool,
    /// Whether `F^n(M)` is Cohen-Macaulay; `None` when not decided.
    pub frobenius_cohen_macaulay: Option<bool>,
    pub assumptions: Vec<String>,
    /// Inconsistencies with the theorem; nonempty means an engine bug.
    pub violations: Vec<String>,
}

impl Prop43Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `l(F^n_{R/x}(M/xM))` with `q^c chi(M, R/x)`, `c = dim R - dim M`,
/// for `x` regular on `R` and a system of parameters on `F^n(M)`.
/// Failed hypotheses surface as [`Error::UnmetHypothesis`].
pub fn prop43_check(
    m: &PresentedModule,
    x: &mut ElementSequence,
    f: &FrobeniusPower,
    budget: &Budget,
) -> Result<Prop43Report> {
    x.ring.check(m.ring())?;
    f.ring().check(m.ring())?;
    if m.is_zero() {
        return Err(Error::UnmetHypothesis("the module is zero".into()));
    }
    if !x.is_regular()? {
        return Err(Error::UnmetHypothesis("the sequence is not regular on the ring".into()));
    }
    let fm = frobenius_module(m, f)?;
    let dim_module = fm.dimension()?;
    if dim_module == 0 {
        return Err(Error::UnmetHypothesis("the module must have positive dimension".into()));
    }
    if x.len() != dim_module {
        return Err(Error::UnmetHypothesis(format!(
            "{} elements cannot be a system of parameters on a module of dimension {dim_module}",
            x.len()
        )));
    }
    let left = x
        .quotient_of(&fm)?
        .length()
        .finite()
        .ok_or_else(|| Error::UnmetHypothesis("the sequence is not a system of parameters on F^n(M)".into()))?;
    let dim_ring = x.ring.krull_dimension()?;
    if x.ring.depth(budget)? != dim_ring {
        return Err(Error::UnmetHypothesis("the ring is not Cohen-Macaulay".into()));
    }
    let c = dim_ring - dim_module;
    let euler = euler_data(m, x, budget)?;
    let factor = f
        .q()
        .checked_pow(c as u32)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| Error::Overflow(format!("q^{c}")))?;
    let right = factor
        .checked_mul(euler.chi)
        .ok_or_else(|| Error::Overflow("q^c chi".into()))?;
    let inequality_holds = left as i64 >= right;
    let equality = left as i64 == right;
    let mut violations = Vec::new();
    if !inequality_holds {
        violations.push(format!("{left} < {right}"));
    }
    let mut assumptions = vec![LOCAL_CI_ASSUMPTION.to_string()];
    let mut cm = None;
    if equality {
        assumptions.push(MINIMAL_PRIME_ASSUMPTION.to_string());
        cm = match fm.depth(budget) {
            Ok(d) => Some(d == dim_module),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        if cm == Some(false) {
            violations.push("equality holds but F^n(M) is not Cohen-Macaulay".into());
        }
    }
    Ok(Prop43Report {
        n: f.n(),
        q: f.q(),
        c,
        dim_ring,
        dim_module,
        left,
        right,
        euler,
        inequality_holds,
        equality,
        frobenius_cohen_macaulay: cm,
        assumptions,
        violations,
    })
}
