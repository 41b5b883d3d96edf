//! The Frobenius functor on presented modules and rigidity checks.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::module::{minimal_resolution, BettiTable, Budget, Length, PresentedModule};
use crate::quotient::QuotientRing;

/// Default cap on `q = p^n`.
pub const DEFAULT_MAX_Q: u64 = 1 << 16;

/// The iterate `f^n` of the Frobenius endomorphism of a ring, `q = p^n`.
#[derive(Debug, Clone)]
pub struct FrobeniusPower {
    ring: QuotientRing,
    n: u32,
    q: u64,
}

impl FrobeniusPower {
    pub fn new(ring: &QuotientRing, n: u32) -> Result<Self> {
        Self::with_cap(ring, n, DEFAULT_MAX_Q)
    }

    pub fn with_cap(ring: &QuotientRing, n: u32, max_q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("the Frobenius iterate must be positive".into()));
        }
        let p = ring.characteristic() as u64;
        let q = p
            .checked_pow(n)
            .ok_or_else(|| Error::Overflow(format!("{p}^{n}")))?;
        if q > max_q {
            return Err(Error::Overflow(format!("q = {q} exceeds the cap {max_q}")));
        }
        Ok(FrobeniusPower {
            ring: ring.clone(),
            n,
            q,
        })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// `F^n(M)`: the presentation matrix with entries raised to the `q`-th power.
pub fn frobenius_module(m: &PresentedModule, f: &FrobeniusPower) -> Result<PresentedModule> {
    f.ring.check(m.ring())?;
    let p = m.presentation().frobenius(f.q, &f.ring)?;
    PresentedModule::new(&f.ring, p)
}

/// `Tor_i(M, f^n R)`, the homology of the Frobenius-transformed minimal
/// resolution of `M`.
pub fn tor_frobenius(m: &PresentedModule, f: &FrobeniusPower, i: usize, budget: &Budget) -> Result<PresentedModule> {
    f.ring.check(m.ring())?;
    if i == 0 {
        return frobenius_module(m, f);
    }
    let res = minimal_resolution(m, i + 1, budget)?;
    if !res.exact_through(i + 1) {
        return Err(Error::Budget(format!(
            "resolution through step {} not complete under the degree cap",
            i + 1
        )));
    }
    res.complex.frobenius(f.q)?.homology(i, budget)
}

/// Status of one Tor module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorStatus {
    Zero,
    Nonzero,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorEntry {
    pub i: usize,
    pub n: u32,
    pub status: TorStatus,
    /// Length when finite; `None` when infinite or not computed.
    pub length: Option<u64>,
}

fn tor_entries(
    m: &PresentedModule,
    f: &FrobeniusPower,
    i_max: usize,
    budget: &Budget,
) -> Result<Vec<TorEntry>> {
    let mut out = Vec::new();
    let res = minimal_resolution(m, i_max + 1, budget)?;
    let cx = res.complex.frobenius(f.q)?;
    for i in 1..=i_max {
        if !res.exact_through(i + 1) {
            out.push(TorEntry {
                i,
                n: f.n,
                status: TorStatus::Indeterminate,
                length: None,
            });
            continue;
        }
        let h = match cx.homology(i, budget) {
            Ok(h) => h,
            Err(e) if e.is_budget() => {
                out.push(TorEntry {
                    i,
                    n: f.n,
                    status: TorStatus::Indeterminate,
                    length: None,
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        let zero = h.is_zero();
        out.push(TorEntry {
            i,
            n: f.n,
            status: if zero { TorStatus::Zero } else { TorStatus::Nonzero },
            length: h.length().finite(),
        });
    }
    Ok(out)
}

/// Report of the Peskine–Szpiro/Herzog criterion on one module.
#[derive(Debug, Clone, Serialize)]
pub struct PshReport {
    pub tor: Vec<TorEntry>,
    pub pd_finite: Option<bool>,
    pub complete_intersection: bool,
    /// Theorem violations; nonempty means an engine bug.
    pub violations: Vec<String>,
    pub vacuous: bool,
}

impl PshReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `pd M < infinity` iff the computed `Tor_i(M, f^n R)` vanish for
/// `1 <= i <= i_max`. Finite pd forcing vanishing is always checked. Over
/// complete intersections, a single vanishing must force finite pd; over
/// other rings, infinite pd must show some nonvanishing once `i_max`
/// exceeds the depth of the ring.
pub fn psh_vanishing_check(
    m: &PresentedModule,
    f: &FrobeniusPower,
    i_max: usize,
    budget: &Budget,
) -> Result<PshReport> {
    let ci = f.ring.is_complete_intersection()?;
    if m.is_zero() {
        return Ok(PshReport {
            tor: Vec::new(),
            pd_finite: Some(true),
            complete_intersection: ci,
            violations: Vec::new(),
            vacuous: true,
        });
    }
    let depth_ring = f.ring.depth(budget)?;
    let pd = match m.is_finite_pd_given_depth(depth_ring, budget) {
        Ok(v) => Some(v.finite),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let tor = tor_entries(m, f, i_max, budget)?;
    let mut violations = Vec::new();
    if pd == Some(true) {
        for t in &tor {
            if t.status == TorStatus::Nonzero {
                violations.push(format!("pd finite but Tor_{} nonzero for n = {}", t.i, t.n));
            }
        }
    }
    if pd == Some(false) {
        let zeros: Vec<usize> = tor.iter().filter(|t| t.status == TorStatus::Zero).map(|t| t.i).collect();
        if ci {
            for i in zeros {
                violations.push(format!("complete intersection, pd infinite, yet Tor_{i} vanishes"));
            }
        } else if i_max > depth_ring && tor.iter().all(|t| t.status == TorStatus::Zero) {
            violations.push("pd infinite, yet all computed Tor vanish".into());
        }
    }
    Ok(PshReport {
        tor,
        pd_finite: pd,
        complete_intersection: ci,
        violations,
        vacuous: false,
    })
}

/// Hypotheses on the ring that the engine does not verify; they are copied
/// into every certificate that relies on them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RingAssumptions {
    pub gorenstein: bool,
    pub isolated_singularity: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessVerdict {
    NotStronglyRigid,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityWitness {
    pub verdict: WitnessVerdict,
    pub n: u32,
    pub q: u64,
    pub pd_finite: bool,
    pub depth_ring: usize,
    /// Present when `pd L` is infinite.
    pub depth_frobenius: Option<usize>,
    pub betti: BettiTable,
    pub assumptions: RingAssumptions,
    pub reason: String,
}

/// Over a Gorenstein ring with isolated singularity and positive dimension,
/// if `f^n R` were strongly rigid then `depth F^n(L) = 0` for every `L` of
/// infinite projective dimension. So `pd L = infinity` together with
/// `depth F^n(L) > 0` witnesses that `f^n R` is not strongly rigid.
pub fn strong_rigidity_witness(
    l: &PresentedModule,
    f: &FrobeniusPower,
    assumptions: &RingAssumptions,
    budget: &Budget,
) -> Result<RigidityWitness> {
    if !assumptions.gorenstein || !assumptions.isolated_singularity {
        return Err(Error::UnmetHypothesis(
            "the ring must be asserted Gorenstein with an isolated singularity".into(),
        ));
    }
    if f.ring.krull_dimension()? == 0 {
        return Err(Error::UnmetHypothesis("the ring must have positive dimension".into()));
    }
    let pd = l.is_finite_pd(budget)?;
    let mut w = RigidityWitness {
        verdict: WitnessVerdict::Inconclusive,
        n: f.n,
        q: f.q,
        pd_finite: pd.finite,
        depth_ring: pd.depth_ring,
        depth_frobenius: None,
        betti: pd.betti,
        assumptions: assumptions.clone(),
        reason: String::new(),
    };
    if pd.finite {
        w.reason = "pd finite".into();
        return Ok(w);
    }
    let fl = frobenius_module(l, f)?;
    let depth = fl.depth(budget)?;
    w.depth_frobenius = Some(depth);
    if depth > 0 {
        w.verdict = WitnessVerdict::NotStronglyRigid;
        w.reason = format!("pd infinite and depth F^{}(L) = {depth} > 0", f.n);
    } else {
        w.reason = format!("depth F^{}(L) = 0", f.n);
    }
    Ok(w)
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericalReport {
    pub n: u32,
    pub dim_ring: usize,
    pub length: u64,
    pub frobenius_length: u64,
    /// `p^{n d} * length`.
    pub expected: u64,
    pub equal: bool,
    pub complete_intersection: bool,
    pub pd_finite: Option<bool>,
    /// Set when the outcome contradicts the theorem over complete
    /// intersections.
    pub discrepancy: Option<String>,
}

/// Compares `l(F^n M)` with `p^{nd} l(M)` for a module of finite length.
/// Over complete intersections the two agree exactly when `pd M` is finite;
/// any disagreement there is reported as a discrepancy.
pub fn numerical_rigidity_check(m: &PresentedModule, f: &FrobeniusPower, budget: &Budget) -> Result<NumericalReport> {
    let len = m.length().finite().ok_or(Error::InfiniteLength)?;
    let d = f.ring.krull_dimension()?;
    let fl = match frobenius_module(m, f)?.length() {
        Length::Finite(n) => n,
        Length::Infinite => return Err(Error::InfiniteLength),
    };
    let factor = f
        .q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Overflow(format!("q^{d}")))?;
    let expected = factor
        .checked_mul(len)
        .ok_or_else(|| Error::Overflow("p^(nd) * length".into()))?;
    let ci = f.ring.is_complete_intersection()?;
    let equal = fl == expected;
    let mut report = NumericalReport {
        n: f.n,
        dim_ring: d,
        length: len,
        frobenius_length: fl,
        expected,
        equal,
        complete_intersection: ci,
        pd_finite: None,
        discrepancy: None,
    };
    if ci && !m.is_zero() {
        let pd = m.is_finite_pd(budget)?;
        report.pd_finite = Some(pd.finite);
        if pd.finite != equal {
            report.discrepancy = Some(format!(
                "complete intersection with pd {} but lengths {} {} {}",
                if pd.finite { "finite" } else { "infinite" },
                fl,
                if equal { "=" } else { "!=" },
                expected
            ));
        }
    } else if m.is_zero() {
        report.pd_finite = Some(true);
    }
    Ok(report)
}

/// SHA-256 of the canonical description file of a module, so a report
/// can be checked against the inputs that produced it.
pub fn presentation_hash(m: &PresentedModule) -> String {
    let text = crate::io::write_ring_file(None, m.ring(), Some(m));
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Everything computed about one module and a range of Frobenius iterates.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub module_id: String,
    pub presentation_hash: String,
    pub frobenius_hashes: Vec<(u32, String)>,
    pub tor: Vec<TorEntry>,
    pub depth_frobenius: Vec<(u32, Option<usize>)>,
    pub pd_finite: Option<bool>,
    pub betti: Option<BettiTable>,
    pub strong_rigidity_witness: Option<WitnessVerdict>,
    pub numerically_rigid: Option<bool>,
    pub assumptions: RingAssumptions,
}

/// Assembles a [`RigidityReport`] over the iterates `ns` and `1 <= i <= i_max`.
pub fn rigidity_report(
    module_id: &str,
    m: &PresentedModule,
    ns: &[u32],
    i_max: usize,
    assumptions: &RingAssumptions,
    budget: &Budget,
) -> Result<RigidityReport> {
    let ring = m.ring();
    let pd = match m.is_finite_pd(budget) {
        Ok(v) => Some(v),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let mut report = RigidityReport {
        module_id: module_id.to_string(),
        presentation_hash: presentation_hash(m),
        frobenius_hashes: Vec::new(),
        tor: Vec::new(),
        depth_frobenius: Vec::new(),
        pd_finite: pd.as_ref().map(|v| v.finite),
        betti: pd.as_ref().map(|v| v.betti.clone()),
        strong_rigidity_witness: None,
        numerically_rigid: None,
        assumptions: assumptions.clone(),
    };
    let mut witness_found = false;
    for &n in ns {
        let f = FrobeniusPower::new(ring, n)?;
        let fm = frobenius_module(m, &f)?;
        report.frobenius_hashes.push((n, presentation_hash(&fm)));
        report.tor.extend(tor_entries(m, &f, i_max, budget)?);
        let depth = if fm.is_zero() {
            None
        } else {
            match fm.depth(budget) {
                Ok(d) => Some(d),
                Err(e) if e.is_budget() => None,
                Err(e) => return Err(e),
            }
        };
        report.depth_frobenius.push((n, depth));
        if pd.as_ref().is_some_and(|v| !v.finite) && depth.is_some_and(|d| d > 0) {
            witness_found = true;
        }
        if m.length().finite().is_some() {
            // Equality of lengths at some n must come with finite pd.
            let num = numerical_rigidity_check(m, &f, budget)?;
            let consistent = !num.equal || report.pd_finite != Some(false);
            report.numerically_rigid = Some(report.numerically_rigid.unwrap_or(true) && consistent);
        }
    }
    if assumptions.gorenstein && assumptions.isolated_singularity && ring.krull_dimension()? > 0 {
        report.strong_rigidity_witness = Some(if witness_found {
            WitnessVerdict::NotStronglyRigid
        } else {
            WitnessVerdict::Inconclusive
        });
    }
    Ok(report)
}
