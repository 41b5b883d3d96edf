//! Declarative scenarios: a text file names the computation, its parameters
//! and budget, and the expected value of every check. The runner computes
//! each check and compares.
//!
//! ```text
//! scenario <id>
//! about    <free text>
//! param    <name> <integer>
//! assume   gorenstein | isolated-singularity
//! budget   max-degree | max-elements | seconds <integer>
//! expect   <check> <value> <provenance> [| <note>]
//! ```
//! `<value>` is compared as a string, except that `>k`, `>=k` and `!=k`
//! compare integers. `<provenance>` is one of `stated` (a claim of the
//! source material), `immediate` (follows from the definitions) or
//! `recomputed` (derived and cross-checked by the independent oracle).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use frobrig::frobenius::TorStatus;
use frobrig::{
    frobenius_module, prop43_check, psh_vanishing_check, strong_rigidity_witness, Budget, ElementSequence, Error,
    FrobeniusPower, PolyRing, PresentedModule, QuotientRing, Result, RingAssumptions, WitnessVerdict,
};

use crate::artinian::generate_artinian_frobenius_trivial;
use crate::determinantal::{build_determinantal, check_family, module_l, module_n, with_powers};
use crate::families::{finite_length_modules, regular_plane_modules};
use crate::sweeps::{length_sweep, vanishing_sweep};

const BUILTIN: &[(&str, &str)] = &[
    ("lemma-3.2", include_str!("../scenarios/lemma-3.2.scn")),
    ("example-3.6", include_str!("../scenarios/example-3.6.scn")),
    ("remark-4.6", include_str!("../scenarios/remark-4.6.scn")),
    ("kunz-regular", include_str!("../scenarios/kunz-regular.scn")),
    ("psh-hypersurface", include_str!("../scenarios/psh-hypersurface.scn")),
    ("numerical-ci", include_str!("../scenarios/numerical-ci.scn")),
    ("example-2.2", include_str!("../scenarios/example-2.2.scn")),
];

/// Identifiers of the shipped scenarios.
pub fn scenario_ids() -> Vec<&'static str> {
    BUILTIN.iter().map(|(id, _)| *id).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Stated,
    Immediate,
    Recomputed,
}

#[derive(Debug, Clone, Serialize)]
pub struct Expectation {
    pub check: String,
    pub value: String,
    pub provenance: Provenance,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BudgetSpec {
    pub max_degree: Option<i32>,
    pub max_elements: Option<usize>,
    pub seconds: Option<u64>,
}

impl BudgetSpec {
    /// Caps set in `over` replace those of `self`.
    pub fn merged(&self, over: &BudgetSpec) -> BudgetSpec {
        BudgetSpec {
            max_degree: over.max_degree.or(self.max_degree),
            max_elements: over.max_elements.or(self.max_elements),
            seconds: over.seconds.or(self.seconds),
        }
    }

    pub fn start(&self) -> Budget {
        Budget {
            max_degree: self.max_degree,
            max_elements: self.max_elements,
            deadline: self.seconds.map(|s| Instant::now() + Duration::from_secs(s)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Scenario {
    pub id: String,
    pub about: String,
    pub params: BTreeMap<String, i64>,
    pub assumptions: RingAssumptions,
    pub budget: BudgetSpec,
    pub expectations: Vec<Expectation>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, 1, msg)
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut s = Scenario {
            id: String::new(),
            about: String::new(),
            params: BTreeMap::new(),
            assumptions: RingAssumptions::default(),
            budget: BudgetSpec::default(),
            expectations: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (body, note) = match body.split_once('|') {
                Some((b, n)) => (b.trim(), Some(n.trim().to_string())),
                None => (body, None),
            };
            let words: Vec<&str> = body.split_whitespace().collect();
            let int = |w: Option<&&str>| -> Result<i64> {
                w.ok_or_else(|| perr(line, "missing integer"))?
                    .parse()
                    .map_err(|_| perr(line, "expected an integer"))
            };
            match words[0] {
                "scenario" => s.id = words.get(1).ok_or_else(|| perr(line, "missing id"))?.to_string(),
                "about" => s.about = words[1..].join(" "),
                "param" => {
                    let name = words.get(1).ok_or_else(|| perr(line, "missing parameter name"))?;
                    s.params.insert(name.to_string(), int(words.get(2))?);
                }
                "assume" => match words.get(1).copied() {
                    Some("gorenstein") => s.assumptions.gorenstein = true,
                    Some("isolated-singularity") => s.assumptions.isolated_singularity = true,
                    other => return Err(perr(line, format!("unknown assumption {other:?}"))),
                },
                "budget" => {
                    let v = int(words.get(2))?;
                    if v <= 0 {
                        return Err(perr(line, "budget caps must be positive"));
                    }
                    match words.get(1).copied() {
                        Some("max-degree") => s.budget.max_degree = Some(v as i32),
                        Some("max-elements") => s.budget.max_elements = Some(v as usize),
                        Some("seconds") => s.budget.seconds = Some(v as u64),
                        other => return Err(perr(line, format!("unknown budget cap {other:?}"))),
                    }
                }
                "expect" => {
                    if words.len() != 4 {
                        return Err(perr(line, "expected `expect <check> <value> <provenance>`"));
                    }
                    let provenance = match words[3] {
                        "stated" => Provenance::Stated,
                        "immediate" => Provenance::Immediate,
                        "recomputed" => Provenance::Recomputed,
                        w => return Err(perr(line, format!("unknown provenance `{w}`"))),
                    };
                    s.expectations.push(Expectation {
                        check: words[1].to_string(),
                        value: words[2].to_string(),
                        provenance,
                        note,
                    });
                }
                w => return Err(perr(line, format!("unknown directive `{w}`"))),
            }
        }
        if s.id.is_empty() {
            return Err(perr(1, "missing `scenario` line"));
        }
        Ok(s)
    }

    pub fn builtin(id: &str) -> Result<Scenario> {
        let text = BUILTIN
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, t)| *t)
            .ok_or_else(|| Error::UnknownScenario(id.to_string()))?;
        Scenario::parse(text)
    }

    fn param(&self, name: &str) -> Result<i64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("scenario `{}` needs parameter `{name}`", self.id)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Indeterminate,
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Indeterminate => "INDETERMINATE",
            Status::Fail => "FAIL",
        }
    }
}

/// A computed check.
#[derive(Debug, Clone)]
pub enum Outcome {
    Value(String),
    Indeterminate(String),
    Unmet(String),
    Failed(String),
}

impl Outcome {
    fn from<T: ToString>(r: Result<T>) -> Outcome {
        match r {
            Ok(v) => Outcome::Value(v.to_string()),
            Err(Error::Budget(m)) => Outcome::Indeterminate(m),
            Err(Error::UnmetHypothesis(m)) => Outcome::Unmet(m),
            Err(e) => Outcome::Failed(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AssertionResult {
    pub check: String,
    pub expected: String,
    pub actual: Option<String>,
    pub status: Status,
    pub reason: Option<String>,
    pub detail: Option<String>,
    pub provenance: Provenance,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub id: String,
    pub status: Status,
    pub params: BTreeMap<String, i64>,
    pub budget: BudgetSpec,
    pub assumptions: RingAssumptions,
    pub assertions: Vec<AssertionResult>,
    pub certificates: BTreeMap<String, Value>,
}

fn matches(expected: &str, actual: &str) -> bool {
    let num = |s: &str| s.parse::<i64>().ok();
    for (prefix, cmp) in [(">=", 0), ("!=", 1), (">", 2)] {
        if let Some(rest) = expected.strip_prefix(prefix) {
            let (Some(e), Some(a)) = (num(rest), num(actual)) else {
                return false;
            };
            return match cmp {
                0 => a >= e,
                1 => a != e,
                _ => a > e,
            };
        }
    }
    expected == actual
}

/// Checks are computed lazily by name so that a scenario file can list a
/// subset.
struct Lab {
    values: BTreeMap<String, Outcome>,
    certificates: BTreeMap<String, Value>,
}

impl Lab {
    fn set<T: ToString>(&mut self, name: &str, r: Result<T>) {
        self.values.insert(name.to_string(), Outcome::from(r));
    }

    fn cert<T: Serialize>(&mut self, name: &str, v: &T) {
        self.certificates
            .insert(name.to_string(), serde_json::to_value(v).unwrap_or(Value::Null));
    }
}

/// Runs a scenario with parameter and budget overrides.
pub fn run_scenario(
    s: &Scenario,
    params: &BTreeMap<String, i64>,
    budget: &BudgetSpec,
) -> Result<ScenarioReport> {
    let mut s = s.clone();
    for (k, v) in params {
        s.params.insert(k.clone(), *v);
    }
    s.budget = s.budget.merged(budget);
    let b = s.budget.start();
    let mut lab = Lab {
        values: BTreeMap::new(),
        certificates: BTreeMap::new(),
    };
    match s.id.as_str() {
        "lemma-3.2" => determinantal_basis(&s, &b, &mut lab)?,
        "example-3.6" => determinantal_witness(&s, &b, &mut lab)?,
        "remark-4.6" => diagonal_module(&s, &b, &mut lab)?,
        "kunz-regular" => regular_flatness(&s, &b, &mut lab)?,
        "psh-hypersurface" => hypersurface_vanishing(&s, &b, &mut lab)?,
        "numerical-ci" => lengths_over_ci(&s, &b, &mut lab)?,
        "example-2.2" => artinian_sweep(&s, &b, &mut lab)?,
        other => return Err(Error::UnknownScenario(other.to_string())),
    }
    let mut assertions = Vec::new();
    for e in &s.expectations {
        let (actual, status, reason, detail) = match lab.values.get(&e.check) {
            None => (None, Status::Fail, Some("NOT_COMPUTED"), None),
            Some(Outcome::Value(v)) if matches(&e.value, v) => (Some(v.clone()), Status::Pass, None, None),
            Some(Outcome::Value(v)) => (Some(v.clone()), Status::Fail, Some("MISMATCH"), None),
            Some(Outcome::Indeterminate(m)) => (None, Status::Indeterminate, Some("BUDGET_EXCEEDED"), Some(m.clone())),
            Some(Outcome::Unmet(m)) => (None, Status::Fail, Some("UNMET_HYPOTHESIS"), Some(m.clone())),
            Some(Outcome::Failed(m)) => (None, Status::Fail, Some("ENGINE_ERROR"), Some(m.clone())),
        };
        assertions.push(AssertionResult {
            check: e.check.clone(),
            expected: e.value.clone(),
            actual,
            status,
            reason: reason.map(String::from),
            detail,
            provenance: e.provenance,
            note: e.note.clone(),
        });
    }
    let status = assertions.iter().map(|a| a.status).max().unwrap_or(Status::Pass);
    Ok(ScenarioReport {
        id: s.id.clone(),
        status,
        params: s.params.clone(),
        budget: s.budget.clone(),
        assumptions: s.assumptions.clone(),
        assertions,
        certificates: lab.certificates,
    })
}

fn prime(s: &Scenario) -> Result<u64> {
    let p = s.param("p")?;
    u64::try_from(p).map_err(|_| Error::NotPrime(0))
}

fn positive(s: &Scenario, name: &str) -> Result<u32> {
    let v = s.param(name)?;
    if v < 1 || v > 64 {
        return Err(Error::Invalid(format!("parameter `{name}` must be between 1 and 64")));
    }
    Ok(v as u32)
}

fn determinantal_basis(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let n = positive(s, "n")?;
    let a = build_determinantal(p)?;
    let amb = a.ambient().clone();
    let x33 = amb.var(8);
    lab.set("minors-count", Ok(a.ideal().generators().len()));
    lab.set("dimension-A", a.krull_dimension());
    lab.set("x33-regular-on-A", a.is_nonzerodivisor(&x33));
    let ring = with_powers(p, n)?;
    let fam = check_family(&ring, n)?;
    lab.set("gb-contains-minors", Ok(fam.contains_minors));
    lab.set("gb-monomials-match", Ok(fam.monomials_match));
    lab.set("gb-other-elements", Ok(fam.other_elements.len()));
    lab.set("initial-avoids-x33", Ok(fam.initial_avoids_x33));
    lab.cert("basis", &fam.basis);
    lab.set("x33-regular", ring.is_nonzerodivisor(&x33));
    lab.set("depth-A", a.depth(b));
    let l = module_l(&a)?;
    match l.is_finite_pd(b) {
        Ok(v) => {
            lab.set("pd-L-infinite", Ok(!v.finite));
            lab.cert("betti_L", &v.betti);
        }
        Err(e) => lab.set::<bool>("pd-L-infinite", Err(e)),
    }
    Ok(())
}

fn determinantal_witness(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let n_max = positive(s, "n")?;
    let a = build_determinantal(p)?;
    let l = module_l(&a)?;
    lab.set("depth-A", a.depth(b));
    match l.is_finite_pd(b) {
        Ok(v) => {
            lab.set("pd-L-infinite", Ok(!v.finite));
            lab.set("betti-beyond-depth", Ok(v.betti.total(v.depth_ring + 1)));
            lab.cert("betti_L", &v.betti);
        }
        Err(e) => lab.set::<bool>("pd-L-infinite", Err(e)),
    }
    let mut verdict: Result<&str> = Ok("INCONCLUSIVE");
    for n in 1..=n_max {
        let f = FrobeniusPower::new(&a, n)?;
        let fl = frobenius_module(&l, &f)?;
        lab.set(&format!("depth-F{n}-L"), fl.depth(b));
        match strong_rigidity_witness(&l, &f, &s.assumptions, b) {
            Ok(w) => {
                if w.verdict == WitnessVerdict::NotStronglyRigid && verdict.is_ok() {
                    verdict = Ok("NOT_STRONGLY_RIGID");
                }
                lab.set(&format!("witness-n{n}"), Ok(witness_name(w.verdict)));
                lab.cert(&format!("witness_n{n}"), &w);
            }
            Err(e) => {
                lab.set::<&str>(&format!("witness-n{n}"), Err(e.clone()));
                verdict = Err(e);
            }
        }
    }
    lab.set("verdict", verdict);
    Ok(())
}

fn witness_name(v: WitnessVerdict) -> &'static str {
    match v {
        WitnessVerdict::NotStronglyRigid => "NOT_STRONGLY_RIGID",
        WitnessVerdict::Inconclusive => "INCONCLUSIVE",
    }
}

fn diagonal_module(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let a = build_determinantal(p)?;
    let nmod = module_n(&a)?;
    lab.set("dimension-N", nmod.dimension());
    let f = FrobeniusPower::new(&a, 1)?;
    let fnm = frobenius_module(&nmod, &f)?;
    lab.set("depth-F-N", fnm.depth(b));
    match nmod.is_finite_pd(b) {
        Ok(v) => {
            lab.set("pd-N-infinite", Ok(!v.finite));
            lab.set("betti-beyond-depth", Ok(v.betti.total(v.depth_ring + 1)));
            lab.cert("betti_N", &v.betti);
        }
        Err(e) => lab.set::<bool>("pd-N-infinite", Err(e)),
    }
    let mut x = ElementSequence::parse(&a, &["x11 + x22 + x33"])?;
    match prop43_check(&nmod, &mut x, &f, b) {
        Ok(r) => {
            lab.set("length-left", Ok(r.left));
            lab.set("length-right", Ok(r.right));
            lab.set("inequality-holds", Ok(r.inequality_holds));
            lab.set("equality", Ok(r.equality));
            lab.cert("length_comparison", &r);
        }
        Err(e) => {
            for k in ["length-left", "length-right", "inequality-holds", "equality"] {
                lab.set::<bool>(k, Err(e.clone()));
            }
        }
    }
    Ok(())
}

fn plane(p: u64, ideal: &[&str]) -> Result<QuotientRing> {
    let s = PolyRing::grevlex(&["x", "y"], p)?;
    let gens = ideal.iter().map(|g| s.parse(g)).collect::<Result<Vec<_>>>()?;
    QuotientRing::from_generators(&s, gens)
}

fn sweep_values(lab: &mut Lab, prefix: &str, rep: &crate::sweeps::SweepReport) {
    lab.set(&format!("{prefix}cases"), Ok(rep.cases));
    lab.set(&format!("{prefix}violations"), Ok(rep.violations.len()));
    lab.set(&format!("{prefix}indeterminate"), Ok(rep.indeterminate.len()));
}

fn regular_flatness(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let n_max = positive(s, "n")?;
    let i_max = positive(s, "i")? as usize;
    let r = plane(p, &[])?;
    let modules = regular_plane_modules(&r)?;
    lab.set("modules", Ok(modules.len()));
    let ns: Vec<u32> = (1..=n_max).collect();
    let rep = crate::sweeps::flatness_sweep(&r, &modules, &ns, i_max, b)?;
    sweep_values(lab, "", &rep);
    lab.cert("sweep", &rep);
    Ok(())
}

fn hypersurface_vanishing(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let n_max = positive(s, "n")?;
    let i_max = positive(s, "i")? as usize;
    let deg = positive(s, "degree")?;
    let ns: Vec<u32> = (1..=n_max).collect();
    let dual = {
        let x = PolyRing::grevlex(&["x"], p)?;
        QuotientRing::from_generators(&x, vec![x.parse("x^2")?])?
    };
    let k = PresentedModule::residue_field(&dual);
    let f = FrobeniusPower::new(&dual, 1)?;
    lab.set(
        "dual-numbers-k-tor-nonzero",
        psh_vanishing_check(&k, &f, i_max, b).map(|r| r.tor.iter().all(|t| t.status == TorStatus::Nonzero) && r.pd_finite == Some(false)),
    );
    for (name, ring) in [("dual", dual.clone()), ("node", plane(p, &["x^2 + x*y"])?)] {
        let modules = finite_length_modules(&ring, deg)?;
        let rep = vanishing_sweep(&ring, &modules, &ns, i_max, b)?;
        sweep_values(lab, &format!("{name}-"), &rep);
        lab.cert(&format!("{name}_sweep"), &rep);
    }
    Ok(())
}

fn lengths_over_ci(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let n_max = positive(s, "n")?;
    let deg = positive(s, "degree")?;
    let ns: Vec<u32> = (1..=n_max).collect();
    let quartic = {
        let x = PolyRing::grevlex(&["x"], 2)?;
        QuotientRing::from_generators(&x, vec![x.parse("x^4")?])?
    };
    let m = PresentedModule::cyclic(&quartic, &[quartic.parse("x^2")?])?;
    let f = FrobeniusPower::new(&quartic, 1)?;
    let r = frobrig::numerical_rigidity_check(&m, &f, b);
    lab.set("quartic-lengths", r.map(|r| format!("{},{}", r.frobenius_length, r.expected)));
    for (name, ring) in [("plane", plane(p, &[])?), ("node", plane(p, &["x^2 + x*y"])?)] {
        let modules = finite_length_modules(&ring, deg)?;
        let rep = length_sweep(&ring, &modules, &ns, b)?;
        sweep_values(lab, &format!("{name}-"), &rep.report);
        lab.set(&format!("{name}-finite-pd-cases"), Ok(rep.finite_pd_cases));
        lab.cert(&format!("{name}_sweep"), &rep);
    }
    Ok(())
}

fn artinian_sweep(s: &Scenario, b: &Budget, lab: &mut Lab) -> Result<()> {
    let p = prime(s)?;
    let vars = positive(s, "vars")? as usize;
    let seeds = positive(s, "seeds")? as u64;
    let deg = positive(s, "degree")?;
    let i_max = positive(s, "i")? as usize;
    let mut cases = 0usize;
    let mut counterexamples = Vec::new();
    let mut indeterminate = 0usize;
    let mut killed = true;
    for seed in 0..seeds {
        let ring = generate_artinian_frobenius_trivial(p, vars, seed)?;
        let q = ring.characteristic();
        killed &= ring.ambient().vars().iter().all(|x| ring.normal_form(&x.pow(q)).map(|f| f.is_zero()).unwrap_or(false));
        let f = FrobeniusPower::new(&ring, 1)?;
        for m in finite_length_modules(&ring, deg)? {
            cases += 1;
            match psh_vanishing_check(&m.module, &f, i_max, b) {
                Ok(r) => {
                    let vanishing = r.tor.iter().any(|t| t.status == TorStatus::Zero);
                    if r.pd_finite == Some(false) && vanishing {
                        counterexamples.push(format!("seed {seed}: {}", m.label));
                    }
                    if r.pd_finite.is_none() {
                        indeterminate += 1;
                    }
                }
                Err(Error::Budget(_)) => indeterminate += 1,
                Err(e) => return Err(e),
            }
        }
    }
    lab.set("frobenius-kills-maximal-ideal", Ok(killed));
    lab.set("cases", Ok(cases));
    lab.set("counterexamples", Ok(counterexamples.len()));
    lab.set("indeterminate", Ok(indeterminate));
    lab.cert("counterexamples", &counterexamples);
    lab.cert("summary", &json!({"rings": seeds, "modules": cases}));
    Ok(())
}
