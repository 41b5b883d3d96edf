//! Acceptance run: one line per criterion, nonzero exit when any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use frobrig::io::write_ring_file;
use frobrig::koszul::koszul_homology;
use frobrig::{
    frobenius_module, koszul_complex, minimal_resolution, numerical_rigidity_check, prop43_check,
    strong_rigidity_witness, Budget, ElementSequence, FreeComplex, FrobeniusPower, PolyRing, Polynomial,
    PresentedModule, QuotientRing, RingAssumptions, WitnessVerdict,
};
use frobrig_oracle::{matrix, module_series, monomials, poly, Oracle};
use frobrig_paperlab::determinantal::{check_family, module_l, module_n, with_powers};
use frobrig_paperlab::families::{
    euler_instances, finite_length_modules, frobenius_length_instances, regular_plane_modules, Labeled,
    SequenceInstance,
};
use frobrig_paperlab::sweeps::{euler_sweep, flatness_sweep, inequality_sweep, length_sweep, vanishing_sweep};
use frobrig_paperlab::{build_determinantal, run_scenario, Scenario};

const TOP: i32 = 8;

type Check = Result<String, String>;

/// A complex together with the engine's Hilbert functions of its homology,
/// to be recomputed by the oracle.
struct Homology {
    label: String,
    complex: FreeComplex,
    module: Option<PresentedModule>,
    engine: Vec<(usize, Vec<u64>)>,
}

/// Everything the criteria computed with, for the cross-check at the end.
#[derive(Default)]
struct Touched {
    rings: Vec<(String, QuotientRing)>,
    modules: Vec<(String, PresentedModule)>,
    homology: Vec<Homology>,
    seen: BTreeSet<String>,
}

impl Touched {
    fn ring(&mut self, label: &str, r: &QuotientRing) {
        if self.seen.insert(write_ring_file(None, r, None)) {
            self.rings.push((label.to_string(), r.clone()));
        }
    }

    fn module(&mut self, label: &str, m: &PresentedModule) {
        self.ring(label, m.ring());
        if self.seen.insert(write_ring_file(None, m.ring(), Some(m))) {
            self.modules.push((label.to_string(), m.clone()));
        }
    }

    fn modules(&mut self, ms: &[Labeled]) {
        for m in ms {
            self.module(&m.label, &m.module);
        }
    }

    fn instances(&mut self, xs: &[SequenceInstance]) {
        for x in xs {
            self.module(&x.label, &x.module);
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn plane(p: u64, ideal: &[&str]) -> QuotientRing {
    let s = PolyRing::grevlex(&["x", "y"], p).unwrap();
    let gens = ideal.iter().map(|g| s.parse(g).unwrap()).collect();
    QuotientRing::from_generators(&s, gens).unwrap()
}

fn dual_numbers() -> QuotientRing {
    let x = PolyRing::grevlex(&["x"], 2).unwrap();
    QuotientRing::from_generators(&x, vec![x.parse("x^2").unwrap()]).unwrap()
}

const GRID: [(u64, u32); 6] = [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3)];

fn criterion_1(t: &mut Touched) -> Check {
    let mut worst = 0.0f64;
    for (p, n) in GRID {
        let start = Instant::now();
        let r = with_powers(p, n).map_err(e)?;
        let c = check_family(&r, n).map_err(e)?;
        let secs = start.elapsed().as_secs_f64();
        worst = worst.max(secs);
        t.ring(&format!("A/(x11^{n}, x12^{n}) over F_{p}"), &r);
        ensure(c.contains_minors, || format!("p={p} n={n}: a minor is missing"))?;
        ensure(c.monomials_match, || format!("p={p} n={n}: monomials differ: {:?}", c.basis))?;
        ensure(c.other_elements.is_empty(), || format!("p={p} n={n}: extra elements {:?}", c.other_elements))?;
        ensure(c.initial_avoids_x33, || format!("p={p} n={n}: x33 divides a generator of in(I)"))?;
        ensure(secs < 30.0, || format!("p={p} n={n}: {secs:.1}s"))?;
    }
    Ok(format!("6 instances, slowest {worst:.2}s"))
}

fn criterion_2(_: &mut Touched) -> Check {
    for (p, n) in GRID {
        let r = with_powers(p, n).map_err(e)?;
        let x33 = r.ambient().var(8);
        ensure(r.is_nonzerodivisor(&x33).map_err(e)?, || format!("p={p} n={n}: x33 is a zerodivisor"))?;
    }
    Ok("x33 regular on all 6 quotients".into())
}

fn criterion_3(t: &mut Touched) -> Check {
    let b = Budget::unlimited();
    let a = build_determinantal(2).map_err(e)?;
    let l = module_l(&a).map_err(e)?;
    t.module("A", &PresentedModule::free(&a, vec![0]));
    t.module("L", &l);
    resolution_homology(t, "L", &l, 6)?;
    let depth_a = a.depth(&b).map_err(e)?;
    ensure(depth_a == 5, || format!("depth A = {depth_a}"))?;
    let v = l.is_finite_pd(&b).map_err(e)?;
    let beta = v.betti.total(depth_a + 1);
    ensure(!v.finite && beta != 0, || format!("pd L finite = {}, beta_6 = {beta}", v.finite))?;
    let assumptions = RingAssumptions {
        gorenstein: true,
        isolated_singularity: true,
    };
    let mut depths = Vec::new();
    for n in 1..=2 {
        let f = FrobeniusPower::new(&a, n).map_err(e)?;
        let fl = frobenius_module(&l, &f).map_err(e)?;
        t.module(&format!("F^{n}(L)"), &fl);
        let d = fl.depth(&b).map_err(e)?;
        ensure(d > 0, || format!("depth F^{n}(L) = 0"))?;
        depths.push(d);
        let w = strong_rigidity_witness(&l, &f, &assumptions, &b).map_err(e)?;
        ensure(w.verdict == WitnessVerdict::NotStronglyRigid, || format!("n={n}: witness {:?}", w.verdict))?;
    }
    let s = Scenario::builtin("example-3.6").map_err(e)?;
    let rep = run_scenario(&s, &Default::default(), &Default::default()).map_err(e)?;
    ensure(rep.status == frobrig_paperlab::Status::Pass, || format!("scenario status {}", rep.status.as_str()))?;
    let verdict = rep.assertions.iter().find(|a| a.check == "verdict").and_then(|a| a.actual.clone());
    ensure(verdict.as_deref() == Some("NOT_STRONGLY_RIGID"), || format!("scenario verdict {verdict:?}"))?;
    Ok(format!(
        "depth A = 5, beta_6(L) = {beta}, depth F(L) = {}, depth F^2(L) = {}, NOT_STRONGLY_RIGID",
        depths[0], depths[1]
    ))
}

fn criterion_4(t: &mut Touched) -> Check {
    let b = Budget::unlimited();
    let a = build_determinantal(2).map_err(e)?;
    let nm = module_n(&a).map_err(e)?;
    t.module("N", &nm);
    resolution_homology(t, "N", &nm, 6)?;
    let dim = nm.dimension().map_err(e)?;
    ensure(dim == 1, || format!("dim N = {dim}"))?;
    let f = FrobeniusPower::new(&a, 1).map_err(e)?;
    let fnm = frobenius_module(&nm, &f).map_err(e)?;
    t.module("F(N)", &fnm);
    let d = fnm.depth(&b).map_err(e)?;
    ensure(d == 1, || format!("depth F(N) = {d}"))?;
    let v = nm.is_finite_pd(&b).map_err(e)?;
    ensure(!v.finite, || "pd N finite".to_string())?;
    Ok(format!("dim N = 1, depth F(N) = 1, beta_6(N) = {}", v.betti.total(6)))
}

fn resolution_homology(t: &mut Touched, label: &str, m: &PresentedModule, steps: usize) -> Result<(), String> {
    let res = minimal_resolution(m, steps, &Budget::unlimited().with_max_degree(TOP)).map_err(e)?;
    let zero = vec![0u64; TOP as usize + 1];
    let mut engine = vec![(0, m.hilbert_function(0, TOP))];
    for i in 1..res.complex.len() {
        engine.push((i, zero.clone()));
    }
    t.homology.push(Homology {
        label: format!("resolution of {label}"),
        complex: res.complex,
        module: None,
        engine,
    });
    Ok(())
}

fn frobenius_homology(t: &mut Touched, label: &str, m: &PresentedModule, n: u32, i_max: usize) -> Result<(), String> {
    let b = Budget::unlimited();
    let res = minimal_resolution(m, i_max + 1, &b).map_err(e)?;
    let f = FrobeniusPower::new(m.ring(), n).map_err(e)?;
    let cx = res.complex.frobenius(f.q()).map_err(e)?;
    let mut engine = Vec::new();
    for i in 1..=i_max.min(cx.len().saturating_sub(1)) {
        engine.push((i, cx.homology(i, &b).map_err(e)?.hilbert_function(0, TOP)));
    }
    t.homology.push(Homology {
        label: format!("Tor(-, f^{n}R) of {label}"),
        complex: cx,
        module: None,
        engine,
    });
    Ok(())
}

fn criterion_5(t: &mut Touched) -> Check {
    let b = Budget::unlimited();
    let mut summary = Vec::new();
    for p in [2, 3] {
        let r = plane(p, &[]);
        let ms = regular_plane_modules(&r).map_err(e)?;
        ensure(ms.len() >= 20, || format!("only {} modules", ms.len()))?;
        t.modules(&ms);
        let rep = flatness_sweep(&r, &ms, &[1, 2], 3, &b).map_err(e)?;
        ensure(rep.violations.is_empty(), || format!("F_{p}[x,y]: {:?}", rep.violations))?;
        ensure(rep.indeterminate.is_empty(), || format!("F_{p}[x,y] indeterminate: {:?}", rep.indeterminate))?;
        summary.push(format!("F_{p}[x,y]: {} modules, {} cases", ms.len(), rep.cases));
        for m in ms.iter().take(6) {
            resolution_homology(t, &m.label, &m.module, 3)?;
            frobenius_homology(t, &m.label, &m.module, 1, 2)?;
        }
    }
    for (name, r) in [("F_2[x]/(x^2)", dual_numbers()), ("F_2[x,y]/(x^2+xy)", plane(2, &["x^2 + x*y"]))] {
        let ms = finite_length_modules(&r, 2).map_err(e)?;
        t.modules(&ms);
        let rep = vanishing_sweep(&r, &ms, &[1, 2], 3, &b).map_err(e)?;
        ensure(rep.cases > 0, || format!("{name}: no cases"))?;
        ensure(rep.violations.is_empty(), || format!("{name}: {:?}", rep.violations))?;
        ensure(rep.indeterminate.is_empty(), || format!("{name} indeterminate: {:?}", rep.indeterminate))?;
        summary.push(format!("{name}: {} modules, {} cases", ms.len(), rep.cases));
        for m in ms.iter().take(6) {
            resolution_homology(t, &m.label, &m.module, 4)?;
            frobenius_homology(t, &m.label, &m.module, 1, 3)?;
        }
    }
    Ok(summary.join("; "))
}

fn criterion_6(t: &mut Touched) -> Check {
    let b = Budget::unlimited();
    let quartic = {
        let x = PolyRing::grevlex(&["x"], 2).unwrap();
        QuotientRing::from_generators(&x, vec![x.parse("x^4").unwrap()]).unwrap()
    };
    let m = PresentedModule::cyclic(&quartic, &[quartic.parse("x^2").unwrap()]).map_err(e)?;
    t.module("R/(x^2) over F_2[x]/(x^4)", &m);
    let f = FrobeniusPower::new(&quartic, 1).map_err(e)?;
    t.module("F(R/(x^2)) over F_2[x]/(x^4)", &frobenius_module(&m, &f).map_err(e)?);
    let r = numerical_rigidity_check(&m, &f, &b).map_err(e)?;
    ensure(r.frobenius_length == 4 && r.expected == 2 && !r.equal, || {
        format!("quartic: {} vs {}", r.frobenius_length, r.expected)
    })?;
    let mut finite = 0;
    let mut cases = 0;
    for (name, r) in [
        ("F_2[x,y]", plane(2, &[])),
        ("F_3[x,y]", plane(3, &[])),
        ("F_2[x]/(x^2)", dual_numbers()),
        ("F_2[x,y]/(x^2+xy)", plane(2, &["x^2 + x*y"])),
    ] {
        let ms = finite_length_modules(&r, 2).map_err(e)?;
        t.modules(&ms);
        for m in &ms {
            for n in 1..=2 {
                let f = FrobeniusPower::new(&r, n).map_err(e)?;
                t.module(&format!("F^{n}({})", m.label), &frobenius_module(&m.module, &f).map_err(e)?);
            }
        }
        let rep = length_sweep(&r, &ms, &[1, 2], &b).map_err(e)?;
        ensure(rep.report.violations.is_empty(), || format!("{name}: {:?}", rep.report.violations))?;
        ensure(rep.report.indeterminate.is_empty(), || format!("{name}: {:?}", rep.report.indeterminate))?;
        finite += rep.finite_pd_cases;
        cases += rep.report.cases;
    }
    ensure(finite > 0, || "no finite pd case".to_string())?;
    Ok(format!("l(F(R/(x^2))) = 4 != 2; {cases} cases, {finite} with finite pd and exact scaling"))
}

fn koszul_checks(t: &mut Touched, xs: &[SequenceInstance], limit: usize) -> Result<(), String> {
    let b = Budget::unlimited();
    let mut done = 0;
    for inst in xs {
        if done == limit {
            break;
        }
        let mut x = inst.sequence.clone();
        if !x.is_regular().map_err(e)? || x.quotient_of(&inst.module).map_err(e)?.length().finite().is_none() {
            continue;
        }
        let k = koszul_complex(&x).map_err(e)?;
        let mut engine = Vec::new();
        for i in 0..=x.len() {
            engine.push((i, koszul_homology(&inst.module, &x, i, &b).map_err(e)?.hilbert_function(0, TOP)));
        }
        t.homology.push(Homology {
            label: format!("Koszul homology of {}", inst.label),
            complex: k,
            module: Some(inst.module.clone()),
            engine,
        });
        done += 1;
    }
    Ok(())
}

fn criterion_7(t: &mut Touched) -> Check {
    let xs = euler_instances().map_err(e)?;
    t.instances(&xs);
    let rep = euler_sweep(&xs, &Budget::unlimited()).map_err(e)?;
    ensure(rep.cases >= 50, || format!("only {} admissible instances", rep.cases))?;
    ensure(rep.violations.is_empty(), || format!("{:?}", rep.violations))?;
    ensure(rep.indeterminate.is_empty(), || format!("{:?}", rep.indeterminate))?;
    koszul_checks(t, &xs, 40)?;
    Ok(format!("{} instances checked, {} skipped", rep.cases, rep.skipped.len()))
}

fn criterion_8(t: &mut Touched) -> Check {
    let b = Budget::unlimited();
    let mut xs = frobenius_length_instances().map_err(e)?;
    xs.extend(euler_instances().map_err(e)?);
    t.instances(&xs);
    let rep = inequality_sweep(&xs, &[1, 2], &b).map_err(e)?;
    ensure(rep.report.cases > 0, || "no instance meets the hypotheses".to_string())?;
    ensure(rep.report.violations.is_empty(), || format!("{:?}", rep.report.violations))?;
    ensure(rep.report.indeterminate.is_empty(), || format!("{:?}", rep.report.indeterminate))?;
    let a = build_determinantal(2).map_err(e)?;
    let nm = module_n(&a).map_err(e)?;
    let mut x = ElementSequence::parse(&a, &["x11 + x22 + x33"]).map_err(e)?;
    let f = FrobeniusPower::new(&a, 1).map_err(e)?;
    let r = prop43_check(&nm, &mut x, &f, &b).map_err(e)?;
    ensure(r.inequality_holds && r.passed(), || format!("N: {} < {}", r.left, r.right))?;
    koszul_checks(t, &xs[..frobenius_length_instances().map_err(e)?.len()], 20)?;
    Ok(format!(
        "{} cases ({} equalities, {} strict), N: {} >= {}",
        rep.report.cases, rep.equalities, rep.strict, r.left, r.right
    ))
}

/// Monomials up to degree 3, the reduced basis and sums of the two.
fn membership_probes(r: &QuotientRing) -> Vec<Polynomial> {
    let amb = r.ambient();
    let mut out = Vec::new();
    for d in 0..=3 {
        for exps in monomials(amb.nvars(), d) {
            let mut f = amb.one();
            for (i, &k) in exps.iter().enumerate() {
                f = &f * &amb.var(i).pow(k);
            }
            out.push(f);
        }
    }
    let basis = r.ideal().basis();
    for (i, g) in basis.iter().enumerate() {
        out.push(g.clone());
        if let Some(h) = basis.get(i + 1) {
            out.push(g.try_add(h).unwrap());
            out.push(g.try_add(&amb.var(i % amb.nvars())).unwrap());
        }
    }
    out
}

fn criterion_9(t: &mut Touched) -> Check {
    let mut probes = 0;
    for (label, r) in &t.rings {
        let o = Oracle::for_ring(r);
        let engine = r.hilbert_function(TOP as u32);
        let oracle = o.ring_hilbert_series(TOP);
        ensure(engine == oracle, || format!("{label}: Hilbert function {engine:?} vs {oracle:?}"))?;
        for f in membership_probes(r) {
            let (a, b) = (r.ideal().contains(&f).map_err(e)?, o.contains(&poly(&f)));
            ensure(a == b, || format!("{label}: membership of {f}: engine {a}, oracle {b}"))?;
            probes += 1;
        }
    }
    for (label, m) in &t.modules {
        let lo = m.generator_degrees().iter().copied().min().unwrap_or(0).min(0);
        let engine = m.hilbert_function(lo, TOP);
        let oracle = module_series(m, lo, TOP);
        ensure(engine == oracle, || format!("{label}: module Hilbert function {engine:?} vs {oracle:?}"))?;
    }
    for h in &t.homology {
        let o = Oracle::for_ring(h.complex.ring());
        let maps: Vec<_> = h.complex.differentials().iter().map(matrix).collect();
        let pm = h.module.as_ref().map(|m| matrix(m.presentation()));
        for (i, engine) in &h.engine {
            let oracle: Vec<u64> = (0..=TOP).map(|d| o.homology(&maps, pm.as_ref(), *i, d)).collect();
            ensure(&oracle == engine, || format!("{}: H_{i} {engine:?} vs oracle {oracle:?}", h.label))?;
        }
    }
    Ok(format!(
        "{} rings ({probes} membership probes), {} modules, {} complexes up to degree {TOP}",
        t.rings.len(),
        t.modules.len(),
        t.homology.len()
    ))
}

fn main() {
    let criteria: [(&str, fn(&mut Touched) -> Check); 9] = [
        ("reduced basis of minors plus powers", criterion_1),
        ("x33 is a nonzerodivisor", criterion_2),
        ("L has infinite pd and witnesses non-rigidity", criterion_3),
        ("invariants of N", criterion_4),
        ("Tor vanishing sweeps", criterion_5),
        ("Frobenius length arithmetic", criterion_6),
        ("Euler characteristic suite", criterion_7),
        ("length inequality suite", criterion_8),
        ("oracle cross-validation", criterion_9),
    ];
    let mut touched = Touched::default();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut touched)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
