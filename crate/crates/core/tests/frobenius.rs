use frobrig::frobenius::{TorStatus, DEFAULT_MAX_Q};
use frobrig::*;

fn ring(vars: &[&str], p: u64, ideal: &[&str]) -> QuotientRing {
    let s = PolyRing::grevlex(vars, p).unwrap();
    let gens = ideal.iter().map(|g| s.parse(g).unwrap()).collect();
    QuotientRing::from_generators(&s, gens).unwrap()
}

fn cyclic(r: &QuotientRing, gens: &[&str]) -> PresentedModule {
    let g: Vec<_> = gens.iter().map(|t| r.parse(t).unwrap()).collect();
    PresentedModule::cyclic(r, &g).unwrap()
}

fn first_order_power() -> (QuotientRing, PresentedModule, FrobeniusPower) {
    let r = ring(&["x"], 2, &["x^4"]);
    let m = cyclic(&r, &["x^2"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    (r, m, f)
}

#[test]
fn power_bookkeeping() {
    let r = ring(&["x"], 3, &[]);
    let f = FrobeniusPower::new(&r, 4).unwrap();
    assert_eq!((f.n(), f.q()), (4, 81));
    assert!(FrobeniusPower::new(&r, 0).is_err());
    assert!(matches!(FrobeniusPower::new(&r, 11), Err(Error::Overflow(_))));
    assert!(FrobeniusPower::with_cap(&r, 11, u64::MAX).is_ok());
    assert!(3u64.pow(10) <= DEFAULT_MAX_Q || FrobeniusPower::new(&r, 10).is_err());
}

#[test]
fn frobenius_of_cyclic_is_bracket_power() {
    let r = ring(&["x", "y", "z"], 3, &["x*y - z^2"]);
    let m = cyclic(&r, &["x + y", "z*y"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let fm = frobenius_module(&m, &f).unwrap();
    let b = cyclic(&r, &["x^3 + y^3", "z^3*y^3"]);
    assert!(fm.same_presentation(&b).unwrap());
    let free = PresentedModule::free(&r, vec![0, 1]);
    let image = frobenius_module(&free, &f).unwrap();
    assert!(image.same_presentation(&PresentedModule::free(&r, vec![0, 3])).unwrap());
}

#[test]
fn frobenius_iterates_compose() {
    let r = ring(&["x", "y"], 2, &["x^3"]);
    let m = cyclic(&r, &["x*y", "y^2 + x*y"]);
    let f1 = FrobeniusPower::new(&r, 1).unwrap();
    let f2 = FrobeniusPower::new(&r, 2).unwrap();
    let twice = frobenius_module(&frobenius_module(&m, &f1).unwrap(), &f1).unwrap();
    assert!(twice.same_presentation(&frobenius_module(&m, &f2).unwrap()).unwrap());
}

#[test]
fn tor_over_artinian_ring() {
    let (_, m, f) = first_order_power();
    let t = tor_frobenius(&m, &f, 1, &Budget::unlimited()).unwrap();
    assert_eq!(t.length(), Length::Finite(4));
    let t0 = tor_frobenius(&m, &f, 0, &Budget::unlimited()).unwrap();
    assert_eq!(t0.length(), Length::Finite(4));
}

#[test]
fn tor_vanishes_over_regular_ring() {
    let r = ring(&["x", "y"], 2, &[]);
    let k = PresentedModule::residue_field(&r);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    for i in 1..=3 {
        assert!(tor_frobenius(&k, &f, i, &Budget::unlimited()).unwrap().is_zero());
    }
}

#[test]
fn psh_on_dual_numbers() {
    let r = ring(&["x"], 2, &["x^2"]);
    let k = PresentedModule::residue_field(&r);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let rep = psh_vanishing_check(&k, &f, 4, &Budget::unlimited()).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.pd_finite, Some(false));
    assert!(rep.tor.iter().all(|t| t.status == TorStatus::Nonzero));
    let zero = PresentedModule::zero(&r);
    assert!(psh_vanishing_check(&zero, &f, 4, &Budget::unlimited()).unwrap().vacuous);
}

#[test]
fn psh_on_regular_quotient() {
    let r = ring(&["x", "y", "z"], 3, &["x^2 + y*z"]);
    let m = cyclic(&r, &["y", "z"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let rep = psh_vanishing_check(&m, &f, 3, &Budget::unlimited()).unwrap();
    assert!(rep.complete_intersection);
    assert!(rep.passed());
    assert_eq!(rep.pd_finite, Some(true));
    assert!(rep.tor.iter().all(|t| t.status == TorStatus::Zero));
}

#[test]
fn numerical_rigidity_examples() {
    let (_, m, f) = first_order_power();
    let rep = numerical_rigidity_check(&m, &f, &Budget::unlimited()).unwrap();
    assert_eq!((rep.frobenius_length, rep.expected, rep.equal), (4, 2, false));
    assert_eq!(rep.pd_finite, Some(false));
    assert!(rep.discrepancy.is_none());

    let r = ring(&["x", "y"], 2, &[]);
    let k = PresentedModule::residue_field(&r);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let rep = numerical_rigidity_check(&k, &f, &Budget::unlimited()).unwrap();
    assert_eq!((rep.frobenius_length, rep.expected), (4, 4));
    assert!(rep.equal && rep.discrepancy.is_none());

    let free = PresentedModule::free(&r, vec![0]);
    assert_eq!(numerical_rigidity_check(&free, &f, &Budget::unlimited()).unwrap_err(), Error::InfiniteLength);
}

#[test]
fn witness_requires_assumptions() {
    let r = ring(&["x", "y"], 2, &["x*y"]);
    let l = cyclic(&r, &["x"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let none = RingAssumptions::default();
    assert!(matches!(
        strong_rigidity_witness(&l, &f, &none, &Budget::unlimited()),
        Err(Error::UnmetHypothesis(_))
    ));
    let yes = RingAssumptions {
        gorenstein: true,
        isolated_singularity: true,
    };
    let free = PresentedModule::free(&r, vec![0]);
    let w = strong_rigidity_witness(&free, &f, &yes, &Budget::unlimited()).unwrap();
    assert_eq!(w.verdict, WitnessVerdict::Inconclusive);
    assert!(w.pd_finite);

    let art = ring(&["x"], 2, &["x^2"]);
    let fa = FrobeniusPower::new(&art, 1).unwrap();
    let k = PresentedModule::residue_field(&art);
    assert!(matches!(
        strong_rigidity_witness(&k, &fa, &yes, &Budget::unlimited()),
        Err(Error::UnmetHypothesis(_))
    ));
}

#[test]
fn witness_on_node() {
    // Over k[x,y]/(xy), R/(x) has infinite pd, and x is a socle element of F(R/(x)).
    let r = ring(&["x", "y"], 2, &["x*y"]);
    let l = cyclic(&r, &["x"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let yes = RingAssumptions {
        gorenstein: true,
        isolated_singularity: true,
    };
    let w = strong_rigidity_witness(&l, &f, &yes, &Budget::unlimited()).unwrap();
    assert!(!w.pd_finite);
    assert_eq!(w.depth_frobenius, Some(0));
    assert_eq!(w.verdict, WitnessVerdict::Inconclusive);
    assert_eq!(w.assumptions, yes);
}

#[test]
fn report_is_deterministic() {
    let (_, m, _) = first_order_power();
    let a = rigidity_report("m", &m, &[1, 2], 2, &RingAssumptions::default(), &Budget::unlimited()).unwrap();
    let b = rigidity_report("m", &m, &[1, 2], 2, &RingAssumptions::default(), &Budget::unlimited()).unwrap();
    let ja = serde_json::to_string(&a).unwrap();
    assert_eq!(ja, serde_json::to_string(&b).unwrap());
    assert_eq!(a.presentation_hash.len(), 64);
    assert_eq!(a.tor.len(), 4);
    assert_eq!(a.numerically_rigid, Some(true));
}
