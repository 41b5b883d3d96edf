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

fn budget() -> Budget {
    Budget::unlimited()
}

#[test]
fn koszul_shapes() {
    let r = ring(&["x", "y", "z"], 5, &[]);
    let x = ElementSequence::parse(&r, &["x", "y^2", "z"]).unwrap();
    let k = koszul_complex(&x).unwrap();
    assert_eq!(k.ranks(), vec![1, 3, 3, 1]);
    assert_eq!(k.twists(1), &[1, 2, 1]);
    assert_eq!(k.twists(2), &[3, 2, 3]);
    assert_eq!(k.twists(3), &[4]);
    let single = koszul_complex(&ElementSequence::parse(&r, &["x*y"]).unwrap()).unwrap();
    assert_eq!(single.ranks(), vec![1, 1]);
}

#[test]
fn sequence_validation() {
    let r = ring(&["x", "y"], 2, &["x^2"]);
    assert!(ElementSequence::parse(&r, &["x + y^2"]).is_err());
    assert!(ElementSequence::parse(&r, &["1"]).is_err());
    assert_eq!(ElementSequence::parse(&r, &["x^2"]).unwrap_err(), Error::ZeroElement);
    let mut x = ElementSequence::parse(&r, &["y", "x"]).unwrap();
    assert_eq!(x.certify().unwrap(), &[true, false]);
    assert!(!x.is_regular().unwrap());
}

#[test]
fn koszul_on_regular_sequence() {
    let r = ring(&["x", "y"], 2, &[]);
    let x = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    let free = PresentedModule::free(&r, vec![0]);
    assert_eq!(koszul_homology(&free, &x, 0, &budget()).unwrap().length(), Length::Finite(1));
    for i in 1..=2 {
        assert!(koszul_homology(&free, &x, i, &budget()).unwrap().is_zero());
    }
}

#[test]
fn euler_data_of_line() {
    let r = ring(&["x", "y"], 2, &[]);
    let m = cyclic(&r, &["x"]);
    let mut x = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    let e = euler_data(&m, &mut x, &budget()).unwrap();
    assert_eq!(e.tor_lengths, vec![1, 1, 0]);
    assert_eq!(e.chi, 0);
    assert_eq!(e.chi_i, vec![0, 1, 0]);
    let rep = lichtenbaum_check(&m, &mut x, &budget()).unwrap();
    assert!(rep.passed(), "{:?}", rep.violations);
    assert_eq!((rep.c, rep.dim_module), (2, 1));
}

#[test]
fn euler_data_of_free_module() {
    let r = ring(&["x", "y", "z"], 3, &["x*y - z^2"]);
    let mut x = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    let free = PresentedModule::free(&r, vec![0]);
    assert_eq!(chi(&free, &mut x, 0, &budget()).unwrap(), 2);
    assert_eq!(chi(&free, &mut x, 1, &budget()).unwrap(), 0);
    let rep = lichtenbaum_check(&free, &mut x, &budget()).unwrap();
    assert!(rep.passed());
}

#[test]
fn euler_rejects_bad_input() {
    let r = ring(&["x", "y"], 2, &[]);
    let m = cyclic(&r, &["x"]);
    let mut short = ElementSequence::parse(&r, &["x"]).unwrap();
    assert_eq!(euler_data(&m, &mut short, &budget()).unwrap_err(), Error::InfiniteLength);
    let s = ring(&["x", "y"], 2, &["x*y"]);
    let mut bad = ElementSequence::parse(&s, &["x", "y"]).unwrap();
    assert!(matches!(
        euler_data(&PresentedModule::free(&s, vec![0]), &mut bad, &budget()),
        Err(Error::UnmetHypothesis(_))
    ));
}

#[test]
fn telescoping_from_lengths() {
    let e = EulerData::from_lengths(vec![5, 3, 1]).unwrap();
    assert_eq!(e.chi_i, vec![3, 2, 1]);
    assert_eq!(e.chi, 3);
    assert_eq!(e.chi_at(7), 0);
}

#[test]
fn prop43_on_line() {
    let r = ring(&["x", "y"], 2, &[]);
    let m = cyclic(&r, &["x"]);
    let mut x = ElementSequence::parse(&r, &["y"]).unwrap();
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let rep = prop43_check(&m, &mut x, &f, &budget()).unwrap();
    assert_eq!((rep.c, rep.left, rep.right), (1, 2, 2));
    assert!(rep.equality && rep.passed());
    assert_eq!(rep.frobenius_cohen_macaulay, Some(true));
    assert_eq!(rep.assumptions.len(), 2);
}

#[test]
fn prop43_on_free_module() {
    let r = ring(&["x", "y"], 3, &[]);
    let free = PresentedModule::free(&r, vec![0]);
    let mut x = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    let f = FrobeniusPower::new(&r, 2).unwrap();
    let rep = prop43_check(&free, &mut x, &f, &budget()).unwrap();
    assert_eq!((rep.c, rep.left, rep.right), (0, 1, 1));
}

#[test]
fn prop43_hypotheses() {
    let r = ring(&["x", "y"], 2, &[]);
    let m = cyclic(&r, &["x"]);
    let f = FrobeniusPower::new(&r, 1).unwrap();
    let mut long = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    assert!(matches!(prop43_check(&m, &mut long, &f, &budget()), Err(Error::UnmetHypothesis(_))));
    let mut wrong = ElementSequence::parse(&r, &["x"]).unwrap();
    assert!(matches!(prop43_check(&m, &mut wrong, &f, &budget()), Err(Error::UnmetHypothesis(_))));
    let k = PresentedModule::residue_field(&r);
    let mut y = ElementSequence::parse(&r, &["y"]).unwrap();
    assert!(matches!(prop43_check(&k, &mut y, &f, &budget()), Err(Error::UnmetHypothesis(_))));
}
