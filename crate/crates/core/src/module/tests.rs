use super::*;
use crate::ring::PolyRing;

fn qr(names: &[&str], p: u64, gens: &[&str]) -> QuotientRing {
    let r = PolyRing::grevlex(names, p).unwrap();
    let g = gens.iter().map(|s| r.parse(s).unwrap()).collect();
    QuotientRing::from_generators(&r, g).unwrap()
}

fn cyclic(r: &QuotientRing, gens: &[&str]) -> PresentedModule {
    let g: Vec<Polynomial> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
    PresentedModule::cyclic(r, &g).unwrap()
}

fn totals(m: &PresentedModule, steps: usize) -> Vec<usize> {
    minimal_resolution(m, steps, &Budget::unlimited()).unwrap().betti.totals()
}

#[test]
fn koszul_resolution_of_residue_field() {
    let r = qr(&["x", "y"], 2, &[]);
    let k = PresentedModule::residue_field(&r);
    let res = minimal_resolution(&k, 4, &Budget::unlimited()).unwrap();
    assert_eq!(res.betti.totals(), vec![1, 2, 1]);
    assert!(res.finished);
    assert_eq!(res.projective_dimension(), Some(2));
    res.complex.check().unwrap();
    assert_eq!(res.betti.get(2, 2), 1);
}

#[test]
fn free_module_resolution() {
    let r = qr(&["x", "y"], 3, &["x y"]);
    let f = PresentedModule::free(&r, vec![0, 1]);
    assert_eq!(totals(&f, 3), vec![2]);
}

#[test]
fn periodic_over_hypersurface() {
    let r = qr(&["x", "y"], 2, &["x^2"]);
    let k = PresentedModule::residue_field(&r);
    assert_eq!(totals(&k, 4), vec![1, 2, 2, 2, 2]);
    let r1 = qr(&["x"], 2, &["x^2"]);
    let k1 = PresentedModule::residue_field(&r1);
    let res = minimal_resolution(&k1, 5, &Budget::unlimited()).unwrap();
    assert_eq!(res.betti.totals(), vec![1; 6]);
    assert!(res.complex.differentials().iter().all(|d| !d.has_unit_entry()));
}

#[test]
fn pruning_removes_units() {
    let r = qr(&["x", "y"], 5, &[]);
    let amb = r.ambient();
    let m = GradedMatrix::new(
        amb,
        vec![0, 0],
        vec![0, 1],
        vec![
            vec![amb.parse("2").unwrap(), amb.parse("1").unwrap()],
            vec![amb.parse("x").unwrap(), amb.parse("y").unwrap()],
        ],
    )
    .unwrap();
    let p = PresentedModule::new(&r, m).unwrap().minimal_presentation().unwrap();
    assert_eq!(p.num_generators(), 1);
    assert_eq!(p.presentation().ncols(), 1);
    assert_eq!(p.length(), Length::Infinite);
    assert_eq!(p.dimension(), Ok(1));
}

#[test]
fn length_and_hilbert() {
    let r = qr(&["x", "y"], 2, &[]);
    let m = cyclic(&r, &["x^2", "y^2"]);
    assert_eq!(m.length(), Length::Finite(4));
    assert_eq!(m.hilbert_function(0, 3), vec![1, 2, 1, 0]);
    assert_eq!(PresentedModule::free(&r, vec![0]).length(), Length::Infinite);
    let s = qr(&["x"], 2, &["x^4"]);
    assert_eq!(PresentedModule::free(&s, vec![0]).length(), Length::Finite(4));
}

#[test]
fn dimensions_and_depths() {
    let b = Budget::unlimited();
    let r = qr(&["x", "y"], 2, &[]);
    let k = PresentedModule::residue_field(&r);
    assert_eq!(k.dimension(), Ok(0));
    assert_eq!(k.depth(&b), Ok(0));
    let free = PresentedModule::free(&r, vec![0]);
    assert_eq!(free.dimension(), Ok(2));
    assert_eq!(free.depth(&b), Ok(2));
    assert_eq!(free.depth_over_ambient(&b), Ok(2));
    let m = cyclic(&r, &["x"]);
    assert_eq!(m.depth(&b), Ok(1));
    assert_eq!(PresentedModule::zero(&r).depth(&b), Err(Error::ZeroModule));
    assert_eq!(PresentedModule::zero(&r).dimension(), Err(Error::ZeroModule));
    // not Cohen-Macaulay: k[x,y]/(x^2, x y) has depth 0, dimension 1
    let n = cyclic(&r, &["x^2", "x y"]);
    assert_eq!(n.dimension(), Ok(1));
    assert_eq!(n.depth(&b), Ok(0));
    assert_eq!(n.depth_over_ambient(&b), Ok(0));
}

#[test]
fn finite_pd_tests() {
    let b = Budget::unlimited();
    let r = qr(&["x", "y"], 2, &["x^2"]);
    let k = PresentedModule::residue_field(&r);
    assert!(!k.is_finite_pd(&b).unwrap().finite);
    let f = PresentedModule::free(&r, vec![0]);
    let v = f.is_finite_pd(&b).unwrap();
    assert!(v.finite);
    assert_eq!(v.pd, Some(0));
    let m = cyclic(&r, &["y"]);
    let v = m.is_finite_pd(&b).unwrap();
    assert!(v.finite);
    assert_eq!(v.pd, Some(1));
}

#[test]
fn syzygies_of_maximal_ideal_in_three_variables() {
    let r = qr(&["x", "y", "z"], 7, &[]);
    assert_eq!(totals(&PresentedModule::residue_field(&r), 5), vec![1, 3, 3, 1]);
    let both = PresentedModule::residue_field(&r).direct_sum(&cyclic(&r, &["x", "y"])).unwrap();
    assert_eq!(totals(&both, 5), vec![2, 5, 4, 1]);
}

#[test]
fn orders_agree_on_betti_numbers() {
    let r = qr(&["a", "b", "c", "d"], 3, &["a d - b c"]);
    let m = cyclic(&r, &["a", "b"]);
    let top = resolution::minimal_resolution_with(&m, 4, &Budget::unlimited(), ModuleOrder::TermOverPosition).unwrap();
    let pot = resolution::minimal_resolution_with(&m, 4, &Budget::unlimited(), ModuleOrder::PositionOverTerm).unwrap();
    assert_eq!(top.betti, pot.betti);
}

#[test]
fn homology_of_koszul_on_quotient() {
    let r = qr(&["x", "y"], 2, &[]);
    let amb = r.ambient();
    let x = amb.var(0);
    let y = amb.var(1);
    let d1 = GradedMatrix::new(amb, vec![0], vec![1, 1], vec![vec![x.clone()], vec![y.clone()]]).unwrap();
    let d2 = GradedMatrix::new(amb, vec![1, 1], vec![2], vec![vec![y.clone(), &amb.zero() - &x]]).unwrap();
    let c = FreeComplex::new(&r, vec![d1, d2]).unwrap();
    let b = Budget::unlimited();
    assert_eq!(c.homology(0, &b).unwrap().length(), Length::Finite(1));
    assert!(c.homology(1, &b).unwrap().is_zero());
    assert!(c.homology(2, &b).unwrap().is_zero());
    let m = cyclic(&r, &["x"]);
    assert_eq!(c.homology_with(&m, 0, &b).unwrap().length(), Length::Finite(1));
    assert_eq!(c.homology_with(&m, 1, &b).unwrap().length(), Length::Finite(1));
    assert!(c.homology_with(&m, 2, &b).unwrap().is_zero());
}

#[test]
fn rejects_non_complex() {
    let r = qr(&["x", "y"], 2, &[]);
    let amb = r.ambient();
    let d1 = GradedMatrix::new(amb, vec![0], vec![1], vec![vec![amb.var(0)]]).unwrap();
    let d2 = GradedMatrix::new(amb, vec![1], vec![2], vec![vec![amb.var(1)]]).unwrap();
    assert_eq!(FreeComplex::new(&r, vec![d1, d2]).unwrap_err(), Error::NotAComplex(1, 2));
}

fn determinantal(p: u64) -> QuotientRing {
    let names = ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"];
    let r = PolyRing::grevlex(&names, p).unwrap();
    let v = |i: usize, j: usize| r.var(3 * i + j);
    let mut gens = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for (c, d) in [(0, 1), (0, 2), (1, 2)] {
            gens.push(&(&v(a, c) * &v(b, d)) - &(&v(a, d) * &v(b, c)));
        }
    }
    QuotientRing::from_generators(&r, gens).unwrap()
}

#[test]
fn cyclic_initial_module_matches_ideal() {
    let a = determinantal(2);
    let amb = a.ambient().clone();
    let extra = vec![amb.var(0).pow(2), amb.var(1).pow(2)];
    let m = PresentedModule::cyclic(&a, &extra).unwrap();
    let ideal = a.ideal().extend(&extra).unwrap();
    assert_eq!(m.initial_ideals()[0], ideal.initial_ideal());
    assert_eq!(m.dimension(), Ok(4));
}
