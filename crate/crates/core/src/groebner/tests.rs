use super::*;
use crate::order::MonomialOrder;

fn ring(names: &[&str], p: u64) -> PolyRing {
    PolyRing::grevlex(names, p).unwrap()
}

fn polys(r: &PolyRing, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| r.parse(s).unwrap()).collect()
}

fn strings(v: &[Polynomial]) -> Vec<String> {
    v.iter().map(|p| p.to_string()).collect()
}

const X: [&str; 9] = ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"];

fn minors(r: &PolyRing) -> Vec<Polynomial> {
    let v = |i: usize, j: usize| r.var(3 * i + j);
    let mut out = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for (c, d) in [(0, 1), (0, 2), (1, 2)] {
            out.push(&(&v(a, c) * &v(b, d)) - &(&v(a, d) * &v(b, c)));
        }
    }
    out
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = ring(&["x", "y"], 2);
    let i = buchberger(&r, &polys(&r, &["y", "x"])).unwrap();
    assert_eq!(strings(&i.basis()), ["x", "y"]);
}

#[test]
fn principal_basis_is_monic() {
    let r = ring(&["x", "y"], 5);
    let i = buchberger(&r, &polys(&r, &["3x^2 + y^2"])).unwrap();
    assert_eq!(strings(&i.basis()), ["x^2 + 2*y^2"]);
}

#[test]
fn zero_and_unit_ideals() {
    let r = ring(&["x", "y"], 3);
    let z = buchberger(&r, &[r.zero()]).unwrap();
    assert!(z.is_zero());
    assert!(z.basis().is_empty());
    let u = buchberger(&r, &polys(&r, &["x + 1", "x"])).unwrap();
    assert!(u.is_unit());
    assert_eq!(strings(&u.basis()), ["1"]);
}

#[test]
fn ambient_mismatch() {
    let r = ring(&["x", "y"], 3);
    let s = ring(&["x", "y"], 5);
    assert!(buchberger(&r, &[s.var(0)]).is_err());
}

#[test]
fn determinantal_with_powers() {
    for p in [2u64, 3, 5] {
        let r = ring(&X, p);
        for n in [2u32, 3] {
            let mut gens = minors(&r);
            gens.push(r.var(0).pow(n));
            gens.push(r.var(1).pow(n));
            let i = buchberger(&r, &gens).unwrap();
            assert!(i.verify_reduced());
            assert!(i.verify_buchberger_criterion());
            let monos: Vec<Polynomial> = i.basis().into_iter().filter(|g| g.len() == 1).collect();
            let mut expected = vec![r.var(0).pow(n), r.var(1).pow(n)];
            for l in 1..n {
                for s in 0..=l {
                    let m = &(&r.var(0).pow(l) * &r.var(1).pow(n - l)) * &(&r.var(4).pow(s) * &r.var(7).pow(l - s));
                    expected.push(m);
                }
            }
            let mut got = strings(&monos);
            let mut want = strings(&expected);
            got.sort();
            want.sort();
            assert_eq!(got, want, "p={p} n={n}");
            assert_eq!(i.basis_len(), 9 + want.len());
            assert!(i.initial_ideal().generators().iter().all(|m| m.exponent(8) == 0));
        }
    }
}

#[test]
fn normal_form_basics() {
    let r = ring(&X, 3);
    let mut gens = minors(&r);
    gens.push(r.var(0).pow(2));
    gens.push(r.var(1).pow(2));
    let i = buchberger(&r, &gens).unwrap();
    for g in &gens {
        assert!(i.normal_form(g).unwrap().is_zero());
    }
    assert_eq!(i.normal_form(&r.one()).unwrap(), r.one());
    let f = &r.var(8) * &r.var(4);
    assert!(!i.normal_form(&f).unwrap().is_zero());
}

#[test]
fn certificate_rebuilds_basis() {
    let r = ring(&["x", "y", "z"], 7);
    let gens = polys(&r, &["x^2 - y z", "x y - z^2", "y^3 + x z"]);
    let i = buchberger(&r, &gens).unwrap();
    let cert = i.certificate();
    for (b, cof) in i.basis().iter().zip(&cert.cofactors) {
        let mut acc = r.zero();
        for (c, g) in cof.iter().zip(&gens) {
            acc = &acc + &(c * g);
        }
        assert_eq!(&acc, b);
    }
}

#[test]
fn colon_examples() {
    let r = ring(&["x", "y"], 2);
    let i = buchberger(&r, &polys(&r, &["x^2"])).unwrap();
    assert_eq!(strings(&i.colon(&r.var(0)).unwrap().basis()), ["x"]);
    assert!(i.colon(&r.one()).unwrap().same_ideal(&i).unwrap());
    assert!(i.colon(&r.zero()).is_err());

    let r = ring(&["x", "y", "z"], 3);
    let i = buchberger(&r, &polys(&r, &["x y"])).unwrap();
    assert_eq!(strings(&i.colon(&r.var(1)).unwrap().basis()), ["x"]);

    let i = buchberger(&r, &polys(&r, &["x^2 y", "y z^3", "x z + y^2"])).unwrap();
    let f = r.parse("x + z").unwrap();
    let c = i.colon(&f).unwrap();
    for g in c.basis() {
        assert!(i.contains(&(&g * &f)).unwrap());
    }
}

#[test]
fn intersection_of_monomial_ideals() {
    let r = ring(&["x", "y"], 5);
    let a = buchberger(&r, &polys(&r, &["x^2", "y"])).unwrap();
    let b = buchberger(&r, &polys(&r, &["x", "y^3"])).unwrap();
    let c = a.intersect(&b).unwrap();
    assert_eq!(strings(&c.basis()), ["x^2", "x*y", "y^3"]);
}

#[test]
fn bracket_power_of_maximal_ideal() {
    let r = ring(&["x", "y"], 2);
    let m = buchberger(&r, &polys(&r, &["x", "y"])).unwrap();
    let m2 = m.bracket_power(2).unwrap();
    assert_eq!(strings(&m2.basis()), ["x^2", "y^2"]);
    assert!(m.bracket_power(3).is_err());
    assert!(GroebnerIdeal::zero(&r).bracket_power(4).unwrap().is_zero());
}

#[test]
fn bracket_power_independent_of_generators() {
    let r = ring(&["x", "y", "z"], 3);
    let a = buchberger(&r, &polys(&r, &["x + y", "y z"])).unwrap();
    let c = buchberger(&r, &polys(&r, &["x + y", "x z + y z + y z", "x^2 + x y"])).unwrap();
    assert!(a.same_ideal(&c).unwrap());
    assert!(a.bracket_power(9).unwrap().same_ideal(&c.bracket_power(9).unwrap()).unwrap());
}

#[test]
fn initial_ideal_dimension() {
    let r = ring(&["x", "y"], 2);
    assert_eq!(GroebnerIdeal::zero(&r).initial_ideal().dimension(), Some(2));
    let m = buchberger(&r, &polys(&r, &["x", "y"])).unwrap();
    assert_eq!(m.initial_ideal().dimension(), Some(0));
    let r9 = ring(&X, 2);
    let a = buchberger(&r9, &minors(&r9)).unwrap();
    assert_eq!(a.initial_ideal().dimension(), Some(5));
}

#[test]
fn colength_of_complete_intersection() {
    let r = ring(&["x", "y"], 2);
    let i = buchberger(&r, &polys(&r, &["x^2", "y^2"])).unwrap();
    assert_eq!(i.initial_ideal().colength(), Some(4));
    assert_eq!(i.initial_ideal().hilbert_function(3), vec![1, 2, 1, 0]);
}

#[test]
fn lex_order_basis() {
    let r = PolyRing::new(&["x", "y"], 7, MonomialOrder::new(crate::OrderKind::Lex, 2)).unwrap();
    let i = buchberger(&r, &polys(&r, &["x^2 + y", "x y - 1"])).unwrap();
    assert!(i.verify_reduced());
    assert!(i.verify_buchberger_criterion());
    assert!(i.contains(&r.parse("y^3 + 1").unwrap()).unwrap());
}
