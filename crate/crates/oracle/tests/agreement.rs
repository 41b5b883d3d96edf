//! Random ideals and modules: the engine and the oracle must agree.

use frobrig::*;
use frobrig_oracle::{matrix, module_series, poly, Oracle};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = String> {
    (1i64..5, 0u32..3, 0u32..3, 0u32..3).prop_map(|(c, a, b, d)| format!("{c}*x^{a}*y^{b}*z^{d}"))
}

/// A homogeneous polynomial: random terms, each padded with powers of `z`
/// up to the largest degree.
fn form() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
    prop::collection::vec((1i64..5, 0u32..3, 0u32..3), 1..4)
        .prop_map(|ts| ts.into_iter().map(|(c, a, b)| (c, [a, b, 0])).collect())
}

fn homogenize(terms: &[(i64, [u32; 3])], extra: u32) -> String {
    let top = terms.iter().map(|(_, e)| e[0] + e[1]).max().unwrap_or(0) + extra;
    terms
        .iter()
        .map(|(c, e)| format!("{c}*x^{}*y^{}*z^{}", e[0], e[1], top - e[0] - e[1]))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn ideal() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec((form(), 0u32..2), 1..4)
        .prop_map(|gs| gs.iter().map(|(f, k)| homogenize(f, *k)).collect())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn ring(p: u64, gens: &[String]) -> Option<QuotientRing> {
    let s = PolyRing::grevlex(&["x", "y", "z"], p).unwrap();
    let g: Vec<Polynomial> = gens.iter().map(|t| s.parse(t).unwrap()).collect();
    if g.iter().any(|f| f.is_constant() && !f.is_zero()) {
        return None;
    }
    QuotientRing::from_generators(&s, g).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hilbert_functions_agree(p in prime(), gens in ideal()) {
        let r = ring(p, &gens);
        prop_assume!(r.is_some());
        let r = r.unwrap();
        prop_assert_eq!(Oracle::for_ring(&r).ring_hilbert_series(7), r.hilbert_function(7));
    }

    #[test]
    fn membership_agrees(p in prime(), gens in ideal(), probes in prop::collection::vec(term(), 1..6)) {
        let r = ring(p, &gens);
        prop_assume!(r.is_some());
        let r = r.unwrap();
        let o = Oracle::for_ring(&r);
        let amb = r.ambient();
        let mut tests: Vec<Polynomial> = probes.iter().map(|t| amb.parse(t).unwrap()).collect();
        for (i, g) in r.ideal().basis().iter().enumerate() {
            tests.push(g * &amb.var(i % 3));
        }
        for f in tests {
            // The oracle works per homogeneous component.
            let mut by_degree = std::collections::BTreeMap::<u32, Vec<_>>::new();
            for &(m, c) in f.terms() {
                by_degree.entry(m.degree()).or_default().push((m, c as i64));
            }
            let mut engine = true;
            let mut oracle = true;
            for (_, ts) in by_degree {
                let h = Polynomial::from_terms(amb, ts).unwrap();
                engine &= r.ideal().contains(&h).unwrap();
                oracle &= o.contains(&poly(&h));
            }
            prop_assert_eq!(engine, oracle, "{}", f);
        }
    }

    #[test]
    fn module_hilbert_functions_agree(p in prime(), gens in ideal(), rel in ideal()) {
        let r = ring(p, &gens);
        prop_assume!(r.is_some());
        let r = r.unwrap();
        let amb = r.ambient();
        let col: Vec<Polynomial> = rel.iter().map(|t| amb.parse(t).unwrap()).collect();
        let target: Vec<i32> = col.iter().map(|f| -(f.degree().unwrap_or(0) as i32)).collect();
        let pm = GradedMatrix::from_columns(amb, target, vec![col]).unwrap();
        let m = PresentedModule::new(&r, pm).unwrap();
        let lo = m.generator_degrees().iter().copied().min().unwrap_or(0);
        prop_assert_eq!(module_series(&m, lo, 6), m.hilbert_function(lo, 6));
    }

    #[test]
    fn resolutions_are_exact(p in prime(), gens in ideal(), m_gens in ideal()) {
        let r = ring(p, &gens);
        prop_assume!(r.is_some());
        let r = r.unwrap();
        let gs: Vec<Polynomial> = m_gens.iter().map(|t| r.parse(t).unwrap()).collect();
        let m = PresentedModule::cyclic(&r, &gs).unwrap();
        // The oracle reads an empty list of maps as the ring in degree 0.
        prop_assume!(!m.is_zero());
        let res = minimal_resolution(&m, 3, &Budget::unlimited().with_max_degree(6)).unwrap();
        let maps: Vec<_> = res.complex.differentials().iter().map(matrix).collect();
        let o = Oracle::for_ring(&r);
        let h0: Vec<u64> = (0..=5).map(|d| o.homology(&maps, None, 0, d)).collect();
        prop_assert_eq!(h0, m.hilbert_function(0, 5));
        for i in 1..res.complex.len() {
            for d in 0..=5 {
                prop_assert_eq!(o.homology(&maps, None, i, d), 0, "H_{} in degree {}", i, d);
            }
        }
    }
}
