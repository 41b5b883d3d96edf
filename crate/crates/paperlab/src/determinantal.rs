//! The ring of 3x3 matrices of rank at most one and the quotients used with it.

use std::collections::BTreeSet;

use frobrig::{Monomial, PolyRing, Polynomial, PresentedModule, QuotientRing, Result};

/// Variable names `x11, ..., x33`, row by row.
pub fn variable_names() -> Vec<String> {
    (1..=3).flat_map(|i| (1..=3).map(move |j| format!("x{i}{j}"))).collect()
}

/// `F_p[x11..x33]` with graded reverse lexicographic order and priority
/// `x11 > x12 > ... > x33`.
pub fn generic_matrix_ring(p: u64) -> Result<PolyRing> {
    PolyRing::grevlex(&variable_names(), p)
}

fn var(r: &PolyRing, i: usize, j: usize) -> Polynomial {
    r.var(3 * i + j)
}

/// `delta_ij`: the minor complementary to entry `(i, j)`, that is, the
/// determinant of the submatrix without row `i` and column `j`.
pub fn minor(r: &PolyRing, i: usize, j: usize) -> Polynomial {
    let rows: Vec<usize> = (0..3).filter(|&a| a != i).collect();
    let cols: Vec<usize> = (0..3).filter(|&b| b != j).collect();
    let a = &var(r, rows[0], cols[0]) * &var(r, rows[1], cols[1]);
    let b = &var(r, rows[0], cols[1]) * &var(r, rows[1], cols[0]);
    &a - &b
}

/// The nine 2x2 minors, `delta_11, delta_12, ..., delta_33`.
pub fn minors(r: &PolyRing) -> Vec<Polynomial> {
    (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| minor(r, i, j)).collect()
}

/// `A = F_p[X] / I_2(X)`.
pub fn build_determinantal(p: u64) -> Result<QuotientRing> {
    let r = generic_matrix_ring(p)?;
    QuotientRing::from_generators(&r, minors(&r))
}

/// `A / (x11^n, x12^n)` presented over the polynomial ring.
pub fn with_powers(p: u64, n: u32) -> Result<QuotientRing> {
    let r = generic_matrix_ring(p)?;
    let mut gens = minors(&r);
    gens.push(r.var(0).pow(n));
    gens.push(r.var(1).pow(n));
    QuotientRing::from_generators(&r, gens)
}

/// The monomials expected in the reduced basis of `I_2 + (x11^n, x12^n)`:
/// `x11^n`, `x12^n` and `x11^l x12^(n-l) x22^s x32^t` with `1 <= l <= n-1`,
/// `s + t = l`.
pub fn expected_monomials(n: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mono = |e: [(usize, u32); 4]| {
        let mut v = vec![0u32; 9];
        for (i, k) in e {
            v[i] += k;
        }
        v
    };
    out.insert(mono([(0, n), (1, 0), (4, 0), (7, 0)]));
    out.insert(mono([(0, 0), (1, n), (4, 0), (7, 0)]));
    for l in 1..n {
        for s in 0..=l {
            out.insert(mono([(0, l), (1, n - l), (4, s), (7, l - s)]));
        }
    }
    out
}

/// Summary of a reduced basis compared with the expected family.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilyCheck {
    pub basis: Vec<String>,
    pub contains_minors: bool,
    pub monomials_match: bool,
    pub other_elements: Vec<String>,
    pub initial_avoids_x33: bool,
}

/// Compares the reduced basis of `I_2 + (x11^n, x12^n)` with the expected
/// family. The basis must consist of the nine minors (up to sign) and exactly
/// the expected monomials.
pub fn check_family(ring: &QuotientRing, n: u32) -> Result<FamilyCheck> {
    let amb = ring.ambient();
    let basis = ring.ideal().basis();
    let minors: Vec<Polynomial> = minors(amb).iter().map(|m| m.monic()).collect();
    let contains_minors = minors.iter().all(|m| basis.contains(m));
    let expected = expected_monomials(n);
    let mut found = BTreeSet::new();
    let mut other = Vec::new();
    for g in &basis {
        if g.len() == 1 {
            found.insert(g.leading_monomial().unwrap().exponents().to_vec());
        } else if !minors.contains(g) {
            other.push(g.to_string());
        }
    }
    let x33 = 8;
    let initial_avoids_x33 = ring
        .ideal()
        .initial_ideal()
        .generators()
        .iter()
        .all(|m: &Monomial| m.exponents()[x33] == 0);
    Ok(FamilyCheck {
        basis: basis.iter().map(|g| g.to_string()).collect(),
        contains_minors,
        monomials_match: found == expected,
        other_elements: other,
        initial_avoids_x33,
    })
}

/// `L = A / (x11, x12)`.
pub fn module_l(a: &QuotientRing) -> Result<PresentedModule> {
    PresentedModule::cyclic(a, &[a.ambient().var(0), a.ambient().var(1)])
}

/// `N = A / (x12, x13, x21, x23, x31, x32)`: the off-diagonal entries.
pub fn module_n(a: &QuotientRing) -> Result<PresentedModule> {
    let amb = a.ambient();
    let gens: Vec<Polynomial> = [1, 2, 3, 5, 6, 7].iter().map(|&i| amb.var(i)).collect();
    PresentedModule::cyclic(a, &gens)
}
