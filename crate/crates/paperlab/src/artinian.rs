//! Random Artinian rings in which every element of the maximal ideal has
//! vanishing `p`-th power.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frobrig::{Error, Monomial, PolyRing, Polynomial, QuotientRing, Result};

fn random_form(r: &PolyRing, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = r.nvars();
    let p = r.characteristic() as i64;
    let mut terms = Vec::new();
    let count = rng.gen_range(1..=3);
    for _ in 0..count {
        let mut e = vec![0u32; n];
        for _ in 0..degree {
            e[rng.gen_range(0..n)] += 1;
        }
        terms.push((Monomial::from_exponents(&e).unwrap(), rng.gen_range(1..p.max(2))));
    }
    Polynomial::from_terms(r, terms).unwrap()
}

/// `F_p[x1..xv] / I` with `(x1^p, ..., xv^p) ⊆ I ⊆ m^2`: the Frobenius
/// powers of the variables, plus up to two random forms of degree between
/// 2 and `p`. Deterministic in `seed`.
pub fn generate_artinian_frobenius_trivial(p: u64, vars: usize, seed: u64) -> Result<QuotientRing> {
    if vars == 0 {
        return Err(Error::Invalid("at least one variable is needed".into()));
    }
    let names: Vec<String> = (1..=vars).map(|i| format!("x{i}")).collect();
    let r = PolyRing::grevlex(&names, p)?;
    let q = r.characteristic();
    let mut gens: Vec<Polynomial> = r.vars().iter().map(|x| x.pow(q)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extra = rng.gen_range(0..=2);
    for _ in 0..extra {
        let d = rng.gen_range(2..=q.max(2));
        let f = random_form(&r, d, &mut rng);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    let ring = QuotientRing::from_generators(&r, gens)?;
    for x in r.vars() {
        assert!(ring.normal_form(&x.pow(q))?.is_zero(), "x^p must vanish");
    }
    Ok(ring)
}
