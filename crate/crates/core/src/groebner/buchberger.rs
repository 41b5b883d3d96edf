//! Buchberger's algorithm for polynomial ideals under any global order.
//!
//! Pairs are selected by sugar degree, then by lcm in the term order, which is
//! the normal strategy on homogeneous input. Gebauer–Möller criteria prune the
//! pair set.

use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{add_scaled, Term};

pub(crate) struct Elem {
    pub terms: Vec<Term>,
    pub lead: Monomial,
    pub mask: u32,
    pub sugar: u32,
    pub redundant: bool,
    /// Cofactors w.r.t. the input generators, when tracking is enabled.
    pub cof: Option<Vec<Vec<Term>>>,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) struct Context<'a> {
    pub field: PrimeField,
    pub order: &'a MonomialOrder,
}

impl<'a> Context<'a> {
    /// Full reduction of `terms` by `basis`. Returns the remainder, and updates
    /// `cof` (the cofactors of `terms`) when both sides track cofactors.
    pub fn reduce(&self, terms: Vec<Term>, basis: &[Elem], mut cof: Option<&mut Vec<Vec<Term>>>) -> Vec<Term> {
        let mut result = Vec::new();
        let mut rest = terms;
        let mut start = 0;
        while start < rest.len() {
            let (m, c) = rest[start];
            let mask = m.support_mask();
            let hit = basis.iter().find(|g| g.mask & !mask == 0 && g.lead.divides(&m));
            match hit {
                Some(g) => {
                    let t = g.lead.quotient_of(&m).expect("divisibility checked");
                    let coef = self.field.mul(c, self.field.inv(g.terms[0].1));
                    let neg = self.field.neg(coef);
                    rest = add_scaled(self.field, self.order, &rest[start..], neg, &t, &g.terms);
                    start = 0;
                    if let (Some(cs), Some(gc)) = (cof.as_deref_mut(), g.cof.as_ref()) {
                        for (a, b) in cs.iter_mut().zip(gc) {
                            *a = add_scaled(self.field, self.order, a, neg, &t, b);
                        }
                    }
                }
                None => {
                    result.push(rest[start]);
                    start += 1;
                }
            }
        }
        result
    }

    fn make_monic(&self, e: &mut Elem) {
        let lc = e.terms[0].1;
        if lc != 1 {
            let inv = self.field.inv(lc);
            for t in e.terms.iter_mut() {
                t.1 = self.field.mul(t.1, inv);
            }
            if let Some(cs) = e.cof.as_mut() {
                for c in cs.iter_mut() {
                    for t in c.iter_mut() {
                        t.1 = self.field.mul(t.1, inv);
                    }
                }
            }
        }
    }

    fn spoly(&self, a: &Elem, b: &Elem, lcm: &Monomial) -> (Vec<Term>, Option<Vec<Vec<Term>>>) {
        // both monic
        let ta = a.lead.quotient_of(lcm).unwrap();
        let tb = b.lead.quotient_of(lcm).unwrap();
        let one_neg = self.field.neg(1);
        let left: Vec<Term> = a.terms[1..].iter().map(|&(m, c)| (m.mul(&ta), c)).collect();
        let s = add_scaled(self.field, self.order, &left, one_neg, &tb, &b.terms[1..]);
        let cof = match (&a.cof, &b.cof) {
            (Some(ca), Some(cb)) => Some(
                ca.iter()
                    .zip(cb)
                    .map(|(x, y)| {
                        let l: Vec<Term> = x.iter().map(|&(m, c)| (m.mul(&ta), c)).collect();
                        add_scaled(self.field, self.order, &l, one_neg, &tb, y)
                    })
                    .collect(),
            ),
            _ => None,
        };
        (s, cof)
    }
}

fn pair_cmp(order: &MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// Gebauer–Möller update after appending `basis[h]`.
fn update(basis: &mut [Elem], pairs: &mut Vec<Pair>, h: usize) {
    let hl = basis[h].lead;
    let hs = basis[h].sugar;
    let cands: Vec<Pair> = (0..h)
        .filter(|&i| !basis[i].redundant)
        .map(|i| {
            let lcm = basis[i].lead.lcm(&hl);
            let sugar = (basis[i].sugar + lcm.degree() - basis[i].lead.degree()).max(hs + lcm.degree() - hl.degree());
            Pair { i, j: h, lcm, sugar }
        })
        .collect();

    let coprime = |p: &Pair| basis[p.i].lead.is_coprime(&hl);
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cands.iter().enumerate() {
        let divided = cands[k + 1..].iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime(p) || !divided {
            kept.push(*p);
        }
    }
    kept.retain(|p| !coprime(p));

    pairs.retain(|p| {
        !(hl.divides(&p.lcm)
            && basis[p.i].lead.lcm(&hl) != p.lcm
            && basis[p.j].lead.lcm(&hl) != p.lcm)
    });
    pairs.extend(kept);

    for i in 0..h {
        if !basis[i].redundant && hl.divides(&basis[i].lead) {
            basis[i].redundant = true;
        }
    }
}

/// Runs Buchberger's algorithm and returns the reduced basis, monic, sorted by
/// degree ascending and, within a degree, by leading monomial descending.
pub(crate) fn groebner(
    field: PrimeField,
    order: &MonomialOrder,
    gens: Vec<Vec<Term>>,
    track: bool,
) -> Vec<Elem> {
    let ctx = Context { field, order };
    let ngens = gens.len();
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<(Vec<Term>, Option<Vec<Vec<Term>>>)> = gens
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(k, g)| {
            let cof = track.then(|| {
                let mut c = vec![Vec::new(); ngens];
                c[k] = vec![(Monomial::one(g[0].0.nvars()), 1)];
                c
            });
            (g, cof)
        })
        .collect();
    inputs.sort_by(|a, b| {
        let da = a.0.iter().map(|t| t.0.degree()).max().unwrap();
        let db = b.0.iter().map(|t| t.0.degree()).max().unwrap();
        da.cmp(&db).then_with(|| order.cmp(&a.0[0].0, &b.0[0].0))
    });

    for (g, mut cof) in inputs {
        let sugar = g.iter().map(|t| t.0.degree()).max().unwrap();
        let r = ctx.reduce(g, &basis, cof.as_mut());
        if r.is_empty() {
            continue;
        }
        push(&ctx, &mut basis, &mut pairs, r, cof, sugar);
    }

    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| pair_cmp(order, &pairs[a], &pairs[b]))
            .unwrap();
        let p = pairs.swap_remove(k);
        let (s, mut cof) = ctx.spoly(&basis[p.i], &basis[p.j], &p.lcm);
        let r = ctx.reduce(s, &basis, cof.as_mut());
        if r.is_empty() {
            continue;
        }
        push(&ctx, &mut basis, &mut pairs, r, cof, p.sugar);
    }

    interreduce(&ctx, basis)
}

fn push(
    ctx: &Context,
    basis: &mut Vec<Elem>,
    pairs: &mut Vec<Pair>,
    terms: Vec<Term>,
    cof: Option<Vec<Vec<Term>>>,
    sugar: u32,
) {
    let lead = terms[0].0;
    let mut e = Elem {
        mask: lead.support_mask(),
        lead,
        terms,
        sugar,
        redundant: false,
        cof,
    };
    ctx.make_monic(&mut e);
    basis.push(e);
    let h = basis.len() - 1;
    update(basis, pairs, h);
}

fn interreduce(ctx: &Context, basis: Vec<Elem>) -> Vec<Elem> {
    // minimal basis: drop elements whose lead is divisible by another lead
    let mut keep: Vec<Elem> = Vec::new();
    let mut all = basis;
    all.sort_by(|a, b| ctx.order.cmp(&a.lead, &b.lead));
    for e in all {
        if keep.iter().any(|k| k.lead.divides(&e.lead)) {
            continue;
        }
        keep.push(e);
    }
    for k in 0..keep.len() {
        let mut e = keep.remove(k);
        let tail = e.terms.split_off(1);
        let mut cof = e.cof.take();
        let reduced = ctx.reduce(tail, &keep, cof.as_mut());
        e.terms.extend(reduced);
        e.cof = cof;
        keep.insert(k, e);
    }
    keep.sort_by(|a, b| {
        a.lead
            .degree()
            .cmp(&b.lead.degree())
            .then_with(|| ctx.order.cmp(&b.lead, &a.lead))
    });
    keep
}
