//! Gröbner bases of graded submodules of free modules over `S/J`.
//!
//! Components are split into a top block (the target of a map) and a bottom
//! block (tags recording how each element arises from the inputs). Top terms
//! dominate, so once the top part of an element cancels what is left is a
//! syzygy. Input is processed one degree at a time; within a degree, pairs
//! with bottom leading terms come first, then the other pairs, then the
//! inputs. With that schedule the syzygies born from top pairs are a minimal
//! generating set of the syzygy module.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::Elem;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// A module term `c * m * e_comp`.
pub(crate) type MTerm = (Monomial, u32, u32);

/// Caps on a computation. Exceeding the degree cap truncates (results stay
/// exact in lower degrees); exceeding the others aborts with `Error::Budget`.
#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub max_degree: Option<i32>,
    pub max_elements: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_max_degree(mut self, d: i32) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub(crate) fn check(&self, elements: usize) -> Result<()> {
        if let Some(max) = self.max_elements {
            if elements > max {
                return Err(Error::Budget(format!("more than {max} basis elements")));
            }
        }
        if let Some(t) = self.deadline {
            if Instant::now() > t {
                return Err(Error::Budget("time limit reached".into()));
            }
        }
        Ok(())
    }
}

/// How components and monomials are compared within a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModuleOrder {
    /// Degree (with twists), then monomial, then position.
    #[default]
    TermOverPosition,
    /// Position, then degree and monomial.
    PositionOverTerm,
}

pub(crate) struct Layout<'a> {
    pub order: &'a MonomialOrder,
    pub twists: Vec<i32>,
    pub ntop: usize,
    pub kind: ModuleOrder,
}

impl<'a> Layout<'a> {
    #[inline]
    pub fn degree(&self, m: &Monomial, c: u32) -> i32 {
        m.degree() as i32 + self.twists[c as usize]
    }

    #[inline]
    fn is_top(&self, c: u32) -> bool {
        (c as usize) < self.ntop
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ac: u32, b: &Monomial, bc: u32) -> Ordering {
        let block = self.is_top(ac).cmp(&self.is_top(bc));
        if block != Ordering::Equal {
            return block;
        }
        match self.kind {
            ModuleOrder::TermOverPosition => self
                .degree(a, ac)
                .cmp(&self.degree(b, bc))
                .then_with(|| self.order.cmp(a, b))
                .then_with(|| bc.cmp(&ac)),
            ModuleOrder::PositionOverTerm => bc
                .cmp(&ac)
                .then_with(|| self.degree(a, ac).cmp(&self.degree(b, bc)))
                .then_with(|| self.order.cmp(a, b)),
        }
    }

    pub fn sort(&self, field: PrimeField, mut terms: Vec<MTerm>) -> Vec<MTerm> {
        terms.sort_by(|x, y| self.cmp(&y.0, y.1, &x.0, x.1));
        let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = field.add(last.2, t.2),
                _ => out.push(t),
            }
            if out.last().is_some_and(|l| l.2 == 0) {
                out.pop();
            }
        }
        out.retain(|t| t.2 != 0);
        out
    }

    /// `a + c * mon * b` where `b` is already sorted.
    pub fn add_scaled(
        &self,
        field: PrimeField,
        a: &[MTerm],
        c: u32,
        mon: &Monomial,
        b: impl Iterator<Item = MTerm>,
    ) -> Vec<MTerm> {
        let mut out = Vec::with_capacity(a.len() + 8);
        let mut i = 0;
        for (bm, bc, bk) in b {
            let ym = bm.mul(mon);
            let yc = field.mul(bk, c);
            if yc == 0 {
                continue;
            }
            loop {
                match a.get(i) {
                    Some(x) => match self.cmp(&x.0, x.1, &ym, bc) {
                        Ordering::Greater => {
                            out.push(*x);
                            i += 1;
                        }
                        Ordering::Equal => {
                            let s = field.add(x.2, yc);
                            if s != 0 {
                                out.push((ym, bc, s));
                            }
                            i += 1;
                            break;
                        }
                        Ordering::Less => {
                            out.push((ym, bc, yc));
                            break;
                        }
                    },
                    None => {
                        out.push((ym, bc, yc));
                        break;
                    }
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out
    }
}

struct MElem {
    terms: Vec<MTerm>,
    lead: Monomial,
    comp: u32,
    mask: u32,
    redundant: bool,
}

#[derive(Debug, Clone, Copy)]
enum Partner {
    Elem(usize),
    Ideal(usize),
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    other: Partner,
    lcm: Monomial,
    comp: u32,
}

/// One input generator: a sorted term list.
pub(crate) struct Input {
    pub terms: Vec<MTerm>,
}

pub(crate) struct Output {
    /// Basis elements with top leading term, in creation order.
    pub top: Vec<Vec<MTerm>>,
    /// Syzygy generators: pure bottom elements born from top pairs, which
    /// are minimal, followed in place by those from redundant inputs.
    pub syzygies: Vec<Vec<MTerm>>,
    /// Inputs whose top part reduced to zero when their turn came.
    pub redundant: Vec<usize>,
    /// Inputs kept as basis elements.
    pub kept: Vec<usize>,
    /// Whether work above the degree cap was skipped.
    pub truncated: bool,
}

pub(crate) struct Engine<'a> {
    field: PrimeField,
    layout: Layout<'a>,
    ideal: &'a [Elem],
    elems: Vec<MElem>,
    by_comp: Vec<Vec<usize>>,
    pairs: BTreeMap<i32, Vec<Pair>>,
}

impl<'a> Engine<'a> {
    pub fn new(field: PrimeField, layout: Layout<'a>, ideal: &'a [Elem]) -> Self {
        let ncomp = layout.twists.len();
        Engine {
            field,
            layout,
            ideal,
            elems: Vec::new(),
            by_comp: vec![Vec::new(); ncomp],
            pairs: BTreeMap::new(),
        }
    }

    pub fn layout(&self) -> &Layout<'a> {
        &self.layout
    }

    /// Adds a known basis element without forming pairs, for reduction only.
    pub fn load(&mut self, mut terms: Vec<MTerm>) {
        if terms.is_empty() {
            return;
        }
        let lc = terms[0].2;
        if lc != 1 {
            let inv = self.field.inv(lc);
            for t in terms.iter_mut() {
                t.2 = self.field.mul(t.2, inv);
            }
        }
        let (lead, comp, _) = terms[0];
        self.by_comp[comp as usize].push(self.elems.len());
        self.elems.push(MElem {
            terms,
            lead,
            comp,
            mask: lead.support_mask(),
            redundant: false,
        });
    }

    /// The reduced basis spanned by the loaded elements, assuming they form a
    /// Gröbner basis: non-minimal elements dropped, tails reduced, sorted
    /// increasingly.
    pub fn reduced_basis(&self) -> Vec<Vec<MTerm>> {
        let mut idx: Vec<usize> = (0..self.elems.len()).collect();
        let l = &self.layout;
        idx.sort_by(|&a, &b| {
            let (x, y) = (&self.elems[a], &self.elems[b]);
            l.cmp(&x.lead, x.comp, &y.lead, y.comp)
        });
        let mut keep: Vec<usize> = Vec::new();
        for k in idx {
            let e = &self.elems[k];
            if keep.iter().any(|&j| {
                let f = &self.elems[j];
                f.comp == e.comp && f.lead.divides(&e.lead)
            }) {
                continue;
            }
            keep.push(k);
        }
        let mut sub = Engine::new(self.field, Layout { twists: l.twists.clone(), ..*l }, self.ideal);
        for &k in &keep {
            sub.load(self.elems[k].terms.clone());
        }
        let mut out = Vec::with_capacity(keep.len());
        for pos in 0..sub.elems.len() {
            let head = sub.elems[pos].terms[0];
            let tail = sub.elems[pos].terms[1..].to_vec();
            let mut t = vec![head];
            t.extend(sub.reduce(tail));
            out.push(t);
        }
        out
    }

    fn find_reducer(&self, m: &Monomial, c: u32) -> Option<(Partner, Monomial)> {
        let mask = m.support_mask();
        for (k, g) in self.ideal.iter().enumerate() {
            if g.mask & !mask == 0 && g.lead.divides(m) {
                return Some((Partner::Ideal(k), g.lead.quotient_of(m).unwrap()));
            }
        }
        for &k in &self.by_comp[c as usize] {
            let e = &self.elems[k];
            if e.mask & !mask == 0 && e.lead.divides(m) {
                return Some((Partner::Elem(k), e.lead.quotient_of(m).unwrap()));
            }
        }
        None
    }

    fn subtract(&self, rest: &[MTerm], coef: u32, t: &Monomial, by: Partner, comp: u32) -> Vec<MTerm> {
        let neg = self.field.neg(coef);
        match by {
            Partner::Ideal(k) => {
                let g = &self.ideal[k];
                self.layout
                    .add_scaled(self.field, rest, neg, t, g.terms.iter().map(|&(m, c)| (m, comp, c)))
            }
            Partner::Elem(k) => {
                self.layout
                    .add_scaled(self.field, rest, neg, t, self.elems[k].terms.iter().copied())
            }
        }
    }

    /// Full reduction against the ideal and the current basis.
    pub fn reduce(&self, terms: Vec<MTerm>) -> Vec<MTerm> {
        let mut done: Vec<MTerm> = Vec::new();
        let mut rest = terms;
        let mut start = 0;
        while start < rest.len() {
            let (m, c, k) = rest[start];
            match self.find_reducer(&m, c) {
                Some((by, t)) => {
                    // reducers are monic
                    rest = self.subtract(&rest[start..], k, &t, by, c);
                    start = 0;
                }
                None => {
                    done.push(rest[start]);
                    start += 1;
                }
            }
        }
        done
    }

    fn lead_of(&self, p: Partner) -> Monomial {
        match p {
            Partner::Elem(k) => self.elems[k].lead,
            Partner::Ideal(k) => self.ideal[k].lead,
        }
    }

    fn spoly(&self, p: &Pair) -> Vec<MTerm> {
        let e = &self.elems[p.i];
        let ta = e.lead.quotient_of(&p.lcm).unwrap();
        let left: Vec<MTerm> = e.terms[1..].iter().map(|&(m, c, k)| (m.mul(&ta), c, k)).collect();
        let tb = self.lead_of(p.other).quotient_of(&p.lcm).unwrap();
        let one_neg = self.field.neg(1);
        match p.other {
            Partner::Elem(k) => self.layout.add_scaled(
                self.field,
                &left,
                one_neg,
                &tb,
                self.elems[k].terms[1..].iter().copied(),
            ),
            Partner::Ideal(k) => self.layout.add_scaled(
                self.field,
                &left,
                one_neg,
                &tb,
                self.ideal[k].terms[1..].iter().map(|&(m, c)| (m, p.comp, c)),
            ),
        }
    }

    fn is_top(&self, c: u32) -> bool {
        (c as usize) < self.layout.ntop
    }

    fn pair_degree(&self, p: &Pair) -> i32 {
        self.layout.degree(&p.lcm, p.comp)
    }

    fn push(&mut self, mut terms: Vec<MTerm>) -> usize {
        let lc = terms[0].2;
        if lc != 1 {
            let inv = self.field.inv(lc);
            for t in terms.iter_mut() {
                t.2 = self.field.mul(t.2, inv);
            }
        }
        let (lead, comp, _) = terms[0];
        let h = self.elems.len();
        self.elems.push(MElem {
            terms,
            lead,
            comp,
            mask: lead.support_mask(),
            redundant: false,
        });
        self.update(h);
        self.by_comp[comp as usize].push(h);
        h
    }

    /// Gebauer–Möller update for the new element `h`. The ideal generators
    /// act as virtual basis elements `g * e_comp`; the product criterion is
    /// used only against those.
    fn update(&mut self, h: usize) {
        let hl = self.elems[h].lead;
        let comp = self.elems[h].comp;
        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for (k, g) in self.ideal.iter().enumerate() {
            cands.push((
                Pair {
                    i: h,
                    other: Partner::Ideal(k),
                    lcm: hl.lcm(&g.lead),
                    comp,
                },
                hl.is_coprime(&g.lead),
            ));
        }
        for &k in &self.by_comp[comp as usize] {
            if !self.elems[k].redundant {
                cands.push((
                    Pair {
                        i: h,
                        other: Partner::Elem(k),
                        lcm: hl.lcm(&self.elems[k].lead),
                        comp,
                    },
                    false,
                ));
            }
        }
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (p, coprime) = cands[idx];
            let divided = cands[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || !divided {
                kept.push((p, coprime));
            }
        }

        for bucket in self.pairs.values_mut() {
            bucket.retain(|p| {
                if p.comp != comp || !hl.divides(&p.lcm) {
                    return true;
                }
                let li = self.elems[p.i].lead;
                let lo = match p.other {
                    Partner::Elem(k) => self.elems[k].lead,
                    Partner::Ideal(k) => self.ideal[k].lead,
                };
                li.lcm(&hl) == p.lcm || lo.lcm(&hl) == p.lcm
            });
        }
        self.pairs.retain(|_, b| !b.is_empty());

        for (p, coprime) in kept {
            if !coprime {
                let d = self.pair_degree(&p);
                self.pairs.entry(d).or_default().push(p);
            }
        }
        for &k in &self.by_comp[comp as usize] {
            if hl.divides(&self.elems[k].lead) {
                self.elems[k].redundant = true;
            }
        }
    }

    /// Runs the computation on `inputs`. With `drop_redundant`, inputs whose
    /// top part vanishes are discarded, which amounts to deleting those
    /// columns; otherwise the syzygy they produce is reported as well.
    pub fn run(mut self, inputs: Vec<Input>, drop_redundant: bool, budget: &Budget) -> Result<Output> {
        let mut queue: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut inputs: Vec<Option<Vec<MTerm>>> = inputs
            .into_iter()
            .map(|i| {
                let t = self.layout.sort(self.field, i.terms);
                if t.is_empty() {
                    None
                } else {
                    Some(t)
                }
            })
            .collect();
        for (k, t) in inputs.iter().enumerate() {
            if let Some(t) = t {
                let d = self.layout.degree(&t[0].0, t[0].1);
                queue.entry(d).or_default().push(k);
            }
        }
        let mut out = Output {
            top: Vec::new(),
            syzygies: Vec::new(),
            redundant: Vec::new(),
            kept: Vec::new(),
            truncated: false,
        };
        loop {
            let next_pair = self.pairs.keys().next().copied();
            let next_input = queue.keys().next().copied();
            let d = match (next_pair, next_input) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if budget.max_degree.is_some_and(|cap| d > cap) {
                out.truncated = true;
                break;
            }
            while let Some(mut bucket) = self.pairs.remove(&d) {
                let layout = &self.layout;
                bucket.sort_by(|a, b| {
                    layout
                        .is_top(a.comp)
                        .cmp(&layout.is_top(b.comp))
                        .then_with(|| layout.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
                        .then_with(|| a.i.cmp(&b.i))
                });
                for p in bucket {
                    budget.check(self.elems.len())?;
                    let s = self.spoly(&p);
                    let r = self.reduce(s);
                    if r.is_empty() {
                        continue;
                    }
                    let top_pair = self.is_top(p.comp);
                    let h = self.push(r);
                    if top_pair && !self.is_top(self.elems[h].comp) {
                        out.syzygies.push(self.elems[h].terms.clone());
                    }
                }
            }
            if let Some(ks) = queue.remove(&d) {
                for k in ks {
                    budget.check(self.elems.len())?;
                    let t = inputs[k].take().unwrap();
                    let r = self.reduce(t);
                    if r.is_empty() || !self.is_top(r[0].1) {
                        out.redundant.push(k);
                        if !r.is_empty() && !drop_redundant {
                            let h = self.push(r);
                            out.syzygies.push(self.elems[h].terms.clone());
                        }
                        continue;
                    }
                    out.kept.push(k);
                    self.push(r);
                }
            }
        }
        for e in &self.elems {
            if self.is_top(e.comp) {
                out.top.push(e.terms.clone());
            }
        }
        Ok(out)
    }
}
