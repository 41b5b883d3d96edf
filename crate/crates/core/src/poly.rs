use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::PolyRing;

pub type Term = (Monomial, u32);

/// A polynomial in canonical form: terms strictly decreasing in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn normalize(field: PrimeField, order: &MonomialOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = field.add(last.1, c),
            _ => out.push((m, c)),
        }
        if let Some(last) = out.last() {
            if last.1 == 0 {
                out.pop();
            }
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

/// `a + c * mon * b` for canonical term lists.
pub(crate) fn add_scaled(
    field: PrimeField,
    order: &MonomialOrder,
    a: &[Term],
    c: u32,
    mon: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    for y in b {
        let ym = y.0.mul(mon);
        let yc = field.mul(y.1, c);
        loop {
            match a.get(i) {
                Some(x) => match order.cmp(&x.0, &ym) {
                    Ordering::Greater => {
                        out.push(*x);
                        i += 1;
                    }
                    Ordering::Equal => {
                        let s = field.add(x.1, yc);
                        if s != 0 {
                            out.push((ym, s));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Less => {
                        if yc != 0 {
                            out.push((ym, yc));
                        }
                        break;
                    }
                },
                None => {
                    if yc != 0 {
                        out.push((ym, yc));
                    }
                    break;
                }
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

pub(crate) fn mul_terms(field: PrimeField, order: &MonomialOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc: Vec<Term> = Vec::new();
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for t in short {
        acc = add_scaled(field, order, &acc, t.1, &t.0, long);
    }
    acc
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: i64) -> Self {
        let c = ring.field().reduce(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &PolyRing, mon: Monomial, c: u32) -> Self {
        assert_eq!(mon.nvars(), ring.nvars());
        let c = c % ring.characteristic();
        Polynomial {
            ring: ring.clone(),
            terms: if c == 0 { Vec::new() } else { vec![(mon, c)] },
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, i64)>) -> Result<Self> {
        let field = ring.field();
        let mut raw = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch(m.nvars(), ring.nvars()));
            }
            raw.push((m, field.reduce(c)));
        }
        Ok(Self::from_canonical(ring, normalize(field, ring.order(), raw)))
    }

    pub(crate) fn from_raw(ring: &PolyRing, terms: Vec<Term>) -> Self {
        Self::from_canonical(ring, normalize(ring.field(), ring.order(), terms))
    }

    pub(crate) fn from_canonical(ring: &PolyRing, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_term(&self) -> Option<Term> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Total degree of the highest-degree term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.0.degree() == t.0.degree()),
        }
    }

    /// Verifies homogeneity, returning the degree (`None` for zero).
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if self.is_homogeneous() {
            Ok(self.terms.first().map(|t| t.0.degree()))
        } else {
            Err(Error::Inhomogeneous(self.to_string()))
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: u32) -> Polynomial {
        let f = self.ring.field();
        if c % f.characteristic() == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m.mul(mon), f.mul(a, c))).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.characteristic() - 1)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_unchecked(other, 1))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_unchecked(other, self.ring.characteristic() - 1))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let terms = mul_terms(self.ring.field(), self.ring.order(), &self.terms, &other.terms);
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    fn add_unchecked(&self, other: &Polynomial, c: u32) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        let terms = add_scaled(self.ring.field(), self.ring.order(), &self.terms, c, &one, &other.terms);
        Polynomial::from_canonical(&self.ring, terms)
    }

    /// `self + c * mon * other`.
    pub fn add_scaled(&self, c: u32, mon: &Monomial, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let terms = add_scaled(self.ring.field(), self.ring.order(), &self.terms, c, mon, &other.terms);
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self^q` for `q` a power of the characteristic, computed termwise:
    /// `(sum c_i m_i)^q = sum c_i m_i^q` in characteristic `p`.
    pub fn frobenius_power(&self, q: u64) -> Result<Polynomial> {
        let field = self.ring.field();
        field.log_q(q)?;
        let q32 = u32::try_from(q).map_err(|_| Error::Overflow(format!("q = {q}")))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            terms.push((m.pow(q32)?, c));
        }
        // m -> m^q preserves every monomial order, so the terms stay sorted.
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    /// Re-expresses the polynomial in another ring with the same variable names
    /// (possibly a different order), or in a ring with extra trailing variables.
    pub fn embed(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.characteristic() != self.ring.characteristic() {
            return Err(Error::AmbientMismatch);
        }
        let n = self.ring.nvars();
        if target.nvars() < n || target.names()[..n] != self.ring.names()[..] {
            return Err(Error::AmbientMismatch);
        }
        let terms = self.terms.iter().map(|&(m, c)| (m.widen(target.nvars()), c)).collect();
        Ok(Polynomial::from_raw(target, terms))
    }

    /// Inverse of [`Polynomial::embed`]; fails when a dropped variable occurs.
    pub fn restrict(&self, target: &PolyRing) -> Result<Polynomial> {
        let n = target.nvars();
        if n > self.ring.nvars() || target.names() != &self.ring.names()[..n] {
            return Err(Error::AmbientMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            terms.push((m.narrow(n).ok_or(Error::AmbientMismatch)?, c));
        }
        Ok(Polynomial::from_raw(target, terms))
    }

    /// `self / g`, failing unless `g` divides `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&g.ring)?;
        let (lm, lc) = g.leading_term().ok_or(Error::ZeroElement)?;
        let field = self.ring.field();
        let inv = field.inv(lc);
        let mut rest = self.terms.clone();
        let mut quot = Vec::new();
        while let Some(&(m, c)) = rest.first() {
            let t = lm
                .quotient_of(&m)
                .ok_or_else(|| Error::Invalid("polynomial division is not exact".into()))?;
            let coef = field.mul(c, inv);
            quot.push((t, coef));
            rest = add_scaled(field, self.ring.order(), &rest, field.neg(coef), &t, &g.terms);
        }
        Ok(Polynomial::from_raw(&self.ring, quot))
    }

    /// Substitutes polynomials for variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch(images.len(), self.ring.nvars()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c as i64);
            for (v, img) in images.iter().enumerate() {
                let e = m.exponent(v);
                if e > 0 {
                    t = t.try_mul(&img.pow(e))?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }
}

impl<'a> std::ops::Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ambient mismatch in +")
    }
}

impl<'a> std::ops::Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ambient mismatch in -")
    }
}

impl<'a> std::ops::Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ambient mismatch in *")
    }
}

pub(crate) fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..ring.nvars() {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            e => parts.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field.signed(*c);
            let (neg, mag) = if s < 0 { (true, -s) } else { (false, s) };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let body = format_monomial(&self.ring, m);
            match (mag, body.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{body}")?,
                (_, false) => write!(f, "{mag}*{body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64) -> PolyRing {
        PolyRing::grevlex(&["x", "y"], p).unwrap()
    }

    #[test]
    fn additive_cancellation() {
        let r = ring(3);
        let a = r.parse("x + y").unwrap();
        let b = r.parse("-x").unwrap();
        assert_eq!((&a + &b).to_string(), "y");
    }

    #[test]
    fn freshmans_dream_char_two() {
        let r = ring(2);
        let s = r.parse("x + y").unwrap();
        assert_eq!(s.pow(2).to_string(), "x^2 + y^2");
        assert_eq!(s.frobenius_power(2).unwrap(), s.pow(2));
    }

    #[test]
    fn constants_are_fixed_by_frobenius() {
        let r = ring(5);
        let c = Polynomial::constant(&r, 3);
        assert_eq!(c.frobenius_power(5).unwrap(), c);
        assert_eq!(c.frobenius_power(25).unwrap(), c);
        assert!(c.frobenius_power(10).is_err());
    }

    #[test]
    fn mismatched_rings() {
        let a = ring(3).var(0);
        let b = ring(5).var(0);
        assert_eq!(a.try_add(&b), Err(Error::AmbientMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring(7);
        let f = r.parse("x^2 - y^2").unwrap();
        let g = r.parse("x + y").unwrap();
        assert_eq!(f.exact_div(&g).unwrap(), r.parse("x - y").unwrap());
        assert!(r.parse("x^2 + 1").unwrap().exact_div(&g).is_err());
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let r = ring(7);
        assert_eq!(r.parse("3x^2 - 2*x*y + 6").unwrap().to_string(), "3*x^2 - 2*x*y - 1");
        assert_eq!(r.zero().to_string(), "0");
    }
}
