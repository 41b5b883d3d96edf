use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of ambient variables.
pub const MAX_VARS: usize = 16;

/// A dense exponent vector.
///
/// Unused trailing slots are always zero, so equality and hashing only see the
/// live variables. The total degree is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: exps.len(),
            });
        }
        let mut m = Self::one(exps.len());
        let mut deg = 0u64;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = e;
            deg += e as u64;
        }
        m.deg = u32::try_from(deg).map_err(|_| Error::Overflow("monomial degree".into()))?;
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` is set when variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i];
        }
        out.deg = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i];
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Raises every exponent to `e` times its value, with overflow checking.
    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut out = *self;
        for x in out.exps.iter_mut() {
            *x = x
                .checked_mul(e)
                .ok_or_else(|| Error::Overflow("monomial exponent".into()))?;
        }
        out.deg = self
            .deg
            .checked_mul(e)
            .ok_or_else(|| Error::Overflow("monomial degree".into()))?;
        Ok(out)
    }

    /// Extends the monomial to `nvars` variables by padding with zeros.
    pub(crate) fn widen(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.nvars as usize && nvars <= MAX_VARS);
        let mut out = *self;
        out.nvars = nvars as u8;
        out
    }

    /// Drops variables `nvars..`, which must carry zero exponent.
    pub(crate) fn narrow(&self, nvars: usize) -> Option<Monomial> {
        if (nvars..self.nvars as usize).any(|i| self.exps[i] != 0) {
            return None;
        }
        let mut out = *self;
        out.nvars = nvars as u8;
        Some(out)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
