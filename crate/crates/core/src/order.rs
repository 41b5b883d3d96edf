use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(rename = "grlex")]
    GradedLex,
    #[serde(rename = "grevlex")]
    GradedRevLex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GradedLex => "grlex",
            OrderKind::GradedRevLex => "grevlex",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "grlex" | "deglex" => Some(OrderKind::GradedLex),
            "grevlex" | "degrevlex" | "revlex" => Some(OrderKind::GradedRevLex),
            _ => None,
        }
    }
}

/// A monomial order described by a kind and a variable priority.
///
/// `priority[0]` is the most significant variable. When `block > 0` the first
/// `block` variables of the priority list form a dominant block: monomials are
/// compared on that block first (with `kind`), and only on ties on the rest.
/// This is the product order used for elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    block: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
            block: 0,
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedRevLex, nvars)
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: n });
        }
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(Error::Invalid(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder {
            kind,
            priority,
            block: 0,
        })
    }

    /// Product order with `vars` forming the dominant block, then the remaining
    /// variables in their current priority.
    pub fn elimination(&self, vars: &[usize]) -> Self {
        let mut priority: Vec<usize> = vars.to_vec();
        priority.extend(self.priority.iter().copied().filter(|v| !vars.contains(v)));
        MonomialOrder {
            kind: self.kind,
            priority,
            block: vars.len(),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_graded(&self) -> bool {
        self.block == 0 && self.kind != OrderKind::Lex
    }

    /// Compares two monomials; `Greater` means `a > b`.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
        }
        if a.nvars() != self.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), self.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.block == 0 {
            cmp_range(self.kind, &self.priority, a.raw(), b.raw(), a.degree(), b.degree())
        } else {
            let (head, tail) = self.priority.split_at(self.block);
            let da: u32 = head.iter().map(|&v| a.raw()[v]).sum();
            let db: u32 = head.iter().map(|&v| b.raw()[v]).sum();
            cmp_range(self.kind, head, a.raw(), b.raw(), da, db).then_with(|| {
                cmp_range(
                    self.kind,
                    tail,
                    a.raw(),
                    b.raw(),
                    a.degree() - da,
                    b.degree() - db,
                )
            })
        }
    }
}

#[inline]
fn cmp_range(
    kind: OrderKind,
    vars: &[usize],
    a: &[u32; MAX_VARS],
    b: &[u32; MAX_VARS],
    da: u32,
    db: u32,
) -> Ordering {
    match kind {
        OrderKind::Lex => {
            for &v in vars {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
            Ordering::Equal
        }
        OrderKind::GradedLex => da.cmp(&db).then_with(|| {
            for &v in vars {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
            Ordering::Equal
        }),
        OrderKind::GradedRevLex => da.cmp(&db).then_with(|| {
            for &v in vars.iter().rev() {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(3);
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&m(&w[0]), &m(&w[1])), Ordering::Greater);
        }
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_grlex_disagree() {
        let lex = MonomialOrder::new(OrderKind::Lex, 2);
        let grlex = MonomialOrder::new(OrderKind::GradedLex, 2);
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(grlex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::grevlex(3).elimination(&[2]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch() {
        let o = MonomialOrder::grevlex(2);
        assert!(o.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn bad_priority() {
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_err());
    }
}
