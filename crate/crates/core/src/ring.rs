use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MAX_VARS};
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;

/// Descriptor of an ambient polynomial ring `F_p[x_1, ..., x_n]` with a fixed
/// monomial order. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingInner>);

struct RingInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
    field: PrimeField,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], p: u64, order: MonomialOrder) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: names.len(),
            });
        }
        if order.nvars() != names.len() {
            return Err(Error::LengthMismatch(order.nvars(), names.len()));
        }
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().to_string();
            if !valid_identifier(&n) {
                return Err(Error::Invalid(format!("`{n}` is not a valid variable name")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::Invalid(format!("variable `{n}` declared twice")));
            }
            owned.push(n);
        }
        Ok(PolyRing(Arc::new(RingInner {
            names: owned,
            index,
            field,
            order,
        })))
    }

    /// Polynomial ring with graded reverse lexicographic order in the listed
    /// variable priority.
    pub fn grevlex<S: AsRef<str>>(names: &[S], p: u64) -> Result<Self> {
        Self::new(names, p, MonomialOrder::new(OrderKind::GradedRevLex, names.len()))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), i), 1)
    }

    pub fn var_by_name(&self, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::Invalid(format!("unknown variable `{name}`")))
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, 1)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(&self.0.names, self.0.field.characteristic() as u64, order)
    }

    /// Appends a fresh variable and installs an elimination order in which the
    /// new variable forms the dominant block.
    pub fn with_elimination_variable(&self, base_name: &str) -> Result<Self> {
        let mut name = base_name.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        let mut names = self.0.names.clone();
        names.push(name);
        let n = names.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: n });
        }
        let mut priority = self.0.order.priority().to_vec();
        priority.push(n - 1);
        let base = MonomialOrder::with_priority(self.0.order.kind(), priority)?;
        let order = base.elimination(&[n - 1]);
        Self::new(&names, self.0.field.characteristic() as u64, order)
    }

    pub fn same(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.order == other.0.order
                && self.0.names == other.0.names)
    }

    pub(crate) fn check(&self, other: &PolyRing) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Parses a polynomial in the text grammar.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, text, 1)
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({})",
            self.characteristic(),
            self.0.names.join(","),
            self.0.order.kind().name()
        )
    }
}
