//! Ring descriptor: coefficient field, named variables, and the working
//! monomial order. Shared by reference between all values of a computation.

use crate::error::Error;
use crate::field::PrimeField;
use crate::monomial::MonomialOrder;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>, Error> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Input(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { field, vars, order }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same ring with a different working order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { field: self.field, vars: self.vars.clone(), order })
    }

    /// Extend by one fresh variable in front (used for intersection via
    /// elimination); the new ring carries the Elim(1) block order.
    pub fn with_aux_var(&self) -> Arc<Ring> {
        let mut name = "t".to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring { field: self.field, vars, order: MonomialOrder::Elim(1) })
    }

    /// Restrict to the variables selected by `keep` (ambient indices,
    /// ascending), with the given order.
    pub fn subring(&self, keep: &[usize], order: MonomialOrder) -> Arc<Ring> {
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(Ring { field: self.field, vars, order })
    }

    /// Structural compatibility: same field and variables (order may differ).
    pub fn same_carrier(&self, other: &Ring) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Convenience constructor used all over the tests: grevlex ring with the
/// given variable names over F_p.
pub fn ring(p: u32, vars: &[&str]) -> Result<Arc<Ring>, Error> {
    Ring::new(
        PrimeField::new(p)?,
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::GrevLex,
    )
}
