//! Structured pass/fail records for identity checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub order: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub max_order_checked: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<Failure>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>) -> Self {
        IdentityReport {
            identity: identity.into(),
            parameters: BTreeMap::new(),
            max_order_checked: 0,
            pass: true,
            first_failure: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Record one comparison; only the first mismatch is kept.
    pub fn check<T: PartialEq + Display>(&mut self, order: usize, lhs: &T, rhs: &T) -> bool {
        self.max_order_checked = self.max_order_checked.max(order);
        let ok = lhs == rhs;
        if !ok && self.pass {
            self.pass = false;
            self.first_failure = Some(Failure {
                order,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    /// Compare two coefficient lists entry by entry.
    pub fn check_all<T: PartialEq + Display>(&mut self, lhs: &[T], rhs: &[T]) -> bool {
        assert_eq!(
            lhs.len(),
            rhs.len(),
            "compared lists must have equal length"
        );
        let mut ok = true;
        for (k, (a, b)) in lhs.iter().zip(rhs).enumerate() {
            ok &= self.check(k, a, b);
        }
        ok
    }

    /// Fold another report's verdict into this one.
    pub fn absorb(&mut self, other: &IdentityReport) {
        self.max_order_checked = self.max_order_checked.max(other.max_order_checked);
        if !other.pass && self.pass {
            self.pass = false;
            self.first_failure = other.first_failure.clone().map(|mut f| {
                f.lhs = format!("[{}] {}", other.identity, f.lhs);
                f
            });
        }
    }

    pub fn fail(&mut self, order: usize, why: impl Into<String>) {
        if self.pass {
            self.pass = false;
            self.first_failure = Some(Failure {
                order,
                lhs: why.into(),
                rhs: String::new(),
            });
        }
    }
}

impl Display for IdentityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{} [{}] order<={}: {}",
            self.identity,
            params.join(", "),
            self.max_order_checked,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if let Some(fl) = &self.first_failure {
            write!(
                f,
                " (first failure at order {}: {} != {})",
                fl.order, fl.lhs, fl.rhs
            )?;
        }
        Ok(())
    }
}
