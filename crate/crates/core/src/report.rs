//! Per-identity verification records shared by the checks and the CLI.

use serde::Serialize;

use crate::combo::Combo;
use crate::envelope::{mono_label, Mono};
use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Short name of the identity being checked.
    pub anchor: String,
    /// Total degree (or series degree) covered.
    pub degree: usize,
    pub passed: bool,
    /// First counterexample, written with exact rationals.
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn new(name: &str, anchor: &str, degree: usize, witness: Option<String>) -> Self {
        Self { name: name.into(), anchor: anchor.into(), degree, passed: witness.is_none(), witness }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.witness {
            None => format!("[{status}] {} ({}), degree <= {}", self.name, self.anchor, self.degree),
            Some(w) => format!("[{status}] {} ({}), degree <= {}: {w}", self.name, self.anchor, self.degree),
        }
    }
}

pub fn all_passed(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.passed)
}

/// `3/2*e^2 - f + 1/1` style rendering of an element on a monomial basis.
pub fn fmt_elem(u: &Combo<Mono>, labels: &[String]) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in u.iter().enumerate() {
        let neg = crate::rational::is_negative(c);
        let abs: Q = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let is_one = abs == crate::rational::one();
        if m.is_empty() {
            out.push_str(&fmt_q(&abs));
        } else if is_one {
            out.push_str(&mono_label(m, labels));
        } else {
            out.push_str(&format!("{}*{}", fmt_q(&abs), mono_label(m, labels)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn rendering() {
        let l = vec!["a".to_string(), "b".to_string()];
        let u = Combo::from_terms([(vec![], q(1)), (vec![0, 1], qf(-3, 2))]);
        assert_eq!(fmt_elem(&u, &l), "1/1 - 3/2*a*b");
        assert_eq!(fmt_elem(&Combo::zero(), &l), "0");
        let r = CheckRecord::new("x", "y", 2, None);
        assert!(r.passed && r.line().starts_with("[PASS]"));
    }
}
