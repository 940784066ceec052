//! Enveloping algebras: PBW arithmetic in `U(g)`, the quotient Hopf algebra
//! `U_τ` with its divisions, the factorisation machinery, coalgebra sections
//! and operators acting on `U_τ`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::rational::{binomial, one, Q};

pub mod inner;
pub mod operator;
pub mod pbw;
pub mod section;
pub mod utau;

pub use inner::{inner_operator_lie, InnerLie};
pub use operator::{Atom, Operator};
pub use pbw::{Pbw, UEnvelope};
pub use section::{coalg_inverse, exp_star, BinOp, CoalgMorphism, Section};
pub use utau::{build_utau, UElem, UTau};

/// A weakly increasing sequence of letter indices: a PBW monomial of `U(g)`
/// or a multiset indexing the symmetrised basis of `U_τ`.
pub type Mono = Vec<u16>;

/// Thread-safe memo table; values are computed outside the lock, so
/// recursive computations may consult the same table.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Self { map: RwLock::new(HashMap::new()) }
    }

    pub fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("memo lock").get(key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.map.write().expect("memo lock").entry(key.clone()).or_insert(v).clone()
    }
}

/// All weakly increasing words of length `0..=max_len` over `lo..hi`, ordered by (length, word).
pub fn monomials(lo: u16, hi: u16, max_len: usize) -> Vec<Mono> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Mono> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.last().copied().unwrap_or(lo);
            for x in start..hi {
                let mut w = m.clone();
                w.push(x);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Splits of a multiset `m = m' + m''` with coefficient `Π C(m_i, m'_i)`,
/// i.e. the coproduct of the symmetric coalgebra on the normalised basis.
pub fn multiset_splits(m: &[u16]) -> Vec<(Mono, Mono, Q)> {
    let mut groups: Vec<(u16, usize)> = Vec::new();
    for &x in m {
        match groups.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new(), one())];
    for &(x, n) in &groups {
        let mut next = Vec::with_capacity(out.len() * (n + 1));
        for (a, b, c) in &out {
            for j in 0..=n {
                let mut a2 = a.clone();
                a2.extend(std::iter::repeat_n(x, j));
                let mut b2 = b.clone();
                b2.extend(std::iter::repeat_n(x, n - j));
                next.push((a2, b2, c * binomial(n, j)));
            }
        }
        out = next;
    }
    out
}

pub fn mono_label(m: &[u16], labels: &[String]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        let l = labels.get(m[i] as usize).cloned().unwrap_or_else(|| format!("x{}", m[i]));
        parts.push(if j - i == 1 { l } else { format!("{l}^{}", j - i) });
        i = j;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(0, 2, 3).len(), 1 + 2 + 3 + 4);
        assert_eq!(monomials(1, 3, 2), vec![vec![], vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn splits_carry_binomials() {
        let s = multiset_splits(&[0, 0, 1]);
        assert_eq!(s.len(), 6);
        let total: Q = s.iter().map(|(_, _, c)| c.clone()).sum();
        assert_eq!(total, q(8));
        assert!(s.contains(&(vec![0], vec![0, 1], q(2))));
    }

    #[test]
    fn labels() {
        let l = vec!["a".to_string(), "b".to_string()];
        assert_eq!(mono_label(&[0, 0, 1], &l), "a^2*b");
        assert_eq!(mono_label(&[], &l), "1");
    }
}
