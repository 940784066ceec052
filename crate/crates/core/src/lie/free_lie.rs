//! Free Lie algebras truncated at a degree cap, realised inside the free
//! associative algebra through the Lyndon basis, and their quotients by
//! (possibly inhomogeneous) relations.

use std::collections::HashMap;

use num_traits::Zero;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, rref_with_order, unit_vec, zero_vec, Vector};
use crate::rational::Q;

use super::LieAlgebra;

pub type Word = Vec<u8>;
type AssocPoly = Combo<Word>;

fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length `1..=n` over `k` letters (Duval's generation order).
fn lyndon_words(k: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    while !w.is_empty() {
        out.push(w.clone());
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last as usize == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

fn assoc_mul(a: &AssocPoly, b: &AssocPoly, cap: usize) -> AssocPoly {
    let mut out = Combo::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            if x.len() + y.len() > cap {
                continue;
            }
            let mut w = x.clone();
            w.extend_from_slice(y);
            out.add_term(w, cx * cy);
        }
    }
    out
}

fn commutator(a: &AssocPoly, b: &AssocPoly, cap: usize) -> AssocPoly {
    &assoc_mul(a, b, cap) - &assoc_mul(b, a, cap)
}

/// A Lie algebra generated by `k` elements, presented as a quotient of the
/// free Lie algebra truncated above degree `cap`.
#[derive(Clone, Debug)]
pub struct PresentedLie {
    labels: Vec<String>,
    cap: usize,
    /// Lyndon words ordered by (length, word); the first `k` are the generators.
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    polys: Vec<AssocPoly>,
    ideal_rows: Vec<Vector>,
    ideal_pivots: Vec<usize>,
    /// Indices of the words that survive in the quotient.
    basis: Vec<usize>,
}

/// The free Lie algebra on `labels`, truncated above degree `cap`.
pub fn free_lie_hall(labels: Vec<String>, cap: usize) -> PresentedLie {
    let k = labels.len();
    let mut words = lyndon_words(k, cap);
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut polys: Vec<AssocPoly> = Vec::with_capacity(words.len());
    for w in &words {
        let p = if w.len() == 1 {
            Combo::basis(w.clone())
        } else {
            let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a letter suffix is Lyndon");
            let (u, v) = (&w[..split], &w[split..]);
            commutator(&polys[index[u]], &polys[index[v]], cap)
        };
        polys.push(p);
    }
    let basis = (0..words.len()).collect();
    PresentedLie { labels, cap, words, index, polys, ideal_rows: Vec::new(), ideal_pivots: Vec::new(), basis }
}

impl PresentedLie {
    pub fn generators(&self) -> usize {
        self.labels.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Dimension of the ambient truncated free Lie algebra.
    pub fn ambient_dim(&self) -> usize {
        self.words.len()
    }

    pub fn gen(&self, i: usize) -> Vector {
        unit_vec(self.words.len(), i)
    }

    /// Expresses a Lie polynomial in the Lyndon basis; `None` if it is not a Lie element.
    fn coords_of(&self, poly: &AssocPoly) -> Option<Vector> {
        let mut rest = poly.clone();
        let mut out = zero_vec(self.words.len());
        while !rest.is_empty() {
            let w = rest.keys().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))?.clone();
            let idx = *self.index.get(&w)?;
            let c = rest.coeff(&w);
            rest.add_scaled(&self.polys[idx], &-c.clone());
            out[idx] += c;
        }
        Some(out)
    }

    fn poly_of(&self, v: &[Q]) -> AssocPoly {
        let mut out = Combo::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.polys[i], c);
            }
        }
        out
    }

    /// Bracket in the truncated free Lie algebra (ambient coordinates).
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        let p = commutator(&self.poly_of(x), &self.poly_of(y), self.cap);
        self.coords_of(&p).expect("commutators of Lie elements are Lie")
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        self.words[idx].len()
    }

    fn reduce(&self, v: &[Q]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.ideal_rows.iter().zip(&self.ideal_pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    /// Coordinates of the image of an ambient vector in the quotient basis.
    pub fn project(&self, v: &[Q]) -> Vector {
        let r = self.reduce(v);
        self.basis.iter().map(|&i| r[i].clone()).collect()
    }

    /// Number of quotient basis elements in each degree `1..=cap`.
    pub fn dims_per_degree(&self) -> Vec<usize> {
        let mut d = vec![0; self.cap];
        for &i in &self.basis {
            d[self.words[i].len() - 1] += 1;
        }
        d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Bracketed label of a basis word, e.g. `[a,[a,b]]`.
    pub fn word_label(&self, idx: usize) -> String {
        fn go(p: &PresentedLie, w: &[u8]) -> String {
            if w.len() == 1 {
                return p.labels[w[0] as usize].clone();
            }
            let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("Lyndon suffix");
            format!("[{},{}]", go(p, &w[..split]), go(p, &w[split..]))
        }
        go(self, &self.words[idx])
    }

    /// Ambient vector of the `i`-th quotient basis element.
    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.words.len(), self.basis[i])
    }

    /// The quotient as a finite-dimensional Lie algebra (basis ordered by degree, generators first).
    pub fn to_lie_algebra(&self) -> LieAlgebra {
        let m = self.basis.len();
        let labels = self.basis.iter().map(|&i| self.word_label(i)).collect();
        let mut consts = vec![vec![zero_vec(m); m]; m];
        for a in 0..m {
            for b in 0..m {
                consts[a][b] = self.project(&self.bracket(&self.basis_vector(a), &self.basis_vector(b)));
            }
        }
        LieAlgebra::new(labels, consts).expect("square table")
    }
}

/// Quotient of `f` by the ideal generated by `relations` (ambient coordinates),
/// computed degreewise up to the cap. Pivots are taken in the highest degree
/// first, so the surviving basis prefers low-degree words; a generator that
/// becomes a pivot means `c` collapses and is reported as an error.
pub fn presented_quotient(f: &PresentedLie, relations: &[Vector]) -> Result<PresentedLie> {
    let n = f.words.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f.words[b].len().cmp(&f.words[a].len()).then(a.cmp(&b)));
    let mut rows: Vec<Vector> = f.ideal_rows.clone();
    rows.extend(relations.iter().filter(|r| !is_zero_vec(r)).cloned());
    let (mut rows, mut pivots) = rref_with_order(&rows, n, &order);
    loop {
        let mut extra = Vec::new();
        let probe = PresentedLie { ideal_rows: rows.clone(), ideal_pivots: pivots.clone(), ..f.clone() };
        for r in &rows {
            for g in 0..f.generators() {
                let b = f.bracket(&f.gen(g), r);
                let red = probe.reduce(&b);
                if !is_zero_vec(&red) {
                    extra.push(red);
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        rows.extend(extra);
        (rows, pivots) = rref_with_order(&rows, n, &order);
    }
    let k = f.generators();
    if let Some(&p) = pivots.iter().find(|&&p| p < k) {
        return Err(Error::Collapse(format!("generator {} lies in the relation ideal", f.labels[p])));
    }
    let basis = (0..n).filter(|i| !pivots.contains(i)).collect();
    Ok(PresentedLie { ideal_rows: rows, ideal_pivots: pivots, basis, ..f.clone() })
}

/// Integer combination of generators, e.g. `a·b` given as a coefficient vector on `c`.
pub fn linear_in_generators(f: &PresentedLie, coeffs: &[Q]) -> Vector {
    let mut v = zero_vec(f.ambient_dim());
    for (i, c) in coeffs.iter().enumerate() {
        axpy(&mut v, c, &f.gen(i));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sub_vec;

    fn labels(n: usize) -> Vec<String> {
        ["a", "b", "c"][..n].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lyndon_counts_match_witt() {
        // Witt: 2 generators give 2, 1, 2, 3, 6 in degrees 1..5
        let f = free_lie_hall(labels(2), 5);
        assert_eq!(f.dims_per_degree(), vec![2, 1, 2, 3, 6]);
        assert_eq!(free_lie_hall(labels(1), 3).dims_per_degree(), vec![1, 0, 0]);
        assert_eq!(free_lie_hall(labels(2), 2).dims_per_degree(), vec![2, 1]);
        assert_eq!(free_lie_hall(labels(3), 3).dims_per_degree(), vec![3, 3, 8]);
    }

    #[test]
    fn free_quotient_is_lie() {
        let f = free_lie_hall(labels(2), 4);
        assert!(f.to_lie_algebra().check().is_ok());
        let same = presented_quotient(&f, &[]).unwrap();
        assert_eq!(same.dim(), f.dim());
    }

    #[test]
    fn abelian_and_class_two() {
        let f = free_lie_hall(labels(2), 4);
        let ab = f.bracket(&f.gen(0), &f.gen(1));
        let q = presented_quotient(&f, std::slice::from_ref(&ab)).unwrap();
        assert_eq!(q.dims_per_degree(), vec![2, 0, 0, 0]);
        let rels: Vec<Vector> = (0..2).map(|c| f.bracket(&ab, &f.gen(c))).collect();
        let q2 = presented_quotient(&f, &rels).unwrap();
        assert_eq!(q2.dims_per_degree(), vec![2, 1, 0, 0]);
        assert!(q2.to_lie_algebra().check().is_ok());
    }

    #[test]
    fn collapse_detected() {
        let f = free_lie_hall(labels(2), 3);
        let rel = sub_vec(&f.gen(0), &f.bracket(&f.gen(0), &f.gen(1)));
        // a = [a,b] forces a into every lower central term, so a dies modulo degree > 3
        assert!(matches!(presented_quotient(&f, &[rel]), Err(Error::Collapse(_))));
    }
}
