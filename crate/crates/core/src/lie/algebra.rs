//! Finite-dimensional Lie algebras given by exact structure constants.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{axpy, coords_in, inverse, is_zero_vec, kernel, mat_vec, transpose, unit_vec, zero_vec, Subspace, Vector};
use crate::rational::{fmt_q, Q};

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    consts: Vec<Vec<Vector>>,
}

/// First violation found by [`LieAlgebra::check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum LieViolation {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl LieAlgebra {
    /// Builds an algebra from a full constant table; no axioms are checked here.
    pub fn new(labels: Vec<String>, consts: Vec<Vec<Vector>>) -> Result<Self> {
        let n = labels.len();
        if consts.len() != n || consts.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::Dimension(format!("structure constants must be {n}x{n}x{n}")));
        }
        Ok(Self { labels, consts })
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        Self { labels, consts: vec![vec![zero_vec(n); n]; n] }
    }

    /// Fills `[e_j, e_i] = -[e_i, e_j]` for every listed pair.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = labels.len();
        let mut consts = vec![vec![zero_vec(n); n]; n];
        let mut set = vec![vec![false; n]; n];
        for (i, j, v) in brackets {
            if *i >= n || *j >= n || v.len() != n {
                return Err(Error::Dimension(format!("bracket entry ({i},{j}) out of range")));
            }
            consts[*i][*j] = v.clone();
            set[*i][*j] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if set[i][j] && !set[j][i] {
                    consts[j][i] = consts[i][j].iter().map(|x| -x.clone()).collect();
                    set[j][i] = true;
                }
            }
        }
        Ok(Self { labels, consts })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &[Vec<Vector>] {
        &self.consts
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i][j]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), &self.consts[i][j]);
            }
        }
        out
    }

    /// Matrix of `ad_x` acting on column vectors (rows of the result are output coordinates).
    pub fn ad_matrix(&self, x: &[Q]) -> Vec<Vector> {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vec(n, j))).collect();
        transpose(&cols, n)
    }

    /// Exact antisymmetry and Jacobi check; reports the first violation.
    pub fn check(&self) -> std::result::Result<(), LieViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let s: Vector = self.consts[i][j].iter().zip(&self.consts[j][i]).map(|(a, b)| a + b).collect();
                if !is_zero_vec(&s) {
                    return Err(LieViolation::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ei = unit_vec(n, i);
                    let ej = unit_vec(n, j);
                    let ek = unit_vec(n, k);
                    let mut acc = self.bracket(&self.consts[i][j], &ek);
                    acc = crate::linalg::add_vec(&acc, &self.bracket(&self.consts[j][k], &ei));
                    acc = crate::linalg::add_vec(&acc, &self.bracket(&self.consts[k][i], &ej));
                    if !is_zero_vec(&acc) {
                        return Err(LieViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra, with bracket `-[x,y]`.
    pub fn opposite(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            consts: self
                .consts
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|x| -x.clone()).collect()).collect())
                .collect(),
        }
    }

    /// Rewrites the algebra in a new basis (rows of `new_basis`, given in old coordinates).
    pub fn change_basis(&self, new_basis: &[Vector], labels: Vec<String>) -> Result<Self> {
        let n = self.dim();
        if new_basis.len() != n {
            return Err(Error::Dimension("change of basis must be square".into()));
        }
        // Columns of P are the new basis vectors; new coords = P^{-1} old coords.
        let p = transpose(new_basis, n);
        let pinv = inverse(&p).ok_or_else(|| Error::Singular("change of basis is not invertible".into()))?;
        let mut consts = vec![vec![zero_vec(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                consts[i][j] = mat_vec(&pinv, &self.bracket(&new_basis[i], &new_basis[j]));
            }
        }
        Ok(Self { labels, consts })
    }

    /// The subalgebra spanned by `basis` (must be bracket closed), in that basis.
    pub fn restrict(&self, basis: &[Vector], labels: Vec<String>) -> Result<Self> {
        let m = basis.len();
        let mut consts = vec![vec![zero_vec(m); m]; m];
        for i in 0..m {
            for j in 0..m {
                let b = self.bracket(&basis[i], &basis[j]);
                consts[i][j] = coords_in(basis, &b)
                    .ok_or_else(|| Error::NotSubalgebra("span is not closed under the bracket".into()))?;
            }
        }
        Ok(Self { labels, consts })
    }

    /// Quotient by an ideal, using `complement` (vectors spanning a complement of the ideal) as basis.
    pub fn quotient(&self, ideal: &Subspace, complement: &[Vector], labels: Vec<String>) -> Result<Self> {
        let m = complement.len();
        let mut full: Vec<Vector> = complement.to_vec();
        full.extend(ideal.basis().iter().cloned());
        if full.len() != self.dim() {
            return Err(Error::Dimension("complement and ideal do not span the algebra".into()));
        }
        let mut consts = vec![vec![zero_vec(m); m]; m];
        for i in 0..m {
            for j in 0..m {
                let b = self.bracket(&complement[i], &complement[j]);
                let c = coords_in(&full, &b).ok_or_else(|| Error::Singular("bad quotient basis".into()))?;
                consts[i][j] = c[..m].to_vec();
            }
        }
        Ok(Self { labels, consts })
    }

    /// Human-readable label of a vector, e.g. `e - 2*h`.
    pub fn describe(&self, v: &[Q]) -> String {
        describe_vector(&self.labels, v)
    }

    /// Smallest bracket-closed subspace containing `seed`.
    pub fn generated_subalgebra(&self, seed: &Subspace) -> Subspace {
        let mut cur = seed.clone();
        loop {
            let basis = cur.basis().to_vec();
            let mut extra = Vec::new();
            for x in &basis {
                for y in &basis {
                    let b = self.bracket(x, y);
                    if !cur.contains(&b) {
                        extra.push(b);
                    }
                }
            }
            if extra.is_empty() {
                return cur;
            }
            cur = cur.sum(&Subspace::span(self.dim(), &extra));
        }
    }

    /// `N_g(c) = {x : [x, c] ⊆ c}`.
    pub fn normalizer(&self, c: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = c.annihilator();
        let mut eqs = Vec::new();
        for cv in c.basis() {
            // x ↦ [x, cv] = -ad_{cv}(x)
            let m = self.ad_matrix(cv);
            for f in &ann {
                let row: Vector = (0..n).map(|j| m.iter().zip(f).map(|(r, fi)| fi * &r[j]).sum()).collect();
                eqs.push(row);
            }
        }
        Subspace::span(n, &kernel(&eqs, n))
    }

    /// `{x ∈ k : [g, x] ⊆ k}`, the elements of `k` whose bracket with all of g stays in `k`.
    fn stabilized_part(&self, k: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = k.annihilator();
        // x = Σ λ_i b_i with b_i the basis of k; conditions f([e_j, x]) = 0.
        let kb = k.basis();
        let mut eqs = Vec::new();
        for j in 0..n {
            let ej = unit_vec(n, j);
            let images: Vec<Vector> = kb.iter().map(|b| self.bracket(&ej, b)).collect();
            for f in &ann {
                eqs.push(images.iter().map(|im| im.iter().zip(f).map(|(a, b)| a * b).sum()).collect());
            }
        }
        let ker = kernel(&eqs, kb.len());
        let vecs: Vec<Vector> = ker
            .iter()
            .map(|lam| {
                let mut v = zero_vec(n);
                for (l, b) in lam.iter().zip(kb) {
                    axpy(&mut v, l, b);
                }
                v
            })
            .collect();
        Subspace::span(n, &vecs)
    }

    /// Largest ideal of g contained in `s`.
    pub fn core(&self, s: &Subspace) -> Subspace {
        let mut k = s.clone();
        loop {
            let next = self.stabilized_part(&k);
            if next.dim() == k.dim() {
                return next;
            }
            k = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&self.bracket(x, y))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        (0..n).all(|i| s.basis().iter().all(|y| s.contains(&self.bracket(&unit_vec(n, i), y))))
    }

    /// `[a, b]` for subspaces.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut v = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                v.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim(), &v)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut eqs = Vec::new();
        for j in 0..n {
            // x ↦ [x, e_j]
            eqs.extend(self.ad_matrix(&unit_vec(n, j)).into_iter().map(|r| r.iter().map(|x| -x.clone()).collect()));
        }
        Subspace::span(n, &kernel(&eqs, n))
    }
}

pub fn describe_vector(labels: &[String], v: &[Q]) -> String {
    let mut parts = Vec::new();
    for (l, x) in labels.iter().zip(v) {
        if x.is_zero() {
            continue;
        }
        // labels of adapted bases can themselves be sums
        let l = if l.contains(' ') { format!("({l})") } else { l.clone() };
        if *x == Q::from_integer(1.into()) {
            parts.push(l);
        } else if *x == Q::from_integer((-1).into()) {
            parts.push(format!("-{l}"));
        } else {
            parts.push(format!("{}*{l}", fmt_q(x)));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::rational::q;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn check_lie_cases() {
        assert!(LieAlgebra::abelian(2).check().is_ok());
        assert!(examples::sl2().check().is_ok());
        let bad = LieAlgebra::new(
            vec!["a".into(), "b".into()],
            vec![vec![v(&[0, 0]), v(&[1, 0])], vec![v(&[1, 0]), v(&[0, 0])]],
        )
        .unwrap();
        assert_eq!(bad.check(), Err(LieViolation::Antisymmetry { i: 0, j: 1 }));
        let jac = LieAlgebra::from_brackets(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 1, v(&[1, 0, 0])), (1, 2, v(&[0, 1, 0])), (0, 2, v(&[0, 0, 0]))],
        )
        .unwrap();
        assert!(matches!(jac.check(), Err(LieViolation::Jacobi { .. })));
    }

    #[test]
    fn generated_subalgebra_cases() {
        let g = examples::sl2();
        let ef = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(g.generated_subalgebra(&ef).is_full());
        assert!(g.generated_subalgebra(&Subspace::full(3)).is_full());
        let ab = LieAlgebra::abelian(3);
        let seed = Subspace::span(3, &[v(&[1, 1, 0])]);
        assert_eq!(ab.generated_subalgebra(&seed), seed);
    }

    #[test]
    fn normalizer_cases() {
        // basis order e, f, h
        let g = examples::sl2();
        assert!(g.normalizer(&Subspace::full(3)).is_full());
        let ef = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(g.normalizer(&ef), Subspace::span(3, &[v(&[0, 0, 1])]));
        let fh = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(g.normalizer(&fh), fh);
    }

    #[test]
    fn core_cases() {
        let g = examples::sl2();
        assert!(g.core(&Subspace::full(3)).is_full());
        assert_eq!(g.core(&Subspace::span(3, &[v(&[0, 0, 1])])).dim(), 0);
        let aff = examples::aff1();
        let y = Subspace::span(2, &[v(&[0, 1])]);
        assert_eq!(aff.core(&y), y);
        assert!(aff.is_ideal(&aff.core(&y)));
    }

    #[test]
    fn change_basis_preserves_bracket() {
        let g = examples::sl2();
        let nb = vec![v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[0, 0, -1])];
        let g2 = g.change_basis(&nb, vec!["f".into(), "e".into(), "-h".into()]).unwrap();
        assert!(g2.check().is_ok());
        // [f, e] = -h = 1 * (-h)
        assert_eq!(g2.bracket_basis(0, 1), &v(&[0, 0, 1]));
        assert_eq!(g2, g2.opposite().opposite());
    }
}
