//! Dense exact linear algebra over the rationals: row reduction, kernels,
//! solving, and subspaces kept in reduced echelon form.

use num_traits::{One, Zero};

use crate::combo::Combo;
use crate::rational::Q;

pub type Vector = Vec<Q>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_vec(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Q], s: &Q) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Q], s: &Q, v: &[Q]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
/// Columns are scanned in the order given by `col_order` (defaults to natural order).
pub fn rref_with_order(rows: &[Vector], ncols: usize, col_order: &[usize]) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in col_order {
        if r >= m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    debug_assert!(m.iter().all(|row| row.len() == ncols));
    (m, pivots)
}

pub fn rref(rows: &[Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let order: Vec<usize> = (0..ncols).collect();
    rref_with_order(rows, ncols, &order)
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    rref(rows, ncols).0.len()
}

/// Basis of `{x : A x = 0}` where `a` lists the rows of `A`.
pub fn kernel(a: &[Vector], ncols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(ncols);
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`; free variables are set to zero (first solution in column order).
pub fn solve(a: &[Vector], ncols: usize, b: &[Q]) -> Option<Vector> {
    let aug: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let order: Vec<usize> = (0..=ncols).collect();
    let (r, pivots) = rref_with_order(&aug, ncols + 1, &order);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = zero_vec(ncols);
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix given by rows.
pub fn inverse(a: &[Vector]) -> Option<Vec<Vector>> {
    let n = a.len();
    let aug: Vec<Vector> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vec(n, i));
            r
        })
        .collect();
    let order: Vec<usize> = (0..2 * n).collect();
    let (r, pivots) = rref_with_order(&aug, 2 * n, &order);
    if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn transpose(a: &[Vector], ncols: usize) -> Vec<Vector> {
    (0..ncols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &[Vector], v: &[Q]) -> Vector {
    a.iter()
        .map(|row| row.iter().zip(v).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum())
        .collect()
}

/// A linear subspace of `Q^n` stored in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| unit_vec(ambient, i)).collect::<Vec<_>>())
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let (rows, pivots) = rref(vectors, ambient);
        Self { ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical (echelon) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Q]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve Σ a_i u_i - Σ b_j w_j = 0.
        let n = self.ambient;
        let (k, l) = (self.dim(), other.dim());
        let cols: Vec<Vector> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|w| w.iter().map(|x| -x.clone()).collect()))
            .collect();
        let a = transpose(&cols, n);
        let ker = kernel(&a, k + l);
        let vecs: Vec<Vector> = ker
            .iter()
            .map(|coef| {
                let mut v = zero_vec(n);
                for (c, u) in coef[..k].iter().zip(&self.rows) {
                    axpy(&mut v, c, u);
                }
                v
            })
            .collect();
        Subspace::span(n, &vecs)
    }

    /// Linear functionals (as row vectors) whose common kernel is this subspace.
    pub fn annihilator(&self) -> Vec<Vector> {
        kernel(&self.rows, self.ambient)
    }

    /// Standard basis vectors at non-pivot positions; they span a complement.
    pub fn standard_complement(&self) -> Vec<Vector> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| unit_vec(self.ambient, c))
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
}

/// Expresses `v` in terms of an arbitrary (linearly independent) basis.
pub fn coords_in(basis: &[Vector], v: &[Q]) -> Option<Vector> {
    if basis.is_empty() {
        return if is_zero_vec(v) { Some(Vec::new()) } else { None };
    }
    let a = transpose(basis, v.len());
    solve(&a, basis.len(), v)
}

/// Incremental echelon form over sparse vectors with arbitrary keys. Each row
/// remembers how it was formed from the inserted vectors, so membership tests
/// also return coordinates.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<(K, Combo<K>, Vector)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        Self { rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of independent vectors inserted so far.
    pub fn rank(&self) -> usize {
        self.inserted
    }

    /// Remainder of `v` and the coordinates of the eliminated part.
    fn reduce(&self, v: &Combo<K>) -> (Combo<K>, Vector) {
        let mut r = v.clone();
        let mut coords = zero_vec(self.inserted);
        for (p, row, t) in &self.rows {
            let c = r.coeff(p);
            if !c.is_zero() {
                r.add_scaled(row, &-c.clone());
                axpy(&mut coords, &c, t);
            }
        }
        (r, coords)
    }

    /// Coordinates of `v` in terms of the inserted vectors, if it lies in their span.
    pub fn coords(&self, v: &Combo<K>) -> Option<Vector> {
        let (r, c) = self.reduce(v);
        r.is_zero().then_some(c)
    }

    pub fn contains(&self, v: &Combo<K>) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &Combo<K>) -> bool {
        let (r, coords) = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let n = self.inserted + 1;
        for (_, _, t) in self.rows.iter_mut() {
            t.push(Q::zero());
        }
        // r = v - Σ coords_i b_i
        let mut t: Vector = coords.iter().map(|c| -c.clone()).collect();
        t.push(Q::one());
        let (pivot, pc) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())).expect("nonzero");
        let inv = Q::one() / pc;
        let row = r.scaled(&inv);
        let t = scale_vec(&t, &inv);
        for (_, other, ot) in self.rows.iter_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                other.add_scaled(&row, &-c.clone());
                axpy(ot, &-c, &t);
            }
        }
        self.rows.push((pivot, row, t));
        self.inserted = n;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(&[v(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(mat_vec(&[v(&[1, 2, 3])], x)[0] == q(0));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = vec![v(&[2, 1]), v(&[1, 1])];
        let x = solve(&a, 2, &v(&[3, 2])).unwrap();
        assert_eq!(x, v(&[1, 1]));
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![v(&[1, -1]), v(&[-1, 2])]);
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
        assert!(solve(&[v(&[1, 1]), v(&[1, 1])], 2, &v(&[1, 2])).is_none());
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert!(a.sum(&b).is_full());
        assert!(a.contains(&v(&[3, -2, 0])));
        assert!(!a.contains(&v(&[0, 0, 1])));
        assert_eq!(a.annihilator().len(), 1);
        assert_eq!(coords_in(&[v(&[1, 1, 0]), v(&[0, 1, 0])], &v(&[2, 5, 0])), Some(v(&[2, 3])));
    }

    #[test]
    fn sparse_echelon_coordinates() {
        let mut e: SparseEchelon<&str> = SparseEchelon::new();
        let a = Combo::from_terms([("x", q(1)), ("y", q(1))]);
        let b = Combo::from_terms([("y", q(1)), ("z", q(2))]);
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        assert!(!e.insert(&(&a + &b)));
        let target = &a.scaled(&q(3)) - &b;
        assert_eq!(e.coords(&target), Some(v(&[3, -1])));
        assert!(!e.contains(&Combo::basis("w")));
    }
}
