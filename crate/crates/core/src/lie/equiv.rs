//! Equivalence of triples: isomorphism of the reduced triples.
//!
//! In a reduced triple `c` generates `g`, so an isomorphism is fixed by its
//! restriction to `c`. We compare cheap invariants first, then search small
//! integer matrices on `c`, extend each along bracket words, and test the
//! result.

use serde::Serialize;

use crate::linalg::{axpy, inverse, mat_vec, transpose, unit_vec, zero_vec, Subspace, Vector};
use crate::rational::{q, Q};

use super::triple::{tau_red, Triple};
use super::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Equivalence {
    Yes,
    No,
    Unknown,
}

pub const DEFAULT_DIM_CAP: usize = 6;

/// A basis of g as brackets of c-vectors: `Leaf(i)` or `Bracket(p, q)` over earlier entries.
#[derive(Clone, Copy, Debug)]
enum Word {
    Leaf(usize),
    Bracket(usize, usize),
}

fn derived_dims(g: &LieAlgebra) -> Vec<usize> {
    let mut cur = Subspace::full(g.dim());
    let mut out = vec![cur.dim()];
    loop {
        let next = g.bracket_space(&cur, &cur);
        if next.dim() == cur.dim() {
            return out;
        }
        out.push(next.dim());
        cur = next;
    }
}

fn lower_central_dims(g: &LieAlgebra) -> Vec<usize> {
    let full = Subspace::full(g.dim());
    let mut cur = full.clone();
    let mut out = vec![cur.dim()];
    loop {
        let next = g.bracket_space(&full, &cur);
        if next.dim() == cur.dim() {
            return out;
        }
        out.push(next.dim());
        cur = next;
    }
}

fn invariants(t: &Triple) -> Vec<Vec<usize>> {
    let g = t.g();
    let center = g.center();
    vec![
        vec![t.dim(), t.s().dim(), t.c().dim()],
        derived_dims(g),
        lower_central_dims(g),
        vec![center.dim(), center.intersection(t.s()).dim()],
        vec![g.normalizer(t.c()).dim()],
    ]
}

fn spanning_words(t: &Triple) -> Option<(Vec<Word>, Vec<Vector>)> {
    let g = t.g();
    let n = t.dim();
    let mut words = Vec::new();
    let mut vecs: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(n);
    for (i, c) in t.c_basis().iter().enumerate() {
        words.push(Word::Leaf(i));
        vecs.push(c.clone());
        span = span.sum(&Subspace::span(n, std::slice::from_ref(c)));
    }
    let k = words.len();
    let mut frontier = 0;
    while span.dim() < n && frontier < vecs.len() {
        let end = vecs.len();
        for p in frontier..end {
            for gen in 0..k {
                let b = g.bracket(&vecs[gen], &vecs[p]);
                if !span.contains(&b) {
                    span = span.sum(&Subspace::span(n, std::slice::from_ref(&b)));
                    words.push(Word::Bracket(gen, p));
                    vecs.push(b);
                }
            }
        }
        frontier = end;
    }
    (span.dim() == n).then_some((words, vecs))
}

/// Tries the linear map sending `c1_i ↦ Σ_j a[j][i] c2_j`; returns the full matrix on success.
fn try_extend(t1: &Triple, t2: &Triple, words: &[Word], vecs: &[Vector], a: &[Vec<Q>]) -> Option<Vec<Vector>> {
    let n = t1.dim();
    let k = t1.c_basis().len();
    let g2 = t2.g();
    let mut images: Vec<Vector> = Vec::with_capacity(words.len());
    for w in words {
        let img = match *w {
            Word::Leaf(i) => {
                let mut v = zero_vec(n);
                for j in 0..k {
                    axpy(&mut v, &a[j][i], &t2.c_basis()[j]);
                }
                v
            }
            Word::Bracket(p, r) => g2.bracket(&images[p], &images[r]),
        };
        images.push(img);
    }
    // M B = Images, with B, Images holding vectors as columns.
    let b = transpose(vecs, n);
    let binv = inverse(&b)?;
    let m = matmul(&transpose(&images, n), &binv, n);
    inverse(&m)?;
    let g1 = t1.g();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = mat_vec(&m, g1.bracket_basis(i, j));
            let rhs = g2.bracket(&mat_vec(&m, &unit_vec(n, i)), &mat_vec(&m, &unit_vec(n, j)));
            if lhs != rhs {
                return None;
            }
        }
    }
    for d in t1.s_basis() {
        if !t2.s().contains(&mat_vec(&m, d)) {
            return None;
        }
    }
    Some(m)
}

fn matmul(a: &[Vector], b: &[Vector], n: usize) -> Vec<Vector> {
    let bt = transpose(b, n);
    a.iter().map(|row| bt.iter().map(|col| row.iter().zip(col).map(|(x, y)| x * y).sum()).collect()).collect()
}

fn candidate_matrices(k: usize) -> Vec<Vec<Vec<Q>>> {
    let mut out = Vec::new();
    // signed permutations, identity first
    let perms = permutations(k);
    for p in &perms {
        for signs in 0..(1u32 << k) {
            let mut a = vec![vec![q(0); k]; k];
            for (i, &pi) in p.iter().enumerate() {
                a[pi][i] = if signs >> i & 1 == 1 { q(-1) } else { q(1) };
            }
            out.push(a);
        }
    }
    let entries: Vec<i64> = match k {
        1 => vec![1, -1, 2, -2, 3, -3],
        2 => vec![0, 1, -1, 2, -2],
        3 => vec![0, 1, -1],
        _ => Vec::new(),
    };
    if !entries.is_empty() {
        let total = entries.len().pow((k * k) as u32);
        for mut idx in 0..total {
            let mut a = vec![vec![q(0); k]; k];
            for r in 0..k {
                for c in 0..k {
                    a[r][c] = q(entries[idx % entries.len()]);
                    idx /= entries.len();
                }
            }
            out.push(a);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Searches for an isomorphism of reduced triples `φ: g1 → g2` with
/// `φ(s1) = s2` and `φ(c1) = c2` (as subspaces).
pub fn find_isomorphism(t1: &Triple, t2: &Triple, dim_cap: usize) -> (Equivalence, Option<Vec<Vector>>) {
    let (r1, r2) = (tau_red(t1), tau_red(t2));
    if invariants(&r1) != invariants(&r2) {
        return (Equivalence::No, None);
    }
    if r1.dim() > dim_cap {
        return (Equivalence::Unknown, None);
    }
    if r1.dim() == 0 {
        return (Equivalence::Yes, Some(Vec::new()));
    }
    let Some((words, vecs)) = spanning_words(&r1) else {
        return (Equivalence::Unknown, None);
    };
    let k = r1.c_basis().len();
    for a in candidate_matrices(k) {
        if let Some(m) = try_extend(&r1, &r2, &words, &vecs, &a) {
            return (Equivalence::Yes, Some(m));
        }
    }
    (Equivalence::Unknown, None)
}

pub fn triples_equivalent(t1: &Triple, t2: &Triple, dim_cap: usize) -> Equivalence {
    find_isomorphism(t1, t2, dim_cap).0
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
    fn self_equivalence() {
        for t in [examples::sl2_reductive(), examples::aff1_triple(), examples::heisenberg_tilted()] {
            assert_eq!(triples_equivalent(&t, &t, DEFAULT_DIM_CAP), Equivalence::Yes);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = examples::aff1_triple();
        let b = examples::sl2_reductive();
        assert_eq!(triples_equivalent(&a, &b, DEFAULT_DIM_CAP), Equivalence::No);
    }

    #[test]
    fn swapped_sl2_basis() {
        let g = examples::sl2();
        let swapped = g.change_basis(&[v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[0, 0, -1])], vec!["f".into(), "e".into(), "-h".into()]).unwrap();
        let t2 = Triple::new(swapped, vec![v(&[0, 0, 1])], vec![v(&[1, 0, 0]), v(&[0, 1, 0])], None).unwrap();
        let t1 = examples::sl2_reductive();
        let (eq, m) = find_isomorphism(&t1, &t2, DEFAULT_DIM_CAP);
        assert_eq!(eq, Equivalence::Yes);
        // the swapped basis has the same constants, so the coordinate identity works
        assert_eq!(m.unwrap(), (0..3).map(|i| unit_vec(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn above_cap_is_unknown() {
        let t = examples::sl2_reductive();
        assert_eq!(triples_equivalent(&t, &t, 2), Equivalence::Unknown);
    }
}
