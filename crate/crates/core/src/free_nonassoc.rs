//! Free unital non-associative algebra on finitely many generators, its
//! coproduct, and the Shestakov–Umirbaev operations, which can be evaluated
//! in any algebra implementing [`NonAssocAlgebra`].

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::combo::Combo;
use crate::rational::{factorial, one, Q};

/// A binary tree monomial stored as its preorder traversal:
/// `0` marks an internal node, `i + 1` the leaf for generator `i`.
/// The empty sequence is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree(Vec<u32>);

impl Tree {
    pub fn unit() -> Self {
        Tree(Vec::new())
    }

    pub fn leaf(generator: u32) -> Self {
        Tree(vec![generator + 1])
    }

    pub fn tokens(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().filter(|&&t| t != 0).count()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Tree) -> Tree {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut t = Vec::with_capacity(self.0.len() + other.0.len() + 1);
        t.push(0);
        t.extend_from_slice(&self.0);
        t.extend_from_slice(&other.0);
        Tree(t)
    }

    /// Children of the root, or `None` for the unit and for leaves.
    pub fn split(&self) -> Option<(Tree, Tree)> {
        if self.0.first() != Some(&0) {
            return None;
        }
        let mut need = 1i64;
        for (i, &t) in self.0.iter().enumerate().skip(1) {
            need += if t == 0 { 1 } else { -1 };
            if need == 0 {
                return Some((Tree(self.0[1..=i].to_vec()), Tree(self.0[i + 1..].to_vec())));
            }
        }
        unreachable!("malformed tree encoding")
    }

    /// Leaf generator, if this tree is a single leaf.
    pub fn as_leaf(&self) -> Option<u32> {
        match self.0.as_slice() {
            [g] if *g != 0 => Some(g - 1),
            _ => None,
        }
    }

    /// Left-normed power `((c c) ⋯) c`.
    pub fn left_power(c: &Tree, n: usize) -> Tree {
        (0..n).fold(Tree::unit(), |acc, _| acc.mul(c))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".into();
        }
        if let Some(g) = self.as_leaf() {
            return names.get(g as usize).cloned().unwrap_or_else(|| format!("x{g}"));
        }
        let (l, r) = self.split().expect("internal node");
        format!("({}{})", l.render(names), r.render(names))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type FreeNAElement = Combo<Tree>;

/// Ordered tensor factors `x₁ ⊗ ⋯ ⊗ x_m`; the empty word is the unit slot.
pub type TensorWord<K> = Vec<Combo<K>>;

/// An algebra with an exact bilinear product on combinations of basis keys.
pub trait NonAssocAlgebra {
    type Key: Ord + Clone;
    fn one(&self) -> Combo<Self::Key>;
    fn mul(&self, a: &Combo<Self::Key>, b: &Combo<Self::Key>) -> Combo<Self::Key>;
}

/// The free unital magma algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeNA;

impl NonAssocAlgebra for FreeNA {
    type Key = Tree;

    fn one(&self) -> FreeNAElement {
        Combo::basis(Tree::unit())
    }

    fn mul(&self, a: &FreeNAElement, b: &FreeNAElement) -> FreeNAElement {
        na_mul(a, b)
    }
}

pub fn generator(i: u32) -> FreeNAElement {
    Combo::basis(Tree::leaf(i))
}

pub fn na_mul(a: &FreeNAElement, b: &FreeNAElement) -> FreeNAElement {
    let mut out = Combo::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(x.mul(y), cx * cy);
        }
    }
    out
}

fn tree_delta(t: &Tree) -> Combo<(Tree, Tree)> {
    if t.is_unit() {
        return Combo::basis((Tree::unit(), Tree::unit()));
    }
    if t.as_leaf().is_some() {
        return Combo::from_terms([((t.clone(), Tree::unit()), one()), ((Tree::unit(), t.clone()), one())]);
    }
    let (l, r) = t.split().expect("internal node");
    let (dl, dr) = (tree_delta(&l), tree_delta(&r));
    let mut out = Combo::zero();
    for ((a1, a2), ca) in dl.iter() {
        for ((b1, b2), cb) in dr.iter() {
            out.add_term((a1.mul(b1), a2.mul(b2)), ca * cb);
        }
    }
    out
}

/// The coproduct: the unital algebra map with every generator primitive.
pub fn na_delta(a: &FreeNAElement) -> Combo<(Tree, Tree)> {
    let mut out = Combo::zero();
    for (t, c) in a.iter() {
        out.add_scaled(&tree_delta(t), c);
    }
    out
}

pub fn na_counit(a: &FreeNAElement) -> Q {
    a.coeff(&Tree::unit())
}

/// `(u v) w − u (v w)`.
pub fn associator<A: NonAssocAlgebra>(alg: &A, u: &Combo<A::Key>, v: &Combo<A::Key>, w: &Combo<A::Key>) -> Combo<A::Key> {
    let l = alg.mul(&alg.mul(u, v), w);
    let r = alg.mul(u, &alg.mul(v, w));
    &l - &r
}

/// Left-normed product of the entries of `xs` selected by `mask`.
fn lnp<A: NonAssocAlgebra>(alg: &A, xs: &[Combo<A::Key>], mask: u32) -> Combo<A::Key> {
    let mut acc = alg.one();
    for (i, x) in xs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            acc = alg.mul(&acc, x);
        }
    }
    acc
}

fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    // all subsets of `mask`, including 0 and `mask`
    let mut s = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & mask;
        }
        Some(cur)
    })
}

struct PSolver<'a, A: NonAssocAlgebra> {
    alg: &'a A,
    xs: &'a [Combo<A::Key>],
    ys: &'a [Combo<A::Key>],
    z: &'a Combo<A::Key>,
    memo: HashMap<(u32, u32), Combo<A::Key>>,
    lnp_x: HashMap<u32, Combo<A::Key>>,
    lnp_y: HashMap<u32, Combo<A::Key>>,
}

impl<A: NonAssocAlgebra> PSolver<'_, A> {
    fn lx(&mut self, m: u32) -> Combo<A::Key> {
        if let Some(v) = self.lnp_x.get(&m) {
            return v.clone();
        }
        let v = lnp(self.alg, self.xs, m);
        self.lnp_x.insert(m, v.clone());
        v
    }

    fn ly(&mut self, m: u32) -> Combo<A::Key> {
        if let Some(v) = self.lnp_y.get(&m) {
            return v.clone();
        }
        let v = lnp(self.alg, self.ys, m);
        self.lnp_y.insert(m, v.clone());
        v
    }

    fn p(&mut self, s: u32, t: u32) -> Combo<A::Key> {
        if s == 0 || t == 0 {
            return Combo::zero();
        }
        if let Some(v) = self.memo.get(&(s, t)) {
            return v.clone();
        }
        let (u, v) = (self.lx(s), self.ly(t));
        let mut out = associator(self.alg, &u, &v, self.z);
        for s1 in submasks(s) {
            for t1 in submasks(t) {
                if (s1 == 0 && t1 == 0) || s1 == s || t1 == t {
                    continue;
                }
                let rest = self.p(s & !s1, t & !t1);
                if rest.is_zero() {
                    continue;
                }
                let head = self.alg.mul(&self.lx(s1), &self.ly(t1));
                out -= &self.alg.mul(&head, &rest);
            }
        }
        self.memo.insert((s, t), out.clone());
        out
    }
}

/// The element `p(u̲; v̲; z)` determined by `(u, v, z) = (u₍₁₎ v₍₁₎) p(u̲₍₂₎; v̲₍₂₎; z)`,
/// where `u`, `v` are the left-normed products of the words and their factors
/// are treated as primitive. `p` vanishes when either word is empty.
pub fn p_map<A: NonAssocAlgebra>(alg: &A, xs: &[Combo<A::Key>], ys: &[Combo<A::Key>], z: &Combo<A::Key>) -> Combo<A::Key> {
    assert!(xs.len() < 32 && ys.len() < 32, "words longer than 31 letters are not supported");
    let mut solver = PSolver { alg, xs, ys, z, memo: HashMap::new(), lnp_x: HashMap::new(), lnp_y: HashMap::new() };
    solver.p((1u32 << xs.len()) - 1, (1u32 << ys.len()) - 1)
}

/// `⟨x₁,…,x_m; y, z⟩`, with `⟨1; y, z⟩ = −[y, z]`.
pub fn su_bracket<A: NonAssocAlgebra>(alg: &A, xs: &[Combo<A::Key>], y: &Combo<A::Key>, z: &Combo<A::Key>) -> Combo<A::Key> {
    if xs.is_empty() {
        let yz = alg.mul(y, z);
        let zy = alg.mul(z, y);
        return &zy - &yz;
    }
    let a = p_map(alg, xs, std::slice::from_ref(y), z);
    let b = p_map(alg, xs, std::slice::from_ref(z), y);
    &b - &a
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
    out
}

/// `Φ(x₁,…,x_n; y₁,…,y_m; y_{m+1})`: `p` averaged over permutations of the
/// x-block and of the full y-block.
pub fn su_phi<A: NonAssocAlgebra>(alg: &A, xs: &[Combo<A::Key>], ys: &[Combo<A::Key>], y_last: &Combo<A::Key>) -> Combo<A::Key> {
    let mut all_y: Vec<Combo<A::Key>> = ys.to_vec();
    all_y.push(y_last.clone());
    let mut out = Combo::zero();
    for sx in permutations(xs.len()) {
        let xw: Vec<_> = sx.iter().map(|&i| xs[i].clone()).collect();
        for sy in permutations(all_y.len()) {
            let yw: Vec<_> = sy[..ys.len()].iter().map(|&i| all_y[i].clone()).collect();
            let last = &all_y[sy[ys.len()]];
            out += &p_map(alg, &xw, &yw, last);
        }
    }
    out.scaled(&(one() / (factorial(xs.len()) * factorial(all_y.len()))))
}

/// Substitutes `assignment[i]` for generator `i` and evaluates in `alg`.
pub fn evaluate<A: NonAssocAlgebra>(alg: &A, expr: &FreeNAElement, assignment: &[Combo<A::Key>]) -> Combo<A::Key> {
    let mut cache: HashMap<Tree, Combo<A::Key>> = HashMap::new();
    let mut out = Combo::zero();
    for (t, c) in expr.iter() {
        out.add_scaled(&eval_tree(alg, t, assignment, &mut cache), c);
    }
    out
}

fn eval_tree<A: NonAssocAlgebra>(
    alg: &A,
    t: &Tree,
    assignment: &[Combo<A::Key>],
    cache: &mut HashMap<Tree, Combo<A::Key>>,
) -> Combo<A::Key> {
    if t.is_unit() {
        return alg.one();
    }
    if let Some(g) = t.as_leaf() {
        return assignment[g as usize].clone();
    }
    if let Some(v) = cache.get(t) {
        return v.clone();
    }
    let (l, r) = t.split().expect("internal node");
    let v = alg.mul(&eval_tree(alg, &l, assignment, cache), &eval_tree(alg, &r, assignment, cache));
    cache.insert(t.clone(), v.clone());
    v
}

/// The bracket `⟨x₁,…,x_m; y, z⟩` as a polynomial of the free algebra in the
/// generators `0..m` (the x's), `m` (y) and `m + 1` (z).
pub fn su_bracket_symbolic(m: usize) -> FreeNAElement {
    let xs: Vec<_> = (0..m as u32).map(generator).collect();
    su_bracket(&FreeNA, &xs, &generator(m as u32), &generator(m as u32 + 1))
}

/// Evaluates the SU bracket in `alg` by substitution into the free polynomial.
pub fn evaluate_su<A: NonAssocAlgebra>(alg: &A, xs: &[Combo<A::Key>], y: &Combo<A::Key>, z: &Combo<A::Key>) -> Combo<A::Key> {
    let poly = su_bracket_symbolic(xs.len());
    let mut assignment = xs.to_vec();
    assignment.push(y.clone());
    assignment.push(z.clone());
    evaluate(alg, &poly, &assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn x() -> FreeNAElement {
        generator(0)
    }
    fn y() -> FreeNAElement {
        generator(1)
    }
    fn z() -> FreeNAElement {
        generator(2)
    }

    #[test]
    fn product_basics() {
        assert_eq!(na_mul(&FreeNA.one(), &x()), x());
        let a = na_mul(&x(), &na_mul(&y(), &z()));
        let b = na_mul(&na_mul(&x(), &y()), &z());
        assert_ne!(a, b);
        let lhs = na_mul(&(&x() + &y()), &x());
        let rhs = &na_mul(&x(), &x()) + &na_mul(&y(), &x());
        assert_eq!(lhs, rhs);
        let t = Tree::left_power(&Tree::leaf(0), 3);
        assert_eq!(t.render(&["c".into()]), "((cc)c)");
    }

    #[test]
    fn coproduct_of_product() {
        assert_eq!(na_delta(&FreeNA.one()), Combo::basis((Tree::unit(), Tree::unit())));
        let xy = na_mul(&x(), &y());
        let d = na_delta(&xy);
        let t = |e: &FreeNAElement| e.keys().next().unwrap().clone();
        let expected = Combo::from_terms([
            ((t(&xy), Tree::unit()), q(1)),
            ((t(&x()), t(&y())), q(1)),
            ((t(&y()), t(&x())), q(1)),
            ((Tree::unit(), t(&xy)), q(1)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn p_low_degree() {
        let alg = FreeNA;
        let p = p_map(&alg, &[x()], &[y()], &z());
        assert_eq!(p, associator(&alg, &x(), &y(), &z()));
        assert!(p_map(&alg, &[], &[y()], &z()).is_zero());
        let x2 = generator(3);
        let p2 = p_map(&alg, &[x(), x2.clone()], &[y()], &z());
        let mut expected = associator(&alg, &na_mul(&x(), &x2), &y(), &z());
        expected -= &na_mul(&x(), &p_map(&alg, std::slice::from_ref(&x2), &[y()], &z()));
        expected -= &na_mul(&x2, &p_map(&alg, &[x()], &[y()], &z()));
        assert_eq!(p2, expected);
    }

    #[test]
    fn brackets_low_degree() {
        let alg = FreeNA;
        let b0 = su_bracket(&alg, &[], &y(), &z());
        assert_eq!(b0, &na_mul(&z(), &y()) - &na_mul(&y(), &z()));
        let b1 = su_bracket(&alg, &[x()], &y(), &z());
        let expected = &associator(&alg, &x(), &z(), &y()) - &associator(&alg, &x(), &y(), &z());
        assert_eq!(b1, expected);
        assert!(su_bracket(&alg, &[x()], &y(), &y()).is_zero());
        let phi = su_phi(&alg, &[x()], &[y()], &y());
        assert_eq!(phi, p_map(&alg, &[x()], &[y()], &y()));
        assert_eq!(su_phi(&alg, &[x()], &[y()], &z()), su_phi(&alg, &[x()], &[z()], &y()));
    }
}
