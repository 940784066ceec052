//! Hyporeductive triple algebras: extraction from a triple, the enveloping
//! Lie algebra `E(c)`, integration to `U_τ` over `E(c)^op`, and the Sabinin
//! recursion checked against the Shestakov–Umirbaev brackets.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::envelope::{build_utau, Operator, UElem, UTau};
use crate::error::{Error, Result};
use crate::free_nonassoc::evaluate_su;
use crate::hypo_pseudo::commutator;
use crate::lie::{check_hyporeductive, free_lie_hall, presented_quotient, LieAlgebra, PresentedLie, Triple};
use crate::linalg::{add_vec, axpy, coords_in, scale_vec, sub_vec, unit_vec, zero_vec, Subspace, Vector};
use crate::rational::{fmt_q, q, Q};
use crate::report::{fmt_elem, CheckRecord};

/// `(c, a·b, a∗b, [c; a, b])` on a space with basis `labels`.
/// `dot[a][b]`, `star[a][b]` and `ternary[c][a][b]` are coordinate vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Hta {
    pub labels: Vec<String>,
    pub dot: Vec<Vec<Vector>>,
    pub star: Vec<Vec<Vector>>,
    pub ternary: Vec<Vec<Vec<Vector>>>,
}

impl Hta {
    pub fn zero(labels: Vec<String>) -> Self {
        let k = labels.len();
        Self {
            labels,
            dot: vec![vec![zero_vec(k); k]; k],
            star: vec![vec![zero_vec(k); k]; k],
            ternary: vec![vec![vec![zero_vec(k); k]; k]; k],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Shape and the two skew-symmetries (dot, and ternary in its last two slots).
    pub fn validate(&self) -> Result<()> {
        let k = self.dim();
        let square = |t: &Vec<Vec<Vector>>| t.len() == k && t.iter().all(|r| r.len() == k && r.iter().all(|v| v.len() == k));
        if !square(&self.dot) || !square(&self.star) || self.ternary.len() != k || !self.ternary.iter().all(square) {
            return Err(Error::Dimension(format!("HTA tensors must be {k}x{k}(x{k}) with vectors of length {k}")));
        }
        for a in 0..k {
            for b in 0..k {
                if add_vec(&self.dot[a][b], &self.dot[b][a]).iter().any(|x| !x.is_zero()) {
                    return Err(Error::Input(format!("dot is not skew at ({}, {})", self.labels[a], self.labels[b])));
                }
                for c in 0..k {
                    if add_vec(&self.ternary[c][a][b], &self.ternary[c][b][a]).iter().any(|x| !x.is_zero()) {
                        return Err(Error::Input(format!(
                            "ternary is not skew in its last two slots at [{}; {}, {}]",
                            self.labels[c], self.labels[a], self.labels[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Equality of the three products, ignoring labels.
    pub fn same_products(&self, other: &Hta) -> bool {
        self.dot == other.dot && self.star == other.star && self.ternary == other.ternary
    }

    fn bilinear(table: &[Vec<Vector>], y: &[Q], z: &[Q]) -> Vector {
        let k = y.len();
        let mut out = zero_vec(k);
        for (i, yi) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, zj) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(yi * zj), &table[i][j]);
            }
        }
        out
    }

    pub fn dot_of(&self, y: &[Q], z: &[Q]) -> Vector {
        Self::bilinear(&self.dot, y, z)
    }

    pub fn star_of(&self, y: &[Q], z: &[Q]) -> Vector {
        Self::bilinear(&self.star, y, z)
    }

    pub fn ternary_of(&self, x: &[Q], y: &[Q], z: &[Q]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            axpy(&mut out, xi, &Self::bilinear(&self.ternary[i], y, z));
        }
        out
    }
}

/// Reads the products off `g = h ⊕ c` with `h ⊆ N_g(c)`:
/// `[a,b] = h(a,b) + a·b`, `h(a,b) = s(a,b) + a∗b`, `[h(a,b), c] = [c; a,b]`.
pub fn hta_from_triple(t: &Triple, h_basis: &[Vector]) -> Result<Hta> {
    let g = t.g();
    let n = t.dim();
    let k = t.c_basis().len();
    let h = Subspace::span(n, h_basis);
    if h.dim() != h_basis.len() || h.dim() + k != n || !h.sum(t.c()).is_full() {
        return Err(Error::NotComplement("h must be a complement of c in g".into()));
    }
    if !t.normalizer().contains_space(&h) {
        return Err(Error::Precondition("h is not contained in N_g(c)".into()));
    }
    let mut basis = h_basis.to_vec();
    basis.extend(t.c_basis().iter().cloned());
    let labels = t.c_basis().iter().map(|v| g.describe(v)).collect();
    let mut out = Hta::zero(labels);
    for a in 0..k {
        for b in 0..k {
            let br = g.bracket(&t.c_basis()[a], &t.c_basis()[b]);
            let co = coords_in(&basis, &br).expect("h ⊕ c spans g");
            let hab: Vector = co[..h_basis.len()].iter().zip(h_basis).fold(zero_vec(n), |mut acc, (c, v)| {
                axpy(&mut acc, c, v);
                acc
            });
            out.dot[a][b] = co[h_basis.len()..].to_vec();
            let (_, cpart) = t.split(&hab);
            out.star[a][b] = coords_in(t.c_basis(), &cpart).expect("c component");
            for c in 0..k {
                let tv = g.bracket(&hab, &t.c_basis()[c]);
                out.ternary[c][a][b] = coords_in(t.c_basis(), &tv).ok_or_else(|| Error::Construction("[h(a,b), c] leaves c".into()))?;
            }
        }
    }
    Ok(out)
}

/// `E(c)` truncated at degree `cap`, with the triple `(E, s, c)` and the
/// complement `h = span{[a,b] − a·b}` used to read the HTA back.
pub struct EnvelopeE {
    pub presented: PresentedLie,
    pub lie: LieAlgebra,
    pub triple: Triple,
    pub h_basis: Vec<Vector>,
}

/// The free Lie algebra on `c` modulo `[[a,b] − a·b, c] − [c; a,b]` and
/// brackets of length above `cap`. `s = span{[a,b] − a·b − a∗b}`.
pub fn envelope_e(a: &Hta, cap: usize) -> Result<EnvelopeE> {
    if cap < 2 {
        return Err(Error::Input("E(c) needs a degree cap of at least 2".into()));
    }
    a.validate()?;
    let k = a.dim();
    let free = free_lie_hall(a.labels.clone(), cap);
    let gen_combo = |coeffs: &[Q]| -> Vector {
        let mut v = zero_vec(free.ambient_dim());
        for (i, c) in coeffs.iter().enumerate() {
            axpy(&mut v, c, &free.gen(i));
        }
        v
    };
    let mut relations = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            let hxy = sub_vec(&free.bracket(&free.gen(x), &free.gen(y)), &gen_combo(&a.dot[x][y]));
            for c in 0..k {
                let lhs = free.bracket(&hxy, &free.gen(c));
                relations.push(sub_vec(&lhs, &gen_combo(&a.ternary[c][x][y])));
            }
        }
    }
    let presented = presented_quotient(&free, &relations)?;
    let lie = presented.to_lie_algebra();
    let m = presented.dim();
    let mut h_vecs = Vec::new();
    let mut s_vecs = Vec::new();
    for x in 0..k {
        for y in 0..k {
            let br = presented.project(&free.bracket(&free.gen(x), &free.gen(y)));
            let hv = sub_vec(&br, &pad(&a.dot[x][y], m));
            s_vecs.push(sub_vec(&hv, &pad(&a.star[x][y], m)));
            h_vecs.push(hv);
        }
    }
    let s = Subspace::span(m, &s_vecs);
    let h = Subspace::span(m, &h_vecs);
    let c_basis: Vec<Vector> = (0..k).map(|i| unit_vec(m, i)).collect();
    let triple = Triple::new(lie.clone(), s.basis().to_vec(), c_basis, None)?;
    Ok(EnvelopeE { presented, lie, triple, h_basis: h.basis().to_vec() })
}

fn pad(v: &[Q], m: usize) -> Vector {
    let mut out = v.to_vec();
    out.resize(m, Q::zero());
    out
}

/// Round trip through `E(c)` and hyporeductivity of `(E, s, c)`.
pub fn check_envelope(a: &Hta, env: &EnvelopeE) -> Result<Vec<CheckRecord>> {
    let back = hta_from_triple(&env.triple, &env.h_basis)?;
    let rt = (!back.same_products(a)).then(|| "products read back from E(c) differ from the input".to_string());
    let hr = (!check_hyporeductive(&env.triple)).then(|| "N(c) + c ≠ E(c)".to_string());
    Ok(vec![
        CheckRecord::new("hta_from_triple(E(c), h) = input", "envelope round trip", env.presented.cap(), rt),
        CheckRecord::new("E(c) = N(c) + c", "hyporeductivity of (E(c), s, c)", env.presented.cap(), hr),
    ])
}

/// `U_τ` for `(E(c)^op, s, c)`; the primitives `prim(i)` are the generators.
pub fn integrate_hta(a: &Hta, cap: usize) -> Result<(EnvelopeE, UTau)> {
    let env = envelope_e(a, cap)?;
    let t = &env.triple;
    let op = Triple::new(t.g().opposite(), t.s_basis().to_vec(), t.c_basis().to_vec(), None)?;
    let u = build_utau(&op, cap)?;
    Ok((env, u))
}

/// `[a,b] = a∗b + a·b` and `[[R_a,R_b] + R_{a·b}, R_c] = R_{[c;a,b]}` on primitives.
pub fn check_universal_property(a: &Hta, u: &UTau, max_deg: usize) -> Vec<CheckRecord> {
    let k = a.dim();
    let labels = u.labels();
    let mut w1 = None;
    let mut w2 = None;
    for x in 0..k {
        for y in 0..k {
            let lhs = commutator(u, &u.prim(x), &u.prim(y));
            let rhs = u.from_primitive(&add_vec(&a.star[x][y], &a.dot[x][y]));
            if lhs != rhs && w1.is_none() {
                w1 = Some(format!("[{0},{1}] = {2}, {0}∗{1} + {0}·{1} = {3}", labels[x], labels[y], fmt_elem(&lhs, &labels), fmt_elem(&rhs, &labels)));
            }
            let inner = Operator::right(u.prim(x))
                .bracket(&Operator::right(u.prim(y)))
                .add(&Operator::right(u.from_primitive(&a.dot[x][y])));
            for c in 0..k {
                let lhs = inner.bracket(&Operator::right(u.prim(c)));
                let target = Operator::right(u.from_primitive(&a.ternary[c][x][y]));
                if w2.is_none() {
                    if let Some(z) = lhs.differs_on(&target, u, max_deg) {
                        w2 = Some(format!("a = {}, b = {}, c = {}, x = {}", labels[x], labels[y], labels[c], fmt_elem(&z, &labels)));
                    }
                }
            }
        }
    }
    vec![
        CheckRecord::new("[a,b] = a∗b + a·b", "commutator of primitives", 2, w1),
        CheckRecord::new("[[R_a,R_b] + R_(a·b), R_c] = R_([c;a,b])", "ternary product as operator bracket", max_deg, w2),
    ]
}

/// Which form of `⟨1; y, z⟩` seeds the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BaseVariant {
    /// `⟨1; y,z⟩ = −y·z − z∗y`
    StarSwapped,
    /// `⟨1; y,z⟩ = −y∗z − y·z`
    StarInOrder,
}

impl BaseVariant {
    pub fn formula(self) -> &'static str {
        match self {
            BaseVariant::StarSwapped => "<1;y,z> = -y·z - z∗y",
            BaseVariant::StarInOrder => "<1;y,z> = -y∗z - y·z",
        }
    }
}

/// `⟨x₁…x_m; y, z⟩` on basis letters, computed by the recursion
/// `⟨u x; y,z⟩ = ⟨u; x, y·z⟩ + ⟨u₍₁₎; x, ⟨u₍₂₎; y,z⟩⟩ + ε(u)[x; y,z]`.
pub struct SabininOps<'a> {
    pub hta: &'a Hta,
    pub variant: BaseVariant,
    memo: HashMap<(Vec<usize>, usize, usize), Vector>,
}

impl<'a> SabininOps<'a> {
    pub fn new(hta: &'a Hta, variant: BaseVariant) -> Self {
        Self { hta, variant, memo: HashMap::new() }
    }

    pub fn bracket(&mut self, word: &[usize], y: &[Q], z: &[Q]) -> Vector {
        let k = self.hta.dim();
        let mut out = zero_vec(k);
        for (i, yi) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, zj) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let v = self.basis_value(word, i, j);
                axpy(&mut out, &(yi * zj), &v);
            }
        }
        out
    }

    pub fn basis_value(&mut self, word: &[usize], y: usize, z: usize) -> Vector {
        let key = (word.to_vec(), y, z);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = self.hta.dim();
        let (ye, ze) = (unit_vec(k, y), unit_vec(k, z));
        let v = match word.split_last() {
            None => {
                let (dot, star) = match self.variant {
                    BaseVariant::StarSwapped => (self.hta.dot_of(&ye, &ze), self.hta.star_of(&ze, &ye)),
                    BaseVariant::StarInOrder => (self.hta.dot_of(&ye, &ze), self.hta.star_of(&ye, &ze)),
                };
                scale_vec(&add_vec(&dot, &star), &q(-1))
            }
            Some((&x, u)) => {
                let xe = unit_vec(k, x);
                let yz = self.hta.dot_of(&ye, &ze);
                let mut acc = self.bracket(u, &xe, &yz);
                for mask in 0u32..(1 << u.len()) {
                    let (mut u1, mut u2) = (Vec::new(), Vec::new());
                    for (i, &l) in u.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            u1.push(l);
                        } else {
                            u2.push(l);
                        }
                    }
                    let inner = self.basis_value(&u2, y, z);
                    let v = self.bracket(&u1, &xe, &inner);
                    acc = add_vec(&acc, &v);
                }
                if u.is_empty() {
                    acc = add_vec(&acc, &self.hta.ternary[x][y][z]);
                }
                acc
            }
        };
        self.memo.insert(key, v.clone());
        v
    }
}

/// Every word `x₁…x_m` over `0..k` with `m + 2 ≤ max_deg`.
fn words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SuComparison {
    pub variant: BaseVariant,
    pub formula: String,
    pub record: CheckRecord,
}

/// Compares both recursions with the brackets `⟨x₁…x_m; y,z⟩` evaluated in
/// `u` for all basis words with `m + 2 ≤ max_deg`.
pub fn crosscheck_su(a: &Hta, u: &UTau, max_deg: usize) -> Vec<SuComparison> {
    let k = a.dim();
    let labels = &a.labels;
    let mut su: Vec<(Vec<usize>, usize, usize, Vector)> = Vec::new();
    let mut non_primitive = None;
    for w in words(k, max_deg.saturating_sub(2)) {
        let xs: Vec<UElem> = w.iter().map(|&i| u.prim(i)).collect();
        for y in 0..k {
            for z in 0..k {
                let v = evaluate_su(u, &xs, &u.prim(y), &u.prim(z));
                match u.primitive_coords(&v).or_else(|| v.is_zero().then(|| zero_vec(k))) {
                    Some(c) => su.push((w.clone(), y, z, c)),
                    None => {
                        if non_primitive.is_none() {
                            non_primitive = Some(format!("SU bracket on {w:?}, {y}, {z} is not primitive: {}", fmt_elem(&v, &u.labels())));
                        }
                        su.push((w.clone(), y, z, zero_vec(k)));
                    }
                }
            }
        }
    }
    [BaseVariant::StarSwapped, BaseVariant::StarInOrder]
        .into_iter()
        .map(|variant| {
            let mut ops = SabininOps::new(a, variant);
            let mut witness = non_primitive.clone();
            for (w, y, z, expect) in &su {
                if witness.is_some() {
                    break;
                }
                let got = ops.basis_value(w, *y, *z);
                if &got != expect {
                    let word: Vec<&str> = w.iter().map(|&i| labels[i].as_str()).collect();
                    witness = Some(format!(
                        "<{}; {}, {}>: recursion gives ({}), SU gives ({})",
                        if word.is_empty() { "1".to_string() } else { word.join(" ") },
                        labels[*y],
                        labels[*z],
                        got.iter().map(fmt_q).collect::<Vec<_>>().join(", "),
                        expect.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
                    ));
                }
            }
            SuComparison {
                variant,
                formula: variant.formula().to_string(),
                record: CheckRecord::new(&format!("Sabinin recursion with {} = SU brackets", variant.formula()), "Sabinin recursion against SU brackets", max_deg, witness),
            }
        })
        .collect()
}

/// Exported tables `⟨word; y, z⟩` for words of length `≤ max_deg − 2`.
pub fn sabinin_tables(a: &Hta, variant: BaseVariant, max_deg: usize) -> Vec<(Vec<usize>, usize, usize, Vector)> {
    let mut ops = SabininOps::new(a, variant);
    let k = a.dim();
    let mut out = Vec::new();
    for w in words(k, max_deg.saturating_sub(2)) {
        for y in 0..k {
            for z in 0..k {
                out.push((w.clone(), y, z, ops.basis_value(&w, y, z)));
            }
        }
    }
    out
}
