//! Coalgebra morphisms out of `U(s)`, the `exp*` construction, inversion of
//! `Ψ = πθ'`, the resulting sections and the binary operations they induce
//! on `U_τ`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::lie::check_hyporeductive;
use crate::linalg::{inverse, solve, SparseEchelon, Vector};
use crate::rational::{factorial, one, q, Q};

use super::pbw::{tensor, Pbw, UEnvelope};
use super::utau::{UElem, UTau};
use super::{monomials, Memo, Mono};

/// A linear map from `U(s)` (PBW monomials in the s-letters, up to a degree)
/// into `U(g)`, given by its values on the basis.
#[derive(Clone, Debug)]
pub struct CoalgMorphism {
    domain: Vec<Mono>,
    index: HashMap<Mono, usize>,
    images: Vec<Pbw>,
}

impl CoalgMorphism {
    pub fn new(domain: Vec<Mono>, images: Vec<Pbw>) -> Self {
        let index = domain.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Self { domain, index, images }
    }

    pub fn identity(domain: Vec<Mono>) -> Self {
        let images = domain.iter().map(|m| Combo::basis(m.clone())).collect();
        Self::new(domain, images)
    }

    pub fn domain(&self) -> &[Mono] {
        &self.domain
    }

    pub fn image(&self, i: usize) -> &Pbw {
        &self.images[i]
    }

    pub fn apply(&self, f: &Pbw) -> Result<Pbw> {
        let mut out = Combo::zero();
        for (m, c) in f.iter() {
            let i = *self.index.get(m).ok_or_else(|| {
                if m.len() > self.max_degree() {
                    Error::DegreeOverflow { degree: m.len(), cap: self.max_degree() }
                } else {
                    Error::Input(format!("monomial {m:?} is outside the domain"))
                }
            })?;
            out.add_scaled(&self.images[i], c);
        }
        Ok(out)
    }

    pub fn max_degree(&self) -> usize {
        self.domain.iter().map(|m| m.len()).max().unwrap_or(0)
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &CoalgMorphism) -> Result<CoalgMorphism> {
        let images = other.images.iter().map(|f| self.apply(f)).collect::<Result<_>>()?;
        Ok(Self::new(other.domain.clone(), images))
    }

    /// First basis element where `Δφ = (φ⊗φ)Δ` or `εφ = ε` fails.
    pub fn check_coalgebra(&self, ue: &UEnvelope) -> Option<String> {
        for (d, img) in self.domain.iter().zip(&self.images) {
            let expected_counit = if d.is_empty() { one() } else { Q::zero() };
            if ue.counit(img) != expected_counit {
                return Some(format!("counit fails on {d:?}"));
            }
            let lhs = ue.delta(img);
            let mut rhs = Combo::zero();
            for ((a, b), c) in ue.delta(&Combo::basis(d.clone())).iter() {
                let (Ok(fa), Ok(fb)) = (self.apply(&Combo::basis(a.clone())), self.apply(&Combo::basis(b.clone()))) else {
                    return Some(format!("coproduct of {d:?} leaves the domain"));
                };
                rhs.add_scaled(&tensor(&fa, &fb), c);
            }
            if lhs != rhs {
                return Some(format!("coproduct fails on {d:?}"));
            }
        }
        None
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut w = p.clone();
            w.insert(pos, n - 1);
            out.push(w);
        }
    }
    out
}

/// `exp*(θ)(x) = Σ 1/n! θ(x₍₁₎)⋯θ(x₍ₙ₎)` for `θ` given on letters and zero on
/// `1` and on PBW monomials of degree ≥ 2. Only the splittings into single
/// letters survive, so the value on `d₁⋯d_r` is the symmetrised product of
/// the `θ(d_i)`.
pub fn exp_star(ue: &UEnvelope, domain: Vec<Mono>, theta: impl Fn(u16) -> Pbw) -> CoalgMorphism {
    let mut cache: HashMap<u16, Pbw> = HashMap::new();
    let images = domain
        .iter()
        .map(|d| {
            if d.is_empty() {
                return ue.unit();
            }
            let factors: Vec<Pbw> = d.iter().map(|&x| cache.entry(x).or_insert_with(|| theta(x)).clone()).collect();
            let mut out = Combo::zero();
            for p in permutations(d.len()) {
                let ordered: Vec<Pbw> = p.iter().map(|&i| factors[i].clone()).collect();
                out += &ue.product_of(&ordered);
            }
            out.scaled(&(one() / factorial(d.len())))
        })
        .collect();
    CoalgMorphism::new(domain, images)
}

/// Inverse of an endomorphism of `F_N U(s)`; fails if the degree-1 block or
/// the whole matrix is singular, or if the images leave `U(s)`.
pub fn coalg_inverse(psi: &CoalgMorphism) -> Result<CoalgMorphism> {
    let n = psi.domain.len();
    let mut m = vec![vec![Q::zero(); n]; n];
    for (j, img) in psi.images.iter().enumerate() {
        for (mono, c) in img.iter() {
            let i = *psi
                .index
                .get(mono)
                .ok_or_else(|| Error::Construction(format!("image of {:?} leaves U(s) via {mono:?}", psi.domain[j])))?;
            m[i][j] = c.clone();
        }
    }
    let deg1: Vec<usize> = (0..n).filter(|&i| psi.domain[i].len() == 1).collect();
    let block: Vec<Vector> = deg1.iter().map(|&i| deg1.iter().map(|&j| m[i][j].clone()).collect()).collect();
    if !block.is_empty() && inverse(&block).is_none() {
        return Err(Error::Singular("degree-1 block is not invertible".into()));
    }
    let inv = inverse(&m).ok_or_else(|| Error::Singular("morphism is not invertible on F_N U(s)".into()))?;
    let images = (0..n)
        .map(|j| Combo::from_terms((0..n).filter(|&i| !inv[i][j].is_zero()).map(|i| (psi.domain[i].clone(), inv[i][j].clone()))))
        .collect();
    Ok(CoalgMorphism::new(psi.domain.clone(), images))
}

/// How the lift `θ: s → g` was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    /// `θ(d) = d + c'` with `c' ∈ c` the first solution of `θ(d) ∈ N_g(c)`.
    Normalizer,
    /// `θ(d) = d + 2ζ(d)`.
    Zeta,
}

/// `θ'Ψ⁻¹` with `θ' = exp*(θ)` and `Ψ = πθ'`, a coalgebra map `U(s) → U(g)`
/// with `π θ'Ψ⁻¹ = id`.
pub struct Section {
    pub kind: ThetaKind,
    /// `θ` on the s-letters (adapted coordinates, indexed from 0).
    pub theta: Vec<Vector>,
    pub theta_prime: CoalgMorphism,
    pub psi_inv: CoalgMorphism,
}

impl Section {
    pub fn apply(&self, f: &Pbw) -> Result<Pbw> {
        self.theta_prime.apply(&self.psi_inv.apply(f)?)
    }

    /// The composite as a single morphism.
    pub fn morphism(&self) -> CoalgMorphism {
        self.theta_prime.after(&self.psi_inv).expect("composable by construction")
    }

    pub fn domain(&self) -> &[Mono] {
        self.theta_prime.domain()
    }
}

/// Builds the section for an explicit `θ` on the s-letters.
pub fn section_from_theta(u: &UTau, theta: Vec<Vector>, kind: ThetaKind) -> Result<Section> {
    let k = u.k() as u16;
    let n = u.triple().dim() as u16;
    let domain = monomials(k, n, u.cap());
    let ue = u.ue();
    let theta_prime = exp_star(ue, domain.clone(), |x| ue.from_vector(&theta[(x - k) as usize]));
    let psi_images = (0..domain.len()).map(|i| u.pi(theta_prime.image(i))).collect();
    let psi = CoalgMorphism::new(domain, psi_images);
    let psi_inv = coalg_inverse(&psi)?;
    Ok(Section { kind, theta, theta_prime, psi_inv })
}

/// `θ(d) = d + c'` with `θ(d) ∈ N_g(c)`, first solution in column order.
pub fn normalizer_lift(u: &UTau) -> Result<Vec<Vector>> {
    let t = u.triple();
    if !check_hyporeductive(t) {
        let sum = t.normalizer().sum(t.c());
        return Err(Error::Precondition(format!(
            "g = N_g(c) + c fails: dim N_g(c) + c = {} < dim g = {}",
            sum.dim(),
            t.dim()
        )));
    }
    let g = t.g();
    let k = u.k();
    let n = t.dim();
    let mut out = Vec::new();
    for d in t.s_basis() {
        // rows: (l, p) with p an s-coordinate; unknowns λ_i
        let mut a = Vec::new();
        let mut b = Vec::new();
        for l in 0..k {
            let dl = g.bracket(d, &t.c_basis()[l]);
            let cols: Vec<Vector> = (0..k).map(|i| g.bracket(&t.c_basis()[i], &t.c_basis()[l])).collect();
            for p in k..n {
                a.push(cols.iter().map(|v| v[p].clone()).collect::<Vector>());
                b.push(-dl[p].clone());
            }
        }
        let lam = solve(&a, k, &b).ok_or_else(|| Error::Precondition("no lift of s into N_g(c)".into()))?;
        let mut v = d.clone();
        for (i, l) in lam.iter().enumerate() {
            v[i] += l;
        }
        out.push(v);
    }
    Ok(out)
}

/// The section `σ` of the hyporeductive structure.
pub fn sigma_section(u: &UTau) -> Result<Section> {
    section_from_theta(u, normalizer_lift(u)?, ThetaKind::Normalizer)
}

/// `θ'Ψ⁻¹` with `θ(d) = d + 2ζ(d)`.
pub fn zeta_section(u: &UTau) -> Result<Section> {
    let t = u.triple();
    let zeta = t.zeta().ok_or_else(|| Error::Input("triple carries no zeta".into()))?;
    let theta = t
        .s_basis()
        .iter()
        .zip(zeta)
        .map(|(d, z)| d.iter().zip(z).map(|(a, b)| a + q(2) * b).collect())
        .collect();
    section_from_theta(u, theta, ThetaKind::Zeta)
}

/// First basis element with `π(σ(d)) ≠ d`.
pub fn check_pi_section(u: &UTau, sec: &Section) -> Option<String> {
    for d in sec.domain() {
        let f: Pbw = Combo::basis(d.clone());
        match sec.apply(&f) {
            Ok(img) if u.pi(&img) == f => {}
            _ => return Some(format!("π σ ≠ id on {d:?}")),
        }
    }
    None
}

/// `σ(f) = ρ_{σ(f₍₁₎)(1)} f₍₂₎` on every basis element of the domain.
pub fn check_section_factorization(u: &UTau, sec: &Section) -> Option<String> {
    let one_u = u.one();
    for d in sec.domain() {
        let f: Pbw = Combo::basis(d.clone());
        let lhs = sec.apply(&f).ok()?;
        let mut rhs = Combo::zero();
        for ((a, b), c) in u.ue().delta(&f).iter() {
            let head = sec.apply(&Combo::basis(a.clone())).ok()?;
            let w = u.ue_act(&head, &one_u);
            rhs.add_scaled(&u.ue().mul(&u.rho(&w), &Combo::basis(b.clone())), c);
        }
        if lhs != rhs {
            return Some(format!("factorisation fails on {d:?}"));
        }
    }
    None
}

/// `ρ(u, v) = S(ρ_{u₍₁₎v₍₁₎}) ρ_{v₍₂₎} ρ_{u₍₂₎}`, which acts on `U_τ` as `r(u, v)`.
pub fn rho_pair(u: &UTau, a: &UElem, b: &UElem) -> Pbw {
    let ue = u.ue();
    let mut out = Combo::zero();
    for ((a1, a2), ca) in u.delta(a).iter() {
        for ((b1, b2), cb) in u.delta(b).iter() {
            let prod = u.mul(&Combo::basis(a1.clone()), &Combo::basis(b1.clone()));
            let head = ue.antipode(&u.rho(&prod));
            let tail = ue.mul(&u.sym(b2), &u.sym(a2));
            out.add_scaled(&ue.mul(&head, &tail), &(ca * cb));
        }
    }
    out
}

/// The binary operation `u ⋆ v = section(ρ(u, v))(1)`.
pub struct BinOp<'a> {
    pub utau: &'a UTau,
    pub section: Section,
    cache: Memo<(Mono, Mono), Result<UElem>>,
}

impl<'a> BinOp<'a> {
    pub fn new(utau: &'a UTau, section: Section) -> Self {
        Self { utau, section, cache: Memo::new() }
    }

    pub fn basis_value(&self, a: &Mono, b: &Mono) -> Result<UElem> {
        (*self.cache.get_or(&(a.clone(), b.clone()), || {
            let r = rho_pair(self.utau, &Combo::basis(a.clone()), &Combo::basis(b.clone()));
            if !self.utau.in_us(&r) {
                return Err(Error::Construction(format!("ρ({a:?}, {b:?}) is not in U(s)")));
            }
            let img = self.section.apply(&r)?;
            Ok(self.utau.ue_act(&img, &self.utau.one()))
        }))
        .clone()
    }

    pub fn apply(&self, u: &UElem, v: &UElem) -> Result<UElem> {
        let mut out = Combo::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.basis_value(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Unit laws and `Δ(u⋆v) = (u₍₁₎⋆v₍₁₎) ⊗ (u₍₂₎⋆v₍₂₎)` for `|u| + |v| ≤ max_deg`.
    pub fn check_coalgebra(&self, max_deg: usize) -> Result<Option<String>> {
        let u = self.utau;
        let basis = u.basis(max_deg);
        for a in &basis {
            let ae: UElem = Combo::basis(a.clone());
            let eps = u.one().scaled(&u.counit(&ae));
            if self.apply(&ae, &u.one())? != eps || self.apply(&u.one(), &ae)? != eps {
                return Ok(Some(format!("unit law fails at {a:?}")));
            }
            for b in &basis {
                if a.len() + b.len() > max_deg {
                    continue;
                }
                let be: UElem = Combo::basis(b.clone());
                let lhs = u.delta(&self.apply(&ae, &be)?);
                let mut rhs = Combo::zero();
                for ((a1, a2), ca) in u.delta(&ae).iter() {
                    for ((b1, b2), cb) in u.delta(&be).iter() {
                        let l = self.basis_value(a1, b1)?;
                        let r = self.basis_value(a2, b2)?;
                        rhs.add_scaled(&tensor(&l, &r), &(ca * cb));
                    }
                }
                if lhs != rhs {
                    return Ok(Some(format!("coproduct fails at ({a:?}, {b:?})")));
                }
            }
        }
        Ok(None)
    }

    /// `section(ρ(u,v)) = ρ_{u₍₁₎⋆v₍₁₎} ρ(u₍₂₎, v₍₂₎)` in `U(g)`, for `|u| + |v| ≤ max_deg`.
    pub fn check_factorization(&self, max_deg: usize) -> Result<Option<String>> {
        let u = self.utau;
        let ue = u.ue();
        let basis = u.basis(max_deg);
        for a in &basis {
            for b in &basis {
                if a.len() + b.len() > max_deg {
                    continue;
                }
                let (ae, be): (UElem, UElem) = (Combo::basis(a.clone()), Combo::basis(b.clone()));
                let lhs = self.section.apply(&rho_pair(u, &ae, &be))?;
                let mut rhs = Combo::zero();
                for ((a1, a2), ca) in u.delta(&ae).iter() {
                    for ((b1, b2), cb) in u.delta(&be).iter() {
                        let w = self.basis_value(a1, b1)?;
                        let r = rho_pair(u, &Combo::basis(a2.clone()), &Combo::basis(b2.clone()));
                        rhs.add_scaled(&ue.mul(&u.rho(&w), &r), &(ca * cb));
                    }
                }
                if lhs != rhs {
                    return Ok(Some(format!("factorisation fails at ({a:?}, {b:?})")));
                }
            }
        }
        Ok(None)
    }
}

/// Spanning set of `U(n) ∩ F_d U(g)`: ordered products of a basis of `n`.
pub fn enveloping_span(ue: &UEnvelope, n_basis: &[Vector], max_deg: usize) -> SparseEchelon<Mono> {
    let mut ech = SparseEchelon::new();
    let gens: Vec<Pbw> = n_basis.iter().map(|v| ue.from_vector(v)).collect();
    for word in monomials(0, gens.len() as u16, max_deg) {
        let factors: Vec<Pbw> = word.iter().map(|&i| gens[i as usize].clone()).collect();
        ech.insert(&ue.product_of(&factors));
    }
    ech
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;

    #[test]
    fn exp_star_trivial_and_primitive() {
        let u = build_utau(&examples::sl2_reductive(), 3).unwrap();
        let ue = u.ue();
        let dom = monomials(2, 3, 3);
        let zero = exp_star(ue, dom.clone(), |_| Combo::zero());
        assert_eq!(zero.image(0), &ue.unit());
        assert!(zero.image(1).is_zero());
        let id = exp_star(ue, dom.clone(), |x| ue.letter(x as usize));
        assert_eq!(id.image(1), &ue.letter(2));
        // degree two: θ(h)θ(h) with 1/2! over two orderings
        assert_eq!(id.image(2), &Combo::basis(vec![2, 2]));
        assert!(id.check_coalgebra(ue).is_none());
    }

    #[test]
    fn inverse_cases() {
        let dom = monomials(2, 3, 3);
        let id = CoalgMorphism::identity(dom.clone());
        let inv = coalg_inverse(&id).unwrap();
        assert_eq!(inv.image(3), id.image(3));
        let mut images: Vec<Pbw> = dom.iter().map(|m| Combo::basis(m.clone())).collect();
        images[1] = Combo::zero();
        assert!(matches!(coalg_inverse(&CoalgMorphism::new(dom.clone(), images)), Err(Error::Singular(_))));
        // identity on degree 1 plus a nilpotent correction h^2 ↦ h^2 + h
        let mut images: Vec<Pbw> = dom.iter().map(|m| Combo::basis(m.clone())).collect();
        images[2] = &images[2] + &Combo::basis(vec![2]);
        let psi = CoalgMorphism::new(dom.clone(), images);
        let inv = coalg_inverse(&psi).unwrap();
        assert_eq!(psi.after(&inv).unwrap().image(2), &Combo::basis(vec![2, 2]));
    }

    #[test]
    fn reductive_sigma_is_inclusion() {
        let u = build_utau(&examples::sl2_reductive(), 3).unwrap();
        let sec = sigma_section(&u).unwrap();
        for (i, d) in sec.domain().iter().enumerate() {
            assert_eq!(sec.morphism().image(i), &Combo::basis(d.clone()));
        }
        assert!(check_pi_section(&u, &sec).is_none());
        let bad = build_utau(&examples::sl2_borel_like(), 3).unwrap();
        assert!(matches!(sigma_section(&bad), Err(Error::Precondition(_))));
    }
}
