//! Triples `(g, s, c)` and the triple-level constructions and predicates.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{axpy, coords_in, is_zero_vec, unit_vec, zero_vec, Subspace, Vector};
use crate::rational::q;

use super::LieAlgebra;

/// A Lie algebra with a subalgebra `s`, a complement `c` and optionally a linear map `ζ: s → c`.
#[derive(Clone, Debug)]
pub struct Triple {
    g: LieAlgebra,
    s_basis: Vec<Vector>,
    c_basis: Vec<Vector>,
    /// `ζ(s_basis[i])`, as vectors of g lying in `c`.
    zeta: Option<Vec<Vector>>,
    s: Subspace,
    c: Subspace,
}

impl Triple {
    pub fn new(g: LieAlgebra, s_basis: Vec<Vector>, c_basis: Vec<Vector>, zeta: Option<Vec<Vector>>) -> Result<Self> {
        let n = g.dim();
        if s_basis.iter().chain(&c_basis).any(|v| v.len() != n) {
            return Err(Error::Dimension("basis vectors must live in g".into()));
        }
        let s = Subspace::span(n, &s_basis);
        let c = Subspace::span(n, &c_basis);
        if s.dim() != s_basis.len() || c.dim() != c_basis.len() {
            return Err(Error::Input("s and c bases must be linearly independent".into()));
        }
        if !g.is_subalgebra(&s) {
            return Err(Error::NotSubalgebra("[s, s] is not contained in s".into()));
        }
        if s.dim() + c.dim() != n || s.intersection(&c).dim() != 0 {
            return Err(Error::NotComplement(format!(
                "dim s = {}, dim c = {}, dim g = {n}, dim (s ∩ c) = {}",
                s.dim(),
                c.dim(),
                s.intersection(&c).dim()
            )));
        }
        if let Some(z) = &zeta {
            if z.len() != s_basis.len() || z.iter().any(|v| v.len() != n) {
                return Err(Error::Dimension("zeta needs one image per s-basis vector".into()));
            }
            if z.iter().any(|v| !c.contains(v)) {
                return Err(Error::Input("zeta must map into c".into()));
            }
        }
        Ok(Self { g, s_basis, c_basis, zeta, s, c })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }
    pub fn s(&self) -> &Subspace {
        &self.s
    }
    pub fn c(&self) -> &Subspace {
        &self.c
    }
    pub fn s_basis(&self) -> &[Vector] {
        &self.s_basis
    }
    pub fn c_basis(&self) -> &[Vector] {
        &self.c_basis
    }
    pub fn zeta(&self) -> Option<&[Vector]> {
        self.zeta.as_deref()
    }
    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn with_zeta(&self, zeta: Option<Vec<Vector>>) -> Result<Self> {
        Triple::new(self.g.clone(), self.s_basis.clone(), self.c_basis.clone(), zeta)
    }

    /// `ζ` applied to an arbitrary vector of `s`.
    pub fn zeta_apply(&self, d: &[crate::rational::Q]) -> Option<Vector> {
        let z = self.zeta.as_ref()?;
        let coords = coords_in(&self.s_basis, d)?;
        let mut out = zero_vec(self.dim());
        for (l, img) in coords.iter().zip(z) {
            axpy(&mut out, l, img);
        }
        Some(out)
    }

    /// Splits `v` into its `s` and `c` components.
    pub fn split(&self, v: &[crate::rational::Q]) -> (Vector, Vector) {
        let mut basis = self.c_basis.clone();
        basis.extend(self.s_basis.iter().cloned());
        let coords = coords_in(&basis, v).expect("g = s ⊕ c");
        let k = self.c_basis.len();
        let n = self.dim();
        let mut cpart = zero_vec(n);
        let mut spart = zero_vec(n);
        for (i, l) in coords.iter().enumerate() {
            if i < k {
                axpy(&mut cpart, l, &self.c_basis[i]);
            } else {
                axpy(&mut spart, l, &self.s_basis[i - k]);
            }
        }
        (spart, cpart)
    }

    /// The same triple written in the basis `c_basis ++ s_basis`, so that
    /// `c` occupies coordinates `0..k` and `s` the rest.
    pub fn adapted(&self) -> Triple {
        if self.is_adapted() {
            return self.clone();
        }
        let mut basis = self.c_basis.clone();
        basis.extend(self.s_basis.iter().cloned());
        let labels = basis.iter().map(|b| self.g.describe(b)).collect();
        let g = self.g.change_basis(&basis, labels).expect("adapted basis is invertible");
        let n = self.dim();
        let k = self.c_basis.len();
        let zeta = self.zeta.as_ref().map(|z| {
            z.iter()
                .map(|img| {
                    let mut v = coords_in(&basis, img).expect("ζ maps into g");
                    for x in v.iter_mut().skip(k) {
                        debug_assert!(x.is_zero());
                        *x = q(0);
                    }
                    v
                })
                .collect()
        });
        Triple::new(g, (k..n).map(|i| unit_vec(n, i)).collect(), (0..k).map(|i| unit_vec(n, i)).collect(), zeta)
            .expect("adapted triple is valid")
    }

    pub fn is_adapted(&self) -> bool {
        let n = self.dim();
        let k = self.c_basis.len();
        self.c_basis.iter().enumerate().all(|(i, v)| *v == unit_vec(n, i))
            && self.s_basis.iter().enumerate().all(|(i, v)| *v == unit_vec(n, k + i))
    }

    /// `N_g(c)`.
    pub fn normalizer(&self) -> Subspace {
        self.g.normalizer(&self.c)
    }
}

/// `τ_inn`: restrict to the subalgebra generated by `c`. The result is adapted.
pub fn tau_inn(t: &Triple) -> Triple {
    let g = t.g();
    let g_inn = g.generated_subalgebra(t.c());
    let s_inn = t.s().intersection(&g_inn);
    let mut basis = t.c_basis().to_vec();
    basis.extend(s_inn.basis().iter().cloned());
    let labels = basis.iter().map(|b| g.describe(b)).collect();
    let h = g.restrict(&basis, labels).expect("generated subalgebra is closed");
    let m = basis.len();
    let k = t.c_basis().len();
    let zeta = t.zeta().map(|_| {
        s_inn
            .basis()
            .iter()
            .map(|d| {
                let img = t.zeta_apply(d).expect("d in s");
                let mut v = coords_in(t.c_basis(), &img).expect("ζ maps into c");
                v.resize(m, q(0));
                v
            })
            .collect()
    });
    Triple::new(h, (k..m).map(|i| unit_vec(m, i)).collect(), (0..k).map(|i| unit_vec(m, i)).collect(), zeta)
        .expect("τ_inn is a triple")
}

/// `τ_red = (g_inn / core(s_inn), s_inn / core(s_inn), c)`. The result is adapted.
pub fn tau_red(t: &Triple) -> Triple {
    let ti = tau_inn(t);
    let g = ti.g();
    let core = g.core(ti.s());
    let k = ti.c_basis().len();
    let n = ti.dim();
    // complement of the core inside s, chosen from the s basis
    let mut acc = core.clone();
    let mut s_rep = Vec::new();
    for v in ti.s_basis() {
        if !acc.contains(v) {
            acc = acc.sum(&Subspace::span(n, std::slice::from_ref(v)));
            s_rep.push(v.clone());
        }
    }
    let mut comp = ti.c_basis().to_vec();
    comp.extend(s_rep.iter().cloned());
    let labels = comp.iter().map(|b| g.describe(b)).collect();
    let q_alg = g.quotient(&core, &comp, labels).expect("core is an ideal");
    let m = comp.len();
    let zeta = ti.zeta().map(|_| {
        s_rep
            .iter()
            .map(|d| {
                let mut v = ti.zeta_apply(d).expect("d in s")[..k].to_vec();
                v.resize(m, q(0));
                v
            })
            .collect()
    });
    Triple::new(q_alg, (k..m).map(|i| unit_vec(m, i)).collect(), (0..k).map(|i| unit_vec(m, i)).collect(), zeta)
        .expect("c injects into the reduced algebra")
}

pub fn check_hyporeductive(t: &Triple) -> bool {
    t.normalizer().sum(t.c()).is_full()
}

/// Outcome of the (PRT1)/(PRT2) checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PseudoReport {
    pub prt1: bool,
    pub prt2: bool,
    /// `(s-basis index, description)` of the first failure, if any.
    pub witness: Option<String>,
    pub max_power: usize,
}

impl PseudoReport {
    pub fn passed(&self) -> bool {
        self.prt1 && self.prt2
    }
}

/// (PRT1) `d + ζ(d) ∈ N_g(c)` for every s-basis vector, and (PRT2)
/// `ad_w^{2n}(ζ(s)) ⊆ c` for `w` ranging over the c basis and pairwise sums,
/// `2n ≤ power_bound`.
pub fn check_pseudoreductive_with_bound(t: &Triple, power_bound: usize) -> Result<PseudoReport> {
    let zeta = t.zeta().ok_or_else(|| Error::Input("triple carries no zeta".into()))?;
    let g = t.g();
    let n_space = t.normalizer();
    let mut report = PseudoReport { prt1: true, prt2: true, witness: None, max_power: power_bound };
    for (i, (d, zd)) in t.s_basis().iter().zip(zeta).enumerate() {
        let v: Vector = d.iter().zip(zd).map(|(a, b)| a + b).collect();
        if !n_space.contains(&v) {
            report.prt1 = false;
            report.witness = Some(format!("PRT1: s-basis {i}: {} + ζ = {} is not in N_g(c)", g.describe(d), g.describe(&v)));
            return Ok(report);
        }
    }
    let mut ws: Vec<Vector> = t.c_basis().to_vec();
    for i in 0..t.c_basis().len() {
        for j in i + 1..t.c_basis().len() {
            ws.push(t.c_basis()[i].iter().zip(&t.c_basis()[j]).map(|(a, b)| a + b).collect());
        }
    }
    for w in &ws {
        for zd in zeta {
            let mut cur = zd.clone();
            for p in 1..=power_bound {
                cur = g.bracket(w, &cur);
                if p % 2 == 0 && !t.c().contains(&cur) {
                    report.prt2 = false;
                    report.witness = Some(format!(
                        "PRT2: ad^{p}_({}) ({}) = {} is not in c",
                        g.describe(w),
                        g.describe(zd),
                        g.describe(&cur)
                    ));
                    return Ok(report);
                }
                if is_zero_vec(&cur) {
                    break;
                }
            }
        }
    }
    Ok(report)
}

pub fn check_pseudoreductive(t: &Triple) -> Result<PseudoReport> {
    check_pseudoreductive_with_bound(t, 2 * t.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn hyporeductive_cases() {
        assert!(check_hyporeductive(&examples::aff1_triple()));
        assert!(check_hyporeductive(&examples::sl2_reductive()));
        assert!(!check_hyporeductive(&examples::sl2_borel_like()));
        assert!(check_hyporeductive(&examples::heisenberg_tilted()));
    }

    #[test]
    fn inn_and_red() {
        let t = examples::sl2_reductive();
        let ti = tau_inn(&t);
        assert_eq!(ti.dim(), 3);
        let a = examples::aff1_triple();
        let ai = tau_inn(&a);
        assert_eq!((ai.dim(), ai.s().dim()), (1, 0));
        let ar = tau_red(&a);
        assert_eq!((ar.dim(), ar.s().dim(), ar.c().dim()), (1, 0, 1));
        let r2 = tau_red(&tau_red(&t));
        assert_eq!(r2.g().core(r2.s()).dim(), 0);
    }

    #[test]
    fn pseudoreductive_cases() {
        assert!(check_pseudoreductive(&examples::sl2_reductive_zeta0()).unwrap().passed());
        assert!(check_pseudoreductive(&examples::heisenberg_tilted()).unwrap().passed());
        let bad = examples::heisenberg_tilted().with_zeta(Some(vec![crate::linalg::zero_vec(3)])).unwrap();
        let r = check_pseudoreductive(&bad).unwrap();
        assert!(!r.prt1);
    }

    #[test]
    fn split_components() {
        let t = examples::heisenberg_tilted();
        let (s, c) = t.split(&[q(0), q(0), q(1)]);
        assert_eq!(s, vec![q(-1), q(0), q(1)]);
        assert_eq!(c, vec![q(1), q(0), q(0)]);
    }
}
