//! The Lie algebra of operators on `U_τ` generated by right multiplications
//! by primitives, read off from exact evaluations.

use num_traits::Zero;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Triple};
use crate::linalg::{kernel, unit_vec, SparseEchelon, Vector};

use super::operator::Operator;
use super::utau::{UElem, UTau};
use super::Mono;

pub const INNER_DIM_CAP: usize = 64;

pub struct InnerLie {
    pub lie: LieAlgebra,
    /// Operators realising the basis of `lie`; the first `k` are `R_{c_i}`.
    pub ops: Vec<Operator>,
    /// `(lie, {f : f(1) = 0}, span{R_{c_i}})`.
    pub triple: Triple,
    /// Operators are compared on the basis of degree at most this.
    pub eval_degree: usize,
}

fn evaluate(u: &UTau, op: &Operator, basis: &[Mono]) -> Combo<(usize, Mono)> {
    let mut out = Combo::zero();
    for (i, m) in basis.iter().enumerate() {
        for (w, c) in op.apply(u, &Combo::basis(m.clone())).iter() {
            out.add_term((i, w.clone()), c.clone());
        }
    }
    out
}

/// Closes `{R_{c_i}}` under commutators; two operators are identified when
/// they agree on `F_d U_τ` with `d = eval_degree`.
pub fn inner_operator_lie(u: &UTau, eval_degree: usize) -> Result<InnerLie> {
    let k = u.k();
    let basis = u.basis(eval_degree);
    let mut ech = SparseEchelon::new();
    let mut ops: Vec<Operator> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let names = u.labels();
    for i in 0..k {
        let op = Operator::right(u.prim(i));
        if !ech.insert(&evaluate(u, &op, &basis)) {
            return Err(Error::Construction(format!("R_{} vanishes on the evaluation range", names[i])));
        }
        ops.push(op);
        labels.push(format!("R({})", names[i]));
    }
    // brackets [op_i, op_j] for j < i are computed once op_i joins the list
    let mut i = 0;
    while i < ops.len() {
        for j in 0..i {
            let br = ops[i].bracket(&ops[j]);
            if ech.insert(&evaluate(u, &br, &basis)) {
                if ops.len() >= INNER_DIM_CAP {
                    return Err(Error::Construction(format!("operator algebra exceeds dimension {INNER_DIM_CAP}")));
                }
                labels.push(format!("[{},{}]", labels[i], labels[j]));
                ops.push(br);
            }
        }
        i += 1;
    }
    let n = ops.len();
    let mut consts: Vec<Vec<Vector>> = Vec::new();
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if i == j {
                row.push(vec![Zero::zero(); n]);
                continue;
            }
            let br = ops[i].bracket(&ops[j]);
            let ev = evaluate(u, &br, &basis);
            let mut c = ech
                .coords(&ev)
                .ok_or_else(|| Error::Construction(format!("[{}, {}] leaves the span", labels[i], labels[j])))?;
            c.resize(n, Zero::zero());
            row.push(c);
        }
        consts.push(row);
    }
    let lie = LieAlgebra::new(labels, consts)?;
    lie.check().map_err(|e| Error::Construction(format!("operator bracket is not a Lie bracket: {e:?}")))?;
    // f ↦ f(1), in coordinates of the U_τ basis of degree ≤ eval_degree
    let values: Vec<UElem> = ops.iter().map(|o| o.apply(u, &u.one())).collect();
    let mut eval_one: Vec<Vector> = Vec::new();
    for m in &basis {
        eval_one.push(values.iter().map(|v| v.coeff(m)).collect());
    }
    let s_basis = kernel(&eval_one, n);
    let c_basis = (0..k).map(|i| unit_vec(n, i)).collect();
    let triple = Triple::new(lie.clone(), s_basis, c_basis, None)?;
    Ok(InnerLie { lie, ops, triple, eval_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_utau;
    use crate::examples;
    use crate::lie::{triples_equivalent, Equivalence, DEFAULT_DIM_CAP};

    #[test]
    fn sl2_operators() {
        let t = examples::sl2_reductive();
        let u = build_utau(&t, 3).unwrap();
        let inner = inner_operator_lie(&u, 3).unwrap();
        assert_eq!(inner.lie.dim(), 3);
        assert_eq!(triples_equivalent(&inner.triple, &t, DEFAULT_DIM_CAP), Equivalence::Yes);
    }

    #[test]
    fn abelian_reduction() {
        // aff(1) with s = span{x}: the core is trivial and R_y alone spans
        let t = examples::aff1_triple();
        let u = build_utau(&t, 3).unwrap();
        let inner = inner_operator_lie(&u, 3).unwrap();
        assert_eq!(inner.lie.dim(), 1);
    }
}
