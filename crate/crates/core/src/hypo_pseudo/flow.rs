//! The conjugation flow `exp(tR_{a•b}) exp(sR_c) exp(tR_{a•b})` and its
//! logarithm, in two-parameter series truncated at total degree `M`.
//!
//! The series live in the free associative algebra on `X = tR_{a•b}` and
//! `Y = sR_c`, so the `(s,t)`-degree of a word is its length. Identities of
//! the series are checked there; the coefficients are then evaluated as
//! operators on `U_τ`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::combo::Combo;
use crate::envelope::{UElem, UTau};
use crate::rational::{binomial, fmt_q, one, q, Q};
use crate::report::{fmt_elem, CheckRecord};

type Word = Vec<u8>;
type Series = Combo<Word>;

const X: u8 = 0;
const Y: u8 = 1;

/// Bernoulli numbers of `x/(eˣ − 1)`: `B_m = −1/(m+1) Σ_{j<m} C(m+1, j) B_j`.
pub fn bernoulli(m: usize) -> Q {
    let mut b: Vec<Q> = vec![one()];
    for n in 1..=m {
        let mut acc = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += binomial(n + 1, j) * bj;
        }
        b.push(-acc / q(n as i64 + 1));
    }
    b[m].clone()
}

fn mul(a: &Series, b: &Series, max_len: usize) -> Series {
    let mut out = Combo::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            if u.len() + v.len() <= max_len {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, cu * cv);
            }
        }
    }
    out
}

fn exp_letter(x: u8, max_len: usize) -> Series {
    Combo::from_terms((0..=max_len).map(|n| (vec![x; n], one() / crate::rational::factorial(n))))
}

/// `log(1 + z) = Σ (−1)^{n+1} zⁿ/n`; `l` must have constant term 1.
fn log_series(l: &Series, max_len: usize) -> Series {
    let mut z = l.clone();
    z.add_term(Vec::new(), -one());
    let mut out = Combo::zero();
    let mut pow = z.clone();
    for n in 1..=max_len {
        let sign = if n % 2 == 1 { one() } else { -one() };
        out.add_scaled(&pow, &(sign / q(n as i64)));
        pow = mul(&pow, &z, max_len);
    }
    out
}

fn bracket(a: &Series, b: &Series, max_len: usize) -> Series {
    &mul(a, b, max_len) - &mul(b, a, max_len)
}

fn count_x(w: &Word) -> usize {
    w.iter().filter(|&&c| c == X).count()
}

/// Free-algebra identities: `t∂f/∂t = 2Σ β_{2m}/(2m)! ad_f^{2m}(X)` and
/// `f(s,0) = Y`. Returns the first failing description.
fn series_identities(f: &Series, max_len: usize) -> (Option<String>, Option<String>) {
    let lhs = Combo::from_terms(f.iter().map(|(w, c)| (w.clone(), c * q(count_x(w) as i64))));
    let x: Series = Combo::basis(vec![X]);
    let mut rhs = Combo::zero();
    let mut ad = x.clone();
    let mut m2 = 0;
    while m2 <= max_len {
        let coef = q(2) * bernoulli(m2) / crate::rational::factorial(m2);
        rhs.add_scaled(&ad, &coef);
        ad = bracket(f, &bracket(f, &ad, max_len), max_len);
        m2 += 2;
    }
    let ode = (lhs != rhs).then(|| {
        let diff = &lhs - &rhs;
        let (w, c) = diff.iter().next().expect("nonzero");
        format!("coefficient of {} differs by {}", render_word(w), fmt_q(c))
    });
    let initial = f.filtered(|w| count_x(w) == 0);
    let init = (initial != Combo::basis(vec![Y])).then(|| "f(s,0) ≠ sR_c".to_string());
    (ode, init)
}

fn render_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&c| if c == X { "X" } else { "Y" }).collect::<Vec<_>>().join("")
}

/// Coefficient of `s^i t^j` as a function on `U_τ`; words act as compositions
/// of right multiplications, rightmost letter first.
fn eval_group(u: &UTau, s: &Series, i: usize, j: usize, w: &UElem, c: &UElem, x: &UElem) -> UElem {
    let mut out = Combo::zero();
    let mut cache: HashMap<Word, UElem> = HashMap::new();
    for (word, coef) in s.iter() {
        if word.len() != i + j || count_x(word) != j {
            continue;
        }
        let v = apply_word(u, word, w, c, x, &mut cache);
        out.add_scaled(&v, coef);
    }
    out
}

fn apply_word(u: &UTau, word: &[u8], w: &UElem, c: &UElem, x: &UElem, cache: &mut HashMap<Word, UElem>) -> UElem {
    if word.is_empty() {
        return x.clone();
    }
    if let Some(v) = cache.get(word) {
        return v.clone();
    }
    let inner = apply_word(u, &word[1..], w, c, x, cache);
    let v = u.mul(&inner, if word[0] == X { w } else { c });
    cache.insert(word.to_vec(), v.clone());
    v
}

/// Coefficient of `s^i t^j` in `(exp_l(t w) exp_l(s c)) exp_l(t w)`.
fn loop_coefficient(u: &UTau, w: &UElem, c: &UElem, i: usize, j: usize) -> UElem {
    let ew = |n: usize| u.left_power(w, n).scaled(&(one() / crate::rational::factorial(n)));
    let ec = u.left_power(c, i).scaled(&(one() / crate::rational::factorial(i)));
    let mut out = Combo::zero();
    for j1 in 0..=j {
        out += &u.mul(&u.mul(&ew(j1), &ec), &ew(j - j1));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct FlowCoefficient {
    pub s_degree: usize,
    pub t_degree: usize,
    /// `f_ij = R_p`; coordinates of `p` in the primitive basis as `p/q` strings.
    pub primitive: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlowReport {
    pub records: Vec<CheckRecord>,
    pub coefficients: Vec<FlowCoefficient>,
}

/// Runs the flow checks for `R_w` (with `w = a•b`) and `R_c`, series degree
/// `max_len`, operators compared on the basis up to `eval_deg`.
pub fn flow_check(u: &UTau, w: &UElem, c: &UElem, max_len: usize, eval_deg: usize) -> FlowReport {
    let labels = u.labels();
    let ex = exp_letter(X, max_len);
    let l = mul(&mul(&ex, &exp_letter(Y, max_len), max_len), &ex, max_len);
    let f = log_series(&l, max_len);
    let (ode, init) = series_identities(&f, max_len);
    let basis = u.basis(eval_deg);
    let mut group_like = None;
    let mut matches = None;
    let mut primitive = None;
    let mut coefficients = Vec::new();
    for total in 1..=max_len {
        for j in 0..=total {
            let i = total - j;
            let l1 = eval_group(u, &l, i, j, w, c, &u.one());
            if group_like.is_none() {
                for m in &basis {
                    let xe: UElem = Combo::basis(m.clone());
                    if eval_group(u, &l, i, j, w, c, &xe) != u.mul(&xe, &l1) {
                        group_like = Some(format!("s^{i} t^{j} coefficient is not R_(L(1)) at x = {}", fmt_elem(&xe, &labels)));
                        break;
                    }
                }
            }
            if matches.is_none() && l1 != loop_coefficient(u, w, c, i, j) {
                matches = Some(format!("s^{i} t^{j}: operator side {} vs loop side {}", fmt_elem(&l1, &labels), fmt_elem(&loop_coefficient(u, w, c, i, j), &labels)));
            }
            let f1 = eval_group(u, &f, i, j, w, c, &u.one());
            let coords = u.primitive_coords(&f1).or_else(|| f1.is_zero().then(|| vec![Q::zero(); u.k()]));
            let is_mult = basis.iter().all(|m| {
                let xe: UElem = Combo::basis(m.clone());
                eval_group(u, &f, i, j, w, c, &xe) == u.mul(&xe, &f1)
            });
            match coords {
                Some(p) if is_mult => coefficients.push(FlowCoefficient { s_degree: i, t_degree: j, primitive: p.iter().map(fmt_q).collect() }),
                _ => {
                    if primitive.is_none() {
                        primitive = Some(format!("s^{i} t^{j} coefficient of f is not R of a primitive"));
                    }
                }
            }
        }
    }
    FlowReport {
        records: vec![
            CheckRecord::new("exp(tR_(a•b)) exp(sR_c) exp(tR_(a•b)) ∈ R_U", "group-likeness of the conjugation product", max_len, group_like),
            CheckRecord::new("... = R_((exp_l(t a•b) exp_l(sc)) exp_l(t a•b))", "conjugation product as a right multiplication", max_len, matches),
            CheckRecord::new("∂f/∂t = 2Σ β_2m/(2m)! ad_f^2m(R_(a•b))", "Bernoulli flow equation", max_len, ode),
            CheckRecord::new("f(s,0) = sR_c", "flow initial condition", max_len, init),
            CheckRecord::new("f_ij = R_p, p primitive", "primitivity of the flow", max_len, primitive),
        ],
        coefficients,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), q(1));
        assert_eq!(bernoulli(1), qf(-1, 2));
        assert_eq!(bernoulli(2), qf(1, 6));
        assert_eq!(bernoulli(4), qf(-1, 30));
        assert_eq!(bernoulli(3), q(0));
    }

    #[test]
    fn free_series_identities() {
        let m = 5;
        let ex = exp_letter(X, m);
        let l = mul(&mul(&ex, &exp_letter(Y, m), m), &ex, m);
        let f = log_series(&l, m);
        assert_eq!(series_identities(&f, m), (None, None));
        // degree-1 part of the log is 2X + Y
        assert_eq!(f.coeff(&vec![X]), q(2));
        assert_eq!(f.coeff(&vec![Y]), q(1));
        // dropping the Bernoulli correction breaks the equation at degree 3
        let g = Combo::from_terms(f.iter().filter(|(w, _)| w.len() < 3).map(|(w, c)| (w.clone(), c.clone())));
        assert!(series_identities(&g, m).0.is_some());
    }
}
