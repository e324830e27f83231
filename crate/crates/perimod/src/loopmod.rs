//! The vectorial representation of the quantum loop algebra of `gl_p`, its
//! tensor powers with the commuting right Hecke action, the sign quotients
//! and the canonical basis `F(t)` obtained by triangular elimination.

use crate::alcove::coset_decomposition;
use crate::error::{Error, Result};
use crate::hecke::{divided_difference, r_monomial, sign_twisted_t};
use crate::qcoeff::LaurentScalar;
use crate::rootdata::{
    affine_weight as weight_of, alpha_c, coset_parity, coset_rep, dot, in_x_p, residue,
    weight_tilde, Composition, GlpWeight, HighestWeightData, Weight,
};
use crate::triangular::{
    certify, eliminate, iota_on_span, vec_add_scaled, Certificate, Direction, Elimination,
    ShiftBasis, Vector,
};
use crate::weyl::{
    canonical_decomposition, min_left_coset_reps, parabolic_group, perm_act_inv, perm_compose,
    perm_length, perm_reduced_word, Perm,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub type TensorVector = Vector<Weight>;

pub fn basis_vector(g: Weight) -> TensorVector {
    std::iter::once((g, LaurentScalar::one())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LoopGen {
    E(usize, u32),
    F(usize, u32),
    L(usize, i32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Plain,
    Twisted(Composition),
}

fn congruent(m: i64, a: i64, p: i64) -> bool {
    (m - a).rem_euclid(p) == 0
}

fn l_exp(m: i64, a: usize, p: i64) -> i32 {
    congruent(m, a as i64, p) as i32
}

fn k_exp(m: i64, a: usize, p: i64) -> i32 {
    let next = if a as i64 == p { 1 } else { a + 1 };
    l_exp(m, a, p) - l_exp(m, next, p)
}

fn twist_exponents(mode: &Mode, d: usize) -> Result<Vec<i32>> {
    match mode {
        Mode::Plain => Ok(vec![0; d]),
        Mode::Twisted(c) => {
            if c.total() != d {
                return Err(Error::Dimension { expected: d, got: c.total() });
            }
            let mut out = Vec::with_capacity(d);
            for &ci in c.parts() {
                for j in 1..=ci {
                    out.push(2 * j as i32 - 1 - ci as i32);
                }
            }
            Ok(out)
        }
    }
}

fn minus_q_pow(e: i32) -> LaurentScalar {
    if e.rem_euclid(2) == 0 {
        LaurentScalar::q_pow(e)
    } else {
        -LaurentScalar::q_pow(e)
    }
}

fn e_once(v: &TensorVector, a: usize, p: i64, tw: &[i32]) -> TensorVector {
    let mut out = TensorVector::new();
    for (g, c) in v {
        for j in 0..g.len() {
            if !congruent(g[j], a as i64 + 1, p) {
                continue;
            }
            let e: i32 = -g[j + 1..].iter().map(|&m| k_exp(m, a, p)).sum::<i32>();
            let mut coef = c.clone();
            if a as i64 == p {
                coef = &coef * &minus_q_pow(tw[j]);
            }
            let mut h = g.clone();
            h[j] -= 1;
            vec_add_scaled(&mut out, &basis_vector(h), &(&coef * &LaurentScalar::q_pow(e)));
        }
    }
    out
}

fn f_once(v: &TensorVector, a: usize, p: i64, tw: &[i32]) -> TensorVector {
    let mut out = TensorVector::new();
    for (g, c) in v {
        for j in 0..g.len() {
            if !congruent(g[j], a as i64, p) {
                continue;
            }
            let e: i32 = g[..j].iter().map(|&m| k_exp(m, a, p)).sum();
            let mut coef = c.clone();
            if a as i64 == p {
                coef = &coef * &minus_q_pow(-tw[j]);
            }
            let mut h = g.clone();
            h[j] += 1;
            vec_add_scaled(&mut out, &basis_vector(h), &(&coef * &LaurentScalar::q_pow(e)));
        }
    }
    out
}

fn qfactorial(n: u32) -> LaurentScalar {
    (1..=n).fold(LaurentScalar::one(), |acc, k| &acc * &LaurentScalar::qint(k))
}

fn divide(v: &TensorVector, n: u32) -> Result<TensorVector> {
    let f = qfactorial(n);
    let mut out = TensorVector::new();
    for (g, c) in v {
        let x = c
            .div_exact(&f)
            .ok_or_else(|| Error::Inconsistent(format!("divided power [{n}]! does not divide {c}")))?;
        out.insert(g.clone(), x);
    }
    Ok(out)
}

pub fn chevalley_act(gen: LoopGen, v: &TensorVector, p: usize, mode: &Mode) -> Result<TensorVector> {
    let a = match gen {
        LoopGen::E(a, _) | LoopGen::F(a, _) | LoopGen::L(a, _) => a,
    };
    if a == 0 || a > p {
        return Err(Error::Generator(format!("generator index {a} with p={p}")));
    }
    let Some(d) = v.keys().next().map(|g| g.len()) else {
        return Ok(TensorVector::new());
    };
    let tw = twist_exponents(mode, d)?;
    let pi = p as i64;
    match gen {
        LoopGen::E(_, n) => {
            let mut x = v.clone();
            for _ in 0..n {
                x = e_once(&x, a, pi, &tw);
            }
            divide(&x, n)
        }
        LoopGen::F(_, n) => {
            let mut x = v.clone();
            for _ in 0..n {
                x = f_once(&x, a, pi, &tw);
            }
            divide(&x, n)
        }
        LoopGen::L(_, k) => {
            let mut out = TensorVector::new();
            for (g, c) in v {
                let e: i32 = g.iter().map(|&m| l_exp(m, a, pi)).sum();
                out.insert(g.clone(), c * &LaurentScalar::q_pow(e * k));
            }
            Ok(out)
        }
    }
}

pub fn act_word(word: &[LoopGen], v: &TensorVector, p: usize, mode: &Mode) -> Result<TensorVector> {
    let mut x = v.clone();
    for &g in word.iter().rev() {
        x = chevalley_act(g, &x, p, mode)?;
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeckeGen {
    T(usize),
    X(Weight),
}

fn shift_by(v: &TensorVector, kappa: &[i64], p: i64) -> TensorVector {
    v.iter()
        .map(|(g, c)| (g.iter().zip(kappa).map(|(m, k)| m + p * k).collect(), c.clone()))
        .collect()
}

fn t_on_restricted(g: &[i64], i: usize) -> TensorVector {
    let mut out = TensorVector::new();
    let (x, y) = (g[i - 1], g[i]);
    if x == y {
        out.insert(g.to_vec(), LaurentScalar::q_pow(1));
        return out;
    }
    let mut s = g.to_vec();
    s.swap(i - 1, i);
    out.insert(s, LaurentScalar::one());
    if x < y {
        out.insert(g.to_vec(), LaurentScalar::q_minus_qinv());
    }
    out
}

fn t_on_basis(g: &[i64], i: usize, p: i64) -> TensorVector {
    let g0: Weight = g.iter().map(|&m| residue(m, p)).collect();
    let kappa: Weight = g0.iter().zip(g).map(|(r, m)| (m - r) / p).collect();
    let mut sk = kappa.clone();
    sk.swap(i - 1, i);
    let mut out = shift_by(&t_on_restricted(&g0, i), &sk, p);
    for (lam, c) in divided_difference(&kappa, i) {
        let h: Weight = g0.iter().zip(&lam).map(|(m, l)| m + p * l).collect();
        vec_add_scaled(&mut out, &basis_vector(h), &(&c * &LaurentScalar::q_minus_qinv()));
    }
    out
}

pub fn hecke_right_act(v: &TensorVector, gen: &HeckeGen, p: usize) -> Result<TensorVector> {
    let pi = p as i64;
    match gen {
        HeckeGen::X(kappa) => Ok(shift_by(v, kappa, pi)),
        HeckeGen::T(i) => {
            let mut out = TensorVector::new();
            for (g, c) in v {
                if *i == 0 || *i >= g.len() {
                    return Err(Error::Generator(format!("t_{i} on {} factors", g.len())));
                }
                vec_add_scaled(&mut out, &t_on_basis(g, *i, pi), c);
            }
            Ok(out)
        }
    }
}

pub fn act_t_word(v: &TensorVector, word: &[usize], p: usize) -> Result<TensorVector> {
    let mut x = v.clone();
    for &i in word {
        x = hecke_right_act(&x, &HeckeGen::T(i), p)?;
    }
    Ok(x)
}

fn t_inv_act(v: &TensorVector, i: usize, p: usize) -> Result<TensorVector> {
    let mut out = hecke_right_act(v, &HeckeGen::T(i), p)?;
    vec_add_scaled(&mut out, v, &-LaurentScalar::q_minus_qinv());
    Ok(out)
}

fn pi_act(v: &TensorVector, k: i64, d: usize, p: usize) -> Result<TensorVector> {
    let x1 = crate::rootdata::eps(d, 1);
    let mut x = v.clone();
    for _ in 0..k.unsigned_abs() {
        if k > 0 {
            x = hecke_right_act(&x, &HeckeGen::X(x1.clone()), p)?;
            x = act_t_word(&x, &(1..d).collect::<Vec<_>>(), p)?;
        } else {
            for i in (1..d).rev() {
                x = t_inv_act(&x, i, p)?;
            }
            x = hecke_right_act(&x, &HeckeGen::X(crate::rootdata::scale(&x1, -1)), p)?;
        }
    }
    Ok(x)
}

fn affine_t_act(v: &TensorVector, i: usize, d: usize, p: usize) -> Result<TensorVector> {
    if i < d {
        return hecke_right_act(v, &HeckeGen::T(i), p);
    }
    let x = pi_act(v, 1, d, p)?;
    let x = hecke_right_act(&x, &HeckeGen::T(d - 1), p)?;
    pi_act(&x, -1, d, p)
}

pub fn hecke_elt_act(v: &TensorVector, h: &crate::hecke::HeckeElt, p: usize) -> Result<TensorVector> {
    let d = h.d;
    let mut out = TensorVector::new();
    for (w, c) in &h.terms {
        let (k, word) = w.reduced_word();
        let mut x = pi_act(v, k, d, p)?;
        for &i in &word {
            x = affine_t_act(&x, i, d, p)?;
        }
        vec_add_scaled(&mut out, &x, c);
    }
    Ok(out)
}

pub fn affine_weight(v: &TensorVector, p: usize) -> Result<GlpWeight> {
    let mut ws = v.keys().map(|g| weight_of(g, p as i64));
    let first = ws.next().unwrap_or_else(|| GlpWeight::zero(p));
    if ws.any(|w| w != first) {
        return Err(Error::Inhomogeneous);
    }
    Ok(first)
}

pub fn weight(v: &TensorVector, p: usize) -> Result<GlpWeight> {
    let mut w = affine_weight(v, p)?;
    w.delta = 0;
    Ok(w)
}

pub fn cyclic_vector(data: &HighestWeightData) -> TensorVector {
    let mut g = Vec::with_capacity(data.d);
    for b in (1..=data.p).rev() {
        for _ in 0..data.ell_a[b - 1] {
            for a in (1..=b).rev() {
                g.push(a as i64);
            }
        }
    }
    basis_vector(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorIdx {
    pub w: Perm,
    pub coset: Vec<i64>,
}

pub type QuotientVector = Vector<TensorIdx>;

#[derive(Clone, Debug)]
pub struct Quotient {
    pub data: HighestWeightData,
    pub mu: Weight,
    pub e: Composition,
    pub reps: Vec<Perm>,
    rep_index: BTreeMap<Perm, usize>,
}

fn stabilizer_composition(mu: &[i64]) -> Composition {
    let mut parts: Vec<usize> = Vec::new();
    for (k, m) in mu.iter().enumerate() {
        if k > 0 && mu[k - 1] == *m {
            *parts.last_mut().unwrap() += 1;
        } else {
            parts.push(1);
        }
    }
    Composition(parts)
}

impl Quotient {
    pub fn new(data: &HighestWeightData, mu_tilde: &GlpWeight) -> Result<Self> {
        if data.p <= data.d {
            return Err(Error::Precondition(format!("quotient needs p > d, got p={} d={}", data.p, data.d)));
        }
        let mu = crate::rootdata::weight_of_tilde(mu_tilde);
        if mu.len() != data.d || mu_tilde.delta != 0 {
            return Err(Error::WeightRange(format!("{mu_tilde} is not a weight of degree {}", data.d)));
        }
        let e = stabilizer_composition(&mu);
        let reps = min_left_coset_reps(&data.c);
        let rep_index = reps.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(Quotient { data: data.clone(), mu, e, reps, rep_index })
    }

    pub fn is_small(&self) -> bool {
        self.e.parts().iter().all(|&x| x == 1)
    }

    pub fn mu_tilde(&self) -> GlpWeight {
        weight_tilde(&self.mu, self.data.p as i64).map(|x| x.0).unwrap_or_else(|_| GlpWeight::zero(self.data.p))
    }

    pub fn index_vector(&self, t: &TensorIdx) -> Weight {
        let g = coset_rep(&t.coset, &self.data.c);
        crate::rootdata::add(&perm_act_inv(&t.w, &self.mu), &crate::rootdata::scale(&g, self.data.p as i64))
    }

    pub fn index_of(&self, g: &[i64]) -> Option<(TensorIdx, LaurentScalar)> {
        let red = self.reduce_basis(g).ok()?;
        if red.len() != 1 {
            return None;
        }
        red.into_iter().next()
    }

    fn reduce_hecke(&self, y: &[usize], nu: &[i64], out: &mut QuotientVector, scale: &LaurentScalar) {
        let c = &self.data.c;
        let (w, v) = coset_decomposition(y, c);
        let mut f = r_monomial(nu.to_vec());
        for &i in perm_reduced_word(&v).iter().rev() {
            f = sign_twisted_t(&f, i);
        }
        let ac = alpha_c(c);
        for (lam, coef) in f {
            let n = dot(&lam, &ac) as i32;
            let idx = TensorIdx { w: w.clone(), coset: c.block_sums(&lam) };
            let sign = minus_q_pow(n);
            let mut single = QuotientVector::new();
            single.insert(idx, LaurentScalar::one());
            vec_add_scaled(out, &single, &(&(&coef * &sign) * scale));
        }
    }

    pub fn reduce_basis(&self, g: &[i64]) -> Result<QuotientVector> {
        let p = self.data.p as i64;
        let (mu, x) = canonical_decomposition(g, p);
        if mu != self.mu {
            return Err(Error::WeightRange(format!("u_{g:?} is not in the weight space of {:?}", self.mu)));
        }
        let nu = crate::rootdata::scale(&x.trans, -1);
        let mut out = QuotientVector::new();
        for v in parabolic_group(&self.e) {
            let y = perm_compose(&v, &x.perm);
            self.reduce_hecke(&y, &nu, &mut out, &LaurentScalar::q_pow(perm_length(&v) as i32));
        }
        Ok(out)
    }

    pub fn reduce(&self, v: &TensorVector) -> Result<QuotientVector> {
        let mut out = QuotientVector::new();
        for (g, c) in v {
            vec_add_scaled(&mut out, &self.reduce_basis(g)?, c);
        }
        Ok(out)
    }

    pub fn lift(&self, v: &QuotientVector) -> TensorVector {
        let ac = alpha_c(&self.data.c);
        let mut out = TensorVector::new();
        for (t, c) in v {
            let n = dot(&coset_rep(&t.coset, &self.data.c), &ac) as i32;
            vec_add_scaled(&mut out, &basis_vector(self.index_vector(t)), &(c * &minus_q_pow(-n)));
        }
        out
    }

    pub fn block_weights(&self, t: &TensorIdx) -> Vec<GlpWeight> {
        let g = self.index_vector(t);
        let p = self.data.p as i64;
        self.data.c.blocks().into_iter().map(|r| weight_of(&g[r], p)).collect()
    }

    pub fn prefix_weights(&self, t: &TensorIdx) -> Vec<GlpWeight> {
        let mut acc = GlpWeight::zero(self.data.p);
        self.block_weights(t)
            .into_iter()
            .map(|w| {
                acc = acc.add(&w);
                acc.clone()
            })
            .collect()
    }
}

pub fn leq_c_weights(tp: &[GlpWeight], t: &[GlpWeight]) -> bool {
    let l = t.len();
    if l == 0 || tp[l - 1] != t[l - 1] {
        return false;
    }
    if tp == t {
        return false;
    }
    (0..l - 1).all(|m| tp[m].sub(&t[m]).in_positive_cone())
}

pub fn block_prefix_weights(g: &[i64], c: &Composition, p: usize) -> Vec<GlpWeight> {
    let mut acc = GlpWeight::zero(p);
    c.blocks()
        .into_iter()
        .map(|r| {
            acc = acc.add(&weight_of(&g[r], p as i64));
            acc.clone()
        })
        .collect()
}

pub fn leq_c(tp: &[i64], t: &[i64], c: &Composition, p: usize) -> bool {
    leq_c_weights(&block_prefix_weights(tp, c, p), &block_prefix_weights(t, c, p))
}

impl ShiftBasis for Quotient {
    type Idx = TensorIdx;

    fn num_reps(&self) -> usize {
        self.reps.len()
    }

    fn shift_rank(&self) -> usize {
        self.data.c.parts().len()
    }

    fn decompose(&self, t: &TensorIdx) -> Result<(usize, Vec<i64>)> {
        let r = self
            .rep_index
            .get(&t.w)
            .copied()
            .ok_or_else(|| Error::Inconsistent(format!("{:?} is not a coset rep", t.w)))?;
        Ok((r, t.coset.clone()))
    }

    fn compose(&self, rep: usize, shift: &[i64]) -> Result<TensorIdx> {
        Ok(TensorIdx { w: self.reps[rep].clone(), coset: shift.to_vec() })
    }

    fn height(&self, t: &TensorIdx) -> i64 {
        let pre = self.prefix_weights(t);
        -pre[..pre.len().saturating_sub(1)].iter().map(|w| w.height()).sum::<i64>()
    }

    fn lt(&self, a: &TensorIdx, b: &TensorIdx) -> bool {
        leq_c_weights(&self.prefix_weights(a), &self.prefix_weights(b))
    }

    fn shift_idx(&self, t: &TensorIdx, s: &[i64]) -> Result<TensorIdx> {
        Ok(TensorIdx { w: t.w.clone(), coset: crate::rootdata::add(&t.coset, s) })
    }
}

pub fn z_shift(v: &QuotientVector, s: &[i64]) -> QuotientVector {
    v.iter()
        .map(|(t, c)| (TensorIdx { w: t.w.clone(), coset: crate::rootdata::add(&t.coset, s) }, c.clone()))
        .collect()
}

pub fn coset_sign(coset: &[i64], c: &Composition) -> i64 {
    if coset_parity(coset, c) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordProvenance {
    pub word: Vec<LoopGen>,
    pub shift: Vec<i64>,
    pub sign: i64,
}

#[derive(Clone, Debug)]
pub struct TensorFamily {
    pub members: Vec<Option<QuotientVector>>,
    pub provenance: Vec<Option<WordProvenance>>,
    pub explored: usize,
}

impl TensorFamily {
    pub fn uncovered(&self) -> Vec<usize> {
        self.members.iter().enumerate().filter(|(_, m)| m.is_none()).map(|(i, _)| i).collect()
    }

    pub fn complete(&self) -> Option<Vec<QuotientVector>> {
        self.members.iter().cloned().collect()
    }
}

pub fn unique_top(q: &Quotient, v: &QuotientVector) -> Option<(TensorIdx, i64)> {
    let top = v.keys().max_by_key(|t| q.height(t))?.clone();
    let c = &v[&top];
    let sign = if c.is_one() {
        1
    } else if (-c.clone()).is_one() {
        -1
    } else {
        return None;
    };
    if v.keys().all(|t| *t == top || q.lt(t, &top)) {
        Some((top, sign))
    } else {
        None
    }
}

fn needed_counts(from: &GlpWeight, to: &GlpWeight) -> Vec<i64> {
    let p = from.finite.len();
    let diff = from.sub(to);
    let mut n = vec![0i64; p];
    let mut s = 0;
    for a in 0..p - 1 {
        s += diff.finite[a];
        n[a] = s;
    }
    let lo = n[..p - 1].iter().copied().min().unwrap_or(0).min(0);
    n.iter_mut().for_each(|x| *x -= lo);
    n
}

pub const WORD_BUDGET: usize = 20000;
pub const EXTRA_CYCLES: i64 = 3;

pub fn tensor_family(q: &Quotient, budget: usize) -> Result<TensorFamily> {
    let data = &q.data;
    let p = data.p;
    let n = q.num_reps();
    let mut members: Vec<Option<QuotientVector>> = vec![None; n];
    let mut prov: Vec<Option<WordProvenance>> = vec![None; n];
    let mut found = 0;
    let base = needed_counts(&data.lambda_glp(), &q.mu_tilde());
    let mut explored = 0;
    'cycles: for k in 0..=EXTRA_CYCLES {
        let target: Vec<i64> = base.iter().map(|x| x + k).collect();
        let mut seen: BTreeSet<(Vec<i64>, TensorVector)> = BTreeSet::new();
        let mut queue: VecDeque<(TensorVector, Vec<i64>, Vec<LoopGen>)> = VecDeque::new();
        queue.push_back((cyclic_vector(data), vec![0; p], vec![]));
        while let Some((v, used, word)) = queue.pop_front() {
            if found == n || explored >= budget {
                break 'cycles;
            }
            explored += 1;
            if used == target {
                let red = q.reduce(&v)?;
                if red.is_empty() {
                    continue;
                }
                let Some((top, sign)) = unique_top(q, &red) else { continue };
                let (r, g) = q.decompose(&top)?;
                if members[r].is_some() {
                    continue;
                }
                let neg: Vec<i64> = g.iter().map(|x| -x).collect();
                let norm = z_shift(&red, &neg);
                let norm: QuotientVector =
                    norm.into_iter().map(|(t, c)| (t, &c * &LaurentScalar::from_int(sign))).collect();
                members[r] = Some(norm);
                prov[r] = Some(WordProvenance { word, shift: neg, sign });
                found += 1;
                continue;
            }
            for a in 1..=p {
                let room = target[a - 1] - used[a - 1];
                for m in 1..=room {
                    let next = chevalley_act(LoopGen::F(a, m as u32), &v, p, &Mode::Plain)?;
                    if next.is_empty() {
                        continue;
                    }
                    let mut u = used.clone();
                    u[a - 1] += m;
                    if seen.insert((u.clone(), next.clone())) {
                        let mut w = vec![LoopGen::F(a, m as u32)];
                        w.extend(word.iter().copied());
                        queue.push_back((next, u, w));
                    }
                }
            }
        }
    }
    Ok(TensorFamily { members, provenance: prov, explored })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorEntry {
    pub index: TensorIdx,
    pub terms: Vec<(TensorIdx, LaurentScalar)>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorTable {
    pub mu_tilde: GlpWeight,
    pub reps: Vec<Perm>,
    pub rep_elements: Vec<Vec<(TensorIdx, LaurentScalar)>>,
    pub certificates: Vec<Certificate>,
    pub provenance: Vec<WordProvenance>,
    pub uncovered_reps: Vec<usize>,
}

pub const TENSOR_DEPTH_BUDGET: usize = 200;
pub const TENSOR_SPAN_BUDGET: usize = 400;

pub struct TensorBasis {
    pub quotient: Quotient,
    pub family: Vec<QuotientVector>,
    pub elimination: Elimination<TensorIdx>,
    pub table: TensorTable,
}

impl TensorBasis {
    pub fn element(&self, t: &TensorIdx) -> Result<QuotientVector> {
        let (r, g) = self.quotient.decompose(t)?;
        self.quotient.shift_vec(&self.elimination.elements[r], &g)
    }

    pub fn verified(&self, t: &TensorIdx) -> bool {
        self.quotient.decompose(t).map(|(r, _)| self.table.certificates[r].passed()).unwrap_or(false)
    }
}

pub fn tensor_canonical_basis(data: &HighestWeightData, mu_tilde: &GlpWeight) -> Result<TensorBasis> {
    tensor_canonical_basis_with(data, mu_tilde, Direction::Pos)
}

pub fn tensor_canonical_basis_with(data: &HighestWeightData, mu_tilde: &GlpWeight, dir: Direction) -> Result<TensorBasis> {
    let q = Quotient::new(data, mu_tilde)?;
    let fam = tensor_family(&q, WORD_BUDGET)?;
    let Some(members) = fam.complete() else {
        return Err(Error::Span(format!("word family misses reps {:?}", fam.uncovered())));
    };
    let elim = eliminate(&q, &members, dir, TENSOR_DEPTH_BUDGET)?;
    let mut certificates = Vec::new();
    for r in 0..q.num_reps() {
        certificates.push(certify(&q, &members, &elim, r, dir, TENSOR_SPAN_BUDGET)?);
    }
    let table = TensorTable {
        mu_tilde: mu_tilde.clone(),
        reps: q.reps.clone(),
        rep_elements: elim.elements.iter().map(|v| v.clone().into_iter().collect()).collect(),
        certificates,
        provenance: fam.provenance.into_iter().flatten().collect(),
        uncovered_reps: vec![],
    };
    Ok(TensorBasis { quotient: q, family: members, elimination: elim, table })
}

pub fn iota_n_on_span(basis: &TensorBasis, v: &QuotientVector) -> Result<QuotientVector> {
    iota_on_span(&basis.quotient, &basis.family, v, TENSOR_SPAN_BUDGET)
}

pub fn tensor_to_hecke(v: &TensorVector, p: usize) -> Result<Vec<(Composition, crate::hecke::HeckeElt)>> {
    let pi = p as i64;
    let mut parts: BTreeMap<Weight, crate::hecke::HeckeElt> = BTreeMap::new();
    for (g, c) in v {
        let (mu, x) = canonical_decomposition(g, pi);
        if !in_x_p(&mu, pi) {
            return Err(Error::WeightRange(format!("{g:?}")));
        }
        let e = stabilizer_composition(&mu);
        let d = g.len();
        let (rho, _) = crate::hecke::rho(&e);
        let h = rho
            .mul(&crate::hecke::HeckeElt::basis(crate::weyl::AffineWeylElt::finite(x.perm.clone())))
            .mul(&crate::hecke::monomial_x(&crate::rootdata::scale(&x.trans, -1)))
            .scale(c);
        let entry = parts.entry(mu).or_insert_with(|| crate::hecke::HeckeElt::zero(d));
        *entry = entry.add(&h);
    }
    Ok(parts
        .into_iter()
        .map(|(mu, h)| Ok((weight_tilde(&mu, pi)?.1, h)))
        .collect::<Result<Vec<_>>>()?)
}
