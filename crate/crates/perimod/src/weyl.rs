//! Finite and extended affine Weyl groups of GL_d, lengths, reduced words,
//! parabolic cosets and the level-p right action on the weight lattice.

use crate::error::{Error, Result};
use crate::rootdata::{check_dim, parabolic_simples, theta, Composition, HighestWeightData, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

pub type Perm = Vec<usize>;

pub fn perm_identity(d: usize) -> Perm {
    (0..d).collect()
}

pub fn perm_compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&j| a[j]).collect()
}

pub fn perm_inverse(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn perm_act(w: &[usize], g: &[i64]) -> Weight {
    let mut out = vec![0; g.len()];
    for (i, &x) in g.iter().enumerate() {
        out[w[i]] = x;
    }
    out
}

pub fn perm_act_inv(w: &[usize], g: &[i64]) -> Weight {
    w.iter().map(|&j| g[j]).collect()
}

pub fn perm_length(w: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

pub fn simple_perm(d: usize, i: usize) -> Perm {
    let mut w = perm_identity(d);
    w.swap(i - 1, i);
    w
}

pub fn all_perms(d: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

pub fn perm_reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                word.push(i + 1);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

pub fn parabolic_group(f: &Composition) -> Vec<Perm> {
    let blk = f.block_of();
    all_perms(f.total())
        .into_iter()
        .filter(|w| w.iter().enumerate().all(|(i, &j)| blk[i] == blk[j]))
        .collect()
}

pub fn longest_in(f: &Composition) -> Perm {
    parabolic_group(f)
        .into_iter()
        .max_by_key(|w| perm_length(w))
        .unwrap_or_default()
}

pub fn nu(f: &Composition) -> usize {
    f.parts().iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
}

pub fn is_min_left_coset(w: &[usize], f: &Composition) -> bool {
    parabolic_simples(f).into_iter().all(|i| w[i - 1] < w[i])
}

pub fn is_min_right_coset(w: &[usize], f: &Composition) -> bool {
    let inv = perm_inverse(w);
    parabolic_simples(f).into_iter().all(|i| inv[i - 1] < inv[i])
}

pub fn min_left_coset_reps(f: &Composition) -> Vec<Perm> {
    all_perms(f.total()).into_iter().filter(|w| is_min_left_coset(w, f)).collect()
}

pub fn sigma_c(data: &HighestWeightData) -> Result<Perm> {
    let cands: Vec<Perm> = min_left_coset_reps(&data.c)
        .into_iter()
        .filter(|w| {
            parabolic_simples(&data.d_comp)
                .into_iter()
                .all(|i| perm_length(&perm_compose(&simple_perm(data.d, i), w)) < perm_length(w))
        })
        .collect();
    if cands.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "expected one maximal coset element, found {}",
            cands.len()
        )));
    }
    Ok(cands.into_iter().next().unwrap_or_default())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeylElt {
    pub perm: Perm,
    pub trans: Weight,
}

impl AffineWeylElt {
    pub fn identity(d: usize) -> Self {
        AffineWeylElt { perm: perm_identity(d), trans: vec![0; d] }
    }

    pub fn finite(perm: Perm) -> Self {
        let d = perm.len();
        AffineWeylElt { perm, trans: vec![0; d] }
    }

    pub fn tau(l: &[i64]) -> Self {
        AffineWeylElt { perm: perm_identity(l.len()), trans: l.to_vec() }
    }

    pub fn d(&self) -> usize {
        self.perm.len()
    }

    pub fn s(d: usize, i: usize) -> Self {
        if i < d {
            Self::finite(simple_perm(d, i))
        } else {
            let th = theta(d);
            let mut w = perm_identity(d);
            w.swap(0, d - 1);
            AffineWeylElt { perm: w, trans: th.iter().map(|x| -x).collect() }
        }
    }

    pub fn pi(d: usize) -> Self {
        let mut c = perm_identity(d);
        for i in 1..d {
            c = perm_compose(&c, &simple_perm(d, i));
        }
        let mut om = vec![0; d];
        om[0] = 1;
        AffineWeylElt { trans: perm_act_inv(&c, &om), perm: c }
    }

    pub fn pi_pow(d: usize, k: i64) -> Self {
        let base = if k >= 0 { Self::pi(d) } else { Self::pi(d).inverse() };
        (0..k.unsigned_abs()).fold(Self::identity(d), |acc, _| acc.mul(&base))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let perm = perm_compose(&self.perm, &o.perm);
        let t = perm_act_inv(&o.perm, &self.trans);
        AffineWeylElt { perm, trans: t.iter().zip(&o.trans).map(|(a, b)| a + b).collect() }
    }

    pub fn compose(&self, o: &Self) -> Result<Self> {
        check_dim(self.d(), o.d())?;
        Ok(self.mul(o))
    }

    pub fn inverse(&self) -> Self {
        let inv = perm_inverse(&self.perm);
        let t = perm_act(&self.perm, &self.trans);
        AffineWeylElt { perm: inv, trans: t.iter().map(|x| -x).collect() }
    }

    pub fn pi_power(&self) -> i64 {
        self.trans.iter().sum()
    }

    pub fn in_w_prime(&self) -> bool {
        self.pi_power() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.trans.iter().all(|&x| x == 0)
    }

    pub fn act(&self, g: &[i64], p: i64) -> Weight {
        let v = perm_act_inv(&self.perm, g);
        v.iter().zip(&self.trans).map(|(a, l)| a - p * l).collect()
    }

    pub fn length(&self) -> usize {
        let d = self.d() as i64;
        let v0: Vec<i64> = (0..d).map(|i| d - 1 - i).collect();
        let v1: Vec<i64> = perm_act_inv(&self.perm, &v0)
            .iter()
            .zip(&self.trans)
            .map(|(a, l)| a - d * l)
            .collect();
        let mut n = 0;
        for i in 0..self.d() {
            for j in i + 1..self.d() {
                let a = (v0[i] - v0[j]).div_euclid(d);
                let b = (v1[i] - v1[j]).div_euclid(d);
                n += (a - b).unsigned_abs() as usize;
            }
        }
        n
    }

    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let d = self.d();
        let mut x = self.clone();
        let mut word = Vec::new();
        let mut len = x.length();
        while len > 0 {
            let mut found = false;
            for i in 1..=d {
                let y = x.mul(&Self::s(d, i));
                let l = y.length();
                if l < len {
                    x = y;
                    len = l;
                    word.push(i);
                    found = true;
                    break;
                }
            }
            if !found {
                break;
            }
        }
        word.reverse();
        (x.pi_power(), word)
    }

    pub fn from_word(d: usize, k: i64, word: &[usize]) -> Self {
        word.iter().fold(Self::pi_pow(d, k), |acc, &i| acc.mul(&Self::s(d, i)))
    }
}

impl fmt::Display for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        let t: Vec<String> = self.trans.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}|{}|{}]", p.join(","), t.join(","), self.pi_power())
    }
}

pub fn length_ball(d: usize, max_len: usize) -> Vec<AffineWeylElt> {
    let mut seen: BTreeSet<AffineWeylElt> = BTreeSet::new();
    let mut layer = vec![AffineWeylElt::identity(d)];
    seen.insert(layer[0].clone());
    for l in 1..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in simple_range(d) {
                let y = w.mul(&AffineWeylElt::s(d, i));
                if y.length() == l && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

fn simple_range(d: usize) -> std::ops::RangeInclusive<usize> {
    if d < 2 {
        1..=0
    } else {
        1..=d
    }
}

pub fn level_stabilizer_simples(mu: &[i64], p: i64) -> Vec<usize> {
    let d = mu.len();
    simple_range(d).filter(|&i| AffineWeylElt::s(d, i).act(mu, p) == mu).collect()
}

pub fn is_min_in_simple_coset(w: &AffineWeylElt, simples: &[usize]) -> bool {
    let l = w.length();
    simples.iter().all(|&i| AffineWeylElt::s(w.d(), i).mul(w).length() > l)
}

pub fn level_p_action(g: &[i64], x: &AffineWeylElt, p: i64) -> Result<Weight> {
    check_dim(x.d(), g.len())?;
    Ok(x.act(g, p))
}

pub fn canonical_decomposition(g: &[i64], p: i64) -> (Weight, AffineWeylElt) {
    let d = g.len();
    let res: Vec<i64> = g.iter().map(|&m| crate::rootdata::residue(m, p)).collect();
    let nu: Vec<i64> = g.iter().zip(&res).map(|(m, r)| (r - m) / p).collect();
    let mut idx: Vec<usize> = (0..d).collect();
    idx.sort_by(|&a, &b| res[b].cmp(&res[a]).then(a.cmp(&b)));
    let mu: Vec<i64> = idx.iter().map(|&i| res[i]).collect();
    let mut w = vec![0; d];
    for (k, &j) in idx.iter().enumerate() {
        w[j] = k;
    }
    (mu, AffineWeylElt { perm: w, trans: nu })
}
