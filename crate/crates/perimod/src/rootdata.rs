//! Weight lattice of GL_d, compositions, gl_p weights and the ring maps onto
//! the block quotient `X / Z I_c`.

use crate::error::{Error, Result};
use crate::qcoeff::LaurentScalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Range;

pub type Weight = Vec<i64>;

pub fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}

pub fn pairing(a: &[i64], b: &[i64]) -> Result<i64> {
    check_dim(a.len(), b.len())?;
    Ok(a.iter().zip(b).map(|(x, y)| x * y).sum())
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn eps(d: usize, i: usize) -> Weight {
    let mut v = vec![0; d];
    v[i - 1] = 1;
    v
}

pub fn omega(d: usize, i: usize) -> Weight {
    (0..d).map(|j| i64::from(j < i)).collect()
}

pub fn alpha(d: usize, i: usize) -> Weight {
    let mut v = vec![0; d];
    v[i - 1] = 1;
    v[i] = -1;
    v
}

pub fn theta(d: usize) -> Weight {
    let mut v = vec![0; d];
    v[0] = 1;
    v[d - 1] -= 1;
    v
}

pub fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Weight {
    a.iter().map(|x| x * k).collect()
}

pub fn dominance_leq(mu: &[i64], nu: &[i64]) -> Result<bool> {
    check_dim(mu.len(), nu.len())?;
    let mut s = 0;
    for (a, b) in nu.iter().zip(mu) {
        s += a - b;
        if s < 0 {
            return Ok(false);
        }
    }
    Ok(s == 0)
}

pub fn residue(m: i64, p: i64) -> i64 {
    (m - 1).rem_euclid(p) + 1
}

pub fn residues(g: &[i64], p: i64) -> Weight {
    g.iter().map(|&m| residue(m, p)).collect()
}

pub fn in_x_p(g: &[i64], p: i64) -> bool {
    g.iter().all(|&m| 0 < m && m <= p)
}

pub fn is_dominant(g: &[i64]) -> bool {
    g.windows(2).all(|w| w[0] >= w[1])
}

pub fn is_regular_dominant(g: &[i64]) -> bool {
    g.windows(2).all(|w| w[0] > w[1])
}

pub fn in_x_prime(g: &[i64], p: i64) -> bool {
    g.iter().sum::<i64>() == g.iter().map(|&m| residue(m, p)).sum::<i64>()
}

pub fn parse_weight(s: &str) -> Result<Weight> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::WeightRange(format!("{t}: {e}")))
        })
        .collect()
}

pub fn format_weight(g: &[i64]) -> String {
    g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>, d: usize) -> Result<Self> {
        let s: usize = parts.iter().sum();
        if s != d {
            return Err(Error::Composition(format!("{parts:?} does not sum to {d}")));
        }
        Ok(Composition(parts))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Composition(format!("{t}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let d = parts.iter().sum();
        Composition::new(parts, d)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.iter().all(|&x| x > 0)
    }

    pub fn is_small(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for &c in &self.0 {
            if c > 0 {
                out.push(start..start + c);
            }
            start += c;
        }
        out
    }

    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.total()];
        for (b, r) in self.blocks().into_iter().enumerate() {
            for i in r {
                out[i] = b;
            }
        }
        out
    }

    pub fn block_sums(&self, g: &[i64]) -> Weight {
        self.blocks().into_iter().map(|r| g[r].iter().sum()).collect()
    }

    pub fn all(d: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for k in 1..=rest {
                cur.push(k);
                rec(rest - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), &mut out);
        out
    }

    pub fn partitions(d: usize) -> Vec<Composition> {
        Self::all(d).into_iter().filter(|c| c.is_partition()).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

pub fn parabolic_simples(f: &Composition) -> Vec<usize> {
    let d = f.total();
    let mut sums = Vec::new();
    let mut s = 0;
    for &x in f.parts() {
        s += x;
        sums.push(s);
    }
    (1..d).filter(|i| !sums.contains(i)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlpWeight {
    pub finite: Vec<i64>,
    pub delta: i64,
}

impl GlpWeight {
    pub fn zero(p: usize) -> Self {
        GlpWeight { finite: vec![0; p], delta: 0 }
    }

    pub fn eps(p: usize, a: usize) -> Self {
        let mut g = Self::zero(p);
        g.finite[a - 1] = 1;
        g
    }

    pub fn beta(p: usize, a: usize) -> Self {
        let mut g = Self::zero(p);
        if a < p {
            g.finite[a - 1] += 1;
            g.finite[a] -= 1;
        } else {
            g.finite[p - 1] += 1;
            g.finite[0] -= 1;
            g.delta = 1;
        }
        g
    }

    pub fn add(&self, o: &Self) -> Self {
        GlpWeight { finite: add(&self.finite, &o.finite), delta: self.delta + o.delta }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GlpWeight { finite: sub(&self.finite, &o.finite), delta: self.delta - o.delta }
    }

    pub fn is_zero(&self) -> bool {
        self.delta == 0 && self.finite.iter().all(|&x| x == 0)
    }

    pub fn in_positive_cone(&self) -> bool {
        let k = self.delta;
        if k < 0 || self.finite.iter().sum::<i64>() != 0 {
            return false;
        }
        let mut s = k;
        for &x in &self.finite[..self.finite.len() - 1] {
            s += x;
            if s < 0 {
                return false;
            }
        }
        true
    }

    pub fn height(&self) -> i64 {
        let p = self.finite.len() as i64;
        -self
            .finite
            .iter()
            .enumerate()
            .map(|(a, &x)| (a as i64 + 1) * x)
            .sum::<i64>()
            + p * self.delta
    }

    pub fn e_composition(&self) -> Composition {
        Composition(self.finite.iter().rev().map(|&x| x.max(0) as usize).collect())
    }

    pub fn from_e(e: &Composition) -> Self {
        GlpWeight {
            finite: e.parts().iter().rev().map(|&x| x as i64).collect(),
            delta: 0,
        }
    }

    pub fn is_small(&self) -> bool {
        self.finite.iter().all(|&x| x == 0 || x == 1)
    }
}

impl fmt::Display for GlpWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", format_weight(&self.finite), self.delta)
    }
}

pub fn affine_weight_of_entry(m: i64, p: i64) -> GlpWeight {
    let r = residue(m, p);
    let l = (r - m) / p;
    let mut g = GlpWeight::eps(p as usize, r as usize);
    g.delta = l;
    g
}

pub fn affine_weight(g: &[i64], p: i64) -> GlpWeight {
    g.iter()
        .fold(GlpWeight::zero(p as usize), |acc, &m| acc.add(&affine_weight_of_entry(m, p)))
}

pub fn weight_tilde(mu: &[i64], p: i64) -> Result<(GlpWeight, Composition)> {
    if !in_x_p(mu, p) {
        return Err(Error::WeightRange(format!(
            "{} has entries outside (0,{p}]",
            format_weight(mu)
        )));
    }
    let mut g = GlpWeight::zero(p as usize);
    for &m in mu {
        g.finite[(m - 1) as usize] += 1;
    }
    let e = g.e_composition();
    Ok((g, e))
}

pub fn weight_of_tilde(g: &GlpWeight) -> Weight {
    let mut out = Vec::new();
    for a in (1..=g.finite.len()).rev() {
        for _ in 0..g.finite[a - 1].max(0) {
            out.push(a as i64);
        }
    }
    out
}

pub fn omega_set(p: usize, d: usize) -> Vec<GlpWeight> {
    fn rec(a: usize, rest: usize, cur: &mut Vec<i64>, out: &mut Vec<GlpWeight>) {
        if a + 1 == cur.len() {
            cur[a] = rest as i64;
            out.push(GlpWeight { finite: cur.clone(), delta: 0 });
            return;
        }
        for k in 0..=rest {
            cur[a] = k as i64;
            rec(a + 1, rest - k, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; p], &mut out);
    out
}

pub fn omega_sm(p: usize, d: usize) -> Vec<GlpWeight> {
    omega_set(p, d).into_iter().filter(|g| g.is_small()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightData {
    pub p: usize,
    pub d: usize,
    pub lambda_tilde: Vec<i64>,
    pub c: Composition,
    pub d_comp: Composition,
    pub ell: usize,
    pub ell_a: Vec<usize>,
}

impl HighestWeightData {
    pub fn lambda(&self) -> Weight {
        weight_of_tilde(&GlpWeight { finite: self.lambda_tilde.clone(), delta: 0 })
    }

    pub fn lambda_glp(&self) -> GlpWeight {
        GlpWeight { finite: self.lambda_tilde.clone(), delta: 0 }
    }
}

pub fn dual_partition(parts: &[usize], len: usize) -> Vec<usize> {
    (1..=len).map(|i| parts.iter().filter(|&&x| x >= i).count()).collect()
}

pub fn dual_data(p: usize, c: &Composition) -> Result<HighestWeightData> {
    if !c.is_partition() {
        return Err(Error::Composition(format!("{c} is not a partition")));
    }
    if c.parts().first().copied().unwrap_or(0) > p {
        return Err(Error::Composition(format!("{c} has a part larger than p={p}")));
    }
    let d = c.total();
    let d_vec = dual_partition(c.parts(), p);
    let ell_a: Vec<usize> = (1..=p).map(|a| c.parts().iter().filter(|&&x| x == a).count()).collect();
    let lambda_tilde: Vec<i64> = d_vec.iter().map(|&x| x as i64).collect();
    Ok(HighestWeightData {
        p,
        d,
        lambda_tilde,
        c: c.clone(),
        d_comp: Composition(d_vec.iter().rev().copied().collect()),
        ell: c.parts().len(),
        ell_a,
    })
}

pub fn data_from_d(p: usize, d_vec: &[usize]) -> Result<HighestWeightData> {
    if d_vec.len() != p || d_vec.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Composition(format!("{d_vec:?} is not a weakly decreasing p-tuple")));
    }
    let top = d_vec.first().copied().unwrap_or(0);
    let c: Vec<usize> = dual_partition(d_vec, top);
    dual_data(p, &Composition(c))
}

pub fn alpha_of_part(c: usize) -> Vec<i64> {
    (1..=c).map(|k| c as i64 + 1 - 2 * k as i64).collect()
}

pub fn alpha_c(c: &Composition) -> Weight {
    c.parts().iter().flat_map(|&ci| alpha_of_part(ci)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcMonomial {
    pub coset: Vec<i64>,
    pub scale: LaurentScalar,
}

impl RcMonomial {
    pub fn mul(&self, o: &Self) -> Self {
        RcMonomial { coset: add(&self.coset, &o.coset), scale: &self.scale * &o.scale }
    }
}

pub fn psi_monomial(g: &[i64], c: &Composition) -> Result<RcMonomial> {
    check_dim(c.total(), g.len())?;
    let n = dot(g, &alpha_c(c));
    Ok(RcMonomial { coset: c.block_sums(g), scale: LaurentScalar::q_pow(n as i32) })
}

pub fn coset_rep(coset: &[i64], c: &Composition) -> Weight {
    let mut g = vec![0; c.total()];
    for (b, r) in c.blocks().into_iter().enumerate() {
        g[r.start] = coset[b];
    }
    g
}

pub fn coset_parity(coset: &[i64], c: &Composition) -> i64 {
    dot(&coset_rep(coset, c), &alpha_c(c)).rem_euclid(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::lp;
    use proptest::prelude::*;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&alpha(2, 1), &alpha(2, 1)).unwrap(), 2);
        assert_eq!(pairing(&eps(2, 1), &alpha(2, 1)).unwrap(), 1);
        let th = add(&alpha(3, 1), &alpha(3, 2));
        assert_eq!(th, theta(3));
        assert_eq!(pairing(&omega(3, 2), &th).unwrap(), 1);
        assert!(pairing(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&[1, 1], &[1, 1]).unwrap());
        assert!(dominance_leq(&[1, 1], &[2, 0]).unwrap());
        assert!(!dominance_leq(&[2, 0], &[1, 1]).unwrap());
    }

    #[test]
    fn parabolic_examples() {
        assert!(parabolic_simples(&comp(&[1, 1, 1])).is_empty());
        assert_eq!(parabolic_simples(&comp(&[3])), vec![1, 2]);
        assert_eq!(parabolic_simples(&comp(&[2, 1])), vec![1]);
    }

    #[test]
    fn dual_examples() {
        let h = dual_data(5, &comp(&[3])).unwrap();
        assert_eq!(h.lambda_tilde, vec![1, 1, 1, 0, 0]);
        assert_eq!(h.d_comp, comp(&[0, 0, 1, 1, 1]));
        let h = data_from_d(3, &[2, 1, 0]).unwrap();
        assert_eq!(h.c, comp(&[2, 1]));
        let h = dual_data(3, &comp(&[1, 1])).unwrap();
        assert_eq!(h.lambda_tilde, vec![2, 0, 0]);
        assert_eq!(h.d_comp, comp(&[0, 0, 2]));
        assert_eq!(h.lambda(), vec![1, 1]);
        assert!(dual_data(3, &comp(&[1, 2])).is_err());
        assert!(dual_data(2, &comp(&[3])).is_err());
    }

    #[test]
    fn weight_tilde_examples() {
        let (g, e) = weight_tilde(&[3, 2, 1], 4).unwrap();
        assert_eq!(g.finite, vec![1, 1, 1, 0]);
        assert_eq!(e, comp(&[0, 1, 1, 1]));
        let (g, e) = weight_tilde(&[1, 1], 3).unwrap();
        assert_eq!(g.finite, vec![2, 0, 0]);
        assert_eq!(e, comp(&[0, 0, 2]));
        let (g, e) = weight_tilde(&[3, 3], 3).unwrap();
        assert_eq!(g.finite, vec![0, 0, 2]);
        assert_eq!(e, comp(&[2, 0, 0]));
        assert!(weight_tilde(&[0, 1], 3).is_err());
    }

    #[test]
    fn weight_tilde_bijection() {
        for d in 1..=3usize {
            for p in 1..=5i64 {
                let mut seen = std::collections::BTreeSet::new();
                let mut small = 0;
                let mut stack = vec![vec![]];
                while let Some(v) = stack.pop() {
                    if v.len() == d {
                        let (g, _) = weight_tilde(&v, p).unwrap();
                        assert!(seen.insert(g.clone()));
                        if is_regular_dominant(&v) {
                            assert!(g.is_small());
                            small += 1;
                        }
                        continue;
                    }
                    let hi = v.last().copied().unwrap_or(p);
                    for m in 1..=hi {
                        let mut w = v.clone();
                        w.push(m);
                        stack.push(w);
                    }
                }
                let all: std::collections::BTreeSet<_> = omega_set(p as usize, d).into_iter().collect();
                assert_eq!(seen, all);
                assert_eq!(small, omega_sm(p as usize, d).len());
            }
        }
    }

    #[test]
    fn alpha_c_examples() {
        assert_eq!(alpha_c(&comp(&[1, 1, 1])), vec![0, 0, 0]);
        assert_eq!(alpha_c(&comp(&[2])), vec![1, -1]);
        assert_eq!(alpha_c(&comp(&[3])), vec![2, 0, -2]);
    }

    #[test]
    fn psi_examples() {
        let c = comp(&[2, 1]);
        let m = psi_monomial(&alpha(3, 1), &c).unwrap();
        assert_eq!(m.coset, vec![0, 0]);
        assert_eq!(m.scale, lp(&[(2, 1)]));
        let m = psi_monomial(&[0, 0], &comp(&[2])).unwrap();
        assert_eq!(m.scale, LaurentScalar::one());
        let m = psi_monomial(&[1, 0], &comp(&[2])).unwrap();
        assert_eq!(m.coset, vec![1]);
        assert_eq!(m.scale, lp(&[(1, 1)]));
    }

    #[test]
    fn x_prime_examples() {
        assert!(in_x_prime(&[3, 2, 1], 4));
        assert!(in_x_prime(&[-2, 4], 3));
        assert!(!in_x_prime(&[-2, 1], 3));
    }

    #[test]
    fn positive_cone_and_height() {
        for a in 1..=4 {
            let b = GlpWeight::beta(4, a);
            assert!(b.in_positive_cone());
            assert_eq!(b.height(), 1);
        }
        let neg = GlpWeight::zero(4).sub(&GlpWeight::beta(4, 2));
        assert!(!neg.in_positive_cone());
        let dl = GlpWeight { finite: vec![0; 4], delta: 1 };
        assert!(dl.in_positive_cone());
        assert_eq!(dl.height(), 4);
    }

    #[test]
    fn affine_weights() {
        assert_eq!(affine_weight_of_entry(2, 3), GlpWeight::eps(3, 2));
        let g = affine_weight_of_entry(-1, 3);
        assert_eq!(g.finite, vec![0, 1, 0]);
        assert_eq!(g.delta, 1);
        assert_eq!(affine_weight(&[1, 2], 3).finite, vec![1, 1, 0]);
    }

    proptest! {
        #[test]
        fn psi_multiplicative(a in prop::collection::vec(-4i64..5, 3), b in prop::collection::vec(-4i64..5, 3)) {
            let c = comp(&[2, 1]);
            let lhs = psi_monomial(&add(&a, &b), &c).unwrap();
            let rhs = psi_monomial(&a, &c).unwrap().mul(&psi_monomial(&b, &c).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn alpha_c_in_root_lattice(parts in prop::collection::vec(1usize..4, 1..4)) {
            let c = Composition(parts);
            prop_assert_eq!(alpha_c(&c).iter().sum::<i64>(), 0);
        }

        #[test]
        fn interior_iff_parabolic(parts in prop::collection::vec(1usize..4, 1..4)) {
            let c = Composition(parts);
            let ip = parabolic_simples(&c);
            let blk = c.block_of();
            for i in 1..c.total() {
                prop_assert_eq!(ip.contains(&i), blk[i - 1] == blk[i]);
            }
        }

        #[test]
        fn coset_parity_well_defined(g in prop::collection::vec(-5i64..6, 3), k in -3i64..4) {
            let c = comp(&[3]);
            let h = add(&g, &scale(&alpha(3, 1), k));
            prop_assert_eq!(dot(&g, &alpha_c(&c)).rem_euclid(2), dot(&h, &alpha_c(&c)).rem_euclid(2));
            prop_assert_eq!(coset_parity(&c.block_sums(&g), &c), dot(&g, &alpha_c(&c)).rem_euclid(2));
        }
    }
}
