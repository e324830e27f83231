//! Alcoves of `V'` as right `W'`-translates of the fundamental alcove, the
//! slab `S_c`, the generic order and the slab translations `g_gamma`.

use crate::error::{Error, Result};
use crate::rootdata::{Composition, Weight};
use crate::weyl::{all_perms, is_min_left_coset, perm_compose, perm_inverse, AffineWeylElt, Perm};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alcove {
    pub coord: AffineWeylElt,
}

impl Alcove {
    pub fn base(d: usize) -> Self {
        Alcove { coord: AffineWeylElt::identity(d) }
    }

    pub fn new(coord: AffineWeylElt) -> Result<Self> {
        if !coord.in_w_prime() {
            return Err(Error::Precondition(format!("{coord} is not in W'")));
        }
        Ok(Alcove { coord })
    }

    pub fn d(&self) -> usize {
        self.coord.d()
    }

    pub fn scaled_point(&self) -> Weight {
        let d = self.d() as i64;
        let v0: Weight = (1..=d).map(|i| d + 1 - 2 * i).collect();
        self.coord.act(&v0, 2 * d)
    }

    pub fn interior_point(&self, p: i64) -> RationalPoint {
        let d = self.d() as i64;
        RationalPoint { num: self.scaled_point().iter().map(|x| x * p).collect(), den: 2 * d }
    }

    pub fn left_s(&self, i: usize) -> Self {
        Alcove { coord: AffineWeylElt::s(self.d(), i).mul(&self.coord) }
    }

    pub fn left(&self, w: &AffineWeylElt) -> Self {
        Alcove { coord: w.mul(&self.coord) }
    }

    pub fn right(&self, w: &AffineWeylElt) -> Self {
        Alcove { coord: self.coord.mul(w) }
    }

    pub fn floors(&self) -> Vec<i64> {
        let v = self.scaled_point();
        let d = self.d();
        let period = 2 * d as i64;
        let mut out = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                out.push((v[i] - v[j]).div_euclid(period));
            }
        }
        out
    }
}

impl fmt::Display for Alcove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coord)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub num: Vec<i64>,
    pub den: i64,
}

impl RationalPoint {
    pub fn pairing_with_coroot(&self, i: usize, j: usize) -> (i64, i64) {
        (self.num[i] - self.num[j], self.den)
    }
}

pub fn in_a_c(a: &Alcove, c: &Composition) -> bool {
    let v = a.scaled_point();
    let period = 2 * a.d() as i64;
    c.blocks().into_iter().all(|r| {
        r.clone().all(|i| r.clone().filter(|&j| j > i).all(|j| v[i] - v[j] > 0 && v[i] - v[j] < period))
    })
}

fn linear_height(v: &[i64]) -> i64 {
    let d = v.len() as i64;
    v.iter().enumerate().map(|(i, x)| (d - 1 - 2 * i as i64) * x).sum()
}

pub fn reflection(d: usize, i: usize, j: usize, k: i64) -> AffineWeylElt {
    let mut perm: Perm = (0..d).collect();
    perm.swap(i, j);
    let mut lam = vec![0; d];
    lam[i] = -k;
    lam[j] = k;
    AffineWeylElt::finite(perm).mul(&AffineWeylElt::tau(&lam))
}

pub fn upward_reflections(a: &Alcove, bound: i64) -> Vec<Alcove> {
    let v = a.scaled_point();
    let d = v.len();
    let period = 2 * d as i64;
    let base = linear_height(&v);
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let delta = v[i] - v[j];
            let mut k = delta.div_euclid(period) + 1;
            loop {
                let t = k * period - delta;
                if base + 2 * t * (j - i) as i64 > bound {
                    break;
                }
                out.push(a.right(&reflection(d, i, j, k)));
                k += 1;
            }
        }
    }
    out
}

thread_local! {
    static ORDER_CACHE: std::cell::RefCell<std::collections::HashMap<(Alcove, Alcove), bool>> =
        std::cell::RefCell::new(std::collections::HashMap::new());
}

fn reachable(a: &Alcove, b: &Alcove) -> bool {
    let target = linear_height(&b.scaled_point());
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![a.clone()];
    while let Some(x) = stack.pop() {
        if &x == b {
            return true;
        }
        for y in upward_reflections(&x, target) {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    false
}

pub fn generic_leq(a: &Alcove, b: &Alcove) -> bool {
    if a == b {
        return true;
    }
    if linear_height(&a.scaled_point()) >= linear_height(&b.scaled_point()) {
        return false;
    }
    let shift = AffineWeylElt::tau(&a.coord.trans).inverse();
    let key = (a.right(&shift), b.right(&shift));
    if let Some(r) = ORDER_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return r;
    }
    let r = reachable(&key.0, &key.1);
    ORDER_CACHE.with(|c| c.borrow_mut().insert(key, r));
    r
}

pub fn generic_lt(a: &Alcove, b: &Alcove) -> bool {
    a != b && generic_leq(a, b)
}

pub fn wall_crossing_up(a: &Alcove, b: &Alcove) -> bool {
    a.floors().iter().sum::<i64>() < b.floors().iter().sum::<i64>()
}

pub fn height(a: &Alcove, c: &Composition) -> i64 {
    let blk = c.block_of();
    let f = a.floors();
    let d = a.d();
    let mut k = 0;
    let mut h = 0;
    for i in 0..d {
        for j in i + 1..d {
            if blk[i] != blk[j] {
                h += f[k];
            }
            k += 1;
        }
    }
    h
}

pub fn height_shift(gamma_bar: &[i64], c: &Composition) -> i64 {
    let sizes: Vec<i64> = c.parts().iter().map(|&x| x as i64).collect();
    let mut h = 0;
    for a in 0..sizes.len() {
        for b in a + 1..sizes.len() {
            h -= sizes[b] * gamma_bar[a] - sizes[a] * gamma_bar[b];
        }
    }
    h
}

fn slab_return(z: &[i64], c: &Composition) -> Result<AffineWeylElt> {
    let d = z.len();
    let period = 2 * d as i64;
    let mut perm = vec![0; d];
    let mut trans = vec![0; d];
    for r in c.blocks() {
        let n = r.len() as i64;
        let vals: Vec<i64> = z[r.clone()].to_vec();
        let res: Vec<i64> = vals.iter().map(|x| x.rem_euclid(period)).collect();
        let excess = vals.iter().sum::<i64>() - res.iter().sum::<i64>();
        if excess.rem_euclid(period) != 0 {
            return Err(Error::Inconsistent("slab residues".into()));
        }
        let m = excess / period;
        let lifted = m.rem_euclid(n);
        let base = m.div_euclid(n);
        let mut order: Vec<usize> = (0..r.len()).collect();
        order.sort_by_key(|&k| res[k]);
        let mut target = vec![0i64; r.len()];
        for (rank, &k) in order.iter().enumerate() {
            let lift = if (rank as i64) < lifted { 1 } else { 0 };
            target[k] = res[k] + period * (base + lift);
        }
        let mut dec: Vec<usize> = (0..r.len()).collect();
        dec.sort_by(|&a, &b| target[b].cmp(&target[a]));
        for (jpos, &k) in dec.iter().enumerate() {
            perm[r.start + jpos] = r.start + k;
            trans[r.start + jpos] = (vals[k] - target[k]) / period;
        }
    }
    Ok(AffineWeylElt { perm, trans })
}

pub fn w_gamma(gamma: &[i64], c: &Composition) -> Result<AffineWeylElt> {
    let d = c.total();
    if gamma.len() != d {
        return Err(Error::Dimension { expected: d, got: gamma.len() });
    }
    if gamma.iter().sum::<i64>() != 0 {
        return Err(Error::Precondition("gamma must lie in the root lattice".into()));
    }
    let shifted = Alcove::base(d).right(&AffineWeylElt::tau(gamma));
    let y = slab_return(&shifted.scaled_point(), c)?;
    if !in_a_c(&shifted.right(&y), c) {
        return Err(Error::Inconsistent("slab return left the slab".into()));
    }
    Ok(y.inverse())
}

pub fn g_gamma(a: &Alcove, gamma: &[i64], c: &Composition) -> Result<Alcove> {
    let y = w_gamma(gamma, c)?.inverse();
    Ok(a.right(&AffineWeylElt::tau(gamma)).right(&y))
}

pub fn coset_decomposition(perm: &[usize], c: &Composition) -> (Perm, Perm) {
    let d = perm.len();
    for v in crate::weyl::parabolic_group(c) {
        let w = perm_compose(perm, &perm_inverse(&v));
        if is_min_left_coset(&w, c) {
            return (w, v);
        }
    }
    (perm.to_vec(), (0..d).collect())
}

pub fn compose(w: &[usize], gamma_bar: &[i64], c: &Composition) -> Result<Alcove> {
    let gamma = crate::rootdata::coset_rep(gamma_bar, c);
    g_gamma(&Alcove::base(w.len()).right(&AffineWeylElt::finite(w.to_vec())), &gamma, c)
}

pub fn decompose(a: &Alcove, c: &Composition) -> Result<(Perm, Weight)> {
    let (w, _) = coset_decomposition(&a.coord.perm, c);
    let gamma_bar = c.block_sums(&a.coord.trans);
    let back = compose(&w, &gamma_bar, c)?;
    if &back != a {
        return Err(Error::Inconsistent(format!("{a} is not a slab translate of a coset alcove")));
    }
    Ok((w, gamma_bar))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub radius: i64,
}

impl Window {
    pub fn contains(&self, a: &Alcove) -> bool {
        a.coord.trans.iter().all(|x| x.abs() <= self.radius)
    }

    pub fn alcoves(&self, c: &Composition) -> Vec<Alcove> {
        let d = c.total();
        let r = self.radius;
        let mut trans_list: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..d {
            let mut next = Vec::new();
            for t in &trans_list {
                for x in -r..=r {
                    let mut u = t.clone();
                    u.push(x);
                    next.push(u);
                }
            }
            trans_list = next;
        }
        let mut out = Vec::new();
        for perm in all_perms(d) {
            for t in trans_list.iter().filter(|t| t.iter().sum::<i64>() == 0) {
                let a = Alcove { coord: AffineWeylElt { perm: perm.clone(), trans: t.clone() } };
                if in_a_c(&a, c) {
                    out.push(a);
                }
            }
        }
        out.sort();
        out
    }
}
