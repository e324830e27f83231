//! Extended affine Hecke algebra of GL_d in the basis `t_w`, with the
//! Bernstein monomials `x_gamma`, the bar involution, parabolic sums and the
//! sign character of `H'_c`.

use crate::error::{Error, Result};
use crate::qcoeff::LaurentScalar;
use crate::rootdata::{check_dim, parabolic_simples, Composition, Weight};
use crate::weyl::{parabolic_group, perm_length, AffineWeylElt};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn qmq() -> LaurentScalar {
    LaurentScalar::q_minus_qinv()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeElt {
    pub d: usize,
    pub terms: BTreeMap<AffineWeylElt, LaurentScalar>,
}

impl HeckeElt {
    pub fn zero(d: usize) -> Self {
        HeckeElt { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::basis(AffineWeylElt::identity(d))
    }

    pub fn basis(w: AffineWeylElt) -> Self {
        let d = w.d();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentScalar::one());
        HeckeElt { d, terms }
    }

    pub fn scalar(d: usize, c: LaurentScalar) -> Self {
        let mut h = Self::zero(d);
        h.add_term(AffineWeylElt::identity(d), c);
        h
    }

    pub fn t(d: usize, i: usize) -> Self {
        Self::basis(AffineWeylElt::s(d, i))
    }

    pub fn t_inv(d: usize, i: usize) -> Self {
        let mut h = Self::t(d, i);
        h.add_term(AffineWeylElt::identity(d), -qmq());
        h
    }

    pub fn pi(d: usize) -> Self {
        Self::basis(AffineWeylElt::pi(d))
    }

    pub fn pi_pow(d: usize, k: i64) -> Self {
        Self::basis(AffineWeylElt::pi_pow(d, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffineWeylElt) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: AffineWeylElt, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.d);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn mul_t_right(&self, i: usize) -> Self {
        let s = AffineWeylElt::s(self.d, i);
        let mut out = Self::zero(self.d);
        for (w, c) in &self.terms {
            let ws = w.mul(&s);
            if ws.length() > w.length() {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                out.add_term(w.clone(), c * &qmq());
            }
        }
        out
    }

    pub fn mul_t_left(&self, i: usize) -> Self {
        let s = AffineWeylElt::s(self.d, i);
        let mut out = Self::zero(self.d);
        for (w, c) in &self.terms {
            let sw = s.mul(w);
            if sw.length() > w.length() {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.clone());
                out.add_term(w.clone(), c * &qmq());
            }
        }
        out
    }

    pub fn mul_pi_right(&self, k: i64) -> Self {
        let pk = AffineWeylElt::pi_pow(self.d, k);
        let mut out = Self::zero(self.d);
        for (w, c) in &self.terms {
            out.add_term(w.mul(&pk), c.clone());
        }
        out
    }

    pub fn mul_basis_right(&self, w: &AffineWeylElt) -> Self {
        let (k, word) = w.reduced_word();
        word.iter().fold(self.mul_pi_right(k), |acc, &i| acc.mul_t_right(i))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.d);
        for (w, c) in &o.terms {
            out = out.add(&self.mul_basis_right(w).scale(c));
        }
        out
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        check_dim(self.d, o.d)?;
        Ok(self.mul(o))
    }

    pub fn bar_basis(w: &AffineWeylElt) -> Self {
        let d = w.d();
        let (k, word) = w.reduced_word();
        word.iter().fold(Self::pi_pow(d, k), |acc, &i| acc.mul(&Self::t_inv(d, i)))
    }

    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.d);
        for (w, c) in &self.terms {
            out = out.add(&Self::bar_basis(w).scale(&c.bar()));
        }
        out
    }

    pub fn is_in_h_prime(&self) -> bool {
        self.terms.keys().all(|w| w.in_w_prime())
    }
}

pub fn x_generator(d: usize, i: usize, sign: i64) -> HeckeElt {
    if sign >= 0 {
        let mut x = HeckeElt::pi(d);
        for j in (1..d).rev() {
            x = x.mul(&HeckeElt::t_inv(d, j));
        }
        for j in 1..i {
            x = HeckeElt::t(d, j).mul(&x).mul(&HeckeElt::t(d, j));
        }
        x
    } else {
        let mut x = HeckeElt::one(d);
        for j in 1..d {
            x = x.mul(&HeckeElt::t(d, j));
        }
        x = x.mul(&HeckeElt::pi_pow(d, -1));
        for j in 1..i {
            x = HeckeElt::t_inv(d, j).mul(&x).mul(&HeckeElt::t_inv(d, j));
        }
        x
    }
}

pub fn monomial_x(g: &[i64]) -> HeckeElt {
    let d = g.len();
    let mut out = HeckeElt::one(d);
    for (i, &m) in g.iter().enumerate() {
        if m != 0 {
            let gen = x_generator(d, i + 1, m.signum());
            for _ in 0..m.unsigned_abs() {
                out = out.mul(&gen);
            }
        }
    }
    out
}

pub fn rho(f: &Composition) -> (HeckeElt, LaurentScalar) {
    let d = f.total();
    let mut h = HeckeElt::zero(d);
    let mut m = LaurentScalar::zero();
    for w in parabolic_group(f) {
        let l = perm_length(&w) as i32;
        h.add_term(AffineWeylElt::finite(w), LaurentScalar::q_pow(l));
        m += &LaurentScalar::q_pow(2 * l);
    }
    (h, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignGenerator {
    T(usize),
    XAlpha(usize, i64),
}

pub fn sign_char(g: SignGenerator, c: &Composition) -> Result<LaurentScalar> {
    let ic = parabolic_simples(c);
    match g {
        SignGenerator::T(i) if ic.contains(&i) => Ok(-LaurentScalar::q_pow(-1)),
        SignGenerator::XAlpha(i, e) if ic.contains(&i) && e.abs() == 1 => {
            Ok(LaurentScalar::q_pow(2 * e as i32))
        }
        other => Err(Error::Generator(format!("{other:?} is not a generator of H'_c for {c}"))),
    }
}

pub type RElt = BTreeMap<Weight, LaurentScalar>;

pub fn r_add_term(f: &mut RElt, g: Weight, c: LaurentScalar) {
    if c.is_zero() {
        return;
    }
    let e = f.entry(g.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        f.remove(&g);
    }
}

pub fn r_monomial(g: Weight) -> RElt {
    let mut f = RElt::new();
    f.insert(g, LaurentScalar::one());
    f
}

fn s_weight(g: &[i64], i: usize) -> Weight {
    let mut h = g.to_vec();
    h.swap(i - 1, i);
    h
}

pub fn divided_difference(g: &[i64], i: usize) -> RElt {
    let n = g[i - 1] - g[i];
    let s = s_weight(g, i);
    let mut out = RElt::new();
    if n > 0 {
        for k in 0..n {
            let mut h = s.clone();
            h[i - 1] += k;
            h[i] -= k;
            r_add_term(&mut out, h, LaurentScalar::from_int(-1));
        }
    } else if n < 0 {
        for k in n..0 {
            let mut h = s.clone();
            h[i - 1] += k;
            h[i] -= k;
            r_add_term(&mut out, h, LaurentScalar::one());
        }
    }
    out
}

pub fn r_to_hecke(d: usize, f: &RElt) -> HeckeElt {
    let mut out = HeckeElt::zero(d);
    for (g, c) in f {
        out = out.add(&monomial_x(g).scale(c));
    }
    out
}

pub fn sign_twisted_t(f: &RElt, i: usize) -> RElt {
    let mut out = RElt::new();
    let minus_qinv = -LaurentScalar::q_pow(-1);
    let neg_qmq = -qmq();
    for (g, c) in f {
        let s = s_weight(g, i);
        r_add_term(&mut out, s.clone(), c * &minus_qinv);
        for (h, a) in divided_difference(&s, i) {
            r_add_term(&mut out, h, &(c * &a) * &neg_qmq);
        }
    }
    out
}
