//! Laurent polynomials in `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse Laurent polynomial, terms sorted by exponent, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentScalar {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn q_pow(e: i32) -> Self {
        Self { terms: vec![(e, BigInt::one())] }
    }

    pub fn monomial(e: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *acc.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        Self { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `q - q^{-1}`
    pub fn q_minus_qinv() -> Self {
        Self::from_pairs([(-1, -1), (1, 1)])
    }

    /// Quantum integer `[n] = q^{1-n} + q^{3-n} + ... + q^{n-1}`.
    pub fn qint(n: u32) -> Self {
        let n = n as i32;
        Self::from_pairs((0..n).map(|k| (1 - n + 2 * k, 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Exponent negation `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_fixed(&self) -> bool {
        *self == self.bar()
    }

    /// Every exponent is at most `-1`.
    pub fn is_sub_unitriangular(&self) -> bool {
        self.max_exp().map_or(true, |e| e <= -1)
    }

    /// Every exponent is at least `1`.
    pub fn is_super_unitriangular(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 1)
    }

    /// Bar-fixed `r` with `self - r` in `q^{-1} Z[q^{-1}]`.
    pub fn symmetric_completion(&self) -> Self {
        let mut pairs = Vec::new();
        for (e, c) in &self.terms {
            if *e == 0 {
                pairs.push((0, c.clone()));
            } else if *e > 0 {
                pairs.push((*e, c.clone()));
                pairs.push((-*e, c.clone()));
            }
        }
        Self::from_pairs(pairs)
    }

    /// Bar-fixed `r` with `self - r` in `q Z[q]`.
    pub fn symmetric_completion_up(&self) -> Self {
        self.bar().symmetric_completion()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Exact division by a monomial multiple of a unit, if `self` is divisible.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (lo_b, lead_b) = other.terms[0].clone();
        let mut rem = self.clone();
        let mut quo = Vec::new();
        let span_b = other.max_exp().unwrap() - lo_b;
        while !rem.is_zero() {
            let (lo_r, lead_r) = rem.terms[0].clone();
            if rem.max_exp().unwrap() - lo_r < span_b {
                return None;
            }
            if (&lead_r % &lead_b) != BigInt::zero() {
                return None;
            }
            let c = &lead_r / &lead_b;
            let e = lo_r - lo_b;
            quo.push((e, c.clone()));
            rem = &rem - &(other.shift(e).scale(&c));
        }
        Some(Self::from_pairs(quo))
    }

    /// Evaluation at an integer (for quick sanity checks).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Raises to a non-negative power.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_a = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_b = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_a {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_b {
                let (e, c) = &other.terms[j];
                out.push((*e, if sign < 0 { -c } else { c.clone() }));
                j += 1;
            } else {
                let e = self.terms[i].0;
                let c = if sign < 0 {
                    &self.terms[i].1 - &other.terms[j].1
                } else {
                    &self.terms[i].1 + &other.terms[j].1
                };
                if !c.is_zero() {
                    out.push((e, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    /// LaTeX rendering as signed q-powers in ascending order.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{{{e}}}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}{mono}"));
            }
        }
        s
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, o: &LaurentScalar) -> LaurentScalar {
        self.combine(o, 1)
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, o: &LaurentScalar) -> LaurentScalar {
        self.combine(o, -1)
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, o: &LaurentScalar) -> LaurentScalar {
        if self.is_zero() || o.is_zero() {
            return LaurentScalar::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return o.shift(*e).scale(c);
        }
        if o.terms.len() == 1 {
            let (e, c) = &o.terms[0];
            return self.shift(*e).scale(c);
        }
        let lo = self.terms[0].0 + o.terms[0].0;
        let hi = self.max_exp().unwrap() + o.max_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                dense[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentScalar {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i32, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, o: LaurentScalar) -> LaurentScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, o: &LaurentScalar) -> LaurentScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, o: &LaurentScalar) {
        *self = self.combine(o, 1);
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, o: &LaurentScalar) {
        *self = self.combine(o, -1);
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&(e, v))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoefRepr {
    Int(i64),
    Big(String),
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<(i32, CoefRepr)> = Vec::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c = match c {
                CoefRepr::Int(v) => BigInt::from(v),
                CoefRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom)?,
            };
            pairs.push((e, c));
        }
        Ok(Self::from_pairs(pairs))
    }
}

/// Shorthand for `sum c_k q^{e_k}` from small integer pairs.
pub fn lp(pairs: &[(i32, i64)]) -> LaurentScalar {
    LaurentScalar::from_pairs(pairs.iter().map(|&(e, c)| (e, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = LaurentScalar> {
        proptest::collection::vec((-6i32..6, -5i64..5), 0..6)
            .prop_map(|v| LaurentScalar::from_pairs(v))
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentScalar::zero().bar(), LaurentScalar::zero());
        assert_eq!(lp(&[(1, 1), (0, 1)]).bar(), lp(&[(-1, 1), (0, 1)]));
        assert_eq!(lp(&[(2, 1), (-2, -1)]).bar(), lp(&[(-2, 1), (2, -1)]));
    }

    #[test]
    fn unitriangular_examples() {
        assert!(lp(&[(-1, 1), (-4, 3)]).is_sub_unitriangular());
        assert!(LaurentScalar::zero().is_sub_unitriangular());
        assert!(!lp(&[(0, 1), (-1, 1)]).is_sub_unitriangular());
    }

    #[test]
    fn completion_examples() {
        assert_eq!(lp(&[(-1, 1)]).symmetric_completion(), LaurentScalar::zero());
        assert_eq!(lp(&[(2, 1)]).symmetric_completion(), lp(&[(2, 1), (-2, 1)]));
        assert_eq!(lp(&[(0, 2), (1, 1)]).symmetric_completion(), lp(&[(0, 2), (1, 1), (-1, 1)]));
    }

    #[test]
    fn qint_and_division() {
        assert_eq!(LaurentScalar::qint(2), lp(&[(-1, 1), (1, 1)]));
        let a = &LaurentScalar::qint(3) * &LaurentScalar::qint(2);
        assert_eq!(a.div_exact(&LaurentScalar::qint(2)), Some(LaurentScalar::qint(3)));
        assert_eq!(LaurentScalar::one().div_exact(&LaurentScalar::qint(2)), None);
    }

    #[test]
    fn serde_round_trip() {
        let f = lp(&[(-2, 3), (1, -1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, "[[-2,3],[1,-1]]");
        let g: LaurentScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn latex() {
        assert_eq!(LaurentScalar::q_minus_qinv().to_latex(), "-q^{-1} + q");
    }

    proptest! {
        #[test]
        fn bar_is_ring_involution(a in arb(), b in arb()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn ring_laws(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &a), &LaurentScalar::zero());
        }

        #[test]
        fn completion_properties(f in arb()) {
            let r = f.symmetric_completion();
            prop_assert!(r.is_bar_fixed());
            prop_assert!((&f - &r).is_sub_unitriangular());
            let r2 = f.symmetric_completion_up();
            prop_assert!(r2.is_bar_fixed());
            prop_assert!((&f - &r2).is_super_unitriangular());
        }

        #[test]
        fn fixed_and_sub_is_zero(f in arb()) {
            let g = &f + &f.bar();
            if g.is_sub_unitriangular() {
                prop_assert!(g.is_zero());
            }
        }
    }
}
