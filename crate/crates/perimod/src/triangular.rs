//! Depth-by-depth elimination of bar-invariant elements with unitriangular
//! expansions on a basis carrying a free lattice of shift symmetries.

use crate::error::{Error, Result};
use crate::qcoeff::LaurentScalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Debug;

pub type Vector<I> = BTreeMap<I, LaurentScalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Neg,
    Pos,
}

impl Direction {
    pub fn split(&self, f: &LaurentScalar) -> (LaurentScalar, LaurentScalar) {
        let sym = match self {
            Direction::Neg => f.symmetric_completion(),
            Direction::Pos => f.symmetric_completion_up(),
        };
        (f - &sym, sym)
    }

    pub fn admits(&self, f: &LaurentScalar) -> bool {
        match self {
            Direction::Neg => f.is_sub_unitriangular(),
            Direction::Pos => f.is_super_unitriangular(),
        }
    }
}

pub trait ShiftBasis {
    type Idx: Clone + Ord + Debug;

    fn num_reps(&self) -> usize;
    fn shift_rank(&self) -> usize;
    fn decompose(&self, i: &Self::Idx) -> Result<(usize, Vec<i64>)>;
    fn compose(&self, rep: usize, shift: &[i64]) -> Result<Self::Idx>;
    fn height(&self, i: &Self::Idx) -> i64;
    fn lt(&self, a: &Self::Idx, b: &Self::Idx) -> bool;

    fn top(&self, rep: usize) -> Result<Self::Idx> {
        self.compose(rep, &vec![0; self.shift_rank()])
    }

    fn shift_idx(&self, i: &Self::Idx, s: &[i64]) -> Result<Self::Idx> {
        let (r, sh) = self.decompose(i)?;
        let t: Vec<i64> = sh.iter().zip(s).map(|(a, b)| a + b).collect();
        self.compose(r, &t)
    }

    fn shift_vec(&self, v: &Vector<Self::Idx>, s: &[i64]) -> Result<Vector<Self::Idx>> {
        let mut out = Vector::new();
        for (i, c) in v {
            out.insert(self.shift_idx(i, s)?, c.clone());
        }
        Ok(out)
    }
}

pub fn vec_add_scaled<I: Clone + Ord>(acc: &mut Vector<I>, v: &Vector<I>, c: &LaurentScalar) {
    if c.is_zero() {
        return;
    }
    for (i, a) in v {
        let e = acc.entry(i.clone()).or_default();
        *e += &(a * c);
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

pub fn vec_bar<I: Clone + Ord>(v: &Vector<I>) -> Vector<I> {
    v.iter().map(|(i, c)| (i.clone(), c.bar())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub depth: usize,
    pub rep: usize,
    pub shift: Vec<i64>,
    pub coeff: LaurentScalar,
}

#[derive(Clone, Debug)]
pub struct Elimination<I> {
    pub elements: Vec<Vector<I>>,
    pub corrections: Vec<Vec<Correction>>,
    pub depths_used: usize,
}

fn by_depth<B: ShiftBasis>(basis: &B, top: &B::Idx, v: &Vector<B::Idx>) -> Result<Vec<Vector<B::Idx>>> {
    let h0 = basis.height(top);
    let mut out: Vec<Vector<B::Idx>> = Vec::new();
    for (i, c) in v {
        let h = h0 - basis.height(i);
        if h < 0 || (h == 0 && i != top) {
            return Err(Error::Elimination(format!("{i:?} is not below the top {top:?}")));
        }
        let h = h as usize;
        if out.len() <= h {
            out.resize(h + 1, Vector::new());
        }
        out[h].insert(i.clone(), c.clone());
    }
    Ok(out)
}

pub fn eliminate<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    dir: Direction,
    max_depth: usize,
) -> Result<Elimination<B::Idx>> {
    let n = basis.num_reps();
    if family.len() != n {
        return Err(Error::Precondition(format!("family has {} members for {n} reps", family.len())));
    }
    let tops: Vec<B::Idx> = (0..n).map(|r| basis.top(r)).collect::<Result<_>>()?;
    let mut slices = Vec::with_capacity(n);
    for r in 0..n {
        if family[r].get(&tops[r]).map_or(true, |c| !c.is_one()) {
            return Err(Error::Elimination(format!("family member {r} lacks a unit top")));
        }
        slices.push(by_depth(basis, &tops[r], &family[r])?);
    }
    let jb = slices.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut x: Vec<Vec<Vector<B::Idx>>> =
        tops.iter().map(|t| vec![std::iter::once((t.clone(), LaurentScalar::one())).collect()]).collect();
    let mut pend: Vec<Vec<Correction>> = vec![Vec::new(); n];
    let mut j = 1;
    loop {
        if j > max_depth {
            return Err(Error::Budget(format!("elimination exceeded depth {max_depth}")));
        }
        let mut new_slices = Vec::with_capacity(n);
        for r in 0..n {
            let mut f = slices[r].get(j).cloned().unwrap_or_default();
            for k in &pend[r] {
                let m = j - k.depth;
                if let Some(sl) = x[k.rep].get(m) {
                    if !sl.is_empty() {
                        let sh = basis.shift_vec(sl, &k.shift)?;
                        vec_add_scaled(&mut f, &sh, &-k.coeff.clone());
                    }
                }
            }
            let mut xs = Vector::new();
            let mut new_pend = Vec::new();
            for (i, c) in &f {
                if !basis.lt(i, &tops[r]) {
                    return Err(Error::Elimination(format!("{i:?} is not below {:?}", tops[r])));
                }
                let (low, sym) = dir.split(c);
                if !low.is_zero() {
                    xs.insert(i.clone(), low);
                }
                if !sym.is_zero() {
                    let (rep, shift) = basis.decompose(i)?;
                    new_pend.push(Correction { depth: j, rep, shift, coeff: sym });
                }
            }
            pend[r].extend(new_pend);
            new_slices.push(xs);
        }
        for (r, s) in new_slices.into_iter().enumerate() {
            x[r].push(s);
        }
        let big_k = x
            .iter()
            .map(|v| v.iter().rposition(|s| !s.is_empty()).unwrap_or(0))
            .max()
            .unwrap_or(0);
        let big_p = pend.iter().flat_map(|v| v.iter().map(|k| k.depth)).max().unwrap_or(0);
        if j >= jb && j > big_p + big_k {
            break;
        }
        j += 1;
    }
    let elements = x
        .into_iter()
        .map(|sl| {
            let mut v = Vector::new();
            for s in sl {
                v.extend(s);
            }
            v
        })
        .collect();
    Ok(Elimination { elements, corrections: pend, depths_used: j })
}

pub fn span_coordinates<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    v: &Vector<B::Idx>,
    max_steps: usize,
) -> Result<Vec<(usize, Vec<i64>, LaurentScalar)>> {
    let mut residual = v.clone();
    let mut coords = Vec::new();
    let mut steps = 0;
    while let Some(top) = residual.keys().max_by_key(|i| basis.height(i)).cloned() {
        steps += 1;
        if steps > max_steps {
            return Err(Error::Span(format!("no finite expansion within {max_steps} steps")));
        }
        let c = residual[&top].clone();
        let (rep, shift) = basis.decompose(&top)?;
        let b = basis.shift_vec(&family[rep], &shift)?;
        vec_add_scaled(&mut residual, &b, &-c.clone());
        coords.push((rep, shift, c));
    }
    Ok(coords)
}

pub fn iota_on_span<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    v: &Vector<B::Idx>,
    max_steps: usize,
) -> Result<Vector<B::Idx>> {
    let coords = span_coordinates(basis, family, v, max_steps)?;
    let mut out = Vector::new();
    for (rep, shift, c) in coords {
        let b = basis.shift_vec(&family[rep], &shift)?;
        vec_add_scaled(&mut out, &b, &c.bar());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub unit_diagonal: bool,
    pub lattice: bool,
    pub below_top: bool,
    pub recursion: bool,
    pub span_terms: Option<usize>,
    pub span_bar_fixed: Option<bool>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.unit_diagonal
            && self.lattice
            && self.below_top
            && self.recursion
            && self.span_bar_fixed.unwrap_or(true)
    }
}

pub fn check_recursion<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    elim: &Elimination<B::Idx>,
    r: usize,
) -> bool {
    let mut rhs = family[r].clone();
    for k in &elim.corrections[r] {
        if k.depth == 0 || !k.coeff.is_bar_fixed() {
            return false;
        }
        match basis.shift_vec(&elim.elements[k.rep], &k.shift) {
            Ok(x) => vec_add_scaled(&mut rhs, &x, &-k.coeff.clone()),
            Err(_) => return false,
        }
    }
    rhs == elim.elements[r]
}

pub fn span_check<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    v: &Vector<B::Idx>,
    max_steps: usize,
) -> (Option<usize>, Option<bool>) {
    match span_coordinates(basis, family, v, max_steps) {
        Ok(coords) => {
            let mut out = Vector::new();
            for (rep, shift, c) in &coords {
                match basis.shift_vec(&family[*rep], shift) {
                    Ok(b) => vec_add_scaled(&mut out, &b, &c.bar()),
                    Err(_) => return (None, None),
                }
            }
            (Some(coords.len()), Some(&out == v))
        }
        Err(_) => (None, None),
    }
}

pub fn certify<B: ShiftBasis>(
    basis: &B,
    family: &[Vector<B::Idx>],
    elim: &Elimination<B::Idx>,
    r: usize,
    dir: Direction,
    max_steps: usize,
) -> Result<Certificate> {
    let top = basis.top(r)?;
    let v = &elim.elements[r];
    let unit_diagonal = v.get(&top).map_or(false, |c| c.is_one());
    let lattice = v.iter().all(|(i, c)| *i == top || dir.admits(c));
    let below_top = v.keys().all(|i| *i == top || basis.lt(i, &top));
    let recursion = check_recursion(basis, family, elim, r);
    let (span_terms, span_bar_fixed) = span_check(basis, family, v, max_steps);
    Ok(Certificate { unit_diagonal, lattice, below_top, recursion, span_terms, span_bar_fixed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::lp;

    struct Line;

    impl ShiftBasis for Line {
        type Idx = (usize, i64);
        fn num_reps(&self) -> usize {
            2
        }
        fn shift_rank(&self) -> usize {
            1
        }
        fn decompose(&self, i: &Self::Idx) -> Result<(usize, Vec<i64>)> {
            Ok((i.0, vec![i.1]))
        }
        fn compose(&self, rep: usize, shift: &[i64]) -> Result<Self::Idx> {
            Ok((rep, shift.first().copied().unwrap_or(0)))
        }
        fn height(&self, i: &Self::Idx) -> i64 {
            2 * i.1 + i.0 as i64
        }
        fn lt(&self, a: &Self::Idx, b: &Self::Idx) -> bool {
            self.height(a) < self.height(b)
        }
    }

    fn v(terms: &[((usize, i64), LaurentScalar)]) -> Vector<(usize, i64)> {
        terms.iter().cloned().collect()
    }

    #[test]
    fn already_canonical_family() {
        let fam = vec![
            v(&[((0, 0), lp(&[(0, 1)])), ((1, -1), lp(&[(-1, 1)]))]),
            v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(-1, 1)]))]),
        ];
        let e = eliminate(&Line, &fam, Direction::Neg, 20).unwrap();
        assert_eq!(e.elements, fam);
        for r in 0..2 {
            let cert = certify(&Line, &fam, &e, r, Direction::Neg, 50).unwrap();
            assert!(cert.passed());
            assert_eq!(cert.span_bar_fixed, Some(true));
        }
    }

    #[test]
    fn one_correction() {
        let fam = vec![
            v(&[((0, 0), lp(&[(0, 1)]))]),
            v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(-1, 2), (0, 1), (1, 1)]))]),
        ];
        let e = eliminate(&Line, &fam, Direction::Neg, 20).unwrap();
        assert_eq!(e.elements[1], v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(-1, 1)]))]));
        assert_eq!(e.corrections[1].len(), 1);
        let cert = certify(&Line, &fam, &e, 1, Direction::Neg, 50).unwrap();
        assert!(cert.passed());
        let pos = eliminate(&Line, &fam, Direction::Pos, 20).unwrap();
        assert_eq!(pos.elements[1], v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(1, -1)]))]));
    }

    #[test]
    fn non_bar_fixed_vector_fails_certificate() {
        let fam = vec![v(&[((0, 0), lp(&[(0, 1)]))]), v(&[((1, 0), lp(&[(0, 1)]))])];
        let bad = v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(-1, 1)]))]);
        assert_eq!(span_check(&Line, &fam, &bad, 50), (Some(2), Some(false)));
        let e = Elimination { elements: vec![fam[0].clone(), bad], corrections: vec![vec![], vec![]], depths_used: 1 };
        let cert = certify(&Line, &fam, &e, 1, Direction::Neg, 50).unwrap();
        assert!(cert.unit_diagonal && cert.lattice && cert.below_top);
        assert!(!cert.recursion && !cert.passed());
    }

    #[test]
    fn iota_is_semilinear() {
        let fam = vec![
            v(&[((0, 0), lp(&[(0, 1)])), ((1, -1), lp(&[(1, 1), (-1, 1)]))]),
            v(&[((1, 0), lp(&[(0, 1)]))]),
        ];
        let mut x = fam[0].clone();
        for c in x.values_mut() {
            *c = &*c * &lp(&[(1, 1)]);
        }
        let y = iota_on_span(&Line, &fam, &x, 50).unwrap();
        let mut expect = fam[0].clone();
        for c in expect.values_mut() {
            *c = &*c * &lp(&[(-1, 1)]);
        }
        assert_eq!(y, expect);
    }

    #[test]
    fn geometric_series_member() {
        let fam = vec![
            v(&[((0, 0), lp(&[(0, 1)])), ((0, -1), lp(&[(0, 1)])), ((1, -1), lp(&[(-1, 1)])), ((1, -2), lp(&[(-1, 1)]))]),
            v(&[((1, 0), lp(&[(0, 1)])), ((0, 0), lp(&[(-1, 1)]))]),
        ];
        let e = eliminate(&Line, &fam, Direction::Neg, 50).unwrap();
        assert_eq!(e.elements[0], v(&[((0, 0), lp(&[(0, 1)])), ((1, -1), lp(&[(-1, 1)]))]));
        let cert = certify(&Line, &fam, &e, 0, Direction::Neg, 40).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.span_terms, None);
    }

    #[test]
    fn bad_top_rejected() {
        let fam = vec![v(&[((0, 0), lp(&[(1, 1)]))]), v(&[((1, 0), lp(&[(0, 1)]))])];
        assert!(eliminate(&Line, &fam, Direction::Neg, 20).is_err());
    }
}
