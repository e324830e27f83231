//! Comparison maps between the periodic module and the tensor quotients, and
//! the verification reports built on them.

use crate::alcove::{coset_decomposition, decompose, generic_lt, in_a_c, Alcove, Window};
use crate::error::{Error, Result};
use crate::hecke::{monomial_x, rho, HeckeElt};
use crate::loopmod::{
    basis_vector, cyclic_vector, hecke_elt_act, hecke_right_act, leq_c, tensor_canonical_basis, tensor_family,
    tensor_to_hecke, z_shift, HeckeGen, Quotient, QuotientVector, TensorIdx, TensorVector, WORD_BUDGET,
};
use crate::periodic::{
    build_m_c, canonical_basis, spanning_family, PeriodicModule, PeriodicVector, FAMILY_BUDGET, SPAN_BUDGET,
};
use crate::qcoeff::LaurentScalar;
use crate::rootdata::{
    add, alpha, alpha_c, coset_rep, dot, omega_set, omega_sm, psi_monomial, scale, theta, weight_of_tilde,
    Composition, HighestWeightData, RcMonomial,
};
use crate::triangular::{span_coordinates, vec_add_scaled, Vector};
use crate::weyl::{
    is_min_in_simple_coset, length_ball, level_stabilizer_simples, nu, perm_identity, perm_length, sigma_c,
    AffineWeylElt,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

pub type InducedVector = Vector<TensorIdx>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Indeterminate,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub params: Value,
    pub status: Status,
    pub checked: usize,
    pub witness: Value,
}

impl Report {
    pub fn new(claim: &str, params: Value, mismatches: usize, checked: usize, witness: Value) -> Self {
        let status = if mismatches > 0 {
            Status::Mismatch
        } else if checked == 0 {
            Status::Indeterminate
        } else {
            Status::Match
        };
        Report { claim: claim.into(), params, status, checked, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Match
    }
}

fn sign_pow(n: i64) -> LaurentScalar {
    LaurentScalar::from_int(if n.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn one_term<I: Ord>(i: I, c: LaurentScalar) -> Vector<I> {
    std::iter::once((i, c)).collect()
}

fn render<I: std::fmt::Debug>(v: &Vector<I>) -> Value {
    Value::Array(v.iter().map(|(i, c)| json!([format!("{i:?}"), c.to_string()])).collect())
}

pub fn rc_act(v: &QuotientVector, r: &RcMonomial) -> QuotientVector {
    z_shift(v, &scale(&r.coset, -1)).into_iter().map(|(t, c)| (t, &c * &r.scale)).collect()
}

pub fn x_act(q: &Quotient, v: &QuotientVector, gamma: &[i64]) -> Result<QuotientVector> {
    q.reduce(&hecke_right_act(&q.lift(v), &HeckeGen::X(scale(gamma, -1)), q.data.p)?)
}

pub fn map_b(c: &Composition, v: &PeriodicVector) -> Result<InducedVector> {
    let mut out = InducedVector::new();
    for (a, coef) in v {
        let (w, gbar) = decompose(a, c)?;
        let gamma = coset_rep(&gbar, c);
        let n = dot(&gamma, &alpha_c(c)) as i32;
        let r = psi_monomial(&gamma, c)?;
        let s = &r.scale * &LaurentScalar::q_pow(-n);
        vec_add_scaled(&mut out, &one_term(TensorIdx { w, coset: r.coset }, s), coef);
    }
    Ok(out)
}

pub fn map_b_inverse(c: &Composition, v: &InducedVector) -> Result<PeriodicVector> {
    let mut out = PeriodicVector::new();
    for (t, coef) in v {
        let a = crate::alcove::compose(&t.w, &t.coset, c)?;
        vec_add_scaled(&mut out, &one_term(a, LaurentScalar::one()), coef);
    }
    Ok(out)
}

pub fn b_closed_form(data: &HighestWeightData) -> Result<InducedVector> {
    let c = &data.c;
    let (rho_d, _) = rho(&data.d_comp);
    let h = rho_d
        .mul(&HeckeElt::bar_basis(&AffineWeylElt::finite(sigma_c(data)?)))
        .scale(&LaurentScalar::q_pow(-(nu(&data.d_comp) as i32)));
    let mut out = InducedVector::new();
    for (y, e) in &h.bar().terms {
        let (w, u) = coset_decomposition(&y.perm, c);
        let len = perm_length(&u) as i32;
        let sign = LaurentScalar::monomial(len, if len % 2 == 0 { 1 } else { -1 });
        let idx = TensorIdx { w, coset: vec![0; c.parts().len()] };
        vec_add_scaled(&mut out, &one_term(idx, &e.bar() * &sign), &LaurentScalar::one());
    }
    Ok(out)
}

fn check_small(q: &Quotient) -> Result<()> {
    if q.is_small() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not a small weight", q.mu_tilde())))
    }
}

pub fn map_a_mu(q: &Quotient, h: &HeckeElt, r: &RcMonomial) -> Result<QuotientVector> {
    let u = hecke_elt_act(&basis_vector(q.mu.clone()), &h.bar(), q.data.p)?;
    Ok(rc_act(&q.reduce(&u)?, r))
}

pub fn map_a_on_induced(q: &Quotient, v: &InducedVector) -> Result<QuotientVector> {
    let mut out = QuotientVector::new();
    for (t, coef) in v {
        let h = HeckeElt::bar_basis(&AffineWeylElt::finite(t.w.clone())).scale(coef);
        let r = RcMonomial { coset: t.coset.clone(), scale: LaurentScalar::one() };
        vec_add_scaled(&mut out, &map_a_mu(q, &h, &r)?, &LaurentScalar::one());
    }
    Ok(out)
}

pub fn d_on_alcove(q: &Quotient, a: &Alcove) -> Result<QuotientVector> {
    let c = &q.data.c;
    let (w, gbar) = decompose(a, c)?;
    let n = dot(&coset_rep(&gbar, c), &alpha_c(c));
    let u = hecke_elt_act(&basis_vector(q.mu.clone()), &HeckeElt::basis(AffineWeylElt::finite(w)), q.data.p)?;
    let image = rc_act(&q.reduce(&u)?, &RcMonomial { coset: gbar, scale: LaurentScalar::one() });
    let s = &sign_pow(n) * &sign_pow(n);
    Ok(image.into_iter().map(|(t, v)| (t, &v * &s)).collect())
}

pub fn map_d_mu(q: &Quotient, v: &PeriodicVector) -> Result<QuotientVector> {
    check_small(q)?;
    let mut out = QuotientVector::new();
    for (a, coef) in v {
        vec_add_scaled(&mut out, &d_on_alcove(q, a)?, &coef.bar());
    }
    Ok(out)
}

pub fn generator_image(d: usize, i: usize) -> HeckeElt {
    if i < d {
        HeckeElt::t_inv(d, i)
    } else {
        let mut s = perm_identity(d);
        s.swap(0, d - 1);
        HeckeElt::basis(AffineWeylElt::finite(s)).mul(&monomial_x(&theta(d)))
    }
}

pub fn left_mult(q: &Quotient, h: &HeckeElt, v: &QuotientVector) -> Result<QuotientVector> {
    let p = q.data.p;
    let mut acc = TensorVector::new();
    for (_, k) in tensor_to_hecke(&q.lift(v), p)? {
        let u = hecke_elt_act(&basis_vector(q.mu.clone()), &h.mul(&k), p)?;
        vec_add_scaled(&mut acc, &u, &LaurentScalar::one());
    }
    q.reduce(&acc)
}

pub fn small_quotients(data: &HighestWeightData) -> Result<Vec<Quotient>> {
    omega_sm(data.p, data.d).iter().map(|m| Quotient::new(data, m)).collect()
}

pub fn verify_extremal_weights(d: usize, p: usize, max_len: usize) -> Result<Report> {
    let pi = p as i64;
    let ball = length_ball(d, max_len);
    let mut checked = 0;
    let mut mismatches = 0;
    let mut finite_mismatches = 0;
    let mut examples = Vec::new();
    for mt in omega_set(p, d) {
        let mu = weight_of_tilde(&mt);
        let simples = level_stabilizer_simples(&mu, pi);
        for k in 0..d as i64 {
            for x in &ball {
                let w = AffineWeylElt::pi_pow(d, k).mul(x);
                if !is_min_in_simple_coset(&w, &simples) {
                    continue;
                }
                checked += 1;
                let got = hecke_elt_act(&basis_vector(mu.clone()), &HeckeElt::basis(w.clone()), p)?;
                if got != basis_vector(w.act(&mu, pi)) {
                    mismatches += 1;
                    finite_mismatches += usize::from(w.is_finite());
                    if examples.len() < 5 {
                        examples.push(json!({"mu": mu, "w": w.to_string(), "image": render(&got)}));
                    }
                }
            }
        }
    }
    Ok(Report::new(
        "lemma34",
        json!({"d": d, "p": p, "max_len": max_len}),
        mismatches,
        checked,
        json!({"mismatches": mismatches, "finite_mismatches": finite_mismatches, "examples": examples}),
    ))
}

pub fn verify_b_roundtrip(data: &HighestWeightData, win: &Window) -> Result<Report> {
    let c = &data.c;
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in win.alcoves(c) {
        checked += 1;
        let v = one_term(a.clone(), LaurentScalar::one());
        match map_b(c, &v).and_then(|b| map_b_inverse(c, &b)) {
            Ok(back) if back == v => {}
            Ok(_) => bad.push(json!({"alcove": a.to_string(), "reason": "not inverted"})),
            Err(e) => bad.push(json!({"alcove": a.to_string(), "reason": e.to_string()})),
        }
    }
    let got = map_b(c, &build_m_c(data)?)?;
    let want = b_closed_form(data)?;
    checked += 1;
    if got != want {
        bad.push(json!({"b_m_c": render(&got), "closed_form": render(&want)}));
    }
    Ok(Report::new(
        "lemma43",
        json!({"d": data.d, "p": data.p, "c": data.c.parts(), "window": win.radius}),
        bad.len(),
        checked,
        json!({"failures": bad}),
    ))
}

pub fn verify_prop_3_7(data: &HighestWeightData) -> Result<Report> {
    let q = Quotient::new(data, &data.lambda_glp())?;
    let h = HeckeElt::bar_basis(&AffineWeylElt::finite(sigma_c(data)?))
        .scale(&LaurentScalar::q_pow(nu(&data.d_comp) as i32));
    let zero = RcMonomial { coset: vec![0; data.c.parts().len()], scale: LaurentScalar::one() };
    let got = map_a_mu(&q, &h, &zero)?;
    let want = q.reduce(&cyclic_vector(data))?;
    let mut mismatches = usize::from(got != want);
    let mut checked = 1;
    let mut ranks = Vec::new();
    for qs in small_quotients(data)? {
        let fam = tensor_family(&qs, WORD_BUDGET)?;
        let found = qs.reps.len() - fam.uncovered().len();
        checked += 1;
        mismatches += usize::from(found != qs.reps.len());
        ranks.push(json!({"mu": qs.mu_tilde().to_string(), "rank": found, "expected": qs.reps.len()}));
    }
    Ok(Report::new(
        "prop37",
        json!({"d": data.d, "p": data.p, "c": data.c.parts()}),
        mismatches,
        checked,
        json!({"image": render(&got), "v_c": render(&want), "ranks": ranks}),
    ))
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ComparisonTally {
    pub matches: usize,
    pub mismatches: usize,
    pub unverified: usize,
    pub coordinates: usize,
    pub outside_span: usize,
}

pub fn verify_theorem_5_5(data: &HighestWeightData, win: &Window) -> Result<Vec<Report>> {
    let params = json!({"d": data.d, "p": data.p, "c": data.c.parts(), "window": win.radius});
    let table = canonical_basis(data, win)?;
    let mut tally = ComparisonTally { unverified: table.uncovered.len(), ..Default::default() };
    let mut examples = Vec::new();
    for q in small_quotients(data)? {
        let basis = tensor_canonical_basis(data, &q.mu_tilde())?;
        for e in &table.entries {
            let img = d_on_alcove(&q, &e.alcove)?;
            let Some((t, s)) = img.into_iter().next() else {
                return Err(Error::Inconsistent(format!("{} has zero image", e.alcove)));
            };
            if !e.verified || !basis.verified(&t) {
                tally.unverified += 1;
                continue;
            }
            let lhs = map_d_mu(&q, &e.terms.iter().cloned().collect())?;
            let mut rhs = QuotientVector::new();
            vec_add_scaled(&mut rhs, &basis.element(&t)?, &s);
            if lhs == rhs {
                tally.matches += 1;
            } else {
                tally.mismatches += 1;
                if examples.len() < 5 {
                    examples.push(json!({
                        "mu": q.mu_tilde().to_string(),
                        "alcove": e.alcove.to_string(),
                        "d": render(&lhs),
                        "F": render(&rhs),
                    }));
                }
            }
        }
    }
    let m = PeriodicModule::new(&data.c);
    let mut outside = Vec::new();
    match spanning_family(data, FAMILY_BUDGET)?.complete() {
        Some(members) => {
            for e in table.entries.iter().filter(|e| e.verified) {
                let v: PeriodicVector = e.terms.iter().cloned().collect();
                if span_coordinates(&m, &members, &v, SPAN_BUDGET).is_ok() {
                    tally.coordinates += 1;
                } else {
                    tally.outside_span += 1;
                    if outside.len() < 5 {
                        outside.push(e.alcove.to_string());
                    }
                }
            }
        }
        None => tally.outside_span = table.entries.len(),
    }
    let finite_support = table.entries.iter().all(|e| !e.terms.is_empty());
    let span_failures = tally.outside_span + usize::from(!finite_support);
    let coordinates = tally.coordinates;
    Ok(vec![
        Report::new("thm55", params.clone(), tally.mismatches, tally.matches, json!({"tally": tally, "examples": examples})),
        Report::new(
            "mprime",
            params,
            span_failures,
            coordinates,
            json!({"finite_support": finite_support, "outside_span": outside}),
        ),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PeriodicMatrix {
    pub p: usize,
    pub entries: BTreeMap<(usize, i64), u32>,
}

impl PeriodicMatrix {
    pub fn get(&self, i: i64, j: i64) -> u32 {
        let k = i.rem_euclid(self.p as i64);
        self.entries.get(&(k as usize, j - (i - k))).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        let mut out = vec![0; self.p];
        for (&(i, _), &n) in &self.entries {
            out[i] += n;
        }
        out
    }

    pub fn col_sums(&self) -> Vec<u32> {
        let mut out = vec![0; self.p];
        for (&(_, j), &n) in &self.entries {
            out[j.rem_euclid(self.p as i64) as usize] += n;
        }
        out
    }

    pub fn max_offset(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| (j - i as i64).abs()).max().unwrap_or(0)
    }

    pub fn diagonal(p: usize, r: i64) -> Self {
        PeriodicMatrix { p, entries: (0..p).map(|i| ((i, i as i64 + r), 1)).collect() }
    }
}

pub fn is_aperiodic(m: &PeriodicMatrix) -> bool {
    let offsets: BTreeSet<i64> = m.entries.keys().map(|&(i, j)| j - i as i64).filter(|&r| r != 0).collect();
    offsets.into_iter().all(|r| (0..m.p as i64).any(|i| m.get(i, i + r) == 0))
}

fn row_fillings(n: u32, cols: &[i64]) -> Vec<Vec<(i64, u32)>> {
    if n == 0 {
        return vec![vec![]];
    }
    let Some((&first, rest)) = cols.split_first() else {
        return vec![];
    };
    let mut out = Vec::new();
    for k in 0..=n {
        for mut tail in row_fillings(n - k, rest) {
            if k > 0 {
                tail.insert(0, (first, k));
            }
            out.push(tail);
        }
    }
    out
}

pub fn enumerate_by_row_sums(f: &[u32], bound: i64) -> BTreeMap<Vec<u32>, Vec<PeriodicMatrix>> {
    let p = f.len();
    let mut partial: Vec<BTreeMap<(usize, i64), u32>> = vec![BTreeMap::new()];
    for (i, &fi) in f.iter().enumerate() {
        let cols: Vec<i64> = (i as i64 - bound..=i as i64 + bound).collect();
        let rows = row_fillings(fi, &cols);
        let mut next = Vec::with_capacity(partial.len() * rows.len());
        for base in &partial {
            for r in &rows {
                let mut m = base.clone();
                m.extend(r.iter().map(|&(j, n)| ((i, j), n)));
                next.push(m);
            }
        }
        partial = next;
    }
    let mut out: BTreeMap<Vec<u32>, Vec<PeriodicMatrix>> = BTreeMap::new();
    for entries in partial {
        let m = PeriodicMatrix { p, entries };
        out.entry(m.col_sums()).or_default().push(m);
    }
    out
}

pub fn enumerate_a_ff(f: &[u32], f_prime: &[u32], bound: i64) -> Result<Vec<PeriodicMatrix>> {
    if f.len() != f_prime.len() {
        return Err(Error::Dimension { expected: f.len(), got: f_prime.len() });
    }
    Ok(enumerate_by_row_sums(f, bound).remove(f_prime).unwrap_or_default())
}

fn small_vectors(p: usize, d: usize) -> Vec<Vec<u32>> {
    (0u32..1 << p)
        .filter(|m| m.count_ones() as usize == d)
        .map(|m| (0..p).map(|i| (m >> i) & 1).collect())
        .collect()
}

fn aperiodic_tally_at(p: usize, d: usize, bound: i64) -> (usize, usize, Vec<Value>) {
    let mut checked = 0;
    let mut mismatches = 0;
    let mut notes = Vec::new();
    for f in small_vectors(p, d) {
        for (fp, mats) in enumerate_by_row_sums(&f, bound) {
            checked += mats.len();
            let non_ap: BTreeSet<PeriodicMatrix> = mats.into_iter().filter(|m| !is_aperiodic(m)).collect();
            let predicted = fp.iter().all(|&x| x <= 1) && p == d;
            let ok = if predicted {
                let want: BTreeSet<PeriodicMatrix> =
                    (-bound..=bound).filter(|&r| r != 0).map(|r| PeriodicMatrix::diagonal(p, r)).collect();
                non_ap == want
            } else {
                non_ap.is_empty()
            };
            if !ok {
                mismatches += 1;
                notes.push(json!({"f": f, "f_prime": fp, "non_aperiodic": non_ap.len()}));
            }
        }
    }
    (checked, mismatches, notes)
}

pub fn verify_claim_2_6(p: usize, d: usize) -> Result<Report> {
    if p < d || d == 0 {
        return Err(Error::Precondition(format!("claim needs p >= d >= 1, got p={p} d={d}")));
    }
    let bound = (d * p) as i64;
    let (checked, mismatches, notes) = aperiodic_tally_at(p, d, bound);
    let (checked_next, mismatches_next, _) = aperiodic_tally_at(p, d, bound + 1);
    if mismatches != mismatches_next {
        return Err(Error::Budget(format!("verdict changes between offset bounds {bound} and {}", bound + 1)));
    }
    Ok(Report::new(
        "claim26",
        json!({"p": p, "d": d, "bound": bound}),
        mismatches,
        checked,
        json!({"matrices": checked, "matrices_next_bound": checked_next, "failures": notes}),
    ))
}

pub fn incomparable_elements() -> (AffineWeylElt, AffineWeylElt) {
    let shift = scale(&add(&alpha(3, 1), &scale(&alpha(3, 2), 2)), -1);
    (AffineWeylElt::s(3, 2), AffineWeylElt::finite(vec![2, 1, 0]).mul(&AffineWeylElt::tau(&shift)))
}

pub fn reproduce_remark_2() -> Vec<Report> {
    let (p, c, mu) = (4usize, Composition(vec![1, 1, 1]), vec![3i64, 2, 1]);
    let base = Alcove::base(3);
    let (wa, wb) = incomparable_elements();
    let params = |w: &AffineWeylElt| json!({"d": 3, "p": p, "c": c.parts(), "mu": mu, "w": w.to_string()});
    let aw = base.right(&wa);
    let mua = wa.act(&mu, p as i64);
    let a_checks = [generic_lt(&aw, &base), !leq_c(&mu, &mua, &c, p), in_a_c(&aw, &c)];
    let bw = base.right(&wb);
    let mub = wb.act(&mu, p as i64);
    let b_checks = [!generic_lt(&base, &bw), leq_c(&mu, &mub, &c, p) && mu != mub, !bw.floors().iter().all(|f| *f >= 0)];
    let failures = |v: &[bool; 3]| v.iter().filter(|x| !**x).count();
    vec![
        Report::new(
            "remark2a",
            params(&wa),
            failures(&a_checks),
            3,
            json!({"generic_lt": a_checks[0], "not_leq_c": a_checks[1], "in_slab": a_checks[2], "mu_w": mua}),
        ),
        Report::new(
            "remark2b",
            params(&wb),
            failures(&b_checks),
            3,
            json!({"not_generic_lt": b_checks[0], "lt_c": b_checks[1], "outside_chamber": b_checks[2], "mu_w": mub}),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::g_gamma;
    use crate::periodic::single;
    use crate::rootdata::{dual_data, weight_tilde};
    use crate::weyl::min_left_coset_reps;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    fn quotient(p: usize, c: &[usize], mu: &[i64]) -> Quotient {
        let data = dual_data(p, &comp(c)).unwrap();
        let mt = weight_tilde(mu, p as i64).unwrap().0;
        Quotient::new(&data, &mt).unwrap()
    }

    fn random_periodic(rng: &mut ChaCha8Rng, c: &Composition) -> PeriodicVector {
        let alc = Window { radius: 1 }.alcoves(c);
        let mut v = PeriodicVector::new();
        for _ in 0..3 {
            let a = alc[rng.gen_range(0..alc.len())].clone();
            let coef = LaurentScalar::monomial(rng.gen_range(-2..3), rng.gen_range(-2i64..3));
            vec_add_scaled(&mut v, &single(a), &coef);
        }
        v
    }

    #[test]
    fn d_on_coset_alcoves() {
        let q = quotient(4, &[1, 1, 1], &[3, 2, 1]);
        let d_plus = map_d_mu(&q, &single(Alcove::base(3))).unwrap();
        assert_eq!(d_plus, q.reduce(&basis_vector(vec![3, 2, 1])).unwrap());
        for w in min_left_coset_reps(&q.data.c) {
            let a = Alcove::base(3).right(&AffineWeylElt::finite(w.clone()));
            let want = q.reduce(&basis_vector(AffineWeylElt::finite(w.clone()).act(&q.mu, 4))).unwrap();
            assert_eq!(map_d_mu(&q, &single(a)).unwrap(), want, "w={w:?}");
        }
    }

    #[test]
    fn d_on_alcoves_is_a_basis_bijection() {
        for (p, c) in [(3usize, vec![1usize, 1]), (4, vec![2, 1]), (4, vec![1, 1, 1])] {
            let data = dual_data(p, &comp(&c)).unwrap();
            for q in small_quotients(&data).unwrap() {
                let mut seen = BTreeSet::new();
                for a in (Window { radius: 2 }).alcoves(&data.c) {
                    let (w, gbar) = decompose(&a, &data.c).unwrap();
                    let img = map_d_mu(&q, &single(a)).unwrap();
                    assert_eq!(img.len(), 1);
                    let (t, s) = img.into_iter().next().unwrap();
                    assert!(s.is_one());
                    assert_eq!(t, TensorIdx { w, coset: scale(&gbar, -1) });
                    assert!(seen.insert(t));
                }
            }
        }
    }

    #[test]
    fn d_is_semilinear_and_rejects_large_weights() {
        let q = quotient(4, &[2, 1], &[4, 2, 1]);
        let v = single(Alcove::base(3));
        let qv: PeriodicVector = v.keys().map(|a| (a.clone(), LaurentScalar::q_pow(2))).collect();
        let want: QuotientVector =
            map_d_mu(&q, &v).unwrap().into_iter().map(|(t, c)| (t, &c * &LaurentScalar::q_pow(-2))).collect();
        assert_eq!(map_d_mu(&q, &qv).unwrap(), want);
        let big = quotient(4, &[2, 1], &[2, 2, 1]);
        assert!(map_d_mu(&big, &v).is_err());
    }

    #[test]
    fn d_intertwines_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cases = [(3usize, vec![1usize, 1], vec![2i64, 1]), (4, vec![2, 1], vec![4, 2, 1]), (4, vec![1, 1, 1], vec![3, 2, 1])];
        for (p, c, mu) in cases {
            let q = quotient(p, &c, &mu);
            let m = PeriodicModule::new(&q.data.c);
            let d = q.data.d;
            for _ in 0..4 {
                let v = random_periodic(&mut rng, &q.data.c);
                let dv = map_d_mu(&q, &v).unwrap();
                for i in 1..=d {
                    let lhs = map_d_mu(&q, &m.act_t(i, &v).unwrap()).unwrap();
                    assert_eq!(lhs, left_mult(&q, &generator_image(d, i), &dv).unwrap(), "t_{i}");
                }
                for k in 1..d {
                    let gamma = alpha(d, k);
                    let n = dot(&gamma, &alpha_c(&q.data.c));
                    let lhs = map_d_mu(&q, &m.act_x(&v, &gamma).unwrap()).unwrap();
                    let mut via_tensor = QuotientVector::new();
                    vec_add_scaled(&mut via_tensor, &x_act(&q, &dv, &gamma).unwrap(), &LaurentScalar::q_pow(n as i32));
                    assert_eq!(lhs, via_tensor, "x_{k}");
                    let twist = RcMonomial { coset: q.data.c.block_sums(&gamma), scale: sign_pow(n) };
                    assert_eq!(lhs, rc_act(&dv, &twist), "z_{k}");
                }
            }
        }
    }

    #[test]
    fn affine_generator_is_not_the_hecke_generator() {
        let q = quotient(4, &[1, 1, 1], &[3, 2, 1]);
        let m = PeriodicModule::new(&q.data.c);
        let v = single(Alcove::base(3));
        let lhs = map_d_mu(&q, &m.act_t(3, &v).unwrap()).unwrap();
        let dv = map_d_mu(&q, &v).unwrap();
        assert_ne!(lhs, left_mult(&q, &HeckeElt::bar_basis(&AffineWeylElt::s(3, 3)), &dv).unwrap());
        assert_eq!(lhs, left_mult(&q, &generator_image(3, 3), &dv).unwrap());
    }

    #[test]
    fn formal_monomials_against_tensor_action() {
        let q = quotient(4, &[2, 1], &[4, 2, 1]);
        let v = map_d_mu(&q, &single(Alcove::base(3))).unwrap();
        for gamma in [vec![1, -1, 0], vec![0, 1, -1], vec![2, 0, -2], vec![-1, -1, 2]] {
            let n = dot(&gamma, &alpha_c(&q.data.c));
            let formal = rc_act(&v, &psi_monomial(&gamma, &q.data.c).unwrap());
            let mut want = QuotientVector::new();
            vec_add_scaled(&mut want, &x_act(&q, &v, &gamma).unwrap(), &(&sign_pow(n) * &LaurentScalar::q_pow(2 * n as i32)));
            assert_eq!(formal, want, "{gamma:?}");
        }
    }

    #[test]
    fn b_examples() {
        let c = comp(&[1, 1, 1]);
        let zero = vec![0, 0, 0];
        let b = map_b(&c, &single(Alcove::base(3))).unwrap();
        assert_eq!(b, one_term(TensorIdx { w: vec![0, 1, 2], coset: zero.clone() }, LaurentScalar::one()));
        for w in min_left_coset_reps(&c) {
            let a = Alcove::base(3).right(&AffineWeylElt::finite(w.clone()));
            let want = one_term(TensorIdx { w, coset: zero.clone() }, LaurentScalar::one());
            assert_eq!(map_b(&c, &single(a)).unwrap(), want);
        }
        let gamma = vec![1, 0, -1];
        let a = g_gamma(&Alcove::base(3), &gamma, &c).unwrap();
        let r = psi_monomial(&gamma, &c).unwrap();
        let n = dot(&gamma, &alpha_c(&c)) as i32;
        let want = one_term(TensorIdx { w: vec![0, 1, 2], coset: r.coset }, &r.scale * &LaurentScalar::q_pow(-n));
        assert_eq!(map_b(&c, &single(a)).unwrap(), want);
    }

    #[test]
    fn b_inverts_and_has_closed_form_on_m_c() {
        for (p, c) in [(3usize, vec![2usize]), (3, vec![1, 1]), (4, vec![3]), (4, vec![2, 1]), (4, vec![1, 1, 1]), (5, vec![2, 2])] {
            let data = dual_data(p, &comp(&c)).unwrap();
            let r = verify_b_roundtrip(&data, &Window { radius: 1 }).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn a_after_b_is_d() {
        for (p, c) in [(3usize, vec![1usize, 1]), (4, vec![2, 1]), (4, vec![1, 1, 1])] {
            let data = dual_data(p, &comp(&c)).unwrap();
            for q in small_quotients(&data).unwrap() {
                for a in (Window { radius: 2 }).alcoves(&data.c).into_iter().take(10) {
                    let v = single(a);
                    let b = map_b(&data.c, &v).unwrap();
                    assert_eq!(map_a_on_induced(&q, &b).unwrap(), map_d_mu(&q, &v).unwrap());
                }
            }
        }
    }

    #[test]
    fn a_examples() {
        let q = quotient(4, &[2, 1], &[4, 2, 1]);
        let zero = RcMonomial { coset: vec![0, 0], scale: LaurentScalar::one() };
        let a1 = map_a_mu(&q, &HeckeElt::one(3), &zero).unwrap();
        assert_eq!(a1, q.reduce(&basis_vector(q.mu.clone())).unwrap());
        for w in min_left_coset_reps(&q.data.c) {
            let h = HeckeElt::bar_basis(&AffineWeylElt::finite(w.clone()));
            let want = q.reduce(&basis_vector(AffineWeylElt::finite(w.clone()).act(&q.mu, 4))).unwrap();
            assert_eq!(map_a_mu(&q, &h, &zero).unwrap(), want);
        }
    }

    #[test]
    fn cyclic_image_cases() {
        for (p, c) in [(3usize, vec![2usize]), (3, vec![1, 1]), (4, vec![2, 1]), (4, vec![3])] {
            let data = dual_data(p, &comp(&c)).unwrap();
            let r = verify_prop_3_7(&data).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn theorem_small_cases() {
        for (p, c) in [(3usize, vec![2usize]), (3, vec![1, 1]), (4, vec![2, 1])] {
            let data = dual_data(p, &comp(&c)).unwrap();
            let reps = verify_theorem_5_5(&data, &Window { radius: 2 }).unwrap();
            assert!(reps[0].passed(), "{:?}", reps[0]);
        }
    }

    #[test]
    fn periodic_matrix_basics() {
        let m = PeriodicMatrix::diagonal(3, 2);
        assert_eq!(m.get(0, 2), 1);
        assert_eq!(m.get(3, 5), 1);
        assert_eq!(m.get(-3, -1), 1);
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(m.row_sums(), vec![1, 1, 1]);
        assert_eq!(m.col_sums(), vec![1, 1, 1]);
        assert_eq!(m.total(), 3);
        assert!(!is_aperiodic(&m));
        assert!(is_aperiodic(&PeriodicMatrix::diagonal(3, 0)));
        let entries = [((0, 1), 1), ((1, 3), 1)].into_iter().collect();
        assert!(is_aperiodic(&PeriodicMatrix { p: 3, entries }));
    }

    #[test]
    fn claim_examples() {
        let mats = enumerate_a_ff(&[1, 1], &[1, 1], 4).unwrap();
        let non_ap: BTreeSet<_> = mats.into_iter().filter(|m| !is_aperiodic(m)).collect();
        let want: BTreeSet<_> = (-4..=4).filter(|&r| r != 0).map(|r| PeriodicMatrix::diagonal(2, r)).collect();
        assert_eq!(non_ap, want);
        for mats in enumerate_by_row_sums(&[1, 1, 0], 6).values() {
            assert!(mats.iter().all(is_aperiodic));
        }
        for mats in enumerate_by_row_sums(&[2, 0, 0], 3).values() {
            assert!(mats.iter().all(|m| m.entries.keys().all(|&(i, _)| i == 0)));
        }
        assert_eq!(enumerate_by_row_sums(&[2, 0], 1).values().map(Vec::len).sum::<usize>(), 6);
        assert!(enumerate_a_ff(&[1], &[1, 0], 1).is_err());
        assert!(verify_claim_2_6(2, 2).unwrap().passed());
        assert!(verify_claim_2_6(3, 2).unwrap().passed());
        assert!(verify_claim_2_6(1, 2).is_err());
    }

    #[test]
    fn remark_two_reports() {
        let reps = reproduce_remark_2();
        assert!(reps[0].passed(), "{:?}", reps[0]);
        assert_eq!(reps[1].witness["lt_c"], json!(true));
        assert_eq!(reps[1].witness["outside_chamber"], json!(true));
    }

    #[test]
    fn extremal_weights_hold_for_finite_elements() {
        let r = verify_extremal_weights(3, 4, 3).unwrap();
        assert!(r.checked > 0);
        assert_eq!(r.witness["finite_mismatches"], json!(0));
    }

    #[test]
    fn report_status() {
        assert_eq!(Report::new("x", json!({}), 0, 0, json!(null)).status, Status::Indeterminate);
        assert_eq!(Report::new("x", json!({}), 1, 5, json!(null)).status, Status::Mismatch);
        assert_eq!(serde_json::to_string(&Status::Match).unwrap(), "\"match\"");
    }
}
