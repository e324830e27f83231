use perimod::hecke::{monomial_x, rho, HeckeElt};
use perimod::rootdata::Composition;
use perimod::weyl::AffineWeylElt;

fn main() {
    let d = 3;
    let t1 = HeckeElt::t(d, 1);
    let quad = t1.mul(&t1).sub(&t1.scale(&perimod::LaurentScalar::q_minus_qinv()));
    println!("t1^2 - (q - q^-1) t1 is the identity: {}", quad == HeckeElt::one(d));
    let f = Composition(vec![2, 1]);
    let (r, m) = rho(&f);
    println!("rho_f^2 = m_f rho_f with m_f = {m}: {}", r.mul(&r) == r.scale(&m));
    let x = monomial_x(&[1, 0, -1]);
    println!("x_(1,0,-1) has {} terms in the standard basis", x.terms.len());
    let s = AffineWeylElt::s(d, d);
    println!("bar(t_s3) = {:?}", HeckeElt::basis(s).bar().terms);
}
