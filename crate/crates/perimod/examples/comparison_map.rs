use perimod::alcove::{Alcove, Window};
use perimod::bridge::{map_b, map_d_mu, small_quotients, verify_theorem_5_5};
use perimod::periodic::single;
use perimod::rootdata::{dual_data, Composition};
use perimod::weyl::AffineWeylElt;

fn main() -> perimod::Result<()> {
    let data = dual_data(4, &Composition(vec![1, 1, 1]))?;
    let a = Alcove::base(3).right(&AffineWeylElt::s(3, 1));
    println!("b({a}) = {:?}", map_b(&data.c, &single(a.clone()))?);
    for q in small_quotients(&data)? {
        println!("d_{}({a}) = {:?}", q.mu_tilde(), map_d_mu(&q, &single(a.clone()))?);
    }
    for r in verify_theorem_5_5(&data, &Window { radius: 1 })? {
        println!("{}: {:?} over {} checks", r.claim, r.status, r.checked);
    }
    Ok(())
}
