use perimod::weyl::{canonical_decomposition, length_ball, AffineWeylElt};

fn main() {
    let d = 3;
    let pi = AffineWeylElt::pi(d);
    let w = pi.mul(&AffineWeylElt::s(d, 1)).mul(&AffineWeylElt::s(d, 3));
    let (k, word) = w.reduced_word();
    println!("w = {w}  length {}  pi^{k} s{word:?}", w.length());
    let mu = vec![3, 2, 1];
    println!("level-4 action: {:?} . w = {:?}", mu, w.act(&mu, 4));
    let (dom, x) = canonical_decomposition(&[5, -1, 2], 4);
    println!("(5,-1,2) = {dom:?} moved by {x}");
    for l in 0..=4 {
        let n = length_ball(d, l).len();
        println!("elements of length <= {l} in W': {n}");
    }
}
