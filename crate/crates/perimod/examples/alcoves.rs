use perimod::alcove::{decompose, generic_lt, Alcove, Window};
use perimod::rootdata::Composition;
use perimod::weyl::AffineWeylElt;

fn main() {
    let c = Composition(vec![2, 1]);
    let base = Alcove::base(3);
    let s2 = base.right(&AffineWeylElt::s(3, 2));
    println!("{s2} < {base}: {}", generic_lt(&s2, &base));
    let win = Window { radius: 1 }.alcoves(&c);
    println!("{} alcoves of the slab within radius 1", win.len());
    for a in win.iter().take(5) {
        let (w, g) = decompose(a, &c).unwrap();
        println!("{a} = g_{g:?}(A'_+ . {w:?})");
    }
}
