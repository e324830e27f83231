use perimod::qcoeff::{lp, LaurentScalar};

fn main() {
    let v = LaurentScalar::q_minus_qinv();
    let square = &v * &v;
    println!("(q - q^-1)^2 = {square}");
    println!("bar = {}", square.bar());
    println!("[3]_q = {}  bar-fixed: {}", LaurentScalar::qint(3), LaurentScalar::qint(3).is_bar_fixed());
    let f = lp(&[(-2, 1), (0, 3), (1, -1)]);
    println!("{f} completes to the bar-fixed {}", f.symmetric_completion());
    println!("latex: {}", f.to_latex());
    println!("json: {}", serde_json::to_string(&f).unwrap());
}
