use perimod::loopmod::tensor_canonical_basis;
use perimod::rootdata::{dual_data, omega_sm, Composition};

fn main() -> perimod::Result<()> {
    let data = dual_data(4, &Composition(vec![2, 1]))?;
    for mu in omega_sm(4, 3) {
        let basis = tensor_canonical_basis(&data, &mu)?;
        println!("weight {mu}");
        for (w, el) in basis.table.reps.iter().zip(&basis.table.rep_elements) {
            let terms: Vec<String> = el.iter().map(|(t, c)| format!("({c}) {:?}|{:?}", t.w, t.coset)).collect();
            println!("  F({w:?}) = {}", terms.join(" + "));
        }
    }
    Ok(())
}
