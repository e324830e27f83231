use perimod::loopmod::{act_word, basis_vector, cyclic_vector, LoopGen, Mode, Quotient};
use perimod::rootdata::{dual_data, weight_tilde, Composition};

fn main() -> perimod::Result<()> {
    let data = dual_data(4, &Composition(vec![2, 1]))?;
    let v = cyclic_vector(&data);
    println!("v_c = {v:?}");
    let moved = act_word(&[LoopGen::F(1, 1), LoopGen::E(4, 1)], &basis_vector(vec![2, 1, 1]), 4, &Mode::Plain)?;
    println!("E_4 F_1 u_(2,1,1) = {moved:?}");
    let mu = weight_tilde(&[3, 2, 1], 4)?.0;
    let q = Quotient::new(&data, &mu)?;
    println!("small weight {}: quotient rank {} over the twists", q.mu_tilde(), q.reps.len());
    println!("u_(2,3,1) reduces to {:?}", q.reduce(&basis_vector(vec![2, 3, 1]))?);
    Ok(())
}
