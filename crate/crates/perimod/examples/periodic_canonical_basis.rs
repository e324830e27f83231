use perimod::alcove::Window;
use perimod::periodic::{build_m_c, canonical_basis};
use perimod::rootdata::{dual_data, Composition};

fn main() -> perimod::Result<()> {
    let data = dual_data(3, &Composition(vec![1, 1]))?;
    println!("m_c = {:?}", build_m_c(&data)?);
    let table = canonical_basis(&data, &Window { radius: 3 })?;
    for e in &table.entries {
        let terms: Vec<String> = e.terms.iter().map(|(a, c)| format!("({c}) {a}")).collect();
        println!("{} -> {}  verified={}", e.alcove, terms.join(" + "), e.verified);
    }
    Ok(())
}
