use perimod::bridge::{enumerate_a_ff, is_aperiodic, verify_claim_2_6};

fn main() -> perimod::Result<()> {
    let mats = enumerate_a_ff(&[1, 1], &[1, 1], 4)?;
    let periodic: Vec<_> = mats.iter().filter(|m| !is_aperiodic(m)).collect();
    println!("{} matrices with f = f' = (1,1), {} not aperiodic", mats.len(), periodic.len());
    for m in periodic {
        println!("  entries {:?}", m.entries);
    }
    for (p, d) in [(2, 2), (3, 2), (3, 3)] {
        let r = verify_claim_2_6(p, d)?;
        println!("p={p} d={d}: {:?} over {} matrices", r.status, r.checked);
    }
    Ok(())
}
