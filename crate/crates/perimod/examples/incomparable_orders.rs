use perimod::bridge::reproduce_remark_2;

fn main() {
    for r in reproduce_remark_2() {
        println!("{} {:?}", r.claim, r.status);
        println!("  {}", r.witness);
    }
}
