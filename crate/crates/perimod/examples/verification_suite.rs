use perimod::cli::run;

fn main() {
    let (out, err) = run(["perimod", "--c", "2,1", "--p", "4", "--suite", "prop37", "--format", "csv"]);
    print!("{}{err}", out.stdout);
    println!("exit code {}", out.code);
}
