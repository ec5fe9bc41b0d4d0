fn main() {
    let (out, code) = skewres_cli::execute(std::env::args_os());
    if code == 2 && !out.starts_with('{') {
        eprint!("{out}");
    } else {
        println!("{out}");
    }
    std::process::exit(code);
}
