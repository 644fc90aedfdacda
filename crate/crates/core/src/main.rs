fn main() {
    let (code, text) = preflab::cli::run(std::env::args_os().skip(1));
    print!("{text}");
    std::process::exit(code);
}
