fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(dampwave_cli::run(&argv));
}
