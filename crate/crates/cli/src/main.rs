fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(diffrakt_cli::run(&args));
}
