fn main() {
    std::process::exit(foldsig::run(std::env::args_os()));
}
