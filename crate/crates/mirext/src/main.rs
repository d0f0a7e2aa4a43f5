fn main() {
    std::process::exit(mirext::run(std::env::args_os()));
}
