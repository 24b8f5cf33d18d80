fn main() {
    std::process::exit(zcyclic::cli::run(std::env::args_os()));
}
