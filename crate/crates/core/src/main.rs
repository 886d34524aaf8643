fn main() {
    std::process::exit(cjl::cli::run_from_args(std::env::args_os()));
}
