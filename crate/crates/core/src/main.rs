fn main() {
    std::process::exit(pst_apsp::cli::run_from(std::env::args_os()));
}
