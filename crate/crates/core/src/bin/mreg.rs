fn main() {
    std::process::exit(mreg::cli::main_exit_code());
}
