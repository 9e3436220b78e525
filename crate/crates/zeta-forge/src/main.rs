fn main() {
    std::process::exit(zeta_forge::cli::main_entry());
}
