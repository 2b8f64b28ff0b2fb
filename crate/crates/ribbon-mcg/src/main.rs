fn main() {
    std::process::exit(ribbon_mcg::cli::main());
}
