fn main() {
    std::process::exit(bordered_actions::cli::main_with_args());
}
