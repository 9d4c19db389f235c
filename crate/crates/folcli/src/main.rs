fn main() {
    std::process::exit(folcli::cli::main_from(std::env::args_os()));
}
