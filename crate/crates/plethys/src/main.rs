fn main() {
    std::process::exit(plethys::cli::main_entry());
}
