fn main() {
    std::process::exit(netvuln::cli::main_with(std::env::args_os()));
}
