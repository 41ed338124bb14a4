fn main() -> std::process::ExitCode {
    verma::cli::main_entry()
}
