fn main() -> std::process::ExitCode {
    abcosp::cli::main_with(std::env::args())
}
