fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(landau_lab::cli::main() as u8)
}
