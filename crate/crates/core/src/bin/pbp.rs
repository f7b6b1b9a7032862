fn main() -> std::process::ExitCode {
    pbp::cli::main_entry()
}
