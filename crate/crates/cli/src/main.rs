fn main() {
    std::process::exit(ordmotif_cli::cli_main(std::env::args_os()));
}
