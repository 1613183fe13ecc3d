use clap::Parser;

fn main() {
    let cli = triorbit_cli::Cli::parse();
    match triorbit_cli::run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
